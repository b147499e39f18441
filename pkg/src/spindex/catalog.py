"""Hand-built reduction types used as fixtures and seeds."""
from __future__ import annotations

from .core import ReductionType


def example1(x: int = 0) -> ReductionType:
    """Five components, genus ``5 + 2x``, index 1 and specialization index 2."""
    if x < 0:
        raise ValueError("x must be non-negative")
    C = (
        (-3, 0, 0, 0, 1),
        (0, -2, 0, 1, 0),
        (0, 0, -4, 0, 2),
        (0, 1, 0, -2, 1),
        (1, 0, 2, 1, -2),
    )
    return ReductionType((2, 2, 3, 4, 6), (x, 0, 0, 0, 0), C, name="example1", params=(("x", x),))


def example2(x: int = 0) -> ReductionType:
    """Star of six components around a multiplicity-6 curve, genus ``2 + 2x``."""
    if x < 0:
        raise ValueError("x must be non-negative")
    C = (
        (-3, 0, 0, 0, 0, 1),
        (0, -2, 0, 0, 1, 0),
        (0, 0, -2, 0, 0, 1),
        (0, 0, 0, -2, 0, 1),
        (0, 1, 0, 0, -2, 1),
        (1, 0, 1, 1, 1, -2),
    )
    return ReductionType((2, 2, 3, 3, 4, 6), (x, 0, 0, 0, 0, 0), C, name="example2", params=(("x", x),))


EXAMPLES = {"example1": example1, "example2": example2}


def seed_types() -> list[ReductionType]:
    """Ten small realizable types of assorted shapes (all primitive, connected)."""
    return [
        example1(0),
        example2(0),
        example1(1),
        example2(2),
        ReductionType.single(2),
        # two rational curves meeting once, multiplicity one each
        ReductionType((1, 1), (1, 1), ((-1, 1), (1, -1)), name="two_lines"),
        ReductionType((1, 2), (0, 0), ((-4, 2), (2, -1)), name="double_contact"),
        # I_3: cycle of three (-2)-curves
        ReductionType((1, 1, 1), (0, 0, 0), ((-2, 1, 1), (1, -2, 1), (1, 1, -2)), name="I3"),
        # I_0*: a double curve with four reduced tails
        ReductionType(
            (2, 1, 1, 1, 1),
            (0, 0, 0, 0, 0),
            (
                (-2, 1, 1, 1, 1),
                (1, -2, 0, 0, 0),
                (1, 0, -2, 0, 0),
                (1, 0, 0, -2, 0),
                (1, 0, 0, 0, -2),
            ),
            name="I0*",
        ),
        # IV*: a triple curve with three chains of multiplicities 2, 1
        ReductionType(
            (3, 2, 1, 2, 1, 2, 1),
            (0, 0, 0, 0, 0, 0, 0),
            (
                (-2, 1, 0, 1, 0, 1, 0),
                (1, -2, 1, 0, 0, 0, 0),
                (0, 1, -2, 0, 0, 0, 0),
                (1, 0, 0, -2, 1, 0, 0),
                (0, 0, 0, 1, -2, 0, 0),
                (1, 0, 0, 0, 0, -2, 1),
                (0, 0, 0, 0, 0, 1, -2),
            ),
            name="IV*",
        ),
    ]
