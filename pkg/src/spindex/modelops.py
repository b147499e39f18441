"""Blow-ups of snc-models at closed points of the special fiber.

Blowing up a point ``p`` of the special fiber creates an exceptional
``(-1)``-curve ``E`` of genus 0 whose multiplicity is the sum of the
multiplicities of the components through ``p``.  Only the bookkeeping on
``(N, G, C)`` is modeled; which of the ``c_ij`` intersection points of two
components is blown up makes no difference to that data.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .core import ReductionType, validate_model
from .semigroup import ShiftedSemigroup, sg_contains

SMOOTH = "smooth_point"
INTERSECTION = "intersection"


class NotRealizableError(ValueError):
    """The requested degree is not in the semigroup of the stratum."""


@dataclass(frozen=True)
class BlowupStep:
    kind: Literal["smooth_point", "intersection"]
    centre: tuple[int, ...]
    new_index: int
    new_multiplicity: int


def _check_index(rt: ReductionType, i: int) -> None:
    if not 0 <= i < rt.r:
        raise IndexError(f"component {i} out of range for r={rt.r}")


def _grow(rt: ReductionType, n_new: int, touching: Sequence[int]) -> ReductionType:
    r = rt.r
    C = [list(row) + [0] for row in rt.C]
    C.append([0] * (r + 1))
    C[r][r] = -1
    for i in touching:
        C[i][r] = C[r][i] = 1
        C[i][i] -= 1
    return ReductionType(rt.N + (n_new,), rt.G + (0,), tuple(map(tuple, C)), name=rt.name, params=rt.params)


def blowup_smooth_point(rt: ReductionType, i: int) -> ReductionType:
    """Blow up a point of ``E_i`` lying on no other component."""
    rt.require_well_formed()
    _check_index(rt, i)
    return _grow(rt, rt.N[i], (i,))


def blowup_intersection(rt: ReductionType, i: int, j: int) -> ReductionType:
    """Blow up one of the ``c_ij`` points where ``E_i`` meets ``E_j``."""
    rt.require_well_formed()
    _check_index(rt, i)
    _check_index(rt, j)
    if i == j:
        raise ValueError("an intersection blow-up needs two distinct components")
    if rt.C[i][j] < 1:
        raise ValueError(f"components {i} and {j} do not meet")
    out = _grow(rt, rt.N[i] + rt.N[j], (i, j))
    C = [list(row) for row in out.C]
    C[i][j] -= 1
    C[j][i] -= 1
    return ReductionType(out.N, out.G, tuple(map(tuple, C)), name=rt.name, params=rt.params)


def apply_step(rt: ReductionType, step: BlowupStep) -> ReductionType:
    if step.kind == SMOOTH:
        out = blowup_smooth_point(rt, *step.centre)
    elif step.kind == INTERSECTION:
        out = blowup_intersection(rt, *step.centre)
    else:
        raise ValueError(f"unknown blow-up kind {step.kind!r}")
    if out.r - 1 != step.new_index or out.N[-1] != step.new_multiplicity:
        raise ValueError(f"step {step} does not match the type it is applied to")
    return out


def _step(rt: ReductionType, kind: str, centre: tuple[int, ...]) -> tuple[BlowupStep, ReductionType]:
    out = blowup_smooth_point(rt, *centre) if kind == SMOOTH else blowup_intersection(rt, *centre)
    return BlowupStep(kind, centre, out.r - 1, out.N[-1]), out


@dataclass(frozen=True)
class BlowupChain:
    """A sequence of blow-ups from ``base`` to ``result``.

    ``witness`` is set by :func:`realize_degree` to the component of the
    result whose multiplicity divides the requested degree.
    """

    base: ReductionType
    steps: tuple[BlowupStep, ...]
    result: ReductionType
    witness: int | None = field(default=None)

    def replay(self) -> ReductionType:
        rt = self.base
        for step in self.steps:
            rt = apply_step(rt, step)
        return rt


def choose_alpha(n_i: int, n_j: int, d: int) -> tuple[int, int]:
    """Positive ``(a_i, a_j)`` with ``a_i n_i + a_j n_j = d``, smallest ``a_i`` first."""
    for a_i in range(1, (d - n_j) // n_i + 1):
        rest = d - a_i * n_i
        if rest > 0 and rest % n_j == 0:
            return a_i, rest // n_j
    raise NotRealizableError(f"{d} is not a_i*{n_i} + a_j*{n_j} with positive a_i, a_j")


def realize_degree(rt: ReductionType, J: Sequence[int], d: int) -> BlowupChain:
    """Blow up until some component has multiplicity dividing ``d``.

    For an edge ``J = (i, j)`` pick ``alpha`` with ``alpha . (N_i, N_j) = d``
    and walk the Stern-Brocot tree towards the primitive direction
    ``alpha' = alpha / gcd(alpha)``.  Each step blows up the point where the
    two components bounding the current cone meet, which inserts the
    mediant ray; the walk ends at a component of multiplicity
    ``alpha' . (N_i, N_j)``, a divisor of ``d``.
    """
    rt.require_well_formed()
    J = tuple(J)
    if d < 1:
        raise ValueError("d must be positive")
    for j in J:
        _check_index(rt, j)
    if len(J) == 1:
        (i,) = J
        if d % rt.N[i]:
            raise NotRealizableError(f"{d} is not a multiple of N[{i}]={rt.N[i]}")
        return BlowupChain(rt, (), rt, witness=i)
    if len(J) != 2 or J[0] == J[1]:
        raise ValueError(f"{J} is not a stratum of a curve fiber")
    i, j = J
    if rt.C[i][j] < 1:
        raise ValueError(f"components {i} and {j} do not meet, so {J} is not a stratum")
    if not sg_contains(ShiftedSemigroup((rt.N[i], rt.N[j])), d):
        raise NotRealizableError(f"{d} is not in S_J for N_J=({rt.N[i]}, {rt.N[j]})")

    a_i, a_j = choose_alpha(rt.N[i], rt.N[j], d)
    h = math.gcd(a_i, a_j)
    target = (a_i // h, a_j // h)

    steps = []
    cur = rt
    u, v = (1, 0), (0, 1)
    cu, cv = i, j
    while True:
        step, cur = _step(cur, INTERSECTION, (cu, cv))
        steps.append(step)
        w = (u[0] + v[0], u[1] + v[1])
        if w == target:
            break
        # target lies strictly between u and w iff it is on u's side of w
        if target[0] * w[1] > target[1] * w[0]:
            v, cv = w, step.new_index
        else:
            u, cu = w, step.new_index
    return BlowupChain(rt, tuple(steps), cur, witness=steps[-1].new_index)


def legal_moves(rt: ReductionType) -> list[tuple[str, tuple[int, ...]]]:
    moves: list[tuple[str, tuple[int, ...]]] = [(SMOOTH, (i,)) for i in range(rt.r)]
    moves += [(INTERSECTION, (i, j)) for i, j, _ in rt.edges()]
    return moves


def random_refinement(rt: ReductionType, steps: int, seed: int) -> BlowupChain:
    """Apply ``steps`` blow-ups, each drawn uniformly from the legal moves."""
    if not validate_model(rt).fiber_ok:
        raise ValueError("random refinement needs C.N^t = 0")
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = random.Random(seed)
    cur = rt
    chain = []
    for _ in range(steps):
        kind, centre = rng.choice(legal_moves(cur))
        step, cur = _step(cur, kind, centre)
        chain.append(step)
    return BlowupChain(rt, tuple(chain), cur)
