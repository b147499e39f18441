"""Arithmetic invariants read off from an snc special fiber.

For an snc-model with special fiber ``sum N_i E_i``:

* ``nu``       -- minimal degree of a closed point, ``min N_i``;
* ``index``    -- gcd of degrees of closed points, ``gcd N_i``;
* ``sp_index`` -- minimal ``N_J`` over the nonempty strata ``E_J^o``;
* the degree set is the union of the progressions ``N_J * Z_{>0}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import AbstractSncFiber, ReductionType, gcd_all, genus_of, strata_of, validate_model


@dataclass(frozen=True)
class DegreeSet:
    """An infinite union of progressions ``n * Z_{>0}``, kept as minimal generators."""

    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens or any(g < 1 for g in gens):
            raise ValueError("a degree set needs positive generators")
        if list(gens) != sorted(set(gens)) or any(b % a == 0 for k, a in enumerate(gens) for b in gens[k + 1:]):
            raise ValueError(f"generators {gens} are not sorted and pairwise indivisible")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> DegreeSet:
        """Reduce an arbitrary collection of positive integers under divisibility."""
        gens: list[int] = []
        for v in sorted(set(values)):
            if not any(v % g == 0 for g in gens):
                gens.append(v)
        return cls(tuple(gens))

    def __contains__(self, d: int) -> bool:
        return any(d % g == 0 for g in self.generators)

    def issubset(self, other: DegreeSet) -> bool:
        return all(g in other for g in self.generators)

    @property
    def minimum(self) -> int:
        return self.generators[0]


def degree_set_contains(ds: DegreeSet, d: int) -> bool:
    if d < 1:
        raise ValueError("degrees are positive")
    return d in ds


def nu(rt: ReductionType) -> int:
    rt.require_well_formed()
    return min(rt.N)


def index(rt: ReductionType) -> int:
    rt.require_well_formed()
    return gcd_all(rt.N)


def sp_index(rt: ReductionType) -> int:
    return min(s.N_J for s in strata_of(rt))


def sp_index_abstract(f: AbstractSncFiber) -> int:
    if not f.strata:
        raise ValueError("fiber has no strata")
    return min(f.stratum_gcd(J) for J in f.strata)


def degree_set(rt: ReductionType) -> DegreeSet:
    return DegreeSet.from_values(s.N_J for s in strata_of(rt))


def degree_set_abstract(f: AbstractSncFiber) -> DegreeSet:
    if not f.strata:
        raise ValueError("fiber has no strata")
    return DegreeSet.from_values(f.stratum_gcd(J) for J in f.strata)


def genus(rt: ReductionType) -> Fraction:
    rt.require_well_formed()
    return genus_of(rt)


@dataclass(frozen=True)
class InvariantSummary:
    nu: int
    index: int
    sp_index: int
    genus: Fraction
    degree_set: DegreeSet


def summarize(rt: ReductionType) -> InvariantSummary:
    ds = degree_set(rt)
    return InvariantSummary(nu=nu(rt), index=index(rt), sp_index=ds.minimum, genus=genus(rt), degree_set=ds)


@dataclass(frozen=True)
class BoundReport:
    genus: int
    m: int
    nu: int
    holds: bool
    sp_index: int
    sp_within_canonical: bool


def bound_check(rt: ReductionType) -> BoundReport:
    """Compare ``nu`` with the smallest multiple ``m >= g`` of the index.

    Riemann-Roch gives a closed point of degree at most ``m`` on every curve
    of genus ``g >= 2``, hence ``nu <= m`` and ``sp_index <= 2g - 2``.  Only
    realizable types with integral genus at least two are accepted.
    """
    report = validate_model(rt)
    if not report.winters_ok:
        raise ValueError("bound check needs a realizable type: " + "; ".join(report.diagnostics))
    g = report.genus
    if g.denominator != 1 or g < 2:
        raise ValueError(f"bound check needs integral genus >= 2, got {g}")
    g = int(g)
    i = index(rt)
    m = -(-g // i) * i
    n = nu(rt)
    sp = sp_index(rt)
    return BoundReport(genus=g, m=m, nu=n, holds=n <= m, sp_index=sp, sp_within_canonical=sp <= 2 * g - 2)
