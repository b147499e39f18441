"""Reduction types of snc special fibers and their strata.

A reduction type ``(N, G, C)`` records, for every irreducible component
``E_i`` of the special fiber of an snc-model of a curve, its multiplicity
``N_i``, its genus ``G_i`` and the intersection numbers ``c_ij = E_i . E_j``.

Components are indexed from 0 in the library.  The command line and the DOT
export use 1-based labels, matching the usual ``E_1, ..., E_r`` notation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from typing import Iterable, Sequence

INT_MAX = 2**63 - 1


class IntegerRangeError(OverflowError):
    """An input integer lies outside the supported signed 64-bit range."""


class MalformedTypeError(ValueError):
    """Raised when an operation needs a structurally well-formed type."""


def check_int(value, what: str) -> int:
    # bool is an int subclass but never a valid entry
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{what}: expected an integer, got {value!r}")
    if not -INT_MAX <= value <= INT_MAX:
        raise IntegerRangeError(f"{what}: {value} exceeds the supported range")
    return int(value)


def _int_tuple(values, what: str) -> tuple[int, ...]:
    out = tuple(values)
    # fast path; the slow one exists to name the offending entry
    if all(type(v) is int for v in out) and (not out or -INT_MAX <= min(out) and max(out) <= INT_MAX):
        return out
    return tuple(check_int(v, f"{what}[{i}]") for i, v in enumerate(out))


def gcd_all(values: Iterable[int]) -> int:
    return reduce(math.gcd, values, 0)


@dataclass(frozen=True)
class ReductionType:
    """Labeled dual graph of an snc special fiber.

    Construction only checks that every entry is an integer in range, so that
    ill-shaped data can still be handed to :func:`validate_model` and get a
    report.  Everything else in the package calls :meth:`require_well_formed`.
    """

    N: tuple[int, ...]
    G: tuple[int, ...]
    C: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)
    params: tuple[tuple[str, int], ...] = field(default=(), compare=False)

    def __post_init__(self):
        N = _int_tuple(self.N, "N")
        G = _int_tuple(self.G, "G")
        C = tuple(_int_tuple(row, f"C[{i}]") for i, row in enumerate(self.C))
        params = tuple((str(k), check_int(v, f"params[{k}]")) for k, v in self.params)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "G", G)
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "params", params)

    @property
    def r(self) -> int:
        return len(self.N)

    @cached_property
    def structural_problems(self) -> tuple[str, ...]:
        """Human-readable list of violated shape/sign invariants."""
        problems = []
        r = len(self.N)
        if r == 0:
            problems.append("no components (r must be positive)")
        if len(self.G) != r:
            problems.append(f"len(G)={len(self.G)} differs from len(N)={r}")
        if len(self.C) != r or any(len(row) != r for row in self.C):
            problems.append(f"C is not a {r}x{r} matrix")
        problems.extend(f"N[{i}]={n} is not positive" for i, n in enumerate(self.N) if n < 1)
        problems.extend(f"G[{i}]={g} is negative" for i, g in enumerate(self.G) if g < 0)
        if len(self.C) == r and all(len(row) == r for row in self.C):
            for i in range(r):
                for j in range(i + 1, r):
                    if self.C[i][j] != self.C[j][i]:
                        problems.append(f"C not symmetric at ({i},{j}): {self.C[i][j]} != {self.C[j][i]}")
                    if self.C[i][j] < 0:
                        problems.append(f"C[{i}][{j}]={self.C[i][j]} is negative off the diagonal")
        return tuple(problems)

    @property
    def well_formed(self) -> bool:
        return not self.structural_problems

    def require_well_formed(self) -> None:
        if self.structural_problems:
            raise MalformedTypeError("; ".join(self.structural_problems))

    def edges(self) -> list[tuple[int, int, int]]:
        """``(i, j, c_ij)`` for every pair i < j with ``c_ij > 0``."""
        r = self.r
        return [(i, j, self.C[i][j]) for i in range(r) for j in range(i + 1, r) if self.C[i][j] > 0]

    def fiber_defect(self) -> tuple[int, ...]:
        """The vector ``C . N^t``; all zeros on a genuine special fiber."""
        return tuple(sum(c * n for c, n in zip(row, self.N)) for row in self.C)

    def is_connected(self) -> bool:
        r = self.r
        if r == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(r):
                if j != i and self.C[i][j] > 0 and j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == r

    def relabel(self, order: Sequence[int]) -> ReductionType:
        """Return the type whose k-th component is component ``order[k]`` of self."""
        return ReductionType(
            tuple(self.N[i] for i in order),
            tuple(self.G[i] for i in order),
            tuple(tuple(self.C[i][j] for j in order) for i in order),
            name=self.name,
            params=self.params,
        )

    @classmethod
    def single(cls, genus: int = 0) -> ReductionType:
        """Smooth special fiber: one component of multiplicity one."""
        return cls((1,), (genus,), ((0,),))


def genus_of(rt: ReductionType) -> Fraction:
    """``g`` from ``2 - 2g = sum N_i (2 - 2 G_i + c_ii)``, as an exact rational."""
    total = sum(n * (2 - 2 * g + rt.C[i][i]) for i, (n, g) in enumerate(zip(rt.N, rt.G)))
    return Fraction(2 - total, 2)


@dataclass(frozen=True)
class ValidationReport:
    structural_ok: bool
    fiber_ok: bool
    connected: bool
    primitive: bool
    genus: Fraction | None
    genus_integral_nonneg: bool
    winters_ok: bool
    diagnostics: tuple[str, ...] = ()


def validate_model(rt: ReductionType) -> ValidationReport:
    """Check the realizability conditions for a reduction type.

    A type is realizable as the special fiber of an snc-model of a smooth,
    proper, geometrically connected curve when ``N`` is primitive, ``C`` is
    symmetric with non-negative off-diagonal entries, ``C . N^t = 0`` and the
    dual graph is connected.  The genus is reported as a rational together
    with a flag saying whether it is a non-negative integer.
    """
    diagnostics = list(rt.structural_problems)
    structural_ok = not diagnostics
    r = rt.r
    square = r > 0 and len(rt.C) == r and all(len(row) == r for row in rt.C)

    if square:
        defect = rt.fiber_defect()
        fiber_ok = not any(defect)
        diagnostics.extend(f"row {i}: (C.N^t)_{i} = {v} != 0" for i, v in enumerate(defect) if v)
        connected = rt.is_connected()
        if not connected:
            diagnostics.append("dual graph is not connected")
    else:
        fiber_ok = connected = False

    primitive = r > 0 and gcd_all(rt.N) == 1
    if r > 0 and not primitive:
        diagnostics.append(f"multiplicity vector is not primitive (gcd {gcd_all(rt.N)})")

    genus = genus_of(rt) if square and len(rt.G) == r else None
    genus_ok = genus is not None and genus.denominator == 1 and genus >= 0
    if genus is not None and not genus_ok:
        diagnostics.append(f"genus formula yields {genus}, not a non-negative integer")

    winters_ok = structural_ok and fiber_ok and connected and primitive and genus_ok
    return ValidationReport(
        structural_ok=structural_ok,
        fiber_ok=fiber_ok,
        connected=connected,
        primitive=primitive,
        genus=genus,
        genus_integral_nonneg=genus_ok,
        winters_ok=winters_ok,
        diagnostics=tuple(diagnostics),
    )


@dataclass(frozen=True, order=True)
class Stratum:
    """A set ``J`` of components with ``E_J`` nonempty, and ``N_J = gcd N_j``."""

    J: tuple[int, ...]
    N_J: int


def strata_of(rt: ReductionType) -> list[Stratum]:
    """Nonempty strata of a curve fiber: all singletons, then every edge.

    On a two-dimensional snc-model at most two components pass through a
    point and each component has points on no other component, so the
    strata are exactly the vertices and the edges of the dual graph.
    """
    rt.require_well_formed()
    singles = [Stratum((i,), n) for i, n in enumerate(rt.N)]
    pairs = [Stratum((i, j), math.gcd(rt.N[i], rt.N[j])) for i, j, _ in rt.edges()]
    return singles + pairs


@dataclass(frozen=True)
class AbstractSncFiber:
    """Multiplicities together with an explicit list of nonempty strata.

    This is the dimension-free form of the data: ``strata`` lists every
    ``J`` with ``E_J^o`` nonempty.  Every singleton must be present.
    """

    N: tuple[int, ...]
    strata: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        N = tuple(check_int(v, f"N[{i}]") for i, v in enumerate(self.N))
        strata = tuple(tuple(sorted(check_int(j, "stratum index") for j in J)) for J in self.strata)
        r = len(N)
        if any(n < 1 for n in N):
            raise ValueError("multiplicities must be positive")
        for J in strata:
            if not J:
                raise ValueError("strata must be nonempty")
            if len(set(J)) != len(J) or J[0] < 0 or J[-1] >= r:
                raise ValueError(f"invalid stratum {J} for {r} components")
        if len(set(strata)) != len(strata):
            raise ValueError("strata must be distinct")
        missing = [i for i in range(r) if (i,) not in set(strata)]
        if missing:
            raise ValueError(f"singleton strata missing for components {missing}")
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "strata", strata)

    def stratum_gcd(self, J: Sequence[int]) -> int:
        return gcd_all(self.N[j] for j in J)


def to_abstract(rt: ReductionType) -> AbstractSncFiber:
    return AbstractSncFiber(rt.N, tuple(s.J for s in strata_of(rt)))
