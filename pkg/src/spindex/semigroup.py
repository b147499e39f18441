"""Semigroups of degrees realizable at a stratum.

For a stratum ``J`` the degrees realizable by closed points specializing into
``E_J^o`` are the multiples of elements of

    S_J = { sum_j a_j N_j : a_j >= 1 for every j }.

``S_J`` is shifted: every generator has to be used at least once.  Its gcd is
``N_J``.  The min-gcd lemma says that when a set of positive integers is
written as a finite union of subsemigroups, the smallest gcd among the pieces
does not depend on the decomposition; :func:`check_stability` tests one
instance of this with an explicit Bezout certificate.
"""
from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Sequence

from .core import check_int, gcd_all


class BudgetExceeded(RuntimeError):
    """A bounded computation ran out of its step budget before deciding."""


@dataclass(frozen=True)
class ShiftedSemigroup:
    """``{sum a_j gens_j : a_j >= 1}`` for a nonempty multiset of positive gens."""

    gens: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(sorted(check_int(g, "generator") for g in self.gens))
        if not gens or gens[0] < 1:
            raise ValueError(f"generators must be a nonempty list of positive integers, got {self.gens}")
        object.__setattr__(self, "gens", gens)

    @property
    def minimum(self) -> int:
        return sum(self.gens)

    def __contains__(self, d: int) -> bool:
        return sg_contains(self, d)


@lru_cache(maxsize=4096)
def _residue_table(gens: tuple[int, ...]) -> tuple[int, ...]:
    """Smallest element of the plain monoid generated by ``gens`` in each class mod ``min(gens)``.

    Dijkstra over residues; unreachable classes get -1.
    """
    a = min(gens)
    dist = [-1] * a
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        w, res = heapq.heappop(heap)
        if w != dist[res]:
            continue
        for g in gens:
            nw = w + g
            nr = nw % a
            if dist[nr] == -1 or nw < dist[nr]:
                dist[nr] = nw
                heapq.heappush(heap, (nw, nr))
    return tuple(dist)


def monoid_contains(gens: Sequence[int], n: int) -> bool:
    """Whether ``n >= 0`` is a non-negative combination of ``gens``."""
    if n < 0:
        return False
    table = _residue_table(tuple(sorted(set(gens))))
    w = table[n % len(table)]
    return w != -1 and n >= w


def sg_contains(S: ShiftedSemigroup, d: int) -> bool:
    if d < 1:
        raise ValueError("d must be positive")
    return monoid_contains(S.gens, d - S.minimum)


def sg_gcd(S: ShiftedSemigroup) -> int:
    return gcd_all(S.gens)


def stability_threshold(S: ShiftedSemigroup) -> int:
    """Least ``M`` such that every multiple of ``gcd(S)`` that is ``>= M`` lies in ``S``."""
    g = sg_gcd(S)
    reduced = tuple(sorted(set(x // g for x in S.gens)))
    table = _residue_table(reduced)
    # largest gap of the numerical monoid <reduced>; -1 when it is all of N
    frobenius = max(table) - len(table)
    return S.minimum + g * (frobenius + 1)


def min_gcd_of_union(parts: Sequence[ShiftedSemigroup]) -> int:
    if not parts:
        raise ValueError("parts must be nonempty")
    return min(sg_gcd(p) for p in parts)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, rem = divmod(a, b)
        a, b = b, rem
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


def bezout(xs: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Coefficients ``lam`` with ``sum lam_j xs_j = gcd(xs)``.

    Iterated extended gcd in the given order.  At each step the pair of
    coefficients is shifted along the solution line to the one of smallest
    ``|s| + |t|``, so certificates are reproducible.
    """
    if not xs:
        raise ValueError("need at least one element")
    g, lam = xs[0], [1]
    for x in xs[1:]:
        h, s, t = _xgcd(g, x)
        # all solutions: (s + k x/h, t - k g/h)
        sx, tg = x // h, g // h
        candidates = {0, -s // sx, -(s // sx), t // tg, -(-t // tg)}
        k = min(candidates, key=lambda k: (abs(s + k * sx) + abs(t - k * tg), k))
        s, t = s + k * sx, t - k * tg
        lam = [s * v for v in lam] + [t]
        g = h
    return g, tuple(lam)


@dataclass(frozen=True)
class GcdCertificate:
    """Bezout data showing ``m * s'`` lies in ``S'`` for every ``m > m0``.

    ``xs`` are elements of ``S'`` listed with positive ``lambdas`` first and
    the pivot ``xs[0]`` among them; ``sum lambdas_j xs_j = target``.
    """

    target: int
    xs: tuple[int, ...]
    lambdas: tuple[int, ...]
    m0: int

    def coefficients(self, m: int) -> tuple[int, ...]:
        """Non-negative ``c`` with ``sum c_j xs_j = m * target`` (requires ``m > m0``).

        With ``q`` the number of positive lambdas and the Euclidean division
        ``m - m0 = alpha * (x_1/s') + rem``:

            m s' = alpha x_1 + rem * sum_{j<=q} lam_j x_j
                   - (x_1 - 1 - rem) * sum_{j>q} lam_j x_j.
        """
        if m <= self.m0:
            raise ValueError(f"m={m} must exceed m0={self.m0}")
        x1 = self.xs[0]
        alpha, rem = divmod(m - self.m0, x1 // self.target)
        coeffs = []
        for j, (lam, x) in enumerate(zip(self.lambdas, self.xs)):
            if lam > 0:
                c = rem * lam + (alpha if j == 0 else 0)
            else:
                c = -(x1 - 1 - rem) * lam
            coeffs.append(c)
        return tuple(coeffs)

    def verify(self, m: int) -> bool:
        c = self.coefficients(m)
        return all(v >= 0 for v in c) and any(c) and sum(v * x for v, x in zip(c, self.xs)) == m * self.target


def gcd_certificate(subgens: Sequence[int]) -> GcdCertificate:
    """Certificate for ``S' = ShiftedSemigroup(subgens)``.

    The elements used are ``sigma = sum(subgens)`` and ``sigma + g`` for each
    distinct generator ``g``; all lie in ``S'`` and their gcd is ``gcd(subgens)``.
    """
    S = ShiftedSemigroup(tuple(subgens))
    sigma = S.minimum
    xs = sorted({sigma} | {sigma + g for g in S.gens})
    s_prime, lam = bezout(xs)
    terms = [(l, x) for l, x in zip(lam, xs) if l != 0]
    pos = [(l, x) for l, x in terms if l > 0]
    neg = [(l, x) for l, x in terms if l < 0]
    ordered = pos + neg
    x1 = ordered[0][1]
    m0 = -(x1 - 1) * sum(l * (x // s_prime) for l, x in neg)
    return GcdCertificate(
        target=s_prime,
        xs=tuple(x for _, x in ordered),
        lambdas=tuple(l for l, _ in ordered),
        m0=m0,
    )


@dataclass(frozen=True)
class StabilityReport:
    contained: bool
    s_prime: int
    s_min: int
    holds: bool
    bound: int
    period: int
    witness: int | None
    certificate: GcdCertificate | None
    sampled_m: tuple[int, ...]
    certificate_ok: bool | None


def check_stability(
    parts: Sequence[ShiftedSemigroup],
    subgens: Sequence[int],
    *,
    samples: int = 10,
    seed: int = 0,
    budget: int | None = 1_000_000,
) -> StabilityReport:
    """Decide ``S' ⊆ union(parts)`` exactly and check the min-gcd inequality.

    Past ``T = max`` of all stability thresholds, ``S'`` is the set of
    multiples of ``s'`` and the union is the set of integers divisible by some
    part gcd, so both sides are periodic with period ``lcm`` of all gcds.
    Scanning the multiples of ``s'`` up to ``bound = T + period`` therefore
    decides containment.  ``budget`` caps the number of multiples scanned;
    :class:`BudgetExceeded` is raised rather than guessing.
    """
    if not parts:
        raise ValueError("parts must be nonempty")
    S_prime = ShiftedSemigroup(tuple(subgens))
    s_prime = sg_gcd(S_prime)
    s_min = min_gcd_of_union(parts)
    tail = max([stability_threshold(S_prime)] + [stability_threshold(p) for p in parts])
    period = reduce(math.lcm, [sg_gcd(p) for p in parts], s_prime)
    bound = tail + period
    steps = (bound - S_prime.minimum) // s_prime + 1
    if budget is not None and steps > budget:
        raise BudgetExceeded(f"containment needs {steps} checks up to {bound}, budget is {budget}")

    witness = None
    for n in range(S_prime.minimum, bound + 1, s_prime):
        if sg_contains(S_prime, n) and not any(sg_contains(p, n) for p in parts):
            witness = n
            break
    contained = witness is None

    certificate = None
    sampled: tuple[int, ...] = ()
    cert_ok = None
    if contained:
        certificate = gcd_certificate(S_prime.gens)
        rng = random.Random(seed)
        span = max(10, 4 * max(certificate.xs))
        sampled = tuple(certificate.m0 + 1 + rng.randrange(span) for _ in range(samples))
        cert_ok = all(certificate.verify(m) for m in sampled)
    return StabilityReport(
        contained=contained,
        s_prime=s_prime,
        s_min=s_min,
        holds=s_min <= s_prime,
        bound=bound,
        period=period,
        witness=witness,
        certificate=certificate,
        sampled_m=sampled,
        certificate_ok=cert_ok,
    )
