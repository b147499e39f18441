"""Bounded enumeration of realizable reduction types.

The search walks over component counts, sorted ``(N_i, G_i)`` labels and
off-diagonal intersection numbers.  Diagonal entries are not enumerated:
``C . N^t = 0`` forces ``c_ii = -(sum_{j != i} c_ij N_j) / N_i``.  With the
diagonal eliminated the genus formula becomes

    2g - 2 = 2 sum_i N_i (G_i - 1) + sum_{i<j} c_ij (N_i + N_j),

so every edge spends a fixed, positive amount of a budget determined by the
labels.  That budget, the bound on ``|c_ii|`` and the divisibility of each
row sum drive the pruning.  Isomorphic duplicates are removed through
:mod:`spindex.canonical`.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .canonical import canonical, canonical_key
from .catalog import EXAMPLES, example1, example2
from .core import ReductionType, gcd_all, validate_model
from .invariants import index, sp_index


@dataclass(frozen=True)
class SearchConstraints:
    """Target genus, optional index filters and the box the search runs in.

    ``limit=None`` keeps every hit, ``limit=0`` only counts them and a
    positive limit keeps the first hits in canonical order.  The search
    always runs to completion unless ``budget_nodes`` is exhausted.
    """

    genus: int
    index_eq: int | None = None
    sp_index_min: int | None = None
    sp_index_eq: int | None = None
    max_components: int = 6
    max_multiplicity: int = 6
    max_genus_label: int = 1
    max_offdiag: int = 2
    max_selfint_abs: int = 4
    limit: int | None = None
    budget_nodes: int | None = None

    def __post_init__(self):
        for name in ("max_components", "max_multiplicity", "max_offdiag", "max_selfint_abs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.max_genus_label < 0:
            raise ValueError("max_genus_label must be non-negative")
        for name in ("index_eq", "sp_index_min", "sp_index_eq", "budget_nodes"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ValueError(f"{name} must be positive")
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be non-negative")

    def accepts(self, rt: ReductionType) -> bool:
        if self.index_eq is not None and index(rt) != self.index_eq:
            return False
        sp = sp_index(rt)
        if self.sp_index_min is not None and sp < self.sp_index_min:
            return False
        return self.sp_index_eq is None or sp == self.sp_index_eq


@dataclass
class SearchStats:
    nodes: int = 0
    pruned: int = 0
    elapsed: float = 0.0
    budget_nodes: int | None = None


@dataclass(frozen=True)
class SearchResult:
    types: tuple[ReductionType, ...]
    count: int
    exhausted: bool
    stats: SearchStats = field(compare=False)


class _OutOfBudget(Exception):
    pass


def _sort_key(rt: ReductionType) -> tuple:
    return (rt.r, rt.N, rt.G, rt.C)


class _Enumerator:
    def __init__(self, c: SearchConstraints):
        self.c = c
        self.stats = SearchStats(budget_nodes=c.budget_nodes)
        self.found: dict[tuple, ReductionType] = {}
        lo = max(c.sp_index_min or 1, c.sp_index_eq or 1)
        self.min_label = lo
        self.labels = [(n, g) for n in range(lo, c.max_multiplicity + 1) for g in range(c.max_genus_label + 1)]

    def tick(self) -> None:
        self.stats.nodes += 1
        if self.c.budget_nodes is not None and self.stats.nodes > self.c.budget_nodes:
            raise _OutOfBudget

    def run(self) -> None:
        if self.c.index_eq not in (None, 1):
            # realizable multiplicity vectors are primitive
            return
        for r in range(1, self.c.max_components + 1):
            self.labels_dfs(r, [], 0)

    def labels_dfs(self, r: int, chosen: list[tuple[int, int]], start: int) -> None:
        self.tick()
        if len(chosen) == r:
            N = tuple(n for n, _ in chosen)
            G = tuple(g for _, g in chosen)
            if gcd_all(N) != 1:
                self.stats.pruned += 1
                return
            twice_g_minus = 2 * self.c.genus - 2 + 2 * sum(n * (1 - g) for n, g in chosen)
            if twice_g_minus < 0 or (r == 1 and twice_g_minus != 0):
                self.stats.pruned += 1
                return
            if r == 1:
                self.emit(N, G, [[0]])
                return
            self.edges_dfs(N, G, twice_g_minus)
            return
        for k in range(start, len(self.labels)):
            chosen.append(self.labels[k])
            self.labels_dfs(r, chosen, k)
            chosen.pop()

    def edges_dfs(self, N: tuple[int, ...], G: tuple[int, ...], budget: int) -> None:
        r = len(N)
        c = self.c
        pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
        allowed = [math.gcd(N[i], N[j]) >= self.min_label for i, j in pairs]
        cap = [c.max_selfint_abs * n for n in N]
        rows = [0] * r
        C = [[0] * r for _ in range(r)]

        def row_done(i: int) -> bool:
            return rows[i] > 0 and rows[i] % N[i] == 0

        def go(k: int, rem: int) -> None:
            self.tick()
            if k == len(pairs):
                if rem == 0:
                    self.emit(N, G, C)
                else:
                    self.stats.pruned += 1
                return
            i, j = pairs[k]
            top = c.max_offdiag if allowed[k] else 0
            cost = N[i] + N[j]
            for v in range(top + 1):
                if v * cost > rem or rows[i] + v * N[j] > cap[i] or rows[j] + v * N[i] > cap[j]:
                    self.stats.pruned += 1
                    break
                rows[i] += v * N[j]
                rows[j] += v * N[i]
                C[i][j] = C[j][i] = v
                ok = True
                if j == r - 1:
                    ok = row_done(i) and (i != r - 2 or row_done(j))
                if ok:
                    go(k + 1, rem - v * cost)
                else:
                    self.stats.pruned += 1
                rows[i] -= v * N[j]
                rows[j] -= v * N[i]
                C[i][j] = C[j][i] = 0

        go(0, budget)

    def emit(self, N: tuple[int, ...], G: tuple[int, ...], C: list[list[int]]) -> None:
        r = len(N)
        full = [row[:] for row in C]
        for i in range(r):
            s = sum(full[i][j] * N[j] for j in range(r) if j != i)
            full[i][i] = -(s // N[i])
        rt = ReductionType(N, G, tuple(map(tuple, full)))
        report = validate_model(rt)
        if not (report.winters_ok and report.genus == self.c.genus and self.c.accepts(rt)):
            return
        key = canonical_key(rt)
        if key not in self.found:
            self.found[key] = canonical(rt)


def enumerate_types(c: SearchConstraints) -> SearchResult:
    """All realizable types inside the box with the target genus, up to isomorphism.

    Output is sorted by ``(r, N, G, C)`` of the canonical forms, so repeated
    runs give identical results.  When ``budget_nodes`` runs out the partial
    result is returned with ``exhausted=False``.
    """
    e = _Enumerator(c)
    t0 = time.perf_counter()
    exhausted = True
    try:
        e.run()
    except _OutOfBudget:
        exhausted = False
    e.stats.elapsed = time.perf_counter() - t0
    types = sorted(e.found.values(), key=_sort_key)
    count = len(types)
    if c.limit is not None:
        types = types[: c.limit]
    return SearchResult(types=tuple(types), count=count, exhausted=exhausted, stats=e.stats)


@dataclass(frozen=True)
class ExampleReport:
    name: str
    x: int
    passed: bool
    winters_ok: bool
    index: int
    sp_index: int
    genus: int
    expected_genus: int


def verify_example(name: str, x: int) -> ExampleReport:
    """Rebuild a named fixture and confirm index 1, specialization index 2 and its genus."""
    if x < 0:
        raise ValueError("x must be non-negative")
    if name not in EXAMPLES:
        raise KeyError(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}")
    rt = EXAMPLES[name](x)
    expected = {"example1": 5, "example2": 2}[name] + 2 * x
    report = validate_model(rt)
    i, sp, g = index(rt), sp_index(rt), report.genus
    passed = report.winters_ok and i == 1 and sp == 2 and g == expected
    return ExampleReport(name, x, passed, report.winters_ok, i, sp, int(g), expected)


def strict_family(g: int) -> ReductionType:
    """A realizable type of genus ``g`` with index 1 and specialization index 2.

    Exists for ``g = 2`` and every ``g >= 4``: even genera come from the star
    ``example2`` and odd ones from ``example1`` by raising the genus of the
    first component.
    """
    if g < 2 or g == 3:
        raise ValueError(f"no member of the family has genus {g}")
    return example2((g - 2) // 2) if g % 2 == 0 else example1((g - 5) // 2)
