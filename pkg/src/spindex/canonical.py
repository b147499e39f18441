"""Canonical labeling of reduction types up to relabeling of components.

Vertices are colored by ``(N_i, G_i, c_ii)`` and the coloring is refined by
neighborhood multisets until stable.  Remaining ties are broken by
individualizing each vertex of the first non-singleton cell in turn and
recursing; the canonical form is the lexicographically smallest encoding
over all leaves.  This is exact, and fast enough for the handful of
components met in bounded searches.
"""
from __future__ import annotations

from .core import ReductionType


def _refine(rt: ReductionType, colors: list[int]) -> list[int]:
    r = rt.r
    C = rt.C
    while True:
        sigs = [
            (colors[i], tuple(sorted((colors[j], C[i][j]) for j in range(r) if j != i and C[i][j])))
            for i in range(r)
        ]
        ranks = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _encode(rt: ReductionType, order: list[int]) -> tuple:
    return (
        tuple(rt.N[i] for i in order),
        tuple(rt.G[i] for i in order),
        tuple(rt.C[i][j] for i in order for j in order),
    )


def canonical_order(rt: ReductionType) -> list[int]:
    """A component order such that isomorphic types relabel to the same data."""
    rt.require_well_formed()
    r = rt.r
    base = [(rt.N[i], rt.G[i], rt.C[i][i]) for i in range(r)]
    ranks = {s: k for k, s in enumerate(sorted(set(base)))}
    start = _refine(rt, [ranks[s] for s in base])

    best: list = [None, None]

    def search(colors: list[int]) -> None:
        if len(set(colors)) == r:
            order = sorted(range(r), key=colors.__getitem__)
            key = _encode(rt, order)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, order
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, n in counts.items() if n > 1)
        for v in range(r):
            if colors[v] != target:
                continue
            # split v off just below the rest of its cell
            split = [2 * c + (0 if i == v else 1) if c == target else 2 * c + 1 for i, c in enumerate(colors)]
            search(_refine(rt, split))

    search(start)
    return best[1]


def canonical(rt: ReductionType) -> ReductionType:
    out = rt.relabel(canonical_order(rt))
    return ReductionType(out.N, out.G, out.C)


def canonical_key(rt: ReductionType) -> tuple:
    return _encode(rt, canonical_order(rt))
