import itertools
import math
import random
from functools import reduce

import pytest
from hypothesis import strategies as st

from spindex import ReductionType, random_refinement, seed_types


def naive_shifted_elements(gens, bound):
    """All sum a_j gens_j <= bound with every a_j >= 1, by forward closure.

    Start from sum(gens) and keep adding single generators.
    """
    start = sum(gens)
    if start > bound:
        return set()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = s + g
                if t <= bound and t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return seen


def naive_threshold(gens, horizon=400):
    g = reduce(math.gcd, gens)
    elems = naive_shifted_elements(gens, horizon)
    M = horizon - horizon % g
    assert M in elems, "horizon too small"
    while M - g > 0 and M - g in elems:
        M -= g
    return M


def brute_canonical_key(rt):
    best = None
    for perm in itertools.permutations(range(rt.r)):
        key = (
            tuple(rt.N[i] for i in perm),
            tuple(rt.G[i] for i in perm),
            tuple(rt.C[i][j] for i in perm for j in perm),
        )
        if best is None or key < best:
            best = key
    return best


def relabeled(rt, perm):
    return rt.relabel(perm)


def refined_types(count, steps=(1, 8), seed=0):
    """``count`` (base, chain) pairs from the seed types, deterministic."""
    rng = random.Random(seed)
    seeds = seed_types()
    out = []
    for k in range(count):
        base = seeds[k % len(seeds)]
        out.append((base, random_refinement(base, rng.randint(*steps), seed=rng.randrange(2**32))))
    return out


@st.composite
def reduction_types(draw, max_r=5, max_n=12, max_c=3, connected=False):
    """Structurally well-formed types, not necessarily satisfying C.N^t = 0."""
    r = draw(st.integers(1, max_r))
    N = draw(st.lists(st.integers(1, max_n), min_size=r, max_size=r))
    G = draw(st.lists(st.integers(0, 3), min_size=r, max_size=r))
    C = [[0] * r for _ in range(r)]
    for i in range(r):
        C[i][i] = draw(st.integers(-8, 0))
        for j in range(i + 1, r):
            C[i][j] = C[j][i] = draw(st.integers(0, max_c))
    if connected:
        for i in range(1, r):
            j = draw(st.integers(0, i - 1))
            if C[i][j] == 0:
                C[i][j] = C[j][i] = 1
    return ReductionType(tuple(N), tuple(G), tuple(map(tuple, C)))


@pytest.fixture(scope="session")
def refinements_1000():
    return refined_types(1000, seed=2024)
