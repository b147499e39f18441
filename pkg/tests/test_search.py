import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from spindex import (
    ReductionType,
    SearchConstraints,
    blowup_smooth_point,
    bound_check,
    canonical,
    enumerate_types,
    example1,
    example2,
    index,
    nu,
    sp_index,
    strict_family,
    validate_model,
    verify_example,
)
from spindex.canonical import canonical_key
from conftest import brute_canonical_key, reduction_types

SMALL = dict(max_components=3, max_multiplicity=3, max_genus_label=1, max_offdiag=2, max_selfint_abs=3)


def naive_search(genus, max_components, max_multiplicity, max_genus_label, max_offdiag, max_selfint_abs):
    """Every full matrix in the box, checked directly; deduplicated by permutation minimum."""
    found = set()
    for r in range(1, max_components + 1):
        pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
        for N in itertools.product(range(1, max_multiplicity + 1), repeat=r):
            for off in itertools.product(range(max_offdiag + 1), repeat=len(pairs)):
                for diag in itertools.product(range(-max_selfint_abs, max_selfint_abs + 1), repeat=r):
                    C = [[0] * r for _ in range(r)]
                    for (i, j), v in zip(pairs, off):
                        C[i][j] = C[j][i] = v
                    for i, v in enumerate(diag):
                        C[i][i] = v
                    if any(sum(C[i][j] * N[j] for j in range(r)) for i in range(r)):
                        continue
                    for G in itertools.product(range(max_genus_label + 1), repeat=r):
                        rt = ReductionType(N, G, tuple(map(tuple, C)))
                        rep = validate_model(rt)
                        if rep.winters_ok and rep.genus == genus:
                            found.add(brute_canonical_key(rt))
    return found


@pytest.fixture(scope="module")
def g2_strict():
    return enumerate_types(SearchConstraints(genus=2, index_eq=1, sp_index_min=2))


@pytest.mark.parametrize("g", [0, 1, 2])
def test_enumeration_matches_naive_oracle(g):
    res = enumerate_types(SearchConstraints(genus=g, **SMALL))
    assert res.exhausted
    keys = [brute_canonical_key(t) for t in res.types]
    assert len(set(keys)) == len(keys), "isomorphic duplicates in output"
    assert set(keys) == naive_search(g, **SMALL)


def test_g2_finds_example2(g2_strict):
    assert g2_strict.exhausted and g2_strict.count >= 1
    assert canonical(example2(0)) in g2_strict.types
    for t in g2_strict.types:
        assert validate_model(t).winters_ok
        assert (index(t), validate_model(t).genus) == (1, 2)
        assert sp_index(t) >= 2


def test_g0_and_g3_are_empty():
    for g in (0, 3):
        res = enumerate_types(SearchConstraints(genus=g, index_eq=1, sp_index_min=2))
        assert res.exhausted and res.count == 0 and res.types == ()


def test_search_is_deterministic():
    c = SearchConstraints(genus=1, max_components=3, max_multiplicity=4, max_offdiag=2)
    a, b = enumerate_types(c), enumerate_types(c)
    assert a.types == b.types and a.count == b.count
    keys = [(t.r, t.N, t.G, t.C) for t in a.types]
    assert keys == sorted(keys)
    assert all(canonical(t) == t for t in a.types)


def test_filter_monotonicity():
    box = dict(max_components=4, max_multiplicity=4, max_offdiag=2, max_selfint_abs=4)
    for g in (1, 2):
        full = set(enumerate_types(SearchConstraints(genus=g, **box)).types)
        narrowed = enumerate_types(SearchConstraints(genus=g, sp_index_min=2, **box)).types
        assert set(narrowed) <= full
        assert set(narrowed) == {t for t in full if sp_index(t) >= 2}
        exact = enumerate_types(SearchConstraints(genus=g, sp_index_eq=1, **box)).types
        assert set(exact) == {t for t in full if sp_index(t) == 1}


def test_index_other_than_one_is_empty():
    res = enumerate_types(SearchConstraints(genus=1, index_eq=2, max_components=3))
    assert res.exhausted and res.count == 0


def test_budget_marks_partial():
    res = enumerate_types(SearchConstraints(genus=2, index_eq=1, sp_index_min=2, budget_nodes=1000))
    assert not res.exhausted
    assert res.stats.budget_nodes == 1000


def test_limit_and_count_only():
    c = dict(genus=1, max_components=3, max_multiplicity=3)
    full = enumerate_types(SearchConstraints(**c))
    assert full.count > 2
    two = enumerate_types(SearchConstraints(limit=2, **c))
    assert two.types == full.types[:2] and two.count == full.count and two.exhausted
    none = enumerate_types(SearchConstraints(limit=0, **c))
    assert none.types == () and none.count == full.count


def test_bounds_on_search_output():
    box = dict(max_components=4, max_multiplicity=5, max_offdiag=2, max_selfint_abs=4)
    for g in (2, 3):
        for t in enumerate_types(SearchConstraints(genus=g, **box)).types:
            b = bound_check(t)
            assert b.holds and b.sp_within_canonical
            assert nu(t) <= g


def test_invalid_constraints():
    with pytest.raises(ValueError):
        SearchConstraints(genus=2, max_components=0)
    with pytest.raises(ValueError):
        SearchConstraints(genus=2, limit=-1)


# canonical labeling


def _perturb(rt, seed):
    """A random relabeling of rt, with one off-diagonal entry bumped half the time."""
    rng = random.Random(seed)
    perm = list(range(rt.r))
    rng.shuffle(perm)
    out = rt.relabel(perm)
    if rt.r >= 2 and rng.random() < 0.5:
        i, j = rng.sample(range(rt.r), 2)
        C = [list(row) for row in out.C]
        C[i][j] = C[j][i] = C[i][j] + 1
        out = ReductionType(out.N, out.G, tuple(map(tuple, C)))
    return out


def test_canonical_separates_fixtures():
    fixtures = [example1(0), example1(1), example2(0), example2(3), blowup_smooth_point(example2(0), 1)]
    for a in fixtures:
        for b in fixtures:
            assert (canonical_key(a) == canonical_key(b)) == (brute_canonical_key(a) == brute_canonical_key(b))


@settings(max_examples=150)
@given(reduction_types(max_r=6, max_n=3, max_c=2), st.integers(0, 2**32))
def test_canonical_agrees_with_permutation_minimum(rt, seed):
    other = _perturb(rt, seed)
    same_brute = brute_canonical_key(rt) == brute_canonical_key(other)
    assert (canonical_key(rt) == canonical_key(other)) == same_brute


@settings(max_examples=60)
@given(reduction_types(max_r=7, max_n=4))
def test_canonical_idempotent_and_invariant(rt):
    c = canonical(rt)
    assert canonical(c) == c
    perm = list(range(rt.r))
    random.Random(rt.r * 31 + sum(rt.N)).shuffle(perm)
    assert canonical(rt.relabel(perm)) == c


# fixtures and the strict family


@pytest.mark.parametrize("name, x, g", [("example1", 0, 5), ("example2", 3, 8), ("example1", 1, 7)])
def test_verify_example(name, x, g):
    rep = verify_example(name, x)
    assert rep.passed and rep.genus == g == rep.expected_genus


def test_verify_example_errors():
    with pytest.raises(ValueError):
        verify_example("example1", -1)
    with pytest.raises(KeyError):
        verify_example("example3", 0)


def test_strict_family():
    assert strict_family(2) == example2(0)
    assert strict_family(7) == example1(1)
    for g in (0, 1, 3):
        with pytest.raises(ValueError):
            strict_family(g)
    for g in [2] + list(range(4, 21)):
        rt = strict_family(g)
        assert validate_model(rt).winters_ok
        assert (index(rt), sp_index(rt), validate_model(rt).genus) == (1, 2, g)
