import math
import random

import pytest

from spindex import (
    NotRealizableError,
    ReductionType,
    blowup_intersection,
    blowup_smooth_point,
    degree_set,
    example1,
    example2,
    genus,
    index,
    nu,
    random_refinement,
    realize_degree,
    sp_index,
    validate_model,
)
from spindex.modelops import BlowupStep, apply_step, choose_alpha
from spindex.semigroup import ShiftedSemigroup, sg_contains
from conftest import refined_types

DOUBLE_CONTACT = ReductionType((1, 2), (0, 0), ((-4, 2), (2, -1)))


def invariants(rt):
    return index(rt), sp_index(rt), nu(rt), genus(rt)


def test_smooth_blowup_example1():
    out = blowup_smooth_point(example1(0), 0)
    assert out.r == 6 and out.N[5] == 2
    assert out.C[0][0] == -4 and out.C[0][5] == out.C[5][0] == 1 and out.C[5][5] == -1
    assert validate_model(out).fiber_ok
    assert invariants(out) == invariants(example1(0))


def test_smooth_blowup_of_smooth_fiber():
    out = blowup_smooth_point(ReductionType.single(), 0)
    assert out.N == (1, 1)
    assert out.C == ((-1, 1), (1, -1))


def test_intersection_blowup_example1():
    base = example1(0)
    out = blowup_intersection(base, 3, 4)
    assert out.N[5] == 10
    assert out.C[3][4] == 0 and out.C[3][5] == 1 and out.C[4][5] == 1
    assert sp_index(out) == 2
    assert validate_model(out).fiber_ok


def test_intersection_blowup_double_contact():
    out = blowup_intersection(DOUBLE_CONTACT, 0, 1)
    assert out.N == (1, 2, 3)
    assert out.C[0][1] == 1
    assert out.C == ((-5, 1, 1), (1, -2, 1), (1, 1, -1))
    assert validate_model(out).fiber_ok


def test_intersection_needs_an_edge():
    with pytest.raises(ValueError):
        blowup_intersection(example1(0), 0, 1)
    with pytest.raises(ValueError):
        blowup_intersection(example1(0), 2, 2)
    with pytest.raises(IndexError):
        blowup_smooth_point(example1(0), 5)


def test_gcd_identity_no_new_small_strata():
    for a in range(1, 15):
        for b in range(1, 15):
            assert math.gcd(a, a + b) == math.gcd(a, b)


def test_realize_double_contact():
    chain = realize_degree(DOUBLE_CONTACT, (0, 1), 5)
    assert len(chain.steps) == 2
    assert [s.new_multiplicity for s in chain.steps] == [3, 5]
    assert chain.result.N[chain.witness] == 5


def test_realize_singleton():
    rt = example1(0)
    chain = realize_degree(rt, (2,), 9)
    assert chain.steps == () and chain.witness == 2 and chain.result == rt
    with pytest.raises(NotRealizableError):
        realize_degree(rt, (2,), 10)


def test_realize_example1_edge():
    # J = {3,5} in 1-based labels, N = (3, 6), d = 12 = 2*3 + 1*6
    assert choose_alpha(3, 6, 12) == (2, 1)
    chain = realize_degree(example1(0), (2, 4), 12)
    assert [s.new_multiplicity for s in chain.steps] == [9, 12]
    assert 12 % chain.result.N[chain.witness] == 0


def test_realize_rejects_non_members():
    with pytest.raises(NotRealizableError):
        realize_degree(DOUBLE_CONTACT, (0, 1), 2)
    with pytest.raises(ValueError):
        realize_degree(example1(0), (0, 1), 10)


def test_realize_non_primitive_alpha():
    # d = 2*(1*1 + 1*2): alpha = (2, 2), primitive direction (1, 1)
    chain = realize_degree(DOUBLE_CONTACT, (0, 1), 6)
    assert choose_alpha(1, 2, 6) == (2, 2)
    assert len(chain.steps) == 1 and chain.result.N[chain.witness] == 3


def _stern_brocot_depth(a, b):
    """Number of mediants on the path from (1,0),(0,1) to (a, b), computed by subtraction."""
    steps = 0
    while (a, b) != (1, 1):
        if a > b:
            a -= b
        else:
            b -= a
        steps += 1
    return steps + 1


def test_chain_length_matches_stern_brocot_depth():
    rng = random.Random(8)
    for _ in range(200):
        n_i, n_j = rng.randint(1, 9), rng.randint(1, 9)
        rt = ReductionType((n_i, n_j), (0, 0), ((-n_j, 1), (1, -n_i)))
        d = rng.randint(n_i + n_j, 120)
        if not sg_contains(ShiftedSemigroup((n_i, n_j)), d):
            continue
        chain = realize_degree(rt, (0, 1), d)
        a_i, a_j = choose_alpha(n_i, n_j, d)
        h = math.gcd(a_i, a_j)
        assert len(chain.steps) == _stern_brocot_depth(a_i // h, a_j // h)
        assert len(chain.steps) <= a_i // h + a_j // h
        assert chain.result.N[chain.witness] == (a_i * n_i + a_j * n_j) // h
        assert d % chain.result.N[chain.witness] == 0
        assert chain.replay() == chain.result


def test_random_refinement_example2():
    chain = random_refinement(example2(0), 10, seed=1)
    assert chain.result.r == 16
    assert validate_model(chain.result).fiber_ok
    assert invariants(chain.result) == invariants(example2(0))
    assert chain == random_refinement(example2(0), 10, seed=1)


def test_random_refinement_identity():
    chain = random_refinement(example1(0), 0, seed=4)
    assert chain.steps == () and chain.result == example1(0)


def test_random_refinement_requires_fiber():
    with pytest.raises(ValueError):
        random_refinement(ReductionType((2, 3), (0, 0), ((-2, 1), (1, -2))), 3, seed=0)


def test_apply_step_rejects_mismatch():
    with pytest.raises(ValueError):
        apply_step(example1(0), BlowupStep("smooth_point", (0,), 5, 3))
    with pytest.raises(ValueError):
        apply_step(example1(0), BlowupStep("flip", (0,), 5, 2))


def test_blowups_preserve_everything():
    for base, chain in refined_types(200, seed=17):
        rep = validate_model(chain.result)
        assert rep.fiber_ok and rep.connected and rep.structural_ok
        assert invariants(chain.result) == invariants(base)
        assert degree_set(chain.result) == degree_set(base)
        assert degree_set(chain.result).issubset(degree_set(base))
        assert chain.replay() == chain.result
