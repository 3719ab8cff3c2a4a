import random

import pytest

from heckesat.corresp import (
    Correspondence,
    CorrespError,
    CycleZero,
    FinitePointSet,
    act,
    compose,
    corr_from_json,
    corr_to_json,
    frobenius_corr,
    graph_corr,
    identity_corr,
    vanishing_test,
)


def make_set(size=4, frob=None, q=5, m=1):
    return FinitePointSet(size, frob or tuple(range(size)), q, m)


def rand_corr(rng, ps):
    return Correspondence(ps, ps, tuple(
        tuple(rng.randint(-3, 3) for _ in range(ps.size))
        for _ in range(ps.size)))


def test_point_set_validation():
    with pytest.raises(CorrespError):
        FinitePointSet(3, (0, 0, 1), 5, 1)
    with pytest.raises(CorrespError):
        FinitePointSet(3, (1, 2, 0), 5, 1)  # order 3 does not divide m=1
    FinitePointSet(3, (1, 2, 0), 5, 3)


def test_compose_identity():
    ps = make_set()
    rng = random.Random(1)
    c = rand_corr(rng, ps)
    assert compose(c, identity_corr(ps)).weights == c.weights
    assert compose(identity_corr(ps), c).weights == c.weights


def test_graph_composition_is_function_composition():
    ps = make_set(4)
    f = (1, 2, 3, 0)
    g = (2, 2, 0, 1)
    gf = tuple(g[f[i]] for i in range(4))
    assert compose(graph_corr(ps, ps, f), graph_corr(ps, ps, g)).weights == \
        graph_corr(ps, ps, gf).weights


def test_compose_associative_random():
    rng = random.Random(2)
    ps = make_set()
    for _ in range(20):
        c1, c2, c3 = (rand_corr(rng, ps) for _ in range(3))
        assert compose(compose(c1, c2), c3).weights == \
            compose(c1, compose(c2, c3)).weights


def test_compose_mismatch():
    with pytest.raises(CorrespError):
        compose(identity_corr(make_set(3)), identity_corr(make_set(4)))


def test_frobenius_corr_properties():
    ps = FinitePointSet(4, (1, 0, 3, 2), 3, 2)
    gq = frobenius_corr(ps)
    assert all(sum(r) == 1 for r in gq.weights)
    assert all(sum(col) == 1 for col in zip(*gq.weights))
    assert compose(gq, gq).weights == identity_corr(ps).weights


def test_act_point_mass_frobenius():
    ps = FinitePointSet(4, (1, 0, 3, 2), 3, 2)
    gq = frobenius_corr(ps)
    for i in range(4):
        out = act(CycleZero.point_mass(ps, i), gq)
        assert out.coefficients == tuple(
            int(j == ps.frobenius[i]) for j in range(4))


def test_act_is_right_module():
    rng = random.Random(3)
    ps = make_set()
    for _ in range(10):
        c, d = rand_corr(rng, ps), rand_corr(rng, ps)
        p = CycleZero(ps, tuple(rng.randint(-2, 2) for _ in range(4)))
        assert act(act(p, c), d).coefficients == \
            act(p, compose(c, d)).coefficients


def test_vanishing_iff_zero():
    rng = random.Random(4)
    ps = make_set()
    zero = Correspondence(ps, ps, tuple(
        tuple(0 for _ in range(4)) for _ in range(4)))
    assert vanishing_test(zero)
    assert not vanishing_test(identity_corr(ps))
    for _ in range(20):
        c = rand_corr(rng, ps)
        assert vanishing_test(c) == all(
            x == 0 for r in c.weights for x in r)
        assert vanishing_test(c - c)


def test_json_roundtrip():
    ps = FinitePointSet(3, (1, 2, 0), 7, 3)
    c = Correspondence(ps, ps, ((1, 0, -2), (0, 3, 0), (5, 0, 0)))
    assert corr_from_json(corr_to_json(c)) == c
