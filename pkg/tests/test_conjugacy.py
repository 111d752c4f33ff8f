import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import group
from oracles import class_minimum, straight_by_newton, straight_by_products
from twistedweyl.conjugacy import (approx_connected, descend_to_min, is_straight, level_component,
                                   min_decomposition, reduction_neighbors, straight_classes_in_window,
                                   validate_decomposition)
from twistedweyl.invariants import newton_period
from twistedweyl.twist import GammaSubgroup, build_twist, identity_twist, twist_from_affine_permutation

A1 = group("A1")
A1AD = group("A1", "adjoint")
ID1 = identity_twist(A1)
IDAD = identity_twist(A1AD)
AA = group("A1xA1", "adjoint")
SWAP = build_twist(AA, [1, 0], [0, 0])


def s(G, i):
    return G.simple_reflections[i]


def test_is_straight_examples():
    assert all(is_straight(A1AD, IDAD, w) for w in A1AD.omega_list)
    assert not is_straight(A1, ID1, s(A1, 0))
    G = group("B2")
    t = identity_twist(G)
    for lam in [(2, 0), (0, 2), (2, 2), (4, 2)]:
        if G.datum.in_lattice(lam):
            assert is_straight(G, t, G.translation(lam))


def test_reduction_neighbors_examples():
    steps = reduction_neighbors(A1, ID1, A1.identity)
    assert [st.simple for st in steps] == [0, 1]
    x = A1.prod(s(A1, 1), s(A1, 0), s(A1, 1))  # s0 s1 s0
    assert A1.length(x) == 3
    down = [st for st in reduction_neighbors(A1, ID1, x) if st.simple == 1]
    assert down and down[0].target == s(A1, 0) and down[0].length_delta == -2


def test_descend_examples():
    w = A1AD.omega((1,))
    assert descend_to_min(A1AD, IDAD, w) == (w, [])
    x = A1.prod(s(A1, 1), s(A1, 0), s(A1, 1))
    y, chain = descend_to_min(A1, ID1, x)
    assert A1.length(y) == 1
    assert chain[0].source == x and chain[-1].target == y


def test_approx_connected_examples():
    x = A1AD.translation((1,))
    assert approx_connected(A1AD, IDAD, x, x)
    sa = s(A1AD, 0)
    y = A1AD.prod(sa, x, sa)
    assert A1AD.length(y) == A1AD.length(x)
    assert approx_connected(A1AD, IDAD, x, y)
    assert approx_connected(A1AD, IDAD, x, A1AD.translation((-1,)))
    assert not approx_connected(AA, SWAP, AA.identity, AA.omega((1, 1)))
    with pytest.raises(ValueError):
        approx_connected(A1, ID1, A1.identity, s(A1, 0))


def test_min_decomposition_examples():
    w = A1AD.omega((1,))
    d = min_decomposition(A1AD, IDAD, w)
    assert (d.J, d.x, d.u) == ((), w, A1AD.identity)
    sa = s(A1, 0)
    d = min_decomposition(A1, ID1, sa)
    assert d.J == (0,) and d.x == A1.identity and d.u == sa
    assert validate_decomposition(A1, ID1, sa, d) == []


def test_a1_adjoint_classes():
    recs = straight_classes_in_window(A1AD, IDAD, GammaSubgroup.full(A1AD, IDAD), 4)
    got = {(r.invariant.kottwitz[0], int(r.invariant.newton[0])) for r in recs}
    assert got == {(0, 0), (1, 0), (1, 1), (0, 2), (1, 3), (0, 4)}


def test_a1_sc_length_zero():
    for gamma in (GammaSubgroup.full(A1, ID1), GammaSubgroup.trivial(A1, ID1)):
        recs = straight_classes_in_window(A1, ID1, gamma, 0)
        assert len(recs) == 1 and recs[0].representative == A1.identity


def test_res_sl2_length_zero_classes():
    recs = straight_classes_in_window(AA, SWAP, GammaSubgroup.trivial(AA, SWAP), 0)
    where = {x: r.component for r in recs for x in r.elements}
    assert where[AA.identity] != where[AA.omega((1, 1))]


TWISTS = [IDAD, SWAP, identity_twist(group("G2")),
          twist_from_affine_permutation(group("A2", "adjoint"), (0, 2, 1)),
          twist_from_affine_permutation(group("A2", "adjoint"), (1, 2, 0)),
          twist_from_affine_permutation(group("B2", "adjoint"), (2, 1, 0))]
WIN = {id(t): t.group.window(4) for t in TWISTS}


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(TWISTS).flatmap(lambda t: st.tuples(st.just(t), st.sampled_from(WIN[id(t)]))))
def test_straightness_against_oracles(args):
    theta, x = args
    G = theta.group
    n, _ = newton_period(G, theta, x)
    got = is_straight(G, theta, x)
    assert got == straight_by_newton(G, theta, x)
    assert got == straight_by_products(G, theta, x, 4 * n)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(TWISTS).flatmap(lambda t: st.tuples(st.just(t), st.sampled_from(WIN[id(t)]))))
def test_descend_reaches_class_minimum(args):
    theta, x = args
    G = theta.group
    y, chain = descend_to_min(G, theta, x)
    assert G.length(y) == class_minimum(G, theta, x)
    cur = x
    for step in chain:
        assert step.source == cur
        si = G.simple_reflections[step.simple]
        assert step.target == G.mul(G.mul(si, cur), theta(si))
        assert G.length(step.target) <= G.length(cur)
        cur = step.target
    assert cur == y


def test_straight_elements_only_have_level_steps():
    for theta in TWISTS:
        G = theta.group
        for x in WIN[id(theta)]:
            if is_straight(G, theta, x):
                assert all(st.length_delta == 0 for st in reduction_neighbors(G, theta, x))
                # straightness is constant on the level component
                assert all(is_straight(G, theta, y) for y in level_component(G, theta, x))


def test_descend_is_deterministic():
    rng = random.Random(3)
    for theta in TWISTS:
        G = theta.group
        for x in rng.sample(WIN[id(theta)], 10):
            assert descend_to_min(G, theta, x) == descend_to_min(G, theta, x)
