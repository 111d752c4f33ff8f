import pytest
from hypothesis import given, settings, strategies as st

from conftest import group
from twistedweyl.fixed import alcove_barycenter, sigma_affine_action
from twistedweyl.twist import (GammaSubgroup, TwistError, build_twist, cyclic_subgroups, identity_twist,
                               twist_from_affine_permutation, twisted_conjugate)

AA = group("A1xA1", "adjoint")
SWAP = build_twist(AA, [1, 0], [0, 0])


def test_identity_twist():
    G = group("B2")
    t = identity_twist(G)
    assert t.order == 1 and t.is_identity
    assert all(t(x) == x for x in G.window(3))


def test_factor_swap():
    assert SWAP.order == 2
    w = AA.omega((1, 0))
    assert SWAP(w) == AA.omega((0, 1))
    t = AA.translation((2, 0))
    assert SWAP(t) == AA.translation((0, 2))
    for x in AA.window(3):
        assert SWAP(SWAP(x)) == x


def test_a2_diagram_swap_on_affine_nodes():
    G = group("A2")
    t = build_twist(G, [1, 0], [])
    assert t.order == 2
    # the finite swap fixes s0 and exchanges s1, s2
    assert t.affine_permutation == (1, 0, 2)
    # the apartment map fixes the alcove barycenter
    act = sigma_affine_action(G, t)
    assert act(alcove_barycenter(G)) == alcove_barycenter(G)


def test_affine_permutation_roundtrip():
    G = group("A2", "adjoint")
    for perm in [(0, 2, 1), (2, 1, 0), (1, 0, 2), (1, 2, 0), (2, 0, 1)]:
        t = twist_from_affine_permutation(G, perm)
        assert t.affine_permutation == perm
        for i, s in enumerate(G.simple_reflections):
            assert t(s) == G.simple_reflections[perm[i]]


def test_invalid_twists():
    G = group("B2")
    with pytest.raises(TwistError):
        build_twist(G, [1, 0], [])  # not a diagram automorphism of B2
    with pytest.raises(TwistError):
        twist_from_affine_permutation(G, (2, 1, 0))  # no length-zero element realizes it for sc B2


def test_gamma_must_be_stable():
    G = group("A1xA1", "adjoint")
    with pytest.raises(TwistError):
        GammaSubgroup(G, SWAP, [(1, 0)])
    assert len(GammaSubgroup(G, SWAP, [(1, 1)]).elements) == 2
    assert {len(g.elements) for g in cyclic_subgroups(G, SWAP)} == {1, 2}


def test_twisted_conjugate_examples():
    G = group("A2", "adjoint")
    t = identity_twist(G)
    for x in G.window(2):
        assert twisted_conjugate(G.identity, x, t) == x
        assert twisted_conjugate(x, x, t) == x
        for w in G.omega_list:
            assert G.kappa(twisted_conjugate(w, x, t)) == G.kappa(x)


TWISTS = [SWAP, twist_from_affine_permutation(group("A2", "adjoint"), (0, 2, 1)),
          twist_from_affine_permutation(group("B2", "adjoint"), (2, 1, 0)),
          twist_from_affine_permutation(group("A2", "adjoint"), (1, 2, 0))]
WIN = {id(t): t.group.window(2) for t in TWISTS}


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(TWISTS).flatmap(lambda t: st.tuples(
    st.just(t), *(st.sampled_from(WIN[id(t)]) for _ in range(3)))))
def test_twist_axioms(args):
    theta, g, h, x = args
    G = theta.group
    assert G.length(theta(x)) == G.length(x)
    assert theta(G.mul(g, h)) == G.mul(theta(g), theta(h))
    assert theta.power(theta.order, x) == x
    lhs = twisted_conjugate(g, twisted_conjugate(h, x, theta), theta)
    assert lhs == twisted_conjugate(G.mul(g, h), x, theta)


def test_theta_on_omega_is_automorphism():
    for theta in TWISTS:
        G = theta.group
        q = G.omega_group
        for a in q.elements():
            for b in q.elements():
                assert theta.on_omega(q.add(a, b)) == q.add(theta.on_omega(a), theta.on_omega(b))
