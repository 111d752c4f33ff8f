from fractions import Fraction

import pytest

from conftest import group
from twistedweyl.conjugacy import is_straight
from twistedweyl.fixed import (FixedSubgroupData, alcove_barycenter, alcove_vertices, fixed_apartment,
                               is_relatively_straight, relative_newton, sigma_affine_action)
from twistedweyl.invariants import newton_point
from twistedweyl.twist import GammaSubgroup, build_twist, identity_twist, twist_from_affine_permutation
from twistedweyl.verifiers import verify_injection, verify_length_add

A2 = group("A2", "adjoint")
B2 = group("B2", "adjoint")
AA = group("A1xA1", "adjoint")
A2_SWAP = twist_from_affine_permutation(A2, (0, 2, 1))      # s0 <-> s2, s1 fixed
A2_SWAP01 = twist_from_affine_permutation(A2, (2, 1, 0))    # s0 <-> s1, s2 fixed
B2_SWAP = twist_from_affine_permutation(B2, (2, 1, 0))
AA_SWAP = build_twist(AA, [1, 0], [0, 0])
F = Fraction


def test_identity_action():
    act = sigma_affine_action(B2, identity_twist(B2))
    assert act.linear == ((1, 0), (0, 1)) and act.translation == (0, 0)
    ap = fixed_apartment(B2, identity_twist(B2))
    assert ap.dim == 2 and ap.base_point == (0, 0)


def test_action_permutes_alcove_vertices():
    for sigma in (A2_SWAP, A2_SWAP01, B2_SWAP, AA_SWAP):
        G = sigma.group
        act = sigma_affine_action(G, sigma)
        verts = set(alcove_vertices(G))
        assert {act(v) for v in verts} == verts
        # a reflection of the plane: one fixed direction
        assert fixed_apartment(G, sigma).dim == 1


def test_a2_fixed_line():
    ap = fixed_apartment(A2, A2_SWAP)
    assert ap.equals([F(0), F(1, 3)], [[F(1), F(0)]])
    assert ap.describe(["a1v", "a2v"]) == "(1/3)a2v + Q a1v"
    assert ap.base_point == (F(0), F(1, 2))
    # the literal s0 <-> s1 labelling gives the mirror image
    ap01 = fixed_apartment(A2, A2_SWAP01)
    assert ap01.equals([F(1, 3), F(0)], [[F(0), F(1)]])


def test_a2_relative_group():
    data = FixedSubgroupData(A2, A2_SWAP01)
    s1, s2, s0 = A2.simple_reflections
    assert set(data.generators) == {s2, A2.prod(s0, s1, s0)}
    assert len(data.omega) == 1
    data = FixedSubgroupData(A2, A2_SWAP)
    assert data.generator_names == ["s1", "s2*s0*s2"]


def test_b2_fixed_line():
    ap = fixed_apartment(B2, B2_SWAP)
    # alpha long: the line is (1/2) alpha^vee + Q beta^vee
    assert ap.describe(["av", "bv"]) == "(1/2)av + Q bv"
    assert ap.base_point == (F(1, 2), F(0))
    assert ap.is_special(ap.base_point)
    # the reference value (1/4)(av + bv) + Q av is not this line
    assert not ap.equals([F(1, 4), F(1, 4)], [[F(1), F(0)]])


def test_resl2_relative_group():
    data = FixedSubgroupData(AA, AA_SWAP)
    assert data.generator_names == ["s1*s2", "s0_1*s0_2"]
    assert data.omega == [AA.identity, AA.omega((1, 1))] or sorted(data.omega) == sorted(
        [AA.identity, AA.omega((1, 1))])


def test_identity_sigma_gives_absolute_group():
    G = group("A2")
    t = identity_twist(G)
    data = FixedSubgroupData(G, t)
    for x in G.window(3):
        assert data.length(x) == G.length(x)
        assert relative_newton(data, t, x) == newton_point(G, t, x)


@pytest.mark.parametrize("sigma", [A2_SWAP, B2_SWAP, AA_SWAP], ids=["A2", "B2", "A1xA1"])
def test_relative_window_elements_are_fixed(sigma):
    data = FixedSubgroupData(sigma.group, sigma)
    G = sigma.group
    for x in data.window(4):
        assert sigma(x) == x
        word, om = data.decompose(x)
        assert len(word) == data.length(x)
        assert G.prod(*(data.generators[i] for i in word), om) == x
        assert G.length(om) == 0 and sigma(om) == om
        if is_relatively_straight(data, sigma, x):
            assert is_straight(G, sigma, x)


@pytest.mark.parametrize("sigma", [A2_SWAP, B2_SWAP], ids=["A2", "B2"])
def test_length_add_and_injection(sigma):
    data = FixedSubgroupData(sigma.group, sigma)
    assert verify_length_add(data, 4).passed
    rep = verify_injection(data, sigma, GammaSubgroup.trivial(sigma.group, sigma), 4)
    assert rep.passed, rep.counterexamples


def test_relative_dominance_of_b2_line():
    data = FixedSubgroupData(B2, B2_SWAP)
    d = data.apartment.direction[0]
    minus = tuple(-x for x in d)
    assert data.is_relatively_dominant(d) != data.is_relatively_dominant(minus)
    assert data.apartment.contains(data.apartment.relative_barycenter)
    assert data.apartment.contains(alcove_barycenter(B2))
