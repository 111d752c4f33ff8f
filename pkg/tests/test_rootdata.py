import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import dominant_in_orbit, reflect, w0_orbit
from twistedweyl.rootdata import (RootDatumError, build_root_datum, dominant_representative,
                                  finite_weyl_act)

CLASSIFIED = {"A1": (1, 2), "A2": (3, 6), "A3": (6, 24), "B2": (4, 8), "B3": (9, 48), "C3": (9, 48),
              "D4": (12, 192), "G2": (6, 12), "F4": (24, 1152), "A1xA1": (2, 4)}


@pytest.mark.parametrize("label", sorted(CLASSIFIED))
def test_classified_counts(label):
    d = build_root_datum(label)
    assert (len(d.positive_roots), d.weyl.order) == CLASSIFIED[label]


def test_a1_adjoint():
    d = build_root_datum("A1", "adjoint")
    assert len(d.positive_roots) == 1
    # the coroot is twice the fundamental coweight
    assert d.in_lattice((1,))
    assert d.fundamental_group.invariants == (2,)
    assert d.to_coroot_coords((1,)) == (Fraction(1, 2),)


def test_a1_simply_connected_lattice():
    d = build_root_datum("A1")
    assert not d.in_lattice((1,))
    assert d.in_lattice((2,))


def test_b2_long_and_short():
    d = build_root_datum("B2")
    # Bourbaki: alpha_1 long, alpha_2 short; the coroot of the short root is long
    assert d.cartan == [[2, -1], [-2, 2]] or d.cartan[0][1] * d.cartan[1][0] == 2
    assert d.form(d.cartan[0], d.cartan[0]) < d.form(d.cartan[1], d.cartan[1])


def test_unknown_type():
    with pytest.raises(RootDatumError):
        build_root_datum("Q7")


def test_explicit_lattice_basis_validated():
    d = build_root_datum("A1", [[1]])
    assert d.in_lattice((1,))
    with pytest.raises(RootDatumError):
        build_root_datum("A2", [[1, 1]])  # does not contain the coroot lattice


def test_finite_weyl_act_examples():
    d = build_root_datum("A1")
    assert finite_weyl_act(d, 0, (2,)) == (2,)
    s = d.weyl.simple[0]
    assert finite_weyl_act(d, s, (2,)) == (-2,)  # alpha^vee = 2 varpi^vee
    a2 = build_root_datum("A2")
    w = a2.weyl.mul(a2.weyl.simple[0], a2.weyl.simple[1])
    v = tuple(a2.cartan[0])  # alpha_1^vee
    assert finite_weyl_act(a2, w, v) == reflect(a2, reflect(a2, v, 1), 0)


def test_dominant_representative_examples():
    d = build_root_datum("A1")
    assert dominant_representative(d, (0,)) == ((0,), 0)
    dom, w = dominant_representative(d, (-2,))
    assert dom == (2,) and w == d.weyl.simple[0]


vectors = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=2, max_size=2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "B2", "G2", "A1xA1"]), vectors)
def test_dominant_representative_against_orbit(label, v):
    d = build_root_datum(label)
    v = tuple(v)
    dom, w = dominant_representative(d, v)
    assert d.is_dominant(dom)
    assert finite_weyl_act(d, w, v) == dom
    assert dom == dominant_in_orbit(d, v)
    assert dominant_representative(d, dom) == (dom, 0)
    for u in w0_orbit(d, v):
        assert dominant_representative(d, u)[0] == dom


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_orbit_invariance_exhaustive(label):
    d = build_root_datum(label)
    for v in itertools.product(range(-2, 3), repeat=2):
        dom = dominant_representative(d, v)[0]
        for w in range(d.weyl.order):
            assert dominant_representative(d, finite_weyl_act(d, w, v))[0] == dom
