"""Reproductions of the worked examples, compared against checked-in golden files.

* ``A2-swap``: affine A2 with sigma exchanging two affine simple
  reflections; fixed line of the apartment.
* ``B2-swap``: affine B2 with its nontrivial diagram automorphism.
* ``resSL2``: two copies of affine A1 (adjoint lattice) exchanged by sigma;
  (1, 1) and (omega, omega) are sigma-conjugate in W but not under W_a.

Reference values for the fixed lines are stored alongside the
computed ones so that agreement is reported rather than assumed.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .affine import AffineWeylGroup
from .conjugacy import approx_connected, straight_classes_in_window
from .fixed import FixedSubgroupData
from .invariants import Classifier
from .lattice import fmt_rational
from .rootdata import build_root_datum
from .twist import GammaSubgroup, build_twist, twist_from_affine_permutation

# point + Q span in simple-coroot coordinates
EXPECTED_LINES = {
    "A2-swap": {"point": ["0", "1/3"], "span": [["1", "0"]], "text": "(1/3)a2v + Q a1v"},
    "B2-swap": {"point": ["1/4", "1/4"], "span": [["1", "0"]], "text": "(1/4)(av + bv) + Q av"},
}

FIXED_LINE_CONFIGS = {
    "A2-swap": ("A2", "adjoint", (0, 2, 1), ["a1v", "a2v"]),
    "B2-swap": ("B2", "adjoint", (2, 1, 0), ["av", "bv"]),
}

NAMES = ("A2-swap", "B2-swap", "resSL2")


def _q(v) -> list[str]:
    return [fmt_rational(x) for x in v]


def fixed_line_example(name: str) -> dict:
    cartan_type, lattice, perm, names = FIXED_LINE_CONFIGS[name]
    G = AffineWeylGroup(build_root_datum(cartan_type, lattice))
    sigma = twist_from_affine_permutation(G, perm)
    data = FixedSubgroupData(G, sigma)
    ap = data.apartment
    point, span = ap.coroot_form()
    expected = EXPECTED_LINES[name]
    agrees = ap.equals([Fraction(x) for x in expected["point"]], [[Fraction(x) for x in row] for row in expected["span"]])
    snames = G.simple_names
    return {
        "example": name,
        "cartan_type": cartan_type,
        "lattice": lattice,
        "sigma_on_simple_reflections": {snames[i]: snames[j] for i, j in enumerate(perm)},
        "fixed_subspace": {"point": _q(point), "span": [_q(s) for s in span], "text": ap.describe(names)},
        "reference": expected,
        "agrees_with_reference": agrees,
        "base_point_e": _q(ap.base_point),
        "base_point_e_coroot": _q(G.datum.to_coroot_coords(ap.base_point)),
        "relative_generators": data.generator_names,
        "relative_omega_order": len(data.omega),
    }


def res_sl2_example() -> dict:
    G = AffineWeylGroup(build_root_datum("A1xA1", "adjoint"))
    sigma = build_twist(G, [1, 0], [0, 0])
    one = G.identity
    ww = G.omega((1, 1))
    full = Classifier(G, sigma, GammaSubgroup.full(G, sigma))
    flat = Classifier(G, sigma, GammaSubgroup.trivial(G, sigma))
    same_w = full(one) == full(ww)
    same_wa = flat(one) == flat(ww)
    classes = straight_classes_in_window(G, sigma, GammaSubgroup.trivial(G, sigma), 0)

    def inv(c):
        return {"kottwitz": list(c.kottwitz), "newton": _q(c.newton)}

    return {
        "example": "resSL2",
        "elements": {"(1,1)": G.format(one), "(w,w)": G.format(ww)},
        "pi_sigma": {"(1,1)": inv(full(one)), "(w,w)": inv(full(ww))},
        "pi_sigma_flat": {"(1,1)": inv(flat(one)), "(w,w)": inv(flat(ww))},
        "approx_connected": approx_connected(G, sigma, one, ww),
        "same_sigma_class": same_w,
        "same_Wa_sigma_class": same_wa,
        "flat_classes_at_length_0": len(classes),
        "verdict_matches_reference": same_w and not same_wa,
    }


def run_example(name: str) -> dict:
    if name == "resSL2":
        return res_sl2_example()
    return fixed_line_example(name)


def render(result: dict) -> str:
    return json.dumps(result, indent=2, sort_keys=True) + "\n"


def golden(name: str) -> str:
    return resources.files("twistedweyl").joinpath(f"data/golden/{name}.json").read_text()
