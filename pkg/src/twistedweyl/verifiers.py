"""Window-level verifiers for the classification and comparison theorems.

Each verifier scans every element of a length window and returns a
:class:`VerificationReport`; a non-empty counterexample list means a
theorem failed on the window, which would point at an implementation bug.
"""

from __future__ import annotations

import logging

from .affine import AffineWeylGroup
from .conjugacy import (DecompositionError, classify_straight, is_straight, min_decomposition,
                        validate_decomposition)
from .fixed import (FixedPointError, FixedSubgroupData, RelativeClassifier, absolute_dominant,
                    is_relatively_straight, relative_newton)
from .invariants import Classifier, CoinvariantGroup
from .lattice import fmt_vector
from .report import VerificationReport
from .twist import GammaSubgroup, Twist

log = logging.getLogger(__name__)

MAX_LISTED = 20


def _fmt_inv(inv) -> str:
    return f"kappa={inv.kottwitz} nu={fmt_vector(inv.newton)}"


def verify_classification(G: AffineWeylGroup, theta: Twist, gamma: GammaSubgroup, bound: int,
                          theorem: str = "Gamma", max_elements: int = 2_000_000,
                          window=None) -> VerificationReport:
    """pi_{theta, Gamma} is a bijection from straight W(Gamma)-classes onto its image.

    Injectivity: straight elements with equal invariant are joined by
    length-preserving steps and Gamma-twists. Well-definedness: joined
    elements have equal invariants. Image: every value of pi on the window
    is attained by a straight element of the window. The straight
    W_a-orbits are also checked to refine the W(Gamma)-classes compatibly
    with the projection Omega -> Omega_{theta, Gamma}.
    """
    if window is None:
        window = G.window(bound, max_elements)
    rep = VerificationReport(theorem, bound, elements=len(window))
    sc = classify_straight(G, theta, gamma, bound, window=window)
    rep.classes = len(sc.records)
    for a, b in sc.disconnected[:MAX_LISTED]:
        rep.fail(f"not connected despite equal invariant: {G.format(a)} vs {G.format(b)}")
    for a, b in sc.mixed[:MAX_LISTED]:
        rep.fail(f"connected with different invariants: {G.format(a)} vs {G.format(b)}")
    pi = Classifier(G, theta, gamma)
    image = {r.invariant for r in sc.records}
    missing = 0
    for x in window:
        if pi(x) not in image:
            missing += 1
            if missing <= MAX_LISTED:
                rep.fail(f"value {_fmt_inv(pi(x))} of {G.format(x)} has no straight preimage")
    # refinement: straight W_a-orbits -> straight W(Gamma)-classes
    flat = classify_straight(G, theta, GammaSubgroup.trivial(G, theta), bound, window=window)
    coinv = CoinvariantGroup(G, theta, gamma)
    for r in flat.records:
        images = {pi(x) for x in r.elements}
        if len(images) != 1:
            rep.fail(f"W_a-orbit of {G.format(r.representative)} meets several W(Gamma)-classes")
        inv = next(iter(images))
        # with Gamma = 1 the Kottwitz value is the Omega coordinate itself
        if coinv.project_omega(r.invariant.kottwitz) != inv.kottwitz:
            rep.fail(f"Kottwitz projection mismatch at {G.format(r.representative)}")
    rep.details = {
        "straight_elements": sum(len(r.elements) for r in sc.records),
        "flat_classes": len(flat.records),
        "coinvariants": list(coinv.invariants),
        "gamma_order": len(gamma.elements),
    }
    return rep


def verify_gamma(G, theta, bound, max_elements=2_000_000, window=None) -> VerificationReport:
    """Gamma = Omega: straight theta-classes of W."""
    return verify_classification(G, theta, GammaSubgroup.full(G, theta), bound, "gamma", max_elements, window)


def verify_partial(G, theta, bound, max_elements=2_000_000, window=None) -> VerificationReport:
    """Gamma = 1: straight W_a-orbits, with the Omega-class count for comparison."""
    if window is None:
        window = G.window(bound, max_elements)
    rep = verify_classification(G, theta, GammaSubgroup.trivial(G, theta), bound, "partial", max_elements, window)
    full = classify_straight(G, theta, GammaSubgroup.full(G, theta), bound, window=window)
    rep.details["omega_classes"] = len(full.records)
    return rep


def verify_min1(G: AffineWeylGroup, theta: Twist, bound: int, max_elements: int = 2_000_000) -> VerificationReport:
    """Every w reduces to some u x with x straight, x in ^J W^theta(J), x theta(J) x^-1 = J."""
    window = G.window(bound, max_elements)
    rep = VerificationReport("min1", bound, elements=len(window))
    sizes: dict[int, int] = {}
    for w in window:
        try:
            d = min_decomposition(G, theta, w)
        except DecompositionError as exc:
            rep.fail(str(exc))
            continue
        problems = validate_decomposition(G, theta, w, d)
        if problems:
            rep.fail(f"{G.format(w)}: {'; '.join(problems)}")
        sizes[len(d.J)] = sizes.get(len(d.J), 0) + 1
    rep.details = {"J_sizes": {str(k): v for k, v in sorted(sizes.items())}}
    return rep


def verify_min2(G: AffineWeylGroup, theta: Twist, bound: int, max_elements: int = 2_000_000) -> VerificationReport:
    """Straight elements in the same W_a-orbit (equal flat invariant) are approx-connected."""
    window = G.window(bound, max_elements)
    rep = VerificationReport("min2", bound, elements=len(window))
    sc = classify_straight(G, theta, GammaSubgroup.trivial(G, theta), bound, window=window)
    rep.classes = len(sc.records)
    for a, b in sc.disconnected[:MAX_LISTED]:
        rep.fail(f"straight, same W_a-orbit, not approx: {G.format(a)} vs {G.format(b)}")
    rep.details = {"pairs": sum(len(r.elements) * (len(r.elements) - 1) // 2 for r in sc.records)}
    return rep


class NotApplicable(ValueError):
    pass


def verify_bijection(G: AffineWeylGroup, theta: Twist, bound: int, max_elements: int = 2_000_000) -> VerificationReport:
    """For theta trivial on Omega, straight W_a-orbits and straight W-classes correspond bijectively."""
    if not theta.acts_trivially_on_omega():
        raise NotApplicable("the bijection check needs theta to act trivially on Omega")
    window = G.window(bound, max_elements)
    rep = VerificationReport("bij", bound, elements=len(window))
    flat = classify_straight(G, theta, GammaSubgroup.trivial(G, theta), bound, window=window)
    full = classify_straight(G, theta, GammaSubgroup.full(G, theta), bound, window=window)
    where = {}
    for i, r in enumerate(full.records):
        for x in r.elements:
            where[x] = i
    image = [where[r.representative] for r in flat.records]
    if len(set(image)) != len(image):
        rep.fail("two straight W_a-orbits lie in the same W-class")
    if set(image) != set(range(len(full.records))):
        rep.fail("some straight W-class contains no straight W_a-orbit")
    rep.classes = len(full.records)
    rep.details = {"flat_classes": len(flat.records), "omega_classes": len(full.records)}
    return rep


def verify_length_add(data: FixedSubgroupData, bound: int, max_elements: int = 2_000_000) -> VerificationReport:
    """W = W~^sigma, W_a = W~_a^sigma, Omega = Omega~^sigma and length additivity on a window."""
    G = data.group
    shells = data.enumerate_by_length(bound, max_elements)
    rel = {x: k for k, shell in enumerate(shells) for x in shell}
    rep = VerificationReport("length-add", bound, elements=len(rel))
    top = max(G.length(x) for x in rel)
    fixed = [x for x in G.window(top, max_elements) if data.is_fixed(x)]
    rel_len = {}
    for x in fixed:
        try:
            rel_len[x] = data.length(x)
        except FixedPointError as exc:
            rep.fail(f"{G.format(x)} is sigma-fixed but not generated: {exc}")
    for x, k in rel.items():
        if not data.is_fixed(x):
            rep.fail(f"{G.format(x)} is not sigma-fixed")
        elif rel_len.get(x) != k:
            rep.fail(f"relative length of {G.format(x)} is {k} by search but {rel_len.get(x)} by descent")
    expected = {x for x, k in rel_len.items() if k <= bound}
    if expected != set(rel):
        rep.fail(f"window mismatch: {len(expected ^ set(rel))} elements differ")
    zero = G.omega_group.zero()
    rel_a = {x for x in rel if data.kappa(x) == zero}
    abs_a = {x for x in expected if G.kappa(x) == zero}
    if rel_a != abs_a:
        rep.fail("relative affine Weyl group window differs from the sigma-fixed affine window")
    fixed_omega = {w for w in G.omega_list if data.is_fixed(w)}
    if fixed_omega != {x for x in rel if rel[x] == 0}:
        rep.fail("relative Omega differs from the sigma-fixed length zero elements")
    pairs = 0
    elems = sorted(rel)
    for x in elems:
        for y in elems:
            xy = G.mul(x, y)
            if data.length(xy) == rel[x] + rel[y]:
                pairs += 1
                if G.length(xy) != G.length(x) + G.length(y):
                    rep.fail(f"length additivity fails for {G.format(x)}, {G.format(y)}")
    rep.details = {"absolute_bound": top, "sigma_fixed": len(fixed), "additive_pairs": pairs,
                   "relative_omega": len(data.omega)}
    return rep


def verify_injection(data: FixedSubgroupData, theta: Twist, gamma: GammaSubgroup, bound: int,
                     max_elements: int = 2_000_000) -> VerificationReport:
    """The comparison map on straight classes is injective.

    (a) relatively straight elements are absolutely straight; (b) distinct
    relative invariants give distinct absolute invariants; (c) no root
    hyperplane of the absolute W0 separates the relatively dominant Newton
    points, so relative dominance implies a single absolute chamber.
    """
    G = data.group
    if not theta.commutes_with(data.sigma):
        raise NotApplicable("theta and sigma do not commute")
    window = data.window(bound, max_elements)
    rep = VerificationReport("inject", bound, elements=len(window))
    rel_pi = RelativeClassifier(data, theta, gamma)
    abs_pi = Classifier(G, theta, gamma)
    straight = [x for x in window if is_relatively_straight(data, theta, x)]
    rel_to_abs: dict = {}
    abs_to_rel: dict = {}
    for x in straight:
        if not is_straight(G, theta, x):
            rep.fail(f"{G.format(x)} is relatively straight but not absolutely straight")
        r = rel_pi(x)
        a = abs_pi(x)
        rel_to_abs.setdefault(r, set()).add(a)
        abs_to_rel.setdefault(a, set()).add(r)
        if absolute_dominant(G, relative_newton(data, theta, x)) != a.newton:
            rep.fail(f"Newton points of {G.format(x)} disagree between the two groups")
        # relative invariants are constant under relative twisted conjugation
        for g in list(data.generators) + list(gamma.omega_elements):
            y = G.mul(G.mul(g, x), G.inv(theta(g)))
            if rel_pi(y) != r:
                rep.fail(f"relative invariant not constant at {G.format(x)}")
    for r, imgs in rel_to_abs.items():
        if len(imgs) > 1:
            rep.fail(f"relative class with invariant {r} meets several absolute classes")
    for a, pre in abs_to_rel.items():
        if len(pre) > 1:
            rep.fail(f"collision: {len(pre)} relative classes map to {_fmt_inv(a)}")
    dominant = {rel_pi.newton(x) for x in straight}
    for beta in G.datum.positive_roots:
        signs = {(sum(b * v for b, v in zip(beta, u)) > 0) - (sum(b * v for b, v in zip(beta, u)) < 0)
                 for u in dominant}
        if 1 in signs and -1 in signs:
            rep.fail(f"root hyperplane {beta} separates relatively dominant Newton points")
    rep.classes = len(rel_to_abs)
    rep.details = {"relative_straight": len(straight), "absolute_classes": len(abs_to_rel),
                   "base_point": fmt_vector(data.apartment.base_point)}
    return rep
