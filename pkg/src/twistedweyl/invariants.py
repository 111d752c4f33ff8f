"""Newton points, Kottwitz maps and the classifying maps pi_{theta, Gamma}.

``pi(x) = (kottwitz, dominant newton point)`` with the Kottwitz part taking
values in ``Omega / (1 - theta) Gamma``. Gamma = Omega gives pi_theta,
Gamma = 1 gives the flat version, which classifies straight W_a-orbits.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .affine import AffineElement, AffineWeylGroup
from .lattice import AbelianQuotient
from .rootdata import dominant_representative
from .twist import GammaSubgroup, Twist


class ClassInvariant(NamedTuple):
    kottwitz: tuple[int, ...]
    newton: tuple[Fraction, ...]


def twisted_product(G, theta, x: AffineElement, k: int) -> AffineElement:
    """x theta(x) ... theta^{k-1}(x)."""
    out = G.identity
    cur = x
    for i in range(k):
        if i:
            cur = theta(cur)
        out = G.mul(out, cur)
    return out


def newton_period(G, theta, x: AffineElement) -> tuple[int, AffineElement]:
    """Smallest n with theta^n = 1 and x theta(x) ... theta^{n-1}(x) a translation.

    The finite parts of the partial products at multiples of the order of
    theta form a walk in W0, so some n <= order * |W0| works.
    """
    order = theta.order
    cap = order * G.W0.order
    prod = G.identity
    cur = x
    for k in range(1, cap + 1):
        if k > 1:
            cur = theta(cur)
        prod = G.mul(prod, cur)
        if k % order == 0 and G.is_translation(prod):
            return k, prod
    raise RuntimeError("no translation power found below the proven cap")


def newton_point(G: AffineWeylGroup, theta: Twist, x: AffineElement, multiple: int = 1) -> tuple[Fraction, ...]:
    """nu_{x, theta} = lam / n in fundamental-coweight coordinates.

    ``multiple`` scales the admissible n (any multiple is again admissible).
    """
    n, p = newton_period(G, theta, x)
    if multiple != 1:
        n *= multiple
        p = twisted_product(G, theta, x, n)
        assert G.is_translation(p)
    return tuple(Fraction(a, n) for a in p.translation)


def dominant_newton(G: AffineWeylGroup, theta: Twist, x: AffineElement) -> tuple[Fraction, ...]:
    return dominant_representative(G.datum, newton_point(G, theta, x))[0]


class CoinvariantGroup:
    """Omega_{theta, Gamma} = Omega / (1 - theta) Gamma.

    Realized as Y / (Z Phi^vee + (1 - theta') Gamma~) on lattice coordinates,
    where Gamma~ lifts the generators of Gamma to Y; Ad(omega) is trivial on
    the abelian group Omega so only the diagram part of theta matters.
    """

    def __init__(self, G: AffineWeylGroup, theta: Twist, gamma: GammaSubgroup):
        datum = G.datum
        q = G.omega_group
        rels = [list(datum.lattice_coords(row)) for row in datum.cartan]
        for g in gamma.generators:
            lam = datum.lattice_vector(q.lift(g))
            diff = tuple(a - b for a, b in zip(lam, theta._perm_vec(lam)))
            rels.append(list(datum.lattice_coords(diff)))
        self.group = G
        self.theta = theta
        self.gamma = gamma
        self.quotient = AbelianQuotient(datum.rank, rels)

    @property
    def invariants(self) -> tuple[int, ...]:
        return self.quotient.invariants

    def project_omega(self, coords) -> tuple[int, ...]:
        q = self.group.omega_group
        return self.quotient.project(q.lift(coords))

    def __call__(self, x: AffineElement) -> tuple[int, ...]:
        return self.quotient.project(self.group.datum.lattice_coords(x.translation))

    def __repr__(self) -> str:
        return f"CoinvariantGroup({self.quotient!r})"


def kottwitz(G: AffineWeylGroup, theta: Twist, gamma: GammaSubgroup, x: AffineElement) -> tuple[int, ...]:
    return CoinvariantGroup(G, theta, gamma)(x)


class Classifier:
    """Caches the pieces of pi_{theta, Gamma} for repeated evaluation."""

    def __init__(self, G: AffineWeylGroup, theta: Twist, gamma: GammaSubgroup):
        self.group = G
        self.theta = theta
        self.gamma = gamma
        self.coinvariants = CoinvariantGroup(G, theta, gamma)
        self._newton: dict[AffineElement, tuple[Fraction, ...]] = {}

    def newton(self, x: AffineElement) -> tuple[Fraction, ...]:
        v = self._newton.get(x)
        if v is None:
            v = self._newton[x] = dominant_newton(self.group, self.theta, x)
        return v

    def __call__(self, x: AffineElement) -> ClassInvariant:
        return ClassInvariant(self.coinvariants(x), self.newton(x))


def pi(G: AffineWeylGroup, theta: Twist, gamma: GammaSubgroup, x: AffineElement) -> ClassInvariant:
    return Classifier(G, theta, gamma)(x)
