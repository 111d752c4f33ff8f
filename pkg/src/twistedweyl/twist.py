"""Length-preserving automorphisms of W and twisted conjugation.

A twist is ``theta = Ad(omega) o theta'`` where ``theta'`` is induced by a
permutation of the finite Dynkin diagram and ``omega`` is a length-zero
element. On ``t^lam w``, ``theta'`` acts by ``t^{P lam} (P w P^-1)`` with
``P`` the permutation matrix of fundamental coweights.
"""

from __future__ import annotations

from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

from .affine import AffineElement, AffineWeylGroup
from .lattice import AbelianQuotient


class TwistError(ValueError):
    pass


class Twist:
    """theta = Ad(omega) o theta' on an extended affine Weyl group."""

    def __init__(self, group: AffineWeylGroup, diagram_perm: Sequence[int], omega: Sequence[int] = (),
                 check_bound: int = 4):
        datum = group.datum
        r = datum.rank
        perm = tuple(int(i) for i in diagram_perm) if diagram_perm else tuple(range(r))
        if sorted(perm) != list(range(r)):
            raise TwistError(f"{perm} is not a permutation of the finite nodes")
        c = datum.cartan
        if any(c[perm[i]][perm[j]] != c[i][j] for i in range(r) for j in range(r)):
            raise TwistError(f"{perm} is not a diagram automorphism")
        self.group = group
        self.diagram_perm = perm
        # (P lam)[perm[i]] = lam[i]
        P = [[0] * r for _ in range(r)]
        for i in range(r):
            P[perm[i]][i] = 1
        self.matrix = tuple(tuple(row) for row in P)
        for row in datum.lattice_basis:
            if not datum.in_lattice(self._perm_vec(row)):
                raise TwistError("diagram automorphism does not stabilize the translation lattice")
        W0 = group.W0
        self._conj = [W0.index(_conj_matrix(P, m)) for m in W0.matrices]
        q = group.omega_group
        omega = tuple(int(x) for x in omega)
        if len(omega) != len(q.invariants):
            raise TwistError(f"omega needs {len(q.invariants)} coordinates, got {len(omega)}")
        self.omega_coords = q.project(q.lift(omega)) if omega else ()
        self.omega = group.omega(self.omega_coords)
        self._omega_inv = group.inv(self.omega)
        if self.affine_permutation is None:
            raise TwistError("twist does not permute the affine simple reflections")
        if check_bound >= 0:
            for x in group.window(check_bound):
                if group.length(self(x)) != group.length(x):
                    raise TwistError("twist is not length-preserving")

    def _perm_vec(self, lam):
        out = [0] * len(lam)
        for i, p in enumerate(self.diagram_perm):
            out[p] = lam[i]
        return tuple(out)

    def linear(self, x: AffineElement) -> AffineElement:
        """theta'(x)."""
        return AffineElement(self._perm_vec(x.translation), self._conj[x.finite])

    def __call__(self, x: AffineElement) -> AffineElement:
        G = self.group
        y = self.linear(x)
        if self.omega == G.identity:
            return y
        return G.mul(G.mul(self.omega, y), self._omega_inv)

    apply = __call__

    def power(self, k: int, x: AffineElement) -> AffineElement:
        for _ in range(k):
            x = self(x)
        return x

    def on_omega(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Action on Omega = Y / Z Phi^vee (Ad(omega) acts trivially there)."""
        G = self.group
        q = G.omega_group
        lam = self._perm_vec(G.datum.lattice_vector(q.lift(coords)))
        return q.project(G.datum.lattice_coords(lam))

    @cached_property
    def affine_permutation(self) -> tuple[int, ...] | None:
        """Index permutation of the affine simple reflections induced by theta."""
        G = self.group
        out = []
        for s in G.simple_reflections:
            i = G.simple_index(self(s))
            if i is None:
                return None
            out.append(i)
        return tuple(out)

    @cached_property
    def order(self) -> int:
        G = self.group
        gens = list(G.simple_reflections) + list(G.omega_list)
        bound = _lcm(_perm_order(self.diagram_perm), max(1, len(G.omega_list))) * 2 * len(gens)
        cur = list(gens)
        for n in range(1, bound + 1):
            cur = [self(x) for x in cur]
            if cur == gens:
                return n
        raise TwistError("twist does not have finite order within the computed bound")

    @property
    def is_identity(self) -> bool:
        return self.order == 1

    def acts_trivially_on_omega(self) -> bool:
        q = self.group.omega_group
        return all(self.on_omega(c) == c for c in q.elements())

    def commutes_with(self, other: "Twist") -> bool:
        G = self.group
        gens = list(G.simple_reflections) + list(G.omega_list) + [G.translation(b) for b in G.datum.lattice_basis]
        return all(self(other(x)) == other(self(x)) for x in gens)

    def __repr__(self) -> str:
        return f"Twist(perm={self.diagram_perm}, omega={self.omega_coords}, order={self.order})"


def _conj_matrix(P, m):
    r = len(P)
    # P m P^-1 with P a permutation matrix (P^-1 = P^T)
    pm = [[sum(P[i][k] * m[k][j] for k in range(r)) for j in range(r)] for i in range(r)]
    return [[sum(pm[i][k] * P[j][k] for k in range(r)) for j in range(r)] for i in range(r)]



def _perm_order(p) -> int:
    n, cur = 1, list(p)
    while cur != list(range(len(p))):
        cur = [p[i] for i in cur]
        n += 1
    return n


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)


def build_twist(group: AffineWeylGroup, diagram_perm: Sequence[int] | None = None,
                omega: Sequence[int] | None = None) -> Twist:
    r = group.rank
    return Twist(group, diagram_perm if diagram_perm is not None else range(r),
                 omega if omega is not None else (0,) * len(group.omega_group.invariants))


def identity_twist(group: AffineWeylGroup) -> Twist:
    return build_twist(group)


def twist_from_affine_permutation(group: AffineWeylGroup, affine_perm: Sequence[int]) -> Twist:
    """The twist (diagram permutation, omega) inducing ``affine_perm`` on the simple reflections."""
    r = group.rank
    affine_perm = tuple(affine_perm)
    for perm in permutations(range(r)):
        for c in group.omega_group.elements() or [()]:
            try:
                t = Twist(group, perm, c, check_bound=-1)
            except TwistError:
                continue
            if t.affine_permutation == affine_perm:
                Twist(group, perm, c)  # full length check
                return t
    raise TwistError(f"no twist of the form Ad(omega) o theta' induces {affine_perm}")


def twisted_conjugate(g: AffineElement, x: AffineElement, theta: Twist) -> AffineElement:
    """g x theta(g)^-1."""
    G = theta.group
    return G.mul(G.mul(g, x), G.inv(theta(g)))


class GammaSubgroup:
    """A theta-stable subgroup Gamma of Omega, given by generators."""

    def __init__(self, group: AffineWeylGroup, theta: Twist, generators: Iterable[Sequence[int]] = ()):
        q: AbelianQuotient = group.omega_group
        gens = [q.project(q.lift(tuple(g))) for g in generators]
        elems = {q.zero()}
        frontier = [q.zero()]
        while frontier:
            nxt = []
            for e in frontier:
                for g in gens:
                    f = q.add(e, g)
                    if f not in elems:
                        elems.add(f)
                        nxt.append(f)
            frontier = nxt
        for e in list(elems):
            if theta.on_omega(e) not in elems:
                raise TwistError("Gamma is not theta-stable")
        self.group = group
        self.theta = theta
        self.generators = tuple(gens)
        self.elements = tuple(sorted(elems))
        self.element_set = frozenset(elems)

    @classmethod
    def trivial(cls, group, theta):
        return cls(group, theta, [])

    @classmethod
    def full(cls, group, theta):
        q = group.omega_group
        n = len(q.invariants)
        return cls(group, theta, [tuple(int(i == j) for j in range(n)) for i in range(n)])

    def contains(self, x: AffineElement) -> bool:
        """Membership of x in W(Gamma) = W_a x| Gamma."""
        return self.group.kappa(x) in self.element_set

    @property
    def omega_elements(self) -> list[AffineElement]:
        return [self.group.omega(c) for c in self.elements]

    @property
    def is_full(self) -> bool:
        return len(self.elements) == len(self.group.omega_list)

    @property
    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def __repr__(self) -> str:
        return f"GammaSubgroup({list(self.elements)})"


def cyclic_subgroups(group: AffineWeylGroup, theta: Twist) -> list[GammaSubgroup]:
    """Distinct theta-stable cyclic subgroups of Omega."""
    seen = set()
    out = []
    for c in group.omega_group.elements():
        try:
            g = GammaSubgroup(group, theta, [c])
        except TwistError:
            continue
        if g.element_set not in seen:
            seen.add(g.element_set)
            out.append(g)
    return out
