"""The sigma-fixed subgroup W = W~^sigma and its fixed apartment.

sigma is a twist of the absolute group W~. It acts on the apartment by an
affine map preserving the base alcove; its fixed points form the relative
apartment ``e + V``. The relative group is generated by the longest
elements of the finite parabolics attached to sigma-orbits on the affine
simple reflections, together with the sigma-fixed length zero elements.

All points are exact rational vectors in fundamental-coweight coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import NamedTuple, Sequence

from .affine import AffineElement, AffineWeylGroup, ResourceCapExceeded
from .invariants import newton_point
from .lattice import fmt_rational, nullspace, rank, rref, solve
from .rootdata import dominant_representative
from .twist import GammaSubgroup, Twist

Vector = tuple[Fraction, ...]


class FixedPointError(RuntimeError):
    pass


class AffineAction(NamedTuple):
    """v -> linear @ v + translation."""
    linear: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...]

    def __call__(self, v: Sequence) -> Vector:
        return tuple(Fraction(t) + sum(a * Fraction(x) for a, x in zip(row, v))
                     for row, t in zip(self.linear, self.translation))


def alcove_walls(G: AffineWeylGroup) -> list[tuple[tuple[int, ...], int]]:
    """Affine functionals ``v -> <v, beta> + c`` vanishing on the walls, indexed like ``simple_reflections``."""
    r = G.rank
    walls = [(tuple(int(i == j) for j in range(r)), 0) for i in range(r)]
    walls.extend((tuple(-x for x in theta), 1) for theta in G.datum.highest_roots)
    return walls


def alcove_vertices(G: AffineWeylGroup) -> list[Vector]:
    """Vertices of the closed base alcove (products of simplices for product types)."""
    datum = G.datum
    marks = datum.marks
    per_comp = []
    for nodes in datum.component_nodes:
        opts = [()]
        opts.extend(((j, Fraction(1, marks[j])),) for j in nodes)
        per_comp.append(opts)
    out = []
    for choice in product(*per_comp):
        v = [Fraction(0)] * G.rank
        for part in choice:
            for j, x in part:
                v[j] = x
        out.append(tuple(v))
    return sorted(out)


def alcove_barycenter(G: AffineWeylGroup) -> Vector:
    return _mean(alcove_vertices(G))


def _mean(points: Sequence[Vector]) -> Vector:
    n = len(points)
    return tuple(sum(p[i] for p in points) / n for i in range(len(points[0])))


def sigma_affine_action(G: AffineWeylGroup, sigma: Twist) -> AffineAction:
    """The apartment map of sigma = Ad(omega) o sigma': v -> omega(P v).

    Checked against sigma's permutation of the affine simple reflections:
    each wall functional must be carried to the permuted one.
    """
    P = sigma.matrix
    m = G.linear_part(sigma.omega)
    lin = tuple(tuple(sum(m[i][k] * P[k][j] for k in range(G.rank)) for j in range(G.rank)) for i in range(G.rank))
    action = AffineAction(lin, tuple(sigma.omega.translation))
    walls = alcove_walls(G)
    perm = sigma.affine_permutation
    verts = alcove_vertices(G)
    for i, (beta, c) in enumerate(walls):
        beta2, c2 = walls[perm[i]]
        for v in verts:
            if _eval(beta2, c2, action(v)) != _eval(beta, c, v):
                raise FixedPointError("apartment action does not match the affine diagram permutation")
    if sorted(action(v) for v in verts) != verts:
        raise FixedPointError("apartment action does not preserve the base alcove")
    return action


def _eval(beta, c, v):
    return sum(b * x for b, x in zip(beta, v)) + c


def _orbit(action: AffineAction, v: Vector) -> list[Vector]:
    out = [v]
    cur = action(v)
    while cur != v:
        out.append(cur)
        cur = action(cur)
        if len(out) > 1000:
            raise FixedPointError("apartment action has no finite orbit")
    return out


class FixedApartment:
    """Fix(sigma) = e + V with e a special vertex of the relative alcove."""

    def __init__(self, G: AffineWeylGroup, action: AffineAction):
        self.group = G
        self.action = action
        datum = G.datum
        r = G.rank
        a_minus_1 = [[Fraction(action.linear[i][j]) - (i == j) for j in range(r)] for i in range(r)]
        particular = solve(a_minus_1, [-Fraction(t) for t in action.translation])
        if particular is None:
            raise FixedPointError("sigma has no fixed point on the apartment")
        self.direction: list[Vector] = nullspace(a_minus_1, r)
        self.dim = len(self.direction)
        verts = alcove_vertices(G)
        seen: set[Vector] = set()
        candidates = []
        for v in verts:
            if v in seen:
                continue
            orb = _orbit(action, v)
            seen.update(orb)
            candidates.append(_mean(orb))
        # for a simplex every orbit barycenter is a vertex; for products some are not
        self.relative_vertices = sorted(p for p in candidates if self._is_vertex(p))
        self.relative_barycenter = _mean(self.relative_vertices)
        special = [p for p in self.relative_vertices if self.is_special(p)]
        if not special:
            raise FixedPointError("relative alcove has no special vertex")
        bary = alcove_barycenter(G)

        def dist(p):
            d = tuple(x - y for x, y in zip(p, bary))
            return datum.form(d, d)

        self.special_vertices = special
        self.base_point: Vector = min(special, key=lambda p: (dist(p), p))

    # -- relative arrangement ---------------------------------------------

    def restrict(self, beta: Sequence[int]) -> tuple[Fraction, ...]:
        """beta restricted to V, in the coordinates of ``direction``."""
        return tuple(sum(Fraction(b) * x for b, x in zip(beta, d)) for d in self.direction)

    @cached_property
    def relative_directions(self) -> dict[tuple[Fraction, ...], list[tuple[int, ...]]]:
        """Restricted root directions (normalized) and the roots giving each."""
        out: dict = {}
        for beta in self.group.datum.positive_roots:
            r = self.restrict(beta)
            if any(r):
                lead = next(x for x in r if x)
                out.setdefault(tuple(x / lead for x in r), []).append(beta)
        return out

    def walls_through(self, p: Vector) -> list[tuple[int, ...]]:
        """Positive roots whose hyperplane family has a member through p and cuts V."""
        out = []
        for roots in self.relative_directions.values():
            out.extend(b for b in roots if Fraction(sum(x * y for x, y in zip(b, p))).denominator == 1)
        return out

    def _is_vertex(self, p: Vector) -> bool:
        if self.dim == 0:
            return True
        return rank([self.restrict(b) for b in self.walls_through(p)] or [[0] * self.dim]) == self.dim

    def is_special(self, p: Vector) -> bool:
        for roots in self.relative_directions.values():
            if not any(Fraction(sum(x * y for x, y in zip(b, p))).denominator == 1 for b in roots):
                return False
        return True

    def contains(self, v: Sequence) -> bool:
        return self.action(tuple(Fraction(x) for x in v)) == tuple(Fraction(x) for x in v)

    # -- presentation -----------------------------------------------------

    def coroot_form(self) -> tuple[Vector, list[Vector]]:
        """(point, span) in simple-coroot coordinates, reduced to a canonical form.

        The span is in reduced row echelon form and the point has zero
        coefficient on every pivot coordinate of the span.
        """
        datum = self.group.datum
        span = [datum.to_coroot_coords(d) for d in self.direction]
        red, pivots = rref(span) if span else ([], [])
        point = list(datum.to_coroot_coords(self.base_point))
        for row, p in zip(red, pivots):
            f = point[p]
            point = [x - f * y for x, y in zip(point, row)]
        return tuple(point), [tuple(row) for row in red]

    def equals(self, point: Sequence, span: Sequence[Sequence]) -> bool:
        """Compare with the affine subspace point + Q span (simple-coroot coordinates)."""
        p0, s0 = self.coroot_form()
        red, pivots = rref(span) if span else ([], [])
        pt = [Fraction(x) for x in point]
        for row, p in zip(red, pivots):
            f = pt[p]
            pt = [x - f * y for x, y in zip(pt, row)]
        return tuple(pt) == p0 and [tuple(r) for r in red] == s0

    def describe(self, names: Sequence[str] | None = None) -> str:
        """Human form such as ``(1/3)a2v + Q a1v``."""
        r = self.group.rank
        names = list(names) if names else [f"a{i + 1}v" for i in range(r)]
        point, span = self.coroot_form()
        if len(span) == r:
            return "Y_Q"
        return _lin(point, names) + "".join(" + Q" + _lin(s, names, bare=True) for s in span)

    def __repr__(self) -> str:
        return f"FixedApartment(e={tuple(fmt_rational(x) for x in self.base_point)}, dim={self.dim})"


def _lin(v, names, bare=False) -> str:
    terms = []
    for x, n in zip(v, names):
        if x == 0:
            continue
        if x == 1:
            terms.append(n)
        elif x == -1:
            terms.append("-" + n)
        else:
            terms.append(f"({fmt_rational(x)}){n}")
    if not terms:
        return "0"
    s = " + ".join(terms).replace("+ -", "- ")
    return f"({s})" if bare and len(terms) > 1 else (" " + s if bare else s)


def fixed_apartment(G: AffineWeylGroup, sigma: Twist) -> FixedApartment:
    return FixedApartment(G, sigma_affine_action(G, sigma))


class FixedSubgroupData:
    """The relative group W~^sigma with its own length function."""

    def __init__(self, G: AffineWeylGroup, sigma: Twist):
        self.group = G
        self.sigma = sigma
        self.apartment = fixed_apartment(G, sigma)
        perm = sigma.affine_permutation
        orbits = []
        seen = set()
        for i in range(len(perm)):
            if i in seen:
                continue
            orb = [i]
            j = perm[i]
            while j != i:
                orb.append(j)
                j = perm[j]
            seen.update(orb)
            orbits.append(tuple(sorted(orb)))
        self.orbits = [o for o in orbits if G.finite_parabolic(o)]
        if len(self.orbits) != len(orbits):
            raise FixedPointError("a sigma-orbit generates an infinite parabolic subgroup")
        self.generators = [G.longest_in_parabolic(o) for o in self.orbits]
        for g in self.generators:
            assert sigma(g) == g and G.mul(g, g) == G.identity
        self.omega = [w for w in G.omega_list if sigma(w) == w]

    @property
    def generator_names(self) -> list[str]:
        names = self.group.simple_names
        out = []
        for o, g in zip(self.orbits, self.generators):
            word, _ = self.group.reduced_word(g)
            out.append("*".join(names[i] for i in word))
        return out

    def is_fixed(self, x: AffineElement) -> bool:
        return self.sigma(x) == x

    def decompose(self, x: AffineElement) -> tuple[tuple[int, ...], AffineElement]:
        """(word in relative generators, sigma-fixed length zero part) with x = r_word * omega.

        The left descent set of a sigma-fixed element is sigma-stable, so
        whenever one reflection of an orbit descends, the whole orbit does
        and the orbit's longest element is a left factor.
        """
        G = self.group
        S = G.simple_reflections
        word = []
        lx = G.length(x)
        while lx > 0:
            for k, o in enumerate(self.orbits):
                if G.length(G.mul(S[o[0]], x)) < lx:
                    if any(G.length(G.mul(S[i], x)) > lx for i in o):
                        raise FixedPointError(f"{G.format(x)} is not sigma-fixed")
                    x = G.mul(self.generators[k], x)
                    nl = G.length(x)
                    if nl != lx - G.length(self.generators[k]):
                        raise FixedPointError("orbit longest element is not a left factor")
                    word.append(k)
                    lx = nl
                    break
            else:
                raise FixedPointError("no descending relative generator")
        if self.sigma(x) != x:
            raise FixedPointError("length zero part is not sigma-fixed")
        return tuple(word), x

    def length(self, x: AffineElement) -> int:
        """Relative length: word length over the relative generators."""
        return len(self.decompose(x)[0])

    def kappa(self, x: AffineElement) -> tuple[int, ...]:
        return self.group.kappa(self.decompose(x)[1])

    def enumerate_by_length(self, bound: int, max_elements: int = 2_000_000) -> list[list[AffineElement]]:
        G = self.group
        shells = [sorted(self.omega)]
        count = len(shells[0])
        for k in range(bound):
            nxt = set()
            for x in shells[-1]:
                for g in self.generators:
                    y = G.mul(x, g)
                    if y not in nxt and self.length(y) == k + 1:
                        nxt.add(y)
            count += len(nxt)
            if count > max_elements:
                raise ResourceCapExceeded(f"more than {max_elements} relative elements")
            shells.append(sorted(nxt))
        return shells

    def window(self, bound: int, max_elements: int = 2_000_000) -> list[AffineElement]:
        return [x for s in self.enumerate_by_length(bound, max_elements) for x in s]

    # -- relative finite Weyl group and dominance -------------------------

    @cached_property
    def stabilizer(self) -> list[AffineElement]:
        """Elements of the relative affine Weyl group fixing e."""
        G = self.group
        e = self.apartment.base_point
        zero = G.omega_group.zero()
        bound = len(G.datum.positive_roots) + 1
        found = {x for x in self.window(bound) if G.act(x, e) == e and G.kappa(x) == zero}
        frontier = list(found)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(found):
                    c = G.mul(a, b)
                    if c not in found:
                        found.add(c)
                        nxt.append(c)
            frontier = nxt
        return sorted(found)

    @cached_property
    def _chamber(self):
        ap = self.apartment
        e = ap.base_point
        c = tuple(x - y for x, y in zip(ap.relative_barycenter, e))
        walls = ap.walls_through(e)
        return [(b, sum(x * y for x, y in zip(b, c))) for b in walls]

    def is_relatively_dominant(self, u: Sequence) -> bool:
        return all(sum(x * y for x, y in zip(b, u)) * sc >= 0 for b, sc in self._chamber)

    def relative_dominant(self, u: Sequence) -> Vector:
        G = self.group
        for w in self.stabilizer:
            m = G.linear_part(w)
            v = tuple(sum(a * Fraction(x) for a, x in zip(row, u)) for row in m)
            if self.is_relatively_dominant(v):
                return v
        raise FixedPointError("no relatively dominant point in the orbit")

    def __repr__(self) -> str:
        return f"FixedSubgroupData(generators={self.generator_names}, omega={len(self.omega)})"


def build_fixed_subgroup(G: AffineWeylGroup, sigma: Twist) -> FixedSubgroupData:
    return FixedSubgroupData(G, sigma)


def relative_period(data: FixedSubgroupData, theta: Twist, x: AffineElement) -> tuple[int, AffineElement]:
    """Smallest n with theta^n trivial on W and the twisted product acting on e + V by a translation."""
    G = data.group
    V = data.apartment.direction
    order = _order_on(data, theta)
    prod = G.identity
    cur = x
    for k in range(1, order * G.W0.order + 1):
        if k > 1:
            cur = theta(cur)
        prod = G.mul(prod, cur)
        if k % order == 0:
            m = G.linear_part(prod)
            if all(tuple(sum(a * d for a, d in zip(row, v)) for row in m) == v for v in V):
                return k, prod
    raise FixedPointError("no relative translation power found")


def _order_on(data: FixedSubgroupData, theta: Twist) -> int:
    gens = list(data.generators) + list(data.omega)
    cur = list(gens)
    for n in range(1, theta.order + 1):
        cur = [theta(x) for x in cur]
        if cur == gens:
            return n
    return theta.order


def relative_newton(data: FixedSubgroupData, theta: Twist, x: AffineElement) -> Vector:
    """Newton point of x in W with e as origin, returned as a vector in V.

    The relative translation part is read off from the image of e; it is
    then checked to agree with the absolute Newton point of x in W~.
    """
    G = data.group
    if not data.is_fixed(x):
        raise FixedPointError("relative_newton needs a sigma-fixed element")
    if not theta.commutes_with(data.sigma):
        raise FixedPointError("theta and sigma do not commute")
    n, p = relative_period(data, theta, x)
    e = data.apartment.base_point
    pe = G.act(p, e)
    lam = tuple(a - b for a, b in zip(pe, e))
    nu = tuple(Fraction(a) / n for a in lam)
    if nu != newton_point(G, theta, x):
        raise FixedPointError("relative and absolute Newton points disagree")
    return nu


class RelativeClassifier:
    """pi_{theta, Gamma} computed intrinsically in the relative group."""

    def __init__(self, data: FixedSubgroupData, theta: Twist, gamma: GammaSubgroup):
        G = data.group
        for c in gamma.elements:
            if data.sigma(G.omega(c)) != G.omega(c):
                raise FixedPointError("Gamma is not contained in the relative Omega")
        q = G.omega_group
        self.data = data
        self.theta = theta
        self.gamma = gamma
        self._shifts = sorted({q.add(c, q.neg(theta.on_omega(c))) for c in gamma.elements})
        self._q = q

    def kottwitz(self, x: AffineElement) -> tuple[int, ...]:
        """Smallest representative of kappa_rel(x) + (1 - theta) Gamma."""
        k = self.data.kappa(x)
        return min(self._q.add(k, s) for s in self._shifts)

    def newton(self, x: AffineElement) -> Vector:
        return self.data.relative_dominant(relative_newton(self.data, self.theta, x))

    def __call__(self, x: AffineElement):
        return (self.kottwitz(x), self.newton(x))


def is_relatively_straight(data: FixedSubgroupData, theta: Twist, x: AffineElement) -> bool:
    G = data.group
    lx = data.length(x)
    if lx == 0:
        return True
    n, _ = relative_period(data, theta, x)
    prod, cur = x, x
    for k in range(2, n + 1):
        cur = theta(cur)
        prod = G.mul(prod, cur)
        if data.length(prod) != k * lx:
            return False
    return True


def absolute_dominant(G: AffineWeylGroup, u: Sequence) -> Vector:
    return tuple(dominant_representative(G.datum, u)[0])
