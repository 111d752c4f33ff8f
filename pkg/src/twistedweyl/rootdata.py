"""Root data and finite Weyl groups over the integers.

Coordinates
-----------
Cocharacters (coweights, translations, Newton points) are written in the
basis of fundamental coweights, so a coweight ``lam`` has
``lam[j] == <lam, alpha_j>``. Every lattice Y between the coroot lattice and
the coweight lattice is then an integer sublattice of ``Z^rank``, the simple
coroot ``alpha_i^vee`` is row ``i`` of the Cartan matrix, and the pairing with
a root written in simple-root coordinates is a plain integer dot product.

The Cartan matrix follows ``cartan[i][j] == <alpha_i^vee, alpha_j>`` with
Bourbaki numbering (so B2 has alpha_1 long, G2 has alpha_1 short).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .lattice import AbelianQuotient, inverse, matvec, rank

WEYL_ORDERS = {
    ("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("A", 4): 120,
    ("B", 2): 8, ("B", 3): 48, ("B", 4): 384,
    ("C", 2): 8, ("C", 3): 48, ("C", 4): 384,
    ("D", 4): 192, ("G", 2): 12, ("F", 4): 1152,
}
POSITIVE_ROOT_COUNTS = {
    ("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 4): 10,
    ("B", 2): 4, ("B", 3): 9, ("B", 4): 16,
    ("C", 2): 4, ("C", 3): 9, ("C", 4): 16,
    ("D", 4): 12, ("G", 2): 6, ("F", 4): 24,
}


class RootDatumError(ValueError):
    pass


def cartan_matrix(family: str, n: int) -> list[list[int]]:
    if (family, n) not in WEYL_ORDERS:
        raise RootDatumError(f"unsupported type {family}{n}")
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if family in "ABCDF":
        for i in range(n - 1):
            c[i][i + 1] = c[i + 1][i] = -1
    if family == "B":
        c[n - 2][n - 1], c[n - 1][n - 2] = -1, -2
    elif family == "C":
        c[n - 2][n - 1], c[n - 1][n - 2] = -2, -1
    elif family == "D":
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1
    elif family == "F":
        c[1][2], c[2][1] = -1, -2
    elif family == "G":
        c[0][1], c[1][0] = -3, -1
    return c


def parse_type(label: str) -> list[tuple[str, int]]:
    """``"A1xA1"`` -> ``[("A", 1), ("A", 1)]``."""
    parts = re.split(r"\s*[x×*]\s*", label.strip())
    out = []
    for p in parts:
        m = re.fullmatch(r"([A-Ga-g])_?(\d+)", p)
        if not m:
            raise RootDatumError(f"cannot parse type label {label!r}")
        key = (m.group(1).upper(), int(m.group(2)))
        if key not in WEYL_ORDERS:
            raise RootDatumError(f"unsupported type {label!r}")
        out.append(key)
    return out


class FiniteWeylGroup:
    """The finite Weyl group W0, tabulated.

    Elements are integers ``0 .. order-1`` (0 is the identity). Each carries
    an integer matrix acting on fundamental-coweight coordinates and a cached
    reduced word in the simple reflections.
    """

    def __init__(self, cartan: Sequence[Sequence[int]], positive_roots: Sequence[Sequence[int]]):
        r = len(cartan)
        self.rank = r
        gens = []
        for i in range(r):
            m = [[int(a == b) for b in range(r)] for a in range(r)]
            for j in range(r):
                m[j][i] -= cartan[i][j]
            gens.append(tuple(tuple(row) for row in m))
        ident = tuple(tuple(int(a == b) for b in range(r)) for a in range(r))
        mats = [ident]
        words: list[tuple[int, ...]] = [()]
        index = {ident: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for e in frontier:
                for i, g in enumerate(gens):
                    m = _mm(mats[e], g)
                    if m not in index:
                        index[m] = len(mats)
                        mats.append(m)
                        words.append(words[e] + (i,))
                        nxt.append(index[m])
            frontier = nxt
        self.matrices: list[tuple[tuple[int, ...], ...]] = mats
        self.words = words
        self._index = index
        self.order = len(mats)
        self.simple = [index[g] for g in gens]

        rho = (1,) * r
        roots = [tuple(a) for a in positive_roots]
        self._roots = roots
        # neg[w][k] is True when w^{-1}(alpha_k) is negative, i.e. <w rho^vee, alpha_k> < 0
        self.neg: list[tuple[bool, ...]] = []
        for m in mats:
            u = matvec(m, rho)
            self.neg.append(tuple(sum(a * b for a, b in zip(alpha, u)) < 0 for alpha in roots))
        self.lengths = [len(w) for w in words]

    def index(self, matrix) -> int:
        return self._index[tuple(tuple(int(x) for x in row) for row in matrix)]

    @cached_property
    def _tables(self):
        mats = np.array(self.matrices, dtype=np.int64)
        n = self.order
        key_index = {m.tobytes(): i for i, m in enumerate(mats)}
        mul = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            prods = np.einsum("ij,njk->nik", mats[a], mats)
            mul[a] = [key_index[p.tobytes()] for p in prods]
        inv = np.empty(n, dtype=np.int32)
        for a in range(n):
            inv[a] = int(np.nonzero(mul[a] == 0)[0][0])
        return mul.tolist(), inv.tolist()

    @property
    def mul_table(self) -> list[list[int]]:
        return self._tables[0]

    @property
    def inv_table(self) -> list[int]:
        return self._tables[1]

    def mul(self, a: int, b: int) -> int:
        return self._tables[0][a][b]

    def inv(self, a: int) -> int:
        return self._tables[1][a]

    def act(self, w: int, v: Sequence) -> tuple:
        """w(v) for a coweight v (integer or rational coordinates)."""
        return matvec(self.matrices[w], v)

    def length(self, w: int) -> int:
        return self.lengths[w]

    def from_word(self, word: Sequence[int]) -> int:
        out = 0
        for i in word:
            out = self.mul(out, self.simple[i])
        return out

    def longest(self) -> int:
        return max(range(self.order), key=self.length)


def _mm(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


@dataclass(frozen=True, eq=False)
class RootDatum:
    """A semisimple root datum with translation lattice Y.

    ``lattice_basis`` rows are generators of Y in fundamental-coweight
    coordinates. The datum is immutable once built.
    """

    cartan_type: str
    components: tuple[tuple[str, int], ...]
    cartan: tuple[tuple[int, ...], ...]
    lattice_basis: tuple[tuple[int, ...], ...]
    lattice_name: str = "custom"
    component_nodes: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def simple_coroots(self) -> list[tuple[int, ...]]:
        return [tuple(row) for row in self.cartan]

    @cached_property
    def _roots(self):
        r = self.rank
        c = self.cartan
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        coroot = {a: tuple(c[i]) for i, a in enumerate(simple)}
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(r):
                    p = sum(beta[j] * c[i][j] for j in range(r))
                    if p == 0:
                        continue
                    new = tuple(b - p * int(j == i) for j, b in enumerate(beta))
                    if new in coroot:
                        continue
                    bv = coroot[beta]
                    coroot[new] = tuple(x - bv[i] * y for x, y in zip(bv, c[i]))
                    nxt.append(new)
            frontier = nxt
        pos = sorted((a for a in coroot if all(x >= 0 for x in a)), key=lambda a: (sum(a), a))
        for a in coroot:
            assert sum(x * y for x, y in zip(a, coroot[a])) == 2
        return pos, coroot

    @property
    def positive_roots(self) -> list[tuple[int, ...]]:
        """Positive roots in simple-root coordinates, sorted by height."""
        return self._roots[0]

    def coroot(self, root: Sequence[int]) -> tuple[int, ...]:
        """The coroot of ``root`` in fundamental-coweight coordinates."""
        return self._roots[1][tuple(root)]

    @property
    def positive_coroots(self) -> list[tuple[int, ...]]:
        return [self.coroot(a) for a in self.positive_roots]

    @cached_property
    def highest_roots(self) -> list[tuple[int, ...]]:
        """Highest root of each irreducible component."""
        out = []
        for nodes in self.component_nodes:
            comp = [a for a in self.positive_roots if all(a[j] == 0 for j in range(self.rank) if j not in nodes)]
            out.append(max(comp, key=sum))
        return out

    @cached_property
    def weyl(self) -> FiniteWeylGroup:
        return FiniteWeylGroup(self.cartan, self.positive_roots)

    @cached_property
    def _lattice(self):
        basis = [list(row) for row in self.lattice_basis]
        inv = inverse([list(col) for col in zip(*basis)])
        coroot_coords = [self.lattice_coords(row, _inv=inv) for row in self.cartan]
        return inv, AbelianQuotient(self.rank, coroot_coords)

    def lattice_coords(self, lam: Sequence, _inv=None) -> tuple[int, ...]:
        """Coordinates of ``lam`` in the lattice basis. Raises if lam is not in Y."""
        inv = _inv if _inv is not None else self._lattice[0]
        c = matvec(inv, lam)
        if any(Fraction(x).denominator != 1 for x in c):
            raise RootDatumError(f"{tuple(lam)} is not in the translation lattice")
        return tuple(int(x) for x in c)

    def lattice_vector(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        """The coweight with the given coordinates in the lattice basis."""
        out = [0] * self.rank
        for c, row in zip(coeffs, self.lattice_basis):
            for j, x in enumerate(row):
                out[j] += c * x
        return tuple(out)

    def in_lattice(self, lam: Sequence) -> bool:
        try:
            self.lattice_coords(lam)
        except RootDatumError:
            return False
        return True

    @property
    def fundamental_group(self) -> AbelianQuotient:
        """Y / Z Phi^vee as a quotient of lattice coordinates."""
        return self._lattice[1]

    def pair(self, lam: Sequence, root: Sequence[int]):
        """<lam, root> for a coweight and a root in simple-root coordinates."""
        return sum(x * y for x, y in zip(lam, root))

    def to_coroot_coords(self, lam: Sequence) -> tuple[Fraction, ...]:
        """Rewrite a coweight in the basis of simple coroots."""
        inv_t = self._cartan_inv_t
        return tuple(Fraction(x) for x in matvec(inv_t, lam))

    def from_coroot_coords(self, mu: Sequence) -> tuple:
        """Inverse of :meth:`to_coroot_coords`."""
        r = self.rank
        return tuple(sum(mu[i] * self.cartan[i][j] for i in range(r)) for j in range(r))

    @cached_property
    def _cartan_inv_t(self):
        return inverse([list(col) for col in zip(*self.cartan)])

    @cached_property
    def marks(self) -> list[int]:
        """Coefficient of each simple root in the highest root of its component."""
        out = [0] * self.rank
        for nodes, theta in zip(self.component_nodes, self.highest_roots):
            for j in nodes:
                out[j] = theta[j]
        return out

    def form(self, u: Sequence, v: Sequence):
        """A W0-invariant positive definite form on coweights."""
        return sum(self.pair(u, a) * self.pair(v, a) for a in self.positive_roots)

    def is_dominant(self, v: Sequence) -> bool:
        return all(x >= 0 for x in v)

    def __repr__(self) -> str:
        return f"RootDatum({self.cartan_type}, {self.lattice_name})"


def build_root_datum(type_label: str, lattice_choice="simply_connected") -> RootDatum:
    """Build a root datum from a type label and a lattice choice.

    ``lattice_choice`` is ``"simply_connected"`` (Y is the coroot lattice),
    ``"adjoint"`` (Y is the coweight lattice) or an explicit list of integer
    generators of Y in fundamental-coweight coordinates.
    """
    comps = parse_type(type_label)
    n = sum(k for _, k in comps)
    cartan = [[0] * n for _ in range(n)]
    nodes = []
    off = 0
    for fam, k in comps:
        block = cartan_matrix(fam, k)
        for i in range(k):
            for j in range(k):
                cartan[off + i][off + j] = block[i][j]
        nodes.append(tuple(range(off, off + k)))
        off += k

    if isinstance(lattice_choice, str):
        if lattice_choice == "simply_connected":
            gens = [list(row) for row in cartan]
        elif lattice_choice == "adjoint":
            gens = [[int(i == j) for j in range(n)] for i in range(n)]
        else:
            raise RootDatumError(f"unknown lattice choice {lattice_choice!r}")
        name = lattice_choice
    else:
        gens = [[int(x) for x in row] for row in lattice_choice]
        if any(len(row) != n for row in gens):
            raise RootDatumError("lattice generators have the wrong dimension")
        name = "custom"
    basis = _lattice_basis(gens, n)
    datum = RootDatum(
        cartan_type="x".join(f"{f}{k}" for f, k in comps),
        components=tuple(comps),
        cartan=tuple(tuple(r) for r in cartan),
        lattice_basis=tuple(tuple(r) for r in basis),
        lattice_name=name,
        component_nodes=tuple(nodes),
    )
    for row in cartan:
        if not datum.in_lattice(row):
            raise RootDatumError("lattice does not contain the coroot lattice")
    expected_pos = sum(POSITIVE_ROOT_COUNTS[c] for c in comps)
    expected_order = 1
    for c in comps:
        expected_order *= WEYL_ORDERS[c]
    if len(datum.positive_roots) != expected_pos:
        raise RootDatumError("positive root count does not match the classification")
    if datum.weyl.order != expected_order:
        raise RootDatumError("Weyl group order does not match the classification")
    return datum


def _lattice_basis(gens: list[list[int]], n: int) -> list[list[int]]:
    """A Z-basis (Hermite normal form rows) of the lattice spanned by ``gens``."""
    if rank(gens) != n:
        raise RootDatumError("lattice generators do not span a full-rank lattice")
    rows = [list(g) for g in gens]
    basis = []
    col = 0
    while rows and col < n:
        rows = [r for r in rows if any(r)]
        piv = [r for r in rows if r[col] != 0]
        if not piv:
            col += 1
            continue
        while len([r for r in rows if r[col] != 0]) > 1:
            piv = sorted((r for r in rows if r[col] != 0), key=lambda r: abs(r[col]))
            p = piv[0]
            for r in piv[1:]:
                q = r[col] // p[col]
                for k in range(n):
                    r[k] -= q * p[k]
            rows = [r for r in rows if any(r)]
        p = next(r for r in rows if r[col] != 0)
        if p[col] < 0:
            p = [-x for x in p]
        basis.append(p)
        rows = [r for r in rows if r[col] == 0]
        col += 1
    return basis


def finite_weyl_act(datum: RootDatum, w: int, v: Sequence) -> tuple:
    """Apply the finite Weyl group element ``w`` to the coweight ``v``."""
    return datum.weyl.act(w, v)


def dominant_representative(datum: RootDatum, v: Sequence) -> tuple[tuple, int]:
    """The dominant coweight in the W0-orbit of ``v`` and an element carrying v to it.

    Returns ``(dominant, w)`` with ``w(v) == dominant``.
    """
    W = datum.weyl
    cur = tuple(v)
    w = 0
    while True:
        i = next((j for j, x in enumerate(cur) if x < 0), None)
        if i is None:
            return cur, w
        cur = W.act(W.simple[i], cur)
        w = W.mul(W.simple[i], w)
