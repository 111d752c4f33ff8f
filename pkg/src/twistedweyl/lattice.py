"""Exact linear algebra over the integers and the rationals.

Everything here works on plain nested lists/tuples of ``int`` or
``fractions.Fraction``; no floating point is ever involved.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of {v : rows @ v = 0}, one vector per free column, in RREF order."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """One rational solution of a @ x = b, or None when inconsistent."""
    n = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return tuple(x)


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form with transforms.

    Returns ``(D, U, V)`` with ``U @ a @ V == D``, ``U`` and ``V`` unimodular
    and ``D`` diagonal with ``D[i][i]`` dividing ``D[i+1][i+1]`` and all
    diagonal entries non-negative.
    """
    d = [list(map(int, row)) for row in a]
    m = len(d)
    n = len(d[0]) if m else 0
    u = identity(m)
    v = identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):
        for row in d:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(m, n)):
        nonzero = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                q = d[i][t] // d[t][t]
                if q:
                    add_row(t, i, -q)
                if d[i][t]:
                    done = False
                    if abs(d[i][t]) < abs(d[t][t]):
                        swap_rows(t, i)
            for j in range(t + 1, n):
                q = d[t][j] // d[t][t]
                if q:
                    add_col(t, j, -q)
                if d[t][j]:
                    done = False
                    if abs(d[t][j]) < abs(d[t][t]):
                        swap_cols(t, j)
            if not done:
                continue
            # divisibility: pivot must divide the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if d[i][j] % d[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return d, u, v


class AbelianQuotient:
    """The finitely generated abelian group Z^n / <relations>.

    Elements are identified with canonical coordinate tuples obtained from the
    Smith normal form of the relation matrix: torsion coordinates are reduced
    into ``range(d)`` and free coordinates are kept as integers. Trivial
    factors (d = 1) are dropped, so two vectors project to the same tuple
    exactly when their difference lies in the relation lattice.
    """

    def __init__(self, ambient_rank: int, relations: Sequence[Sequence[int]]):
        self.ambient_rank = ambient_rank
        rels = [list(r) for r in relations if any(r)]
        if rels:
            cols = transpose(rels)
        else:
            cols = [[] for _ in range(ambient_rank)]
        if cols and cols[0]:
            d, u, _ = smith_normal_form(cols)
            diag = [d[i][i] if i < len(d[0]) else 0 for i in range(ambient_rank)]
        else:
            u = identity(ambient_rank)
            diag = [0] * ambient_rank
        self._u = u
        self._diag = diag
        self._keep = [i for i, di in enumerate(diag) if di != 1]
        self.invariants: tuple[int, ...] = tuple(diag[i] for i in self._keep)
        self._u_inv = None

    @property
    def is_finite(self) -> bool:
        return all(d != 0 for d in self.invariants)

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise ValueError("infinite group")
        out = 1
        for d in self.invariants:
            out *= d
        return out

    def project(self, v: Sequence[int]) -> tuple[int, ...]:
        w = matvec(self._u, v)
        out = []
        for i in self._keep:
            di = self._diag[i]
            out.append(w[i] % di if di else w[i])
        return tuple(out)

    def lift(self, coords: Sequence[int]) -> tuple[int, ...]:
        """An ambient vector projecting to ``coords``."""
        if len(coords) != len(self._keep):
            raise ValueError(f"expected {len(self._keep)} coordinates, got {len(coords)}")
        if self._u_inv is None:
            self._u_inv = [[int(x) for x in row] for row in inverse(self._u)]
        w = [0] * self.ambient_rank
        for i, c in zip(self._keep, coords):
            w[i] = int(c)
        return matvec(self._u_inv, w)

    def elements(self) -> list[tuple[int, ...]]:
        """All elements in lexicographic order (finite groups only)."""
        if not self.is_finite:
            raise ValueError("infinite group")
        return [tuple(c) for c in product(*(range(d) for d in self.invariants))]

    def add(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return tuple((x + y) % d if d else x + y for x, y, d in zip(a, b, self.invariants))

    def neg(self, a: Sequence[int]) -> tuple[int, ...]:
        return tuple((-x) % d if d else -x for x, d in zip(a, self.invariants))

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.invariants)

    def __repr__(self) -> str:
        parts = [f"Z/{d}" if d else "Z" for d in self.invariants]
        return "AbelianQuotient(" + (" x ".join(parts) or "trivial") + ")"


def fmt_rational(x) -> str:
    """Render an exact rational as ``p`` or ``p/q``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vector(v: Sequence) -> str:
    return "(" + ", ".join(fmt_rational(x) for x in v) + ")"
