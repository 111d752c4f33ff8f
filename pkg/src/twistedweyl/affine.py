"""The extended affine Weyl group W = Y x| W0 = W_a x| Omega.

An element ``t^lam w`` is stored in normal form as an :class:`AffineElement`
``(translation, finite)``: ``translation`` is ``lam`` in fundamental-coweight
coordinates and ``finite`` is an index into the tabulated finite Weyl group.
As an affine map of the apartment, ``t^lam w`` sends ``v`` to ``lam + w(v)``.

The base alcove is the fundamental alcove in the dominant chamber,
``{v : 0 < <v, alpha> < 1 for all positive roots alpha}``.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .lattice import AbelianQuotient
from .rootdata import RootDatum

log = logging.getLogger(__name__)


class AffineElement(NamedTuple):
    translation: tuple[int, ...]
    finite: int


class ResourceCapExceeded(RuntimeError):
    pass


class AffineWeylGroup:
    """Arithmetic in the extended affine Weyl group of a root datum."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.W0 = datum.weyl
        self.rank = datum.rank
        self.identity = AffineElement((0,) * self.rank, 0)
        self._roots = datum.positive_roots
        self._mats = self.W0.matrices
        self._neg = self.W0.neg
        self._mul0 = self.W0.mul_table
        self._inv0 = self.W0.inv_table

    def __repr__(self) -> str:
        return f"AffineWeylGroup({self.datum.cartan_type}, {self.datum.lattice_name})"

    # -- arithmetic -------------------------------------------------------

    def mul(self, x: AffineElement, y: AffineElement) -> AffineElement:
        m = self._mats[x.finite]
        mu = y.translation
        lam = tuple(a + sum(r * b for r, b in zip(row, mu)) for a, row in zip(x.translation, m))
        return AffineElement(lam, self._mul0[x.finite][y.finite])

    def prod(self, *xs: AffineElement) -> AffineElement:
        out = self.identity
        for x in xs:
            out = self.mul(out, x)
        return out

    def inv(self, x: AffineElement) -> AffineElement:
        wi = self._inv0[x.finite]
        m = self._mats[wi]
        lam = tuple(-sum(r * b for r, b in zip(row, x.translation)) for row in m)
        return AffineElement(lam, wi)

    def translation(self, lam: Sequence[int]) -> AffineElement:
        lam = tuple(int(x) for x in lam)
        if not self.datum.in_lattice(lam):
            raise ValueError(f"{lam} is not in the translation lattice")
        return AffineElement(lam, 0)

    def finite(self, w: int) -> AffineElement:
        return AffineElement((0,) * self.rank, w)

    def is_translation(self, x: AffineElement) -> bool:
        return x.finite == 0

    def act(self, x: AffineElement, v: Sequence) -> tuple:
        """Image of the apartment point ``v`` under ``x``."""
        m = self._mats[x.finite]
        return tuple(a + sum(r * b for r, b in zip(row, v)) for a, row in zip(x.translation, m))

    def linear_part(self, x: AffineElement):
        return self._mats[x.finite]

    # -- length -----------------------------------------------------------

    def length(self, x: AffineElement) -> int:
        """Iwahori-Matsumoto length of ``t^lam w``."""
        lam = x.translation
        total = 0
        for alpha, neg in zip(self._roots, self._neg[x.finite]):
            p = sum(a * b for a, b in zip(alpha, lam))
            if neg:
                p -= 1
            total += p if p >= 0 else -p
        return total

    # -- simple reflections ----------------------------------------------

    @cached_property
    def simple_reflections(self) -> list[AffineElement]:
        """Finite simple reflections s_1..s_r, then one affine s_0 per component."""
        W0 = self.W0
        out = [self.finite(s) for s in W0.simple]
        for theta in self.datum.highest_roots:
            cv = self.datum.coroot(theta)
            r = self.rank
            m = [[int(a == b) for b in range(r)] for a in range(r)]
            for j in range(r):
                for k in range(r):
                    m[j][k] -= cv[j] * theta[k]
            out.append(AffineElement(tuple(cv), W0.index(m)))
        return out

    @cached_property
    def simple_names(self) -> list[str]:
        names = [f"s{i + 1}" for i in range(self.rank)]
        ncomp = len(self.datum.components)
        if ncomp == 1:
            names.append("s0")
        else:
            names.extend(f"s0_{c + 1}" for c in range(ncomp))
        return names

    @cached_property
    def _simple_index(self) -> dict[AffineElement, int]:
        return {s: i for i, s in enumerate(self.simple_reflections)}

    def simple_index(self, s: AffineElement) -> int | None:
        return self._simple_index.get(s)

    def finite_parabolic(self, J: Iterable[int]) -> bool:
        """True when the standard parabolic subgroup W_J is finite."""
        J = set(J)
        r = self.rank
        for c, nodes in enumerate(self.datum.component_nodes):
            if r + c in J and all(j in J for j in nodes):
                return False
        return True

    def longest_in_parabolic(self, J: Iterable[int]) -> AffineElement:
        J = list(J)
        if not self.finite_parabolic(J):
            raise ValueError("parabolic subgroup is infinite")
        S = self.simple_reflections
        x = self.identity
        lx = 0
        while True:
            for j in J:
                y = self.mul(x, S[j])
                ly = self.length(y)
                if ly > lx:
                    x, lx = y, ly
                    break
            else:
                return x

    # -- Omega and kappa ---------------------------------------------------

    @property
    def omega_group(self) -> AbelianQuotient:
        return self.datum.fundamental_group

    def kappa(self, x: AffineElement) -> tuple[int, ...]:
        """Class of the translation part in Y / Z Phi^vee (canonical coordinates)."""
        return self.omega_group.project(self.datum.lattice_coords(x.translation))

    def reduce_left(self, x: AffineElement) -> AffineElement:
        """Strip left descents by simple reflections until length zero is reached."""
        S = self.simple_reflections
        lx = self.length(x)
        while lx > 0:
            for s in S:
                y = self.mul(s, x)
                ly = self.length(y)
                if ly < lx:
                    x, lx = y, ly
                    break
        return x

    @cached_property
    def omega_elements(self) -> dict[tuple[int, ...], AffineElement]:
        """Length-zero elements keyed by their Omega coordinates."""
        out = {}
        for c in self.omega_group.elements():
            lam = self.datum.lattice_vector(self.omega_group.lift(c))
            x = self.reduce_left(AffineElement(lam, 0))
            assert self.kappa(x) == c
            out[c] = x
        return out

    def omega(self, coords: Sequence[int]) -> AffineElement:
        coords = tuple(int(c) for c in coords)
        q = self.omega_group
        return self.omega_elements[q.project(q.lift(coords))] if coords else self.identity

    @cached_property
    def omega_list(self) -> list[AffineElement]:
        return [self.omega_elements[c] for c in sorted(self.omega_elements)]

    # -- words ---------------------------------------------------------------

    def reduced_word(self, x: AffineElement) -> tuple[tuple[int, ...], AffineElement]:
        """``(word, omega)`` with ``x == s_word[0] ... s_word[-1] * omega`` reduced."""
        S = self.simple_reflections
        word = []
        lx = self.length(x)
        while lx > 0:
            for i, s in enumerate(S):
                y = self.mul(s, x)
                ly = self.length(y)
                if ly < lx:
                    word.append(i)
                    x, lx = y, ly
                    break
        return tuple(word), x

    def from_word(self, word: Sequence[int], omega: AffineElement | None = None) -> AffineElement:
        S = self.simple_reflections
        x = self.identity
        for i in word:
            x = self.mul(x, S[i])
        return self.mul(x, omega) if omega is not None else x

    # -- enumeration --------------------------------------------------------

    def enumerate_by_length(self, bound: int, max_elements: int = 2_000_000) -> list[list[AffineElement]]:
        """Shells ``[{x : l(x) == k} for k in 0..bound]``, each sorted.

        Breadth-first search from Omega by right multiplication with simple
        reflections; every element of length k+1 is x*s for some x of
        length k.
        """
        if bound < 0:
            raise ValueError("bound must be non-negative")
        S = self.simple_reflections
        shells = [sorted(self.omega_list)]
        count = len(shells[0])
        for k in range(bound):
            nxt = set()
            for x in shells[-1]:
                for s in S:
                    y = self.mul(x, s)
                    if y not in nxt and self.length(y) == k + 1:
                        nxt.add(y)
            count += len(nxt)
            if count > max_elements:
                raise ResourceCapExceeded(f"more than {max_elements} elements up to length {k + 1}")
            shells.append(sorted(nxt))
        log.debug("enumerated %d elements of %r up to length %d", count, self, bound)
        return shells

    def window(self, bound: int, max_elements: int = 2_000_000) -> list[AffineElement]:
        return [x for shell in self.enumerate_by_length(bound, max_elements) for x in shell]

    # -- display -------------------------------------------------------------

    def format(self, x: AffineElement) -> str:
        """Normal form as ``t(lam)*s_i*...`` using the cached finite reduced word."""
        lam = ",".join(str(a) for a in x.translation)
        word = self.W0.words[x.finite]
        fin = "*".join(f"s{i + 1}" for i in word) if word else "1"
        return f"t({lam})*{fin}"



def apartment_point(coords: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in coords)
