"""Reduction moves, minimal length elements and straight twisted classes.

``w -s->_theta w'`` means ``w' = s w theta(s)`` with ``l(w') <= l(w)``; the
relation ``->`` is its transitive closure and ``w ~ w'`` (written
``approx`` here) means both ``w -> w'`` and ``w' -> w``. Since a single step
changes the length by 0 or -2, ``w ~ w'`` is the same as being joined by
length-preserving steps.
"""

from __future__ import annotations

import logging
from collections import deque
from itertools import combinations
from typing import NamedTuple, Sequence

from .affine import AffineElement, AffineWeylGroup
from .invariants import ClassInvariant, Classifier, newton_period
from .twist import GammaSubgroup, Twist

log = logging.getLogger(__name__)


class ReductionStep(NamedTuple):
    source: AffineElement
    simple: int
    target: AffineElement
    length_delta: int


class MinDecomposition(NamedTuple):
    J: tuple[int, ...]
    x: AffineElement
    u: AffineElement
    chain: tuple[ReductionStep, ...]


class StraightClassRecord(NamedTuple):
    representative: AffineElement
    invariant: ClassInvariant
    elements: tuple[AffineElement, ...]
    component: int


class DecompositionError(RuntimeError):
    """Raised when no (J, x, u) is found; would contradict the minimal length theorem."""


def is_straight(G: AffineWeylGroup, theta: Twist, x: AffineElement) -> bool:
    """l(x theta(x) ... theta^{k-1}(x)) == k l(x) for k = 1..n.

    n is the Newton period; beyond it the products are t^{m lam} times a
    bounded tail, so the finite check decides straightness.
    """
    lx = G.length(x)
    if lx == 0:
        return True
    n, _ = newton_period(G, theta, x)
    prod = x
    cur = x
    for k in range(2, n + 1):
        cur = theta(cur)
        prod = G.mul(prod, cur)
        if G.length(prod) != k * lx:
            return False
    return True


def _step(G, theta, s, x):
    return G.mul(G.mul(s, x), theta(s))


def reduction_neighbors(G: AffineWeylGroup, theta: Twist, x: AffineElement) -> list[ReductionStep]:
    """All steps x -s-> s x theta(s) that do not increase length."""
    lx = G.length(x)
    out = []
    for i, s in enumerate(G.simple_reflections):
        y = _step(G, theta, s, x)
        ly = G.length(y)
        if ly <= lx:
            out.append(ReductionStep(x, i, y, ly - lx))
    return out


def _level_bfs(G, theta, x):
    """Length-preserving component of x with BFS parent pointers."""
    parent: dict[AffineElement, ReductionStep | None] = {x: None}
    order = [x]
    queue = deque([x])
    lx = G.length(x)
    S = G.simple_reflections
    while queue:
        z = queue.popleft()
        for i, s in enumerate(S):
            y = _step(G, theta, s, z)
            if y not in parent and G.length(y) == lx:
                parent[y] = ReductionStep(z, i, y, 0)
                order.append(y)
                queue.append(y)
    return order, parent


def _path(parent, y) -> list[ReductionStep]:
    out = []
    while parent[y] is not None:
        out.append(parent[y])
        y = parent[y].source
    out.reverse()
    return out


def level_component(G: AffineWeylGroup, theta: Twist, x: AffineElement) -> frozenset[AffineElement]:
    """The approx-class of x: everything reachable by length-preserving steps."""
    return frozenset(_level_bfs(G, theta, x)[0])


def approx_connected(G: AffineWeylGroup, theta: Twist, x: AffineElement, y: AffineElement) -> bool:
    if G.length(x) != G.length(y):
        raise ValueError("approx_connected needs elements of equal length")
    return y in level_component(G, theta, x)


def descend_to_min(G: AffineWeylGroup, theta: Twist, x: AffineElement) -> tuple[AffineElement, list[ReductionStep]]:
    """Follow reduction steps from x down to a minimal length element.

    At each level the whole approx-component is searched for a strictly
    decreasing step; when none exists the component is a dead end and
    the lexicographically smallest member is returned.
    """
    chain: list[ReductionStep] = []
    S = G.simple_reflections
    cur = x
    while True:
        order, parent = _level_bfs(G, theta, cur)
        lcur = G.length(cur)
        down = None
        for z in order:
            for i, s in enumerate(S):
                y = _step(G, theta, s, z)
                if G.length(y) < lcur:
                    down = ReductionStep(z, i, y, G.length(y) - lcur)
                    break
            if down is not None:
                break
        if down is None:
            best = min(order)
            chain.extend(_path(parent, best))
            return best, chain
        chain.extend(_path(parent, down.source))
        chain.append(down)
        cur = down.target


def reachable(G: AffineWeylGroup, theta: Twist, w: AffineElement) -> dict[AffineElement, ReductionStep | None]:
    """Everything y with w -> y, with parent steps for witness chains."""
    parent: dict[AffineElement, ReductionStep | None] = {w: None}
    queue = deque([w])
    while queue:
        z = queue.popleft()
        for step in reduction_neighbors(G, theta, z):
            if step.target not in parent:
                parent[step.target] = step
                queue.append(step.target)
    return parent


def _min_in_left_coset(G, J, z):
    """Minimal length element of W_J z."""
    S = G.simple_reflections
    lz = G.length(z)
    while True:
        for j in J:
            y = G.mul(S[j], z)
            ly = G.length(y)
            if ly < lz:
                z, lz = y, ly
                break
        else:
            return z


def _subsets(n: int):
    for k in range(n + 1):
        yield from combinations(range(n), k)


def check_decomposition(G: AffineWeylGroup, theta: Twist, J: Sequence[int], x: AffineElement,
                        u: AffineElement) -> list[str]:
    """Conditions of the minimal length theorem that (J, x, u) fails; empty when valid."""
    S = G.simple_reflections
    J = tuple(J)
    problems = []
    if not G.finite_parabolic(J):
        problems.append("W_J is infinite")
    perm = theta.affine_permutation
    tJ = [perm[j] for j in J]
    lx = G.length(x)
    if any(G.length(G.mul(S[j], x)) < lx for j in J):
        problems.append("x is not minimal in W_J x")
    if any(G.length(G.mul(x, S[j])) < lx for j in tJ):
        problems.append("x is not minimal in x W_theta(J)")
    xi = G.inv(x)
    conj = {G.prod(x, S[j], xi) for j in tJ}
    if conj != {S[j] for j in J}:
        problems.append("x theta(J) x^-1 != J")
    if not is_straight(G, theta, x):
        problems.append("x is not straight")
    if not _in_parabolic(G, J, u):
        problems.append("u is not in W_J")
    return problems


def _in_parabolic(G, J, u):
    return _min_in_left_coset(G, J, u) == G.identity


def min_decomposition(G: AffineWeylGroup, theta: Twist, w: AffineElement) -> MinDecomposition:
    """(J, x, u) with w -> u x, u x of minimal length and x straight.

    Candidates are the minimal length elements reachable from w, in
    lexicographic order; for each, subsets J are tried by size.
    """
    parent = reachable(G, theta, w)
    lmin = min(G.length(z) for z in parent)
    candidates = sorted(z for z in parent if G.length(z) == lmin)
    n = len(G.simple_reflections)
    for z in candidates:
        for J in _subsets(n):
            if not G.finite_parabolic(J):
                continue
            x = _min_in_left_coset(G, J, z)
            u = G.mul(z, G.inv(x))
            if not check_decomposition(G, theta, J, x, u):
                return MinDecomposition(J, x, u, tuple(_path(parent, z)))
    raise DecompositionError(f"no decomposition found for {G.format(w)}")


def validate_decomposition(G: AffineWeylGroup, theta: Twist, w: AffineElement, d: MinDecomposition) -> list[str]:
    problems = check_decomposition(G, theta, d.J, d.x, d.u)
    cur = w
    for step in d.chain:
        if step.source != cur:
            problems.append("witness chain is broken")
            break
        S = G.simple_reflections
        if step.target != _step(G, theta, S[step.simple], cur) or G.length(step.target) > G.length(cur):
            problems.append("invalid reduction step in chain")
            break
        cur = step.target
    if cur != G.mul(d.u, d.x):
        problems.append("chain does not end at u x")
    # u x must admit no strict descent anywhere in its level
    y, _ = descend_to_min(G, theta, cur)
    if G.length(y) < G.length(cur):
        problems.append("u x is not of minimal length")
    return problems


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, a):
        self.parent.setdefault(a, a)
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


class StraightClasses(NamedTuple):
    records: list[StraightClassRecord]
    # pairs with equal invariant but not connected, and connected pairs with different invariants
    disconnected: list[tuple[AffineElement, AffineElement]]
    mixed: list[tuple[AffineElement, AffineElement]]
    scanned: int


def classify_straight(G: AffineWeylGroup, theta: Twist, gamma: GammaSubgroup, bound: int,
                      max_elements: int = 2_000_000, window=None) -> StraightClasses:
    """Group the straight elements with l <= bound by their invariant and cross-check connectivity."""
    if window is None:
        window = G.window(bound, max_elements)
    straight = [x for x in window if is_straight(G, theta, x)]
    pi = Classifier(G, theta, gamma)
    uf = _UnionFind()
    seen: set[AffineElement] = set()
    for x in straight:
        uf.find(x)
        if x in seen:
            continue
        comp = level_component(G, theta, x)
        seen |= comp
        for y in comp:
            uf.union(x, y)
    gam = [g for g in gamma.omega_elements if g != G.identity]
    for x in straight:
        for g in gam:
            uf.union(x, G.mul(G.mul(g, x), G.inv(theta(g))))
    groups: dict[ClassInvariant, list[AffineElement]] = {}
    for x in straight:
        groups.setdefault(pi(x), []).append(x)
    disconnected = []
    root_inv: dict = {}
    mixed = []
    for inv, elems in groups.items():
        r0 = uf.find(elems[0])
        for y in elems[1:]:
            if uf.find(y) != r0:
                disconnected.append((elems[0], y))
        for y in elems:
            r = uf.find(y)
            if r in root_inv and root_inv[r][0] != inv:
                mixed.append((root_inv[r][1], y))
            root_inv.setdefault(r, (inv, y))
    records = []
    for inv, elems in groups.items():
        elems = sorted(elems, key=lambda z: (G.length(z), z))
        records.append(StraightClassRecord(elems[0], inv, tuple(elems), 0))
    records.sort(key=lambda r: (G.length(r.representative), r.invariant.newton, r.invariant.kottwitz))
    records = [rec._replace(component=i) for i, rec in enumerate(records)]
    return StraightClasses(records, disconnected, mixed, len(window))


def straight_classes_in_window(G: AffineWeylGroup, theta: Twist, gamma: GammaSubgroup, bound: int,
                               max_elements: int = 2_000_000) -> list[StraightClassRecord]:
    return classify_straight(G, theta, gamma, bound, max_elements).records
