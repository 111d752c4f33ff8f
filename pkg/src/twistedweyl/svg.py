"""Deterministic SVG pictures of a rank 2 apartment with its sigma-fixed line.

The apartment is drawn isometrically for the W0-invariant form, via a
Cholesky factor of its Gram matrix on fundamental coweights. Drawing
conventions: thin lines are root hyperplanes, the grey region is the base
alcove, the thick line is the relatively dominant half of Fix(sigma)
(dotted beyond e), the black dot is the origin and the grey dot is e. The
dash-dotted half-line is the relative dominant direction moved to the
origin and the thick dotted half-line is its absolute dominant image.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .fixed import FixedSubgroupData, absolute_dominant, alcove_vertices

SIZE = 400
MARGIN = 10


class FigureError(ValueError):
    pass


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


class _Canvas:
    def __init__(self, datum, radius: float):
        r = datum.rank
        gram = np.array([[float(datum.form(tuple(int(i == a) for a in range(r)), tuple(int(j == a) for a in range(r))))
                          for j in range(r)] for i in range(r)])
        self.L = np.linalg.cholesky(gram)
        self.Linv = np.linalg.inv(self.L)
        self.radius = radius
        self.scale = (SIZE / 2 - MARGIN) / radius

    def embed(self, v) -> np.ndarray:
        return self.L.T @ np.array([float(Fraction(x)) for x in v])

    def px(self, y) -> tuple[str, str]:
        return _fmt(SIZE / 2 + self.scale * y[0]), _fmt(SIZE / 2 - self.scale * y[1])

    def clip_line(self, n, k):
        """Endpoints of {y : n . y = k} inside the square [-R, R]^2, or None."""
        R = self.radius
        pts = []
        for axis in (0, 1):
            other = 1 - axis
            if abs(n[other]) < 1e-12:
                continue
            for c in (-R, R):
                t = (k - n[axis] * c) / n[other]
                if -R - 1e-9 <= t <= R + 1e-9:
                    y = [0.0, 0.0]
                    y[axis], y[other] = c, t
                    pts.append(tuple(round(a, 9) for a in y))
        pts = sorted(set(pts))
        if len(pts) < 2:
            return None
        return pts[0], pts[-1]

    def ray_end(self, p, d):
        R = self.radius
        ts = []
        for i in (0, 1):
            if abs(d[i]) > 1e-12:
                ts.append(max((R - p[i]) / d[i], (-R - p[i]) / d[i]))
        t = min(ts) if ts else 0.0
        return p + t * d


def figure_svg(data: FixedSubgroupData) -> str:
    G = data.group
    datum = G.datum
    if datum.rank != 2:
        raise FigureError("figures are only drawn for rank 2 data")
    ap = data.apartment
    verts = alcove_vertices(G)
    radius = 3.0 * max(math.sqrt(float(datum.form(v, v))) for v in verts if any(v))
    cv = _Canvas(datum, radius)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">',
           f'<title>{datum.cartan_type} {datum.lattice_name} sigma={list(data.sigma.affine_permutation)}</title>',
           f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>']
    # base alcove
    pts = [cv.embed(v) for v in verts]
    c = sum(pts) / len(pts)
    pts.sort(key=lambda y: math.atan2(y[1] - c[1], y[0] - c[0]))
    poly = " ".join(",".join(cv.px(y)) for y in pts)
    out.append(f'<polygon points="{poly}" fill="#bbbbbb" stroke="none"/>')
    # root hyperplanes
    kmax = int(radius * max(np.linalg.norm(cv.Linv @ np.array(b, dtype=float)) for b in datum.positive_roots)) + 1
    for beta in datum.positive_roots:
        n = cv.Linv @ np.array(beta, dtype=float)
        for k in range(-kmax, kmax + 1):
            seg = cv.clip_line(n, k)
            if seg is None:
                continue
            (x1, y1), (x2, y2) = cv.px(seg[0]), cv.px(seg[1])
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="0.6"/>')
    e = cv.embed(ap.base_point)
    origin = cv.embed((0, 0))
    if ap.dim == 1:
        d = ap.direction[0]
        if not data.is_relatively_dominant(d):
            d = tuple(-x for x in d)
        dy = cv.embed(d)
        dy = dy / np.linalg.norm(dy)
        for start, vec, style in (
            (e, dy, 'stroke-width="4"'),
            (e, -dy, 'stroke-width="1.5" stroke-dasharray="2,3"'),
            (origin, dy, 'stroke-width="1.5" stroke-dasharray="8,3,2,3"'),
        ):
            end = cv.ray_end(start, vec)
            (x1, y1), (x2, y2) = cv.px(start), cv.px(end)
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" {style}/>')
        dom = cv.embed(absolute_dominant(G, d))
        dom = dom / np.linalg.norm(dom)
        end = cv.ray_end(origin, dom)
        (x1, y1), (x2, y2) = cv.px(origin), cv.px(end)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="4" '
                   f'stroke-dasharray="2,4"/>')
    elif ap.dim == 2:
        out.append('<text x="12" y="24" font-size="14" font-family="monospace">fixed set: whole plane</text>')
    ox, oy = cv.px(origin)
    out.append(f'<circle cx="{ox}" cy="{oy}" r="5" fill="black"/>')
    ex, ey = cv.px(e)
    out.append(f'<circle cx="{ex}" cy="{ey}" r="5" fill="#888888" stroke="black" stroke-width="0.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
