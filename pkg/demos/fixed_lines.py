"""
Fixed lines of diagram automorphisms in rank 2
==============================================

sigma permutes the affine simple reflections and so acts on the apartment
by an affine reflection. We compute its fixed line, the base point e and
the relative generators, and write a picture of each case.

Usage: python fixed_lines.py [output directory]
"""

import sys
from pathlib import Path

from twistedweyl import AffineWeylGroup, FixedSubgroupData, build_root_datum, twist_from_affine_permutation
from twistedweyl.lattice import fmt_vector
from twistedweyl.svg import figure_svg

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("figures")
out.mkdir(exist_ok=True)

cases = [
    # (type, affine permutation of s1, s2, s0, coroot names)
    ("A2", (0, 2, 1), ["a1v", "a2v"]),   # s0 <-> s2
    ("A2", (2, 1, 0), ["a1v", "a2v"]),   # s0 <-> s1, the mirror image
    ("B2", (2, 1, 0), ["av", "bv"]),     # a is the long root
]

for cartan_type, perm, names in cases:
    G = AffineWeylGroup(build_root_datum(cartan_type, "adjoint"))
    data = FixedSubgroupData(G, twist_from_affine_permutation(G, perm))
    ap = data.apartment
    print(f"{cartan_type} sigma={perm}")
    print("  fixed line     ", ap.describe(names))
    print("  e (coweights)  ", fmt_vector(ap.base_point))
    print("  e (coroots)    ", fmt_vector(G.datum.to_coroot_coords(ap.base_point)))
    print("  generators     ", data.generator_names, " |Omega^sigma| =", len(data.omega))
    path = out / f"{cartan_type}-{''.join(map(str, perm))}.svg"
    path.write_text(figure_svg(data))
    print("  wrote", path)
