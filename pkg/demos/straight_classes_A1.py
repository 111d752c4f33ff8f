"""
Straight classes in affine A1
=============================

The adjoint lattice has a length zero element omega = t^{varpi} s, so
Omega = Z/2. We list the straight conjugacy classes up to length 4 and
compare the W_a-orbits with the W-classes.
"""

from twistedweyl import AffineWeylGroup, GammaSubgroup, build_root_datum, identity_twist
from twistedweyl.conjugacy import straight_classes_in_window
from twistedweyl.lattice import fmt_vector

G = AffineWeylGroup(build_root_datum("A1", "adjoint"))
theta = identity_twist(G)
print(G, "Omega =", G.omega_group)

# each class is labelled by (kappa, dominant Newton point); the Newton point
# is written in fundamental coweight coordinates, so 2 means alpha^vee
for gamma in (GammaSubgroup.full(G, theta), GammaSubgroup.trivial(G, theta)):
    print("\nGamma =", list(gamma.elements))
    for rec in straight_classes_in_window(G, theta, gamma, 4):
        inv = rec.invariant
        print(f"  {G.format(rec.representative):24s} length {G.length(rec.representative)}"
              f"  kappa {inv.kottwitz}  nu {fmt_vector(inv.newton)}  ({len(rec.elements)} in window)")

# theta is trivial on Omega here, so both lists have the same size
