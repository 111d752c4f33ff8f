"""
Two copies of affine A1 exchanged by sigma
==========================================

(1, 1) and (omega, omega) are sigma-conjugate in the full group but they
lie in different W_a-sigma-orbits. The Kottwitz invariant sees this once
Gamma shrinks from Omega to the trivial group.
"""

from twistedweyl import AffineWeylGroup, GammaSubgroup, build_root_datum, build_twist, pi
from twistedweyl.conjugacy import approx_connected
from twistedweyl.lattice import fmt_vector

G = AffineWeylGroup(build_root_datum("A1xA1", "adjoint"))
sigma = build_twist(G, [1, 0], [0, 0])
one, ww = G.identity, G.omega((1, 1))

# an explicit conjugator: g = (omega, 1) gives g * 1 * sigma(g)^-1 = (omega, omega)
g = G.omega((1, 0))
print("g . 1 =", G.format(G.mul(G.mul(g, one), G.inv(sigma(g)))), "=", G.format(ww))

for label, gamma in (("Omega", GammaSubgroup.full(G, sigma)), ("1", GammaSubgroup.trivial(G, sigma))):
    a, b = pi(G, sigma, gamma, one), pi(G, sigma, gamma, ww)
    print(f"Gamma = {label:5s}  kappa(1) = {a.kottwitz}  kappa(w,w) = {b.kottwitz}"
          f"  nu = {fmt_vector(a.newton)}, {fmt_vector(b.newton)}  same class: {a == b}")

# both have length 0, so no chain of simple reflections can join them
print("approx-connected:", approx_connected(G, sigma, one, ww))
