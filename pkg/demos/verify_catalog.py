"""
Running every verifier over the catalog
=======================================

Same checks as ``twistedweyl verify``, but looping in Python and printing
one line per run.
"""

import time

from twistedweyl import verifiers
from twistedweyl.config import catalog
from twistedweyl.fixed import FixedSubgroupData
from twistedweyl.twist import GammaSubgroup

for name, cfg in catalog().items():
    G, theta, L = cfg.group, cfg.theta, cfg.length_bound
    runs = [("gamma", lambda: verifiers.verify_gamma(G, theta, L)),
            ("partial", lambda: verifiers.verify_partial(G, theta, L)),
            ("min1", lambda: verifiers.verify_min1(G, theta, min(L, 5))),
            ("min2", lambda: verifiers.verify_min2(G, theta, L))]
    if theta.acts_trivially_on_omega():
        runs.append(("bij", lambda: verifiers.verify_bijection(G, theta, L)))
    if not theta.is_identity:
        data = FixedSubgroupData(G, theta)
        runs.append(("length-add", lambda: verifiers.verify_length_add(data, L)))
        runs.append(("inject", lambda: verifiers.verify_injection(data, theta, GammaSubgroup.trivial(G, theta), L)))
    for theorem, fn in runs:
        t0 = time.perf_counter()
        rep = fn()
        print(f"{name:11s} {theorem:10s} {rep.status}  classes={rep.classes:<4d} "
              f"scanned={rep.elements:<6d} {time.perf_counter() - t0:.2f}s")
