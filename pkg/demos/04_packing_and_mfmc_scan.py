"""
Packing, max-flow-min-cut, and a small scan
===========================================

The integer programs behind covers and matchings, the packing property
over all minors, and a bounded comparison of symbolic and ordinary powers.
The scan looks for packing hypergraphs where the two powers differ; none
should turn up.
"""
import time

from idealis import cc_scan, decompose_cover, edge_ideal, mfmc_bounded, ntf_bounded, packing_property, sigma_gamma
from idealis.graphs import cycle

C5 = cycle(5)
print("C5 sigma, gamma at c=1:", sigma_gamma(C5, [1] * 5))
print("two covers inside m*x1:", decompose_cover(C5, [2, 1, 1, 1, 1], 2))
print("two covers inside m:   ", decompose_cover(C5, [1] * 5, 2))

for n in (3, 4, 5, 6):
    C = cycle(n)
    res = packing_property(C)
    extra = "" if res.holds else f" (minor {res.minor.canonical_form()}, a0={res.alpha0}, b1={res.beta1})"
    print(f"C{n}: packing {res.holds}{extra}; {mfmc_bounded(C, 3)}; {ntf_bounded(edge_ideal(C), 3)}")

t0 = time.perf_counter()
rep = cc_scan(n_max=4, q_max=3, edge_size_cap=3)
print(rep.counts, f"{time.perf_counter() - t0:.1f}s")
