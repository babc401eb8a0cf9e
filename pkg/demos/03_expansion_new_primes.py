"""
Primes that only appear at higher powers
========================================

A 5-cycle with an apex over three consecutive vertices has chromatic
number 3, yet the maximal ideal is associated to J^3 and not earlier.
The expanded graph explains it: a critically 4-chromatic induced subgraph.
"""
from idealis import ass_profile, cover_ideal, expansion, expansion_ass_primes, induced
from idealis.coloring import chromatic_number, is_critically_chromatic
from idealis.graphs import five_cycle_with_apex

G = five_cycle_with_apex()
print("chi =", chromatic_number(G))

prof = ass_profile(cover_ideal(G), 3)
for s in (1, 2, 3):
    print(f"s={s} new primes:", [str(p) for p in prof.new_primes(s)])

# flavors v.1 .. v.3 of each vertex; every base edge in all flavor combinations
E = expansion(G, 3)
print(E.graph.n, "vertices and", len(E.graph.masks), "edges in the expansion")

T = ["x1.1", "x2.1", "x2.2", "x3.1", "x4.1", "x5.1", "x6.1"]
H = induced(E.graph, T)
print("critically 4-chromatic:", is_critically_chromatic(H, 4))
print("depolarized:", E.depolarize(E.vertices.squarefree(T)))

D, primes = expansion_ass_primes(G, 3)
print("primes from the expansion:", [str(p) for p in primes])
