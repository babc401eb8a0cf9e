"""
Coloring a graph by ideal membership
====================================

Three independent ways to decide k-colorability, run side by side on a
seven-vertex graph: a 5-cycle abcde sharing the edge de with a 4-cycle defg.
"""
from idealis import chromatic_number, cover_ideal, edge_ideal, find_coloring, power, secant_power
from idealis.graphs import running_example

G = running_example()
print("edge ideal  ", edge_ideal(G))
print("cover ideal ", cover_ideal(G))   # one generator per minimal vertex cover

# k-colorable iff the product of all variables, raised to k-1, lies in J^k
J = cover_ideal(G)
m = G.vertices.monomial([1] * G.n)
for k in (2, 3):
    print(f"m^{k - 1} in J^{k}:", (m ** (k - 1)) in power(J, k))

# the secant route: generators are vertex sets that need more than k colors
for k in (1, 2, 3):
    print(f"secant power k={k}:", secant_power(G, k))

for method in ("oracle", "cover", "secant"):
    print(method, "chromatic number", chromatic_number(G, method))

print("least 3-coloring", find_coloring(G, 3))
