"""
Odd cycles hiding in the square of a cover ideal
================================================

Associated primes of J(G)^2 are the edges plus one prime per induced odd
cycle. Running the same test on the complement finds odd antiholes, which
gives a perfection test.
"""
from idealis import (
    associated_primes,
    cover_ideal,
    cover_square_decomposition,
    imperfection_certificate,
    irreducible_decomposition,
    is_perfect,
    odd_induced_cycles,
    power,
)
from idealis.graphs import cycle, running_example

G = running_example()
J2 = power(cover_ideal(G), 2)
print(len(J2), "generators in J^2")
for p in associated_primes(J2):
    print("  prime", p)

# the even cycle defg leaves no trace
print("odd induced cycles:", odd_induced_cycles(G))

# closed-form components agree with the general decomposition
print(set(cover_square_decomposition(G)) == set(irreducible_decomposition(J2)))

for H, name in ((G, "running example"), (cycle(5), "C5"), (cycle(6), "C6")):
    print(name, "perfect:", is_perfect(H), imperfection_certificate(H))

# a tall prime appears for every odd cycle, never for even ones
for n in range(3, 9):
    J = cover_ideal(cycle(n))
    heights = sorted({p.height for p in associated_primes(power(J, 2))})
    print(f"C{n}: heights of Ass(J^2) = {heights}")
