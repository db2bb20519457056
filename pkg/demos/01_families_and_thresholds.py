"""The two extremal families and their spectral thresholds.

The pendant-path family (tag L) is a clique on n-2 vertices with a
two-vertex path hanging off one clique vertex; the attached-3-path family
(tag B) is a clique on n-3 vertices with a 3-vertex path whose ends join
two distinct clique vertices.  Both are HIST-free, and their spectral
radii are the exact thresholds of the existence theorems: any connected
(resp. 2-connected) graph of the same order whose spectral radius matches
or exceeds them contains a HIST unless it IS the family graph.
"""

from histspec import (
    charpoly_B,
    charpoly_L,
    encode_graph6,
    family_B,
    family_L,
    largest_root,
    no_hist_certificate,
    slack_bounds,
    spectral_radius,
)

for n in (7, 10, 20):
    g = family_L(n)
    res = spectral_radius(g)
    root = largest_root(charpoly_L(n), n - 3, n - 2)
    print(f"L family, n={n}: graph6={encode_graph6(g)}")
    print(f"  rho (power iteration) = {res.rho:.12f}  ({res.iterations} iterations)")
    print(f"  rho (quartic root)    = {root:.12f}")
    print(f"  certificate: {no_hist_certificate(g)}")
    sl = slack_bounds("L", n)
    print(f"  slack over clique bound n-3: {sl.slack:.6f} < cap {sl.upper:.6f}")
    print()

for n in (8, 12):
    g = family_B(n)
    res = spectral_radius(g)
    root = largest_root(charpoly_B(n), n - 4, n - 3)
    print(f"B family, n={n}: graph6={encode_graph6(g)}")
    print(f"  rho (power iteration) = {res.rho:.12f}")
    print(f"  rho (quartic root)    = {root:.12f}")
    print(f"  certificate: {no_hist_certificate(g)}")
    sb = slack_bounds("B", n)
    print(f"  slack over clique bound n-4: {sb.slack:.6f} < cap {sb.upper:.6f}")
    print()

print("The order-only corollary caps:")
for n in (7, 10, 20, 50):
    print(f"  n={n}: rho >= {n-3} + 1/{n-3} forces a HIST in any connected graph")
