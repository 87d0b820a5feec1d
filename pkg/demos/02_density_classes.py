"""
Density classes
===============

A hypergraph with n edges is dense when no degree falls in [2, sqrt(n)],
slightly weakly dense when none falls in [2, sqrt(n)), and weakly dense when
each k in [2, sqrt(n)) is the degree of at most k^2 vertices.
"""

from eflcolor import Hypergraph, density_report
from eflcolor.generators import pencil, random_linear_uniform

######################################################################
# A pencil: one vertex in every edge, everything else of degree 1
rep = density_report(pencil(6), 6)
print(rep.density_class, rep.degree_histogram)

######################################################################
# Nine edges, five vertices of degree 2. For n = 9, k = 2 lies in [2, 3)
# and 5 > 2^2, so the instance is not weakly dense.
pairs = [(0, 1), (2, 3), (4, 5), (6, 7), (8, 0)]
edges = [[] for _ in range(9)]
for w, (a, b) in enumerate(pairs):
    edges[a].append(w)
    edges[b].append(w)
nxt = len(pairs)
for e in edges:
    while len(e) < 9:
        e.append(nxt)
        nxt += 1
bad = Hypergraph(nxt, edges)
rep = density_report(bad, 9)
print(rep.density_class, rep.violations)

######################################################################
# Classes of a handful of random linear 16-uniform instances
for seed in range(8):
    H = random_linear_uniform(16, seed)
    print(seed, density_report(H, 16).density_class)
