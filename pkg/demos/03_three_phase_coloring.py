"""
Coloring a weakly dense hypergraph with n colors
================================================

Vertices of degree >= sqrt(n) are colored first on their own
sub-hypergraph, then vertices of degree in [2, sqrt(n)) in decreasing
degree order, and finally the degree-1 vertices take whatever colors
their single edge has left.
"""

from math import ceil

from eflcolor import efl_coloring, is_rainbow, validate_coloring
from eflcolor.generators import StreamTally, weakly_dense_stream

######################################################################
# Draw one weakly dense 16-uniform instance with a non-empty middle class
tally = StreamTally()
for H in weakly_dense_stream(16, seed=5, count=50, tally=tally):
    coloring, trace = efl_coloring(H)
    if trace.v2:
        break
print(f"{H.vertex_count} vertices; classes of sizes {len(trace.v1)}, {len(trace.v2)}, {len(trace.v3)}")

######################################################################
# Each middle-class vertex saw fewer colored neighbours than the bound,
# and the bound itself stays below n
for v, slack, seen in zip(trace.phase2_order, trace.phase2_slack, trace.phase2_colored_neighbors):
    print(f"vertex {v}: degree {H.degree(v)}, bound {slack} (ceil {ceil(slack)}), saw {seen}")

######################################################################
# Every edge ends up rainbow
print("proper:", validate_coloring(H, coloring)[0], "rainbow:", is_rainbow(H, coloring))
print("colored before phase 3, per edge:", trace.phase3_kE)
