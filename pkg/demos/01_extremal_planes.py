"""
Dual affine planes and the partition coloring
=============================================

The dual affine plane of prime order q has q^2 edges of size q+1, every
vertex of degree q, and any two edges meeting in exactly one vertex.
These are the tight instances for minimum degree sqrt(n), n = q^2.
"""

from eflcolor import chromatic_number, lemma2_report, partition_coloring, validate_coloring
from eflcolor.generators import dual_affine_plane

######################################################################
# Build the plane of order 3 and look at its shape
H = dual_affine_plane(3)
print(H.vertex_count, "vertices,", H.edge_count, "edges")
print("edge sizes:", sorted({len(e) for e in H.edges}))
print("degrees:", sorted(set(H.degrees())))

######################################################################
# The five structural conclusions all hold around any vertex
rep = lemma2_report(H, 9, 0)
print(rep)

######################################################################
# Split the vertices by non-adjacency to the vertices of one edge.
# Each class becomes a color, giving q+1 = 4 colors.
coloring, parts = partition_coloring(H, 9, base_edge=0)
for i, cls in enumerate(parts.classes):
    print(f"class {i}: {sorted(cls)}")
print("proper:", validate_coloring(H, coloring)[0])

######################################################################
# The exact search agrees that 4 colors is optimal
print("chi =", chromatic_number(H).chi)
