# # Isometry groups of invariant metrics
#
# The permutations of G that preserve a metric form its symmetry group.
# It depends only on the partition the metric induces: it is the
# automorphism group of the complete graph on G whose edge {x, y} is
# coloured by the block containing x y^-1.

from gmet.spec import build_group, display_name
from gmet.partitions import enumerate_unitary_symmetric_partitions, finest_conjugate_partition
from gmet.symmetry import distance_graph, export_dot, identify_group, symmetry_group

# ## Every metric class on Z6

G = build_group("C6")
for P in enumerate_unitary_symmetric_partitions(G):
    Gamma = symmetry_group(G, P)
    name = identify_group(Gamma)
    print(P.blocks, "order", Gamma.order, "->", display_name(name) if name else "?")

# ## The conjugate-Lee metrics of Q8 and D4
#
# Q8 and D4 share their conjugacy-class structure, and the symmetry groups
# of their finest bi-invariant metrics coincide.

for spec in ("Q8", "D4"):
    H = build_group(spec)
    Gamma = symmetry_group(H, finest_conjugate_partition(H))
    print(spec, Gamma.order, display_name(identify_group(Gamma)))

# ## Drawing the distance graph
#
# The coloured graph can be exported for Graphviz (`neato -Tpng`).

print(export_dot(distance_graph(G, finest_conjugate_partition(G)), G.names)[:200], "...")
