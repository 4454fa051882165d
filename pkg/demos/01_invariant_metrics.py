# # Invariant metrics on a small group
#
# An invariant metric on a finite group is determined by its weight
# w(x) = d(x, e).  Up to relabelling the distance values, what matters is
# the partition of G into level sets of w: a partition with {e} as a block
# and every block closed under inversion.  This walk-through builds a few
# groups, lists those partitions and turns them into weights.

from gmet.spec import build_group
from gmet.partitions import (
    bell,
    enumerate_conjugate_partitions,
    enumerate_unitary_symmetric_partitions,
    k_bi_invariant,
    k_invariant,
    lee_partition,
)
from gmet.metrics import MetricView, invariance_class, lee_weight, verify_weight_axioms, weight_from_partition

# ## The cyclic group of order 6

G = build_group("C6")
print(G, "k =", k_invariant(G), "-> number of metric classes", bell(k_invariant(G)))

for i, P in enumerate(enumerate_unitary_symmetric_partitions(G), start=1):
    w = weight_from_partition(G, P)
    print(f"P{i}", P.blocks, "weight", [int(v) for v in w.values])

# The finest partition pairs each element with its inverse; the Lee
# weight min(x, 6 - x) realises it.

print("Lee partition:", lee_partition(G).blocks)
print("Lee weight:   ", [int(v) for v in lee_weight(6).values])

# ## A non-abelian example: S3
#
# For S3 there are 15 invariant metric classes, but only the partitions
# whose blocks are unions of conjugacy classes give bi-invariant metrics.

S3 = build_group("S3")
print(S3.names)
print("k =", k_invariant(S3), " k* =", k_bi_invariant(S3))
for P in enumerate_conjugate_partitions(S3):
    print("conjugate partition", [[S3.names[x] for x in b] for b in P.blocks])

# The canonical weight of a partition always satisfies the metric axioms,
# and the resulting distance table is right invariant; for conjugate
# partitions it is bi-invariant.

P = lee_partition(S3)
w = weight_from_partition(S3, P)
print(verify_weight_axioms(S3, w))
print("invariance:", invariance_class(S3, MetricView(w).table()))
