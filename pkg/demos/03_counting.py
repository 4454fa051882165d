# # Counting metrics
#
# The number of invariant metric classes on G is the Bell number B_k with
# k = (|G| + k2(G))/2 - 1, where k2 counts the solutions of x^2 = e; for
# bi-invariant metrics the index is k* = (c + c2)/2 - 1 with c the number
# of conjugacy classes and c2 the number of real ones.

from gmet import counting
from gmet.spec import build_group
from gmet.partitions import bell, k_bi_invariant, k_invariant
from gmet.tables import mismatches, run_tables

# ## Closed forms against direct computation

for n in range(3, 8):
    D = build_group(f"D{n}")
    print(f"D{n}: formula ({counting.dihedral_k(n)}, {counting.dihedral_kstar(n)})",
          f"direct ({k_invariant(D)}, {k_bi_invariant(D)})")

print("k(S5) =", counting.symmetric_k(5), " k*(S5) =", counting.symmetric_kstar(5))
print("k(SL2(5)) =", counting.sl2_k(5), " k*(SL2(5)) =", counting.sl2_kstar(5))

# ## Groups where every invariant metric is bi-invariant
#
# Besides the abelian groups these are exactly Q8 x C2^r.

for spec in ["Q8", "Q8xC2", "D4", "Q12"]:
    G = build_group(spec)
    print(spec, counting.classify_b1(G), counting.bi_invariance_degree(G))

# ## The listing of all groups up to order 32

rows = run_tables(max_order=32)
done = [r for r in rows if r.status != "skipped"]
print(len(done), "rows computed,", len(rows) - len(done), "without a construction,",
      len(mismatches(rows)), "mismatches")
big = max(done, key=lambda r: r.k)
print("largest index:", big.name, big.spec, "k =", big.k, "M =", bell(big.k))
