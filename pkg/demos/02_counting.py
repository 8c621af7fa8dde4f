"""
Counting three ways
===================

Z(p, q) counts permutations of [pq] whose partial transpose is again a
permutation.  Compare a full scan of S_pq, a backtracking search over block
sizes, and the composition sum.
"""
import time

from ptperm import formulas, oracle

for p, q in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 5)]:
    t0 = time.perf_counter()
    scan = oracle.count_Z_oracle(p, q).value
    t1 = time.perf_counter()
    bt = oracle.count_Z_backtrack(p, q).value
    t2 = time.perf_counter()
    f = formulas.Z_formula(p, q)
    print(f"Z({p},{q}): scan={scan} ({t1 - t0:.2f}s)  backtrack={bt} ({t2 - t1:.4f}s)  sum={f}")

###############################################################################
# For p = 2 the sum collapses to q!(q+1)!; the composition sum keeps up well
# past anything a scan could reach.

for q in range(1, 9):
    print(q, formulas.Z_formula(2, q), formulas.Z2_closed(q))

###############################################################################
# Fixed points of the partial transpose, Ze(p, q), are not symmetric in p, q.

print("Ze(2,3) =", formulas.Ze_formula(2, 3), " Ze(3,2) =", formulas.Ze_formula(3, 2))
