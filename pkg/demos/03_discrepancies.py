"""
Where printed results and brute force part ways
===============================================

Runs the verification grid and prints only the informational disagreements.
"""
from ptperm import core, formulas, oracle, verify
from ptperm.core import BlockShape

report = verify.run_verify(6)
print("required anchors hold:", report.ok)
for rec in report.disagreements():
    print(rec.line())

###############################################################################
# The p = 2 closed form for Ze with a squared binomial gives 12 at q = 2, but
# there are only 10 such matrices.

print(formulas.Ze2_closed(2, "printed"), formulas.Ze2_closed(2, "corrected"), oracle.count_Ze_oracle(2, 2).value)

###############################################################################
# For involutions, "partial transpose is a permutation" and "partial
# transpose is unchanged" are different conditions once q >= 3.

w = (5, 6, 4, 3, 1, 2)
P = core.perm_matrix(w)
G = core.inner_partial_transpose(P, BlockShape(2, 3))
print(P, G, sep="\n\n")
print("symmetric:", core.is_symmetric(P), " G is a permutation:", core.is_permutation_matrix(G),
      " G == P:", (G == P).all())
