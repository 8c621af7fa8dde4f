"""
Partial transpose of a permutation matrix
=========================================

A 4x4 permutation matrix viewed as a 2x2 grid of 2x2 blocks.  Transposing
every block in place usually breaks the one-per-row/column structure.
"""
from ptperm import core
from ptperm.core import BlockShape

shape = BlockShape(2, 2)
P = core.perm_matrix("3142")
print("P =\n", P)

G = core.inner_partial_transpose(P, shape)
print("partial transpose =\n", G)
print("still a permutation matrix?", core.is_permutation_matrix(G))

###############################################################################
# The profile lists the column of every 1-entry, row by row.  For a
# permutation matrix it is just the one-line word.

print("profile:", "".join(map(str, core.profile(G))))

###############################################################################
# Rows and columns of the 1-entries still sum to n(n+1)/2 = 10.

print("row sum", core.row_index_sum(G), "column sum", core.column_index_sum(G))

###############################################################################
# Swapping whole blocks, then transposing inside them, is the full transpose.

full = core.outer_block_transpose(G, shape)
print("outer o inner == P.T:", (full == P.T).all())
