"""
A two-parameter family of square-zero matrices
==============================================

N(a, b) = [[a*b, b^2], [-a^2, -a*b]] squares to zero for every choice of
parameters.  One might hope to model several anticommuting quantities by
picking several members -- this script shows why that fails: two members
anticommute exactly when they are proportional, so there is only one
direction to work with.
"""

import itertools

from grassalg import (
    anticommutator,
    build_nilpotent,
    classify_pair,
    lemma_grid_check,
    proportionality_witness,
)

# every member squares to the zero matrix
n = build_nilpotent(3, 2).to_mat2()
print("N(3,2)   =", n)
print("N(3,2)^2 =", n * n)

# the anticommutator of two members is -(ad - bc)^2 * I, so it vanishes
# exactly when ad = bc, i.e. when (c,d) is proportional to (a,b)
n1 = build_nilpotent(1, 1)
n2 = build_nilpotent(2, 2)   # proportional: (2,2) = 2*(1,1)
n3 = build_nilpotent(1, 2)   # not proportional
print("\n{N(1,1), N(2,2)} =", anticommutator(n1.to_mat2(), n2.to_mat2()))
print("{N(1,1), N(1,2)} =", anticommutator(n1.to_mat2(), n3.to_mat2()))

# when the anticommutator vanishes, the second member is lambda * the first
# with lambda = (ad)^2 / (ab)^2; here N(2,2) = 4 * N(1,1)
print("witness for N(2,2) over N(1,1):", proportionality_witness(n1, n2))
print("witness for N(1,2) over N(1,1):", proportionality_witness(n1, n3))

# scaling both parameters scales the member quadratically
print("\nN(2,2) =", build_nilpotent(2, 2).to_mat2(), "= 4 * N(1,1) =",
      build_nilpotent(1, 1).to_mat2().scale(4))

# small census: which ordered pairs on a tiny grid anticommute?
values = [v for v in (-2, -1, 1, 2)]
counts = {"anticommuting": 0, "non_anticommuting": 0}
for a, b, c, d in itertools.product(values, repeat=4):
    counts[classify_pair(a, b, c, d)] += 1
print("\ngrid [-2,2] census:", counts)

# the exhaustive check runs the same classification over a larger grid and
# verifies the equivalence [anticommute <=> ad = bc <=> proportional]
# together with the exact identity for the anticommutator -- on integers
# every comparison is exact, so "zero counterexamples" means exactly that
report = lemma_grid_check(4)
print("grid bound 4:", report.pairs_checked, "pairs,",
      len(report.counterexamples), "counterexamples,",
      report.classes)
