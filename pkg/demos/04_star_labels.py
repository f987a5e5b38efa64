"""
Multiplying labels through an odd function
==========================================

Another attempted shortcut to anticommutation: pick an odd function F,
attach a complex label z to each symbol theta, and declare the product
theta_1 * theta_2 = F(z1 - z2).  Antisymmetry then comes for free.  The
catch, demonstrated below, is everything else: the operation is not
associative, has no identity, and its output is a plain scalar, so
"products of three or more symbols" never even arise.
"""

import random

from grassalg import (
    ComplexValue,
    OddFunctionSpec,
    check_odd,
    find_nonassociativity_witness,
    omega,
    registry,
    star,
    star_commutator,
)

# the built-in odd functions; any of them can drive the product
for name, spec in registry().items():
    print(f"{name:15s} {spec.describe()}")

f = OddFunctionSpec.cube()

# the product and its antisymmetry
z1 = ComplexValue(2)
z2 = ComplexValue(1)
print("\ntheta_1 * theta_2 =", star(f, z1, z2))
print("theta_2 * theta_1 =", star(f, z2, z1))
print("theta  * theta    =", star(f, z1, z1))

# oddness of F is what makes this work, and for these specs it holds
# bitwise, not just within tolerance (negating a float only flips a sign
# bit, so F(-z) and -F(z) round identically)
report = check_odd(f, 5000, random.Random(0))
print("oddness sweep: worst deviation", report.worst_deviation)

# the commutator [theta_i, theta_j] = 2 F(zi - zj) is summarized by the
# matrix Omega with [theta_i, theta_j] = i * Omega_ij
points = [ComplexValue(1, 1), ComplexValue(1, -1)]
print("\n[theta_1, theta_2] =", star_commutator(f, points[0], points[1]))
table = omega(f, points)
print("Omega_12 =", table[0, 1])

# now the obstructions.  associativity fails already on tiny label pools:
# compare (t_i * t_j) * t_k with t_i * (t_j * t_k), reading intermediate
# scalars back as labels
witness = find_nonassociativity_witness(OddFunctionSpec.identity(), [0, 0, 1])
print("\nnonassociativity witness on labels (0, 0, 1):")
print("  indices:", witness.indices)
print("  (t_i * t_j) * t_k =", witness.left)
print("  t_i * (t_j * t_k) =", witness.right)

# and no label acts as an identity: e * t = t would force F(e - t) = t
# for every t simultaneously, which no single e can do
pool = [ComplexValue(0), ComplexValue(1), ComplexValue(2)]
ident = OddFunctionSpec.identity()
for e in pool:
    hits = [t for t in pool if star(ident, e, t) == t and star(ident, t, e) == t]
    print(f"labels fixed by {e}: {len(hits)} of {len(pool)}")
