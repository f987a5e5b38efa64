"""
Complex arithmetic as explicit pairs, and its 2x2 matrix twin
=============================================================

Everything downstream rests on two small facts demonstrated here:
complex numbers implemented as (re, im) pairs satisfy the field laws,
and the map z = a+bi -> [[a, -b], [b, a]] carries that arithmetic onto
matrix arithmetic without losing anything.
"""

import random

from grassalg import (
    ComplexValue,
    local_tolerance,
    phi,
    phi_inv,
    verify_field_axioms,
    verify_phi_homomorphism,
)

# ordinary arithmetic on pairs: (1+2i)(3+4i)
z1 = ComplexValue(1, 2)
z2 = ComplexValue(3, 4)
print("z1        =", z1)
print("z2        =", z2)
print("z1 + z2   =", z1 + z2)
print("z1 * z2   =", z1 * z2)
print("1/z2      =", z2.inverse())

# the matrix picture: multiplication becomes matrix multiplication
m1 = phi(z1).to_mat2()
m2 = phi(z2).to_mat2()
print("\nphi(z1)        =", m1)
print("phi(z1)*phi(z2) =", m1 * m2)
print("phi(z1*z2)      =", phi(z1 * z2).to_mat2())
print("round trip      =", phi_inv(m1))

# the determinant of phi(z) is |z|^2, which is why only z = 0 fails to invert
print("\ndet(phi(z1)) =", m1.det(), " re^2 + im^2 =", z1.re ** 2 + z1.im ** 2)

# randomized law checking: on integer samples the ring laws hold with zero
# deviation, not merely within tolerance
rng = random.Random(7)
report = verify_field_axioms(2000, rng, integer_bound=50)
print("\ninteger sweep:", report.checks, "checks,",
      report.failures, "failures, worst ring deviation",
      report.worst_ring_deviation)

# the same is true of the matrix map: both sides of phi(z1*z2) == phi(z1)*phi(z2)
# perform the identical float operations, so even float samples agree bitwise
report = verify_phi_homomorphism(2000, rng)
print("float matrix-map sweep: worst deviation", report.worst_deviation)

# float division does round, though; a zero-tolerance run is expected to
# flag inverse round trips like 49 * (1/49)
with local_tolerance(0.0):
    report = verify_field_axioms(2000, rng)
print("zero-tolerance float sweep:", report.failures, "failures,",
      "worst inverse deviation", report.worst_inverse_deviation)
