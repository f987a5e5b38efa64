"""
Anticommuting generators done properly
======================================

The exterior algebra is the standard way to get theta_i theta_j =
-theta_j theta_i: elements are linear combinations of ordered generator
monomials, and the product reorders indices while counting sign flips.
"""

from grassalg import GrassmannElement, grassmann_anticommutator, odd_square_check, theta

t1, t2, t3 = theta(1), theta(2), theta(3)

# the defining relations, as computations
print("theta_2 . theta_1      =", t2 * t1)
print("theta_1 . theta_1      =", t1 * t1)
print("{theta_1, theta_2}     =", grassmann_anticommutator(t1, t2))

# a worked product: (theta_1 + theta_2)(theta_1 - theta_2)
left = t1 + t2
right = t1 - t2
print("(t1 + t2)(t1 - t2)     =", left * right)

# scalars live inside the algebra as grade-0 elements and commute with
# everything, so mixed expressions are unproblematic
mixed = (1 + t1) * (2 + t2)
print("(1 + t1)(2 + t2)       =", mixed)
print("grades present:", sorted(mixed.grades()))

# the grade decomposition splits an element by monomial length
for grade, part in sorted(mixed.grade_decompose().items()):
    print(f"  grade {grade}: {part}")

# any element built purely from odd grades squares to zero -- this is
# the property one wants from "Grassmann numbers", and here it is a
# theorem of the construction rather than an extra axiom
element = t1 + 2 * t2 * t3 * theta(4) - t3
print("\nodd element:", element)
print("its square: ", element * element)
print("odd_square_check:", odd_square_check(element))

# even-grade parts break the argument, and the check says so
try:
    odd_square_check(1 + t1)
except Exception as exc:
    print("mixed grades rejected:", exc)

# sign bookkeeping example: theta_3 . theta_1 . theta_2 needs two swaps
m = t3 * t1 * t2
print("\ntheta_3 . theta_1 . theta_2 =", m, "(even permutation, sign +1)")
print("theta_2 . theta_1 . theta_3 =", t2 * t1 * t3)

# serialization keeps the terms in sorted order for stable output
print("\nas dict:", GrassmannElement.from_dict((t1 * 2 + t2).to_dict()))
