"""Exterior algebra: canonical form, product signs, and the odd-sector laws.

The sign oracle reorders the concatenated index sequence by adjacent
transpositions, flipping the sign on every swap - the textbook
definition, independent of the merge-based implementation.
"""

import random

import pytest
from hypothesis import given, settings, strategies as st

from grassalg.complexes import ComplexValue, local_tolerance
from grassalg.exterior import (
    GrassmannElement,
    GrassmannPolynomial,
    NotOddGrade,
    anticommutator,
    check_monomial,
    merge_monomials,
    odd_square_check,
    poly_make,
    poly_mul,
    random_odd_element,
    theta,
)


def bubble_sign(sequence):
    """Sort by adjacent swaps; return (sorted tuple, sign) or (None, 0) on repeats."""
    seq = list(sequence)
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    if any(seq[k] == seq[k + 1] for k in range(len(seq) - 1)):
        return None, 0
    return tuple(seq), sign


def exact(element):
    return {mono: (c.re, c.im) for mono, c in element.terms.items()}


monomials = st.sets(st.integers(min_value=1, max_value=7), max_size=4).map(
    lambda s: tuple(sorted(s)))


def elements(max_index=5, coeff_bound=5):
    mono = st.sets(st.integers(min_value=1, max_value=max_index), max_size=3).map(
        lambda s: tuple(sorted(s)))
    coeff = st.integers(min_value=-coeff_bound, max_value=coeff_bound)
    return st.dictionaries(mono, coeff, max_size=4).map(GrassmannElement)


class TestMergeSign:
    @given(monomials, monomials)
    def test_matches_bubble_sort_oracle(self, m1, m2):
        got_mono, got_sign = merge_monomials(m1, m2)
        want_mono, want_sign = bubble_sign(m1 + m2)
        assert (got_mono, got_sign) == (want_mono, want_sign)

    def test_examples(self):
        assert merge_monomials((1, 3), (2,)) == ((1, 2, 3), -1)
        assert merge_monomials((2,), (1,)) == ((1, 2), -1)
        assert merge_monomials((1,), (2,)) == ((1, 2), 1)
        assert merge_monomials((1,), (1,)) == (None, 0)
        assert merge_monomials((), (4, 9)) == ((4, 9), 1)


class TestCanonicalForm:
    def test_monomial_validation(self):
        assert check_monomial([3, 5, 9]) == (3, 5, 9)
        with pytest.raises(ValueError):
            check_monomial((2, 1))
        with pytest.raises(ValueError):
            check_monomial((1, 1))
        with pytest.raises(ValueError):
            check_monomial((0,))

    def test_generator_index_validation(self):
        with pytest.raises(ValueError):
            theta(0)
        with pytest.raises(TypeError):
            theta(1.5)

    def test_construction_folds_duplicates(self):
        e = GrassmannElement([((1,), 2), ((1,), 3)])
        assert exact(e) == {(1,): (5.0, 0.0)}

    def test_construction_prunes_zeros(self):
        e = GrassmannElement({(1,): 2, (2,): 0})
        assert exact(e) == {(1,): (2.0, 0.0)}

    def test_zero_and_scalar(self):
        assert exact(GrassmannElement.zero()) == {}
        assert exact(GrassmannElement.scalar(3)) == {(): (3.0, 0.0)}


class TestProductExamples:
    def test_generators_anticommute(self):
        assert exact(theta(2) * theta(1)) == {(1, 2): (-1.0, 0.0)}
        assert exact(theta(1) * theta(2)) == {(1, 2): (1.0, 0.0)}

    def test_generator_squares_vanish(self):
        assert exact(theta(1) * theta(1)) == {}

    def test_difference_of_squares_collapses(self):
        # (t1 + t2)(t1 - t2) = -2 t1^t2 because the squares drop out
        product = (theta(1) + theta(2)) * (theta(1) - theta(2))
        assert exact(product) == {(1, 2): (-2.0, 0.0)}

    def test_scalar_anticommutator_doubles(self):
        one = GrassmannElement.scalar(1)
        assert exact(anticommutator(one, theta(1))) == {(1,): (2.0, 0.0)}

    def test_mixed_grades(self):
        left = GrassmannElement.scalar(2) + GrassmannElement.monomial((1, 3))
        right = GrassmannElement.scalar(3) + GrassmannElement.monomial((2, 3))
        product = left * right
        assert exact(product) == {
            (): (6.0, 0.0),
            (2, 3): (2.0, 0.0),
            (1, 3): (3.0, 0.0),
        }

    def test_triple_with_shared_index_vanishes(self):
        assert exact(theta(1) * theta(2) * theta(1)) == {}


class TestAlgebraLaws:
    @settings(max_examples=60)
    @given(elements(), elements(), elements())
    def test_associativity_exact(self, x, y, z):
        assert exact((x * y) * z) == exact(x * (y * z))

    @settings(max_examples=60)
    @given(elements(), elements(), elements())
    def test_distributivity(self, x, y, z):
        assert exact(x * (y + z)) == exact(x * y + x * z)
        assert exact((x + y) * z) == exact(x * z + y * z)

    @given(elements(), st.integers(min_value=-5, max_value=5))
    def test_scalar_pullout(self, x, k):
        assert exact(k * x) == exact(GrassmannElement.scalar(k) * x)
        assert exact(x * k) == exact(k * x)

    @given(monomials, monomials)
    def test_graded_sign_rule(self, m1, m2):
        a = GrassmannElement.monomial(m1)
        b = GrassmannElement.monomial(m2)
        sign = (-1) ** (len(m1) * len(m2))
        assert exact(a * b) == exact((b * a) * sign)

    @given(st.integers(min_value=0, max_value=2**31))
    def test_odd_elements_anticommute(self, seed):
        rng = random.Random(seed)
        x = random_odd_element(rng)
        y = random_odd_element(rng)
        assert exact(anticommutator(x, y)) == {}
        assert exact(x * x) == {}


class TestGrades:
    def test_grades_and_decomposition(self):
        e = GrassmannElement.scalar(1) + theta(1) + GrassmannElement.monomial((1, 2), 3)
        assert e.grades() == {0, 1, 2}
        parts = e.grade_decompose()
        assert sorted(parts) == [0, 1, 2]
        assert exact(parts[0]) == {(): (1.0, 0.0)}
        assert exact(parts[1]) == {(1,): (1.0, 0.0)}
        assert exact(parts[2]) == {(1, 2): (3.0, 0.0)}

    def test_is_odd(self):
        assert theta(1).is_odd()
        assert (theta(1) + GrassmannElement.monomial((2, 3, 4))).is_odd()
        assert GrassmannElement.zero().is_odd()
        assert not (theta(1) + GrassmannElement.scalar(1)).is_odd()

    def test_odd_square_check(self):
        assert odd_square_check(theta(1) + theta(4))
        with pytest.raises(NotOddGrade):
            odd_square_check(GrassmannElement.scalar(1) + theta(1))


class TestRandomOddElements:
    def test_purely_odd_with_bounded_integer_coefficients(self):
        rng = random.Random(99)
        for _ in range(100):
            e = random_odd_element(rng, max_generators=6, coeff_bound=5)
            assert e.is_odd()
            for mono, coeff in e.terms.items():
                assert len(mono) % 2 == 1
                assert max(mono) <= 6
                assert coeff.im == 0.0
                assert coeff.re == int(coeff.re)
                assert -20 <= coeff.re <= 20  # a few draws may stack per monomial

    def test_reproducible(self):
        a = exact(random_odd_element(random.Random(5)))
        b = exact(random_odd_element(random.Random(5)))
        assert a == b


class TestSerialization:
    def test_sorted_terms(self):
        e = GrassmannElement.monomial((2, 3), ComplexValue(0, 1)) + theta(1) + \
            GrassmannElement.scalar(4)
        assert e.to_dict() == {"terms": [
            {"mono": [], "re": 4.0, "im": 0.0},
            {"mono": [1], "re": 1.0, "im": 0.0},
            {"mono": [2, 3], "re": 0.0, "im": 1.0},
        ]}

    @settings(max_examples=60)
    @given(elements())
    def test_round_trip_is_identity(self, e):
        assert exact(GrassmannElement.from_dict(e.to_dict())) == exact(e)

    def test_rejects_bad_payloads(self):
        with pytest.raises(ValueError):
            GrassmannElement.from_dict({"elems": []})
        with pytest.raises(ValueError):
            GrassmannElement.from_dict({"terms": [{"mono": [2, 1], "re": 1.0, "im": 0.0}]})
        with pytest.raises(ValueError):
            GrassmannElement.from_dict({"terms": [{"mono": [1], "re": 1.0}]})


class TestGrassmannPolynomial:
    def test_poly_make_example(self):
        p = poly_make(1, 2, 1)
        assert exact(p.as_element()) == {(): (1.0, 0.0), (1, 2): (-1.0, 0.0)}

    def test_poly_make_rejects_equal_indices(self):
        with pytest.raises(ValueError):
            poly_make(1, 3, 3)

    def test_poly_mul(self):
        p = poly_make(2, 1, 2)   # 2 + t1^t2
        q = poly_make(3, 3, 4)   # 3 + t3^t4
        assert exact(poly_mul(p, q)) == {
            (): (6.0, 0.0),
            (3, 4): (2.0, 0.0),
            (1, 2): (3.0, 0.0),
            (1, 2, 3, 4): (1.0, 0.0),
        }

    def test_odd_part_must_be_odd(self):
        with pytest.raises(NotOddGrade):
            GrassmannPolynomial(ComplexValue(1), GrassmannElement.scalar(2), 1)


def test_equality_uses_tolerance():
    near = GrassmannElement({(1,): ComplexValue(1 + 1e-12)})
    assert near == theta(1)
    with local_tolerance(0.0):
        assert near != theta(1)


def test_iteration_is_sorted():
    e = theta(3) + theta(1) + GrassmannElement.monomial((1, 2))
    assert [mono for mono, _ in e] == [(1,), (1, 2), (3,)]
