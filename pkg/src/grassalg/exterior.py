"""Exterior algebra over complex coefficients with anticommuting generators.

Generators are written ``theta(1), theta(2), ...`` and obey
``theta(i)*theta(j) == -theta(j)*theta(i)``, hence every generator squares
to zero.  Elements are finite complex combinations of *canonical
monomials*: strictly increasing tuples of generator indices, with the
empty tuple standing for the scalar 1.

Canonical form and signs
------------------------
A product of two monomials concatenates their index sequences and then
sorts the result back into increasing order.  Each transposition of
adjacent generators flips the sign, so the product carries
``(-1)**crossings`` where ``crossings`` counts the pairs (one index from
each side) that end up out of order.  A repeated index annihilates the
term.  Both inputs are already sorted, so ``crossings`` is exactly the
number of merge inversions; :func:`merge_monomials` computes the merged
tuple and the sign in one pass.

Coefficients at or below the active tolerance are pruned after every
operation, so equal elements have identical term maps on exact input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .complexes import ComplexValue, Real, ZERO, as_complex, epsilon

Monomial = tuple[int, ...]


class NotOddGrade(ValueError):
    """Element has an even-grade term where a purely odd element is required."""


def check_generator_index(index: int) -> int:
    if isinstance(index, bool) or not isinstance(index, int):
        raise TypeError(f"generator index must be an int, got {type(index).__name__}")
    if index < 1:
        raise ValueError(f"generator index must be >= 1, got {index}")
    return index


def check_monomial(mono: Iterable[int]) -> Monomial:
    """Validate and normalize to a strictly increasing index tuple."""
    mono = tuple(mono)
    for index in mono:
        check_generator_index(index)
    if any(mono[k] >= mono[k + 1] for k in range(len(mono) - 1)):
        raise ValueError(f"monomial indices must be strictly increasing, got {mono}")
    return mono


def merge_monomials(m1: Monomial, m2: Monomial) -> tuple[Monomial | None, int]:
    """Interleave two canonical monomials, tracking the anticommutation sign.

    Returns ``(merged, sign)``, or ``(None, 0)`` when an index occurs on
    both sides (the product vanishes).  ``sign`` is ``(-1)**crossings``
    where a crossing is every element of ``m2`` that must pass over a
    remaining element of ``m1``.
    """
    out: list[int] = []
    sign = 1
    i = j = 0
    while i < len(m1) and j < len(m2):
        if m1[i] == m2[j]:
            return None, 0
        if m1[i] < m2[j]:
            out.append(m1[i])
            i += 1
        else:
            if (len(m1) - i) % 2:
                sign = -sign
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out), sign


class GrassmannElement:
    """A finite complex combination of canonical monomials.

    Treat instances as immutable.  ``+`` and ``-`` act coefficientwise,
    ``*`` is the exterior product (scalars promote), and ``==`` compares
    coefficients within the package tolerance.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, ComplexValue | Real]
                 | Iterable[tuple[Monomial, ComplexValue | Real]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        folded: dict[Monomial, ComplexValue] = {}
        for mono, coeff in items:
            mono = check_monomial(mono)
            coeff = as_complex(coeff)
            if mono in folded:
                coeff = folded[mono] + coeff
            folded[mono] = coeff
        self._terms = {m: c for m, c in folded.items() if not c.is_zero()}

    @property
    def terms(self) -> Mapping[Monomial, ComplexValue]:
        return MappingProxyType(self._terms)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls) -> GrassmannElement:
        return cls()

    @classmethod
    def scalar(cls, value: ComplexValue | Real) -> GrassmannElement:
        return cls({(): as_complex(value)})

    @classmethod
    def generator(cls, index: int) -> GrassmannElement:
        return cls({(check_generator_index(index),): ComplexValue(1.0)})

    @classmethod
    def monomial(cls, indices: Iterable[int], coeff: ComplexValue | Real = 1) -> GrassmannElement:
        return cls({check_monomial(indices): as_complex(coeff)})

    # -- algebra --------------------------------------------------------------

    def __add__(self, other: GrassmannElement | ComplexValue | Real) -> GrassmannElement:
        other = _as_element(other)
        merged = dict(self._terms)
        for mono, coeff in other._terms.items():
            merged[mono] = merged[mono] + coeff if mono in merged else coeff
        return GrassmannElement(merged)

    __radd__ = __add__

    def __neg__(self) -> GrassmannElement:
        return GrassmannElement({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: GrassmannElement | ComplexValue | Real) -> GrassmannElement:
        return self + (-_as_element(other))

    def __rsub__(self, other: GrassmannElement | ComplexValue | Real) -> GrassmannElement:
        return _as_element(other) + (-self)

    def __mul__(self, other: GrassmannElement | ComplexValue | Real) -> GrassmannElement:
        other = _as_element(other)
        acc: dict[Monomial, ComplexValue] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                merged, sign = merge_monomials(m1, m2)
                if merged is None:
                    continue
                contribution = (c1 * c2).scale(sign)
                acc[merged] = acc[merged] + contribution if merged in acc else contribution
        return GrassmannElement(acc)

    def __rmul__(self, other: ComplexValue | Real) -> GrassmannElement:
        return _as_element(other) * self

    # -- structure ------------------------------------------------------------

    def grades(self) -> set[int]:
        return {len(m) for m in self._terms}

    def grade_decompose(self) -> dict[int, GrassmannElement]:
        """Split by monomial length; the parts sum back to the element."""
        parts: dict[int, dict[Monomial, ComplexValue]] = {}
        for mono, coeff in self._terms.items():
            parts.setdefault(len(mono), {})[mono] = coeff
        return {grade: GrassmannElement(terms) for grade, terms in sorted(parts.items())}

    def is_odd(self) -> bool:
        """Whether every stored monomial has odd grade (vacuously true for zero)."""
        return all(len(m) % 2 == 1 for m in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (ComplexValue, int, float)) and not isinstance(other, bool):
            other = _as_element(other)
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        for mono in self._terms.keys() | other._terms.keys():
            if self._terms.get(mono, ZERO) != other._terms.get(mono, ZERO):
                return False
        return True

    __hash__ = None

    # -- presentation / serialization ------------------------------------------

    def __iter__(self) -> Iterator[tuple[Monomial, ComplexValue]]:
        return iter(sorted(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono, coeff in self:
            label = "*".join(f"theta_{k}" for k in mono) if mono else "1"
            pieces.append(f"({coeff})*{label}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"GrassmannElement({dict(sorted(self._terms.items()))!r})"

    def to_dict(self) -> dict[str, list[dict[str, object]]]:
        return {"terms": [{"mono": list(mono), "re": coeff.re, "im": coeff.im}
                          for mono, coeff in self]}

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> GrassmannElement:
        if not isinstance(data, Mapping) or set(data) != {"terms"}:
            raise ValueError(f"expected an object with exactly 'terms', got {data!r}")
        entries = data["terms"]
        if not isinstance(entries, list):
            raise ValueError("'terms' must be an array")
        terms = []
        for entry in entries:
            if not isinstance(entry, Mapping) or set(entry) != {"mono", "re", "im"}:
                raise ValueError(f"each term needs exactly 'mono', 're', 'im', got {entry!r}")
            terms.append((check_monomial(entry["mono"]),
                          ComplexValue.from_dict({"re": entry["re"], "im": entry["im"]})))
        return cls(terms)


def _as_element(value: GrassmannElement | ComplexValue | Real) -> GrassmannElement:
    if isinstance(value, GrassmannElement):
        return value
    return GrassmannElement.scalar(as_complex(value))


def theta(index: int) -> GrassmannElement:
    """The generator with the given (1-based) index."""
    return GrassmannElement.generator(index)


def anticommutator(x: GrassmannElement, y: GrassmannElement) -> GrassmannElement:
    """``x*y + y*x``; zero whenever both arguments are purely odd."""
    return x * y + y * x


def odd_square_check(x: GrassmannElement) -> bool:
    """Whether ``x*x`` vanishes; defined for purely odd-grade elements only.

    Raises :class:`NotOddGrade` when an even-grade term is present.  The
    result must come out True for every admissible input; returning the
    boolean keeps the check usable as an oracle.
    """
    if not x.is_odd():
        raise NotOddGrade(f"element has even-grade terms (grades {sorted(x.grades())})")
    return (x * x).is_zero()


def random_odd_element(rng: random.Random, max_generators: int = 6,
                       coeff_bound: int = 5, max_terms: int = 4) -> GrassmannElement:
    """Random purely odd element with integer coefficients.

    Monomials are drawn over generators 1..max_generators with odd
    lengths only; coefficients are integers in [-coeff_bound,
    coeff_bound], accumulated exactly before any float enters.  May
    return zero when the draws cancel.
    """
    odd_lengths = [length for length in (1, 3, 5) if length <= max_generators]
    if not odd_lengths:
        raise ValueError("need at least one generator")
    accumulated: dict[Monomial, int] = {}
    for _ in range(rng.randint(1, max_terms)):
        length = rng.choice(odd_lengths)
        mono = tuple(sorted(rng.sample(range(1, max_generators + 1), length)))
        accumulated[mono] = accumulated.get(mono, 0) + rng.randint(-coeff_bound, coeff_bound)
    return GrassmannElement({m: c for m, c in accumulated.items() if c})


@dataclass(frozen=True)
class GrassmannPolynomial:
    """Degree-one expression ``a0 + a1 * theta`` with an odd-element coefficient.

    ``a0`` is a complex scalar; ``a1`` is restricted to odd grades so the
    realized element is well defined.  ``theta_index`` may occur inside
    ``a1``, in which case the offending part of the product vanishes.
    """

    a0: ComplexValue
    a1: GrassmannElement
    theta_index: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a0", as_complex(self.a0))
        check_generator_index(self.theta_index)
        if not isinstance(self.a1, GrassmannElement):
            raise TypeError("a1 must be a GrassmannElement")
        if not self.a1.is_odd():
            raise NotOddGrade(
                f"a1 must be purely odd-grade, got grades {sorted(self.a1.grades())}")

    def as_element(self) -> GrassmannElement:
        return GrassmannElement.scalar(self.a0) + self.a1 * theta(self.theta_index)

    def __mul__(self, other: GrassmannPolynomial) -> GrassmannElement:
        if not isinstance(other, GrassmannPolynomial):
            return NotImplemented
        return self.as_element() * other.as_element()


def poly_make(a0: ComplexValue | Real, a1_index: int, theta_index: int) -> GrassmannPolynomial:
    """Build ``a0 + theta(a1_index) * theta(theta_index)``.

    The two generators must differ; with equal indices the linear term
    would silently vanish, so that case is rejected.
    """
    check_generator_index(a1_index)
    check_generator_index(theta_index)
    if a1_index == theta_index:
        raise ValueError(
            f"a1 generator equals theta (index {theta_index}); the linear term would vanish")
    return GrassmannPolynomial(as_complex(a0), theta(a1_index), theta_index)


def poly_mul(p: GrassmannPolynomial, q: GrassmannPolynomial) -> GrassmannElement:
    """Exterior product of the realized polynomial elements."""
    return p * q
