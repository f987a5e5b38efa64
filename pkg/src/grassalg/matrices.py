"""2x2 real matrices, the rotation-scaling embedding of the complex plane,
and the nilpotent anticommuting family.

Two special one-parameter-pair families live here:

* ``RepMatrix(a, b)`` realizes ``[[a, -b], [b, a]]``; the map
  :func:`phi` sends ``a + i*b`` onto that subset and is a field
  isomorphism (checked empirically by :func:`verify_phi_homomorphism`).
* ``NilpotentCandidate(a, b)`` realizes ``[[a*b, b**2], [-a**2, -a*b]]``,
  which squares to zero identically.  For two members N(a,b), N(c,d) the
  anticommutator works out to ``-(a*d - b*c)**2 * I``, so it vanishes
  exactly when ``a*d == b*c``, which in turn forces the members to be
  real multiples of each other.  :func:`lemma_grid_check` verifies this
  three-way equivalence exhaustively on an integer grid, where every
  comparison is exact.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from .complexes import ComplexValue, Real, deviation, epsilon, sample_complex


class NotInRepresentationSubset(ValueError):
    """Matrix does not have the ``[[a, -b], [b, a]]`` shape within tolerance."""


class DegenerateFamilyMember(ValueError):
    """Nilpotent family member with a zero parameter where a nonzero one is required."""


def _entry(x: Real, name: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise TypeError(f"{name} must be a real number, got {type(x).__name__}")
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"{name} must be finite, got {x!r}")
    return x


@dataclass(frozen=True, eq=False)
class Mat2:
    """A 2x2 real matrix, row major.  Immutable; ``==`` is entrywise within tolerance."""

    m11: float
    m12: float
    m21: float
    m22: float

    def __post_init__(self) -> None:
        for name in ("m11", "m12", "m21", "m22"):
            object.__setattr__(self, name, _entry(getattr(self, name), name))

    __hash__ = None

    def __add__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(self.m11 + other.m11, self.m12 + other.m12,
                    self.m21 + other.m21, self.m22 + other.m22)

    def __neg__(self) -> Mat2:
        return Mat2(-self.m11, -self.m12, -self.m21, -self.m22)

    def __sub__(self, other: Mat2) -> Mat2:
        return self + (-other)

    def __mul__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def scale(self, factor: Real) -> Mat2:
        return Mat2(self.m11 * factor, self.m12 * factor,
                    self.m21 * factor, self.m22 * factor)

    def entries(self) -> tuple[float, float, float, float]:
        return (self.m11, self.m12, self.m21, self.m22)

    def trace(self) -> float:
        return self.m11 + self.m22

    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return matrix_deviation(self, other) <= epsilon()

    def is_zero(self) -> bool:
        return max(abs(e) for e in self.entries()) <= epsilon()

    def __str__(self) -> str:
        return f"[[{self.m11:g}, {self.m12:g}], [{self.m21:g}, {self.m22:g}]]"

    def to_dict(self) -> dict[str, list[list[float]]]:
        return {"m": [[self.m11, self.m12], [self.m21, self.m22]]}

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> Mat2:
        if not isinstance(data, Mapping) or set(data) != {"m"}:
            raise ValueError(f"expected an object with exactly 'm', got {data!r}")
        rows = data["m"]
        if (not isinstance(rows, list) or len(rows) != 2
                or any(not isinstance(r, list) or len(r) != 2 for r in rows)):
            raise ValueError("'m' must be a 2x2 row-major array")
        return cls(rows[0][0], rows[0][1], rows[1][0], rows[1][1])


ZERO2 = Mat2(0.0, 0.0, 0.0, 0.0)
IDENTITY2 = Mat2(1.0, 0.0, 0.0, 1.0)


def matrix_deviation(x: Mat2, y: Mat2) -> float:
    return max(abs(a - b) for a, b in zip(x.entries(), y.entries()))


@dataclass(frozen=True)
class RepMatrix:
    """The rotation-scaling matrix ``[[a, -b], [b, a]]``, parameterized by (a, b)."""

    a: float
    b: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _entry(self.a, "a"))
        object.__setattr__(self, "b", _entry(self.b, "b"))

    def to_mat2(self) -> Mat2:
        return Mat2(self.a, -self.b, self.b, self.a)

    def to_complex(self) -> ComplexValue:
        return ComplexValue(self.a, self.b)


def phi(z: ComplexValue) -> RepMatrix:
    """Embed ``a + i*b`` as ``[[a, -b], [b, a]]``."""
    return RepMatrix(z.re, z.im)


def phi_inv(m: Mat2) -> ComplexValue:
    """Invert the embedding: ``m11 + i*m21``.

    Raises :class:`NotInRepresentationSubset` when the matrix fails the
    subset equations ``m11 == m22`` and ``m12 == -m21`` within tolerance.
    """
    eps = epsilon()
    if abs(m.m11 - m.m22) > eps or abs(m.m12 + m.m21) > eps:
        raise NotInRepresentationSubset(
            f"{m} is not of the form [[a, -b], [b, a]] within epsilon={eps:g}")
    return ComplexValue(m.m11, m.m21)


@dataclass(frozen=True)
class HomomorphismReport:
    """Outcome of a randomized structure-preservation sweep for phi."""

    samples: int
    checks: int
    failures: int
    worst_deviation: float

    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict[str, object]:
        return {
            "samples": self.samples,
            "checks": self.checks,
            "failures": self.failures,
            "worst_deviation": self.worst_deviation,
        }


def verify_phi_homomorphism(samples: int, rng: random.Random,
                            integer_bound: int | None = None) -> HomomorphismReport:
    """Check phi(z1 + z2) == phi(z1) + phi(z2) and the product analogue.

    Each sample draws a pair and checks both equations against the active
    tolerance.  ``integer_bound`` switches sampling to an integer grid,
    where the comparisons come out exact.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    eps = epsilon()
    checks = 0
    failures = 0
    worst = 0.0
    for _ in range(samples):
        z1 = sample_complex(rng, integer_bound)
        z2 = sample_complex(rng, integer_bound)
        for got, expected in (
            (phi(z1 + z2).to_mat2(), phi(z1).to_mat2() + phi(z2).to_mat2()),
            (phi(z1 * z2).to_mat2(), phi(z1).to_mat2() * phi(z2).to_mat2()),
        ):
            checks += 1
            d = matrix_deviation(got, expected)
            if d > worst:
                worst = d
            if d > eps:
                failures += 1
    return HomomorphismReport(samples, checks, failures, worst)


@dataclass(frozen=True)
class NilpotentCandidate:
    """Member ``N(a, b) = [[a*b, b**2], [-a**2, -a*b]]`` of the square-zero family.

    The constructor admits degenerate members (a or b zero); operations
    that rely on both parameters being nonzero reject those explicitly.
    """

    a: float
    b: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _entry(self.a, "a"))
        object.__setattr__(self, "b", _entry(self.b, "b"))

    def to_mat2(self) -> Mat2:
        a, b = self.a, self.b
        return Mat2(a * b, b * b, -a * a, -a * b)

    def is_degenerate(self) -> bool:
        eps = epsilon()
        return abs(self.a) <= eps or abs(self.b) <= eps


def build_nilpotent(a: Real, b: Real) -> NilpotentCandidate:
    """Construct N(a, b); its realization squares to the zero matrix."""
    return NilpotentCandidate(float(a), float(b))


def anticommutator(m1: Mat2, m2: Mat2) -> Mat2:
    """``m1*m2 + m2*m1``."""
    return m1 * m2 + m2 * m1


def proportionality_witness(n1: NilpotentCandidate, n2: NilpotentCandidate) -> float | None:
    """Scalar lambda with ``N2 == lambda * N1`` when the two members anticommute.

    Requires both parameters of ``n1`` to be nonzero (within tolerance);
    raises :class:`DegenerateFamilyMember` otherwise.  When the
    anticommutator of the realizations vanishes within tolerance, returns
    ``w**2 / (a*b)**2`` with ``w = a*d`` (equal to ``b*c`` in that case);
    returns ``None`` when the members do not anticommute.
    """
    if n1.is_degenerate():
        raise DegenerateFamilyMember(
            f"N({n1.a:g}, {n1.b:g}) has a zero parameter; the witness needs both nonzero")
    if not anticommutator(n1.to_mat2(), n2.to_mat2()).is_zero():
        return None
    w = n1.a * n2.b
    ab = n1.a * n1.b
    return (w * w) / (ab * ab)


def is_real_multiple(m1: Mat2, m2: Mat2) -> bool:
    """Whether ``m2 == lambda * m1`` for some real lambda (m1 nonzero).

    Uses exact cross products of entry pairs, so on integer entries the
    answer carries no rounding at all.
    """
    e1, e2 = m1.entries(), m2.entries()
    for i in range(4):
        for j in range(i + 1, 4):
            if e1[i] * e2[j] != e1[j] * e2[i]:
                return False
    # rule out the pathological m1 == 0, m2 != 0 case
    return any(e != 0.0 for e in e1) or all(e == 0.0 for e in e2)


ANTICOMMUTING = "anticommuting"
NON_ANTICOMMUTING = "non_anticommuting"


def classify_pair(a: int, b: int, c: int, d: int) -> str:
    """Class label for the ordered pair N(a,b), N(c,d) on the integer grid."""
    ac = anticommutator(build_nilpotent(a, b).to_mat2(), build_nilpotent(c, d).to_mat2())
    return ANTICOMMUTING if ac.entries() == (0.0, 0.0, 0.0, 0.0) else NON_ANTICOMMUTING


@dataclass(frozen=True)
class GridCheckReport:
    """Exhaustive integer-grid verdict for the uniqueness property."""

    bound: int
    pairs_checked: int
    classes: dict[str, int]
    counterexamples: tuple[dict[str, object], ...] = ()

    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict[str, object]:
        return {
            "bound": self.bound,
            "pairs_checked": self.pairs_checked,
            "counterexamples": list(self.counterexamples),
            "classes": dict(self.classes),
        }


def lemma_grid_check(bound: int) -> GridCheckReport:
    """Exhaustively test the equivalence on nonzero integers in [-bound, bound].

    For every ordered pair (a,b), (c,d) with all four components nonzero,
    asserts that the following three statements agree:

    1. the anticommutator of N(a,b) and N(c,d) is the zero matrix;
    2. ``a*d == b*c``;
    3. N(c,d) is a real multiple of N(a,b);

    and additionally that the anticommutator equals
    ``-(a*d - b*c)**2 * I`` entry for entry.  All arithmetic is on exact
    small integers, so every comparison is exact.  Disagreements are
    returned as counterexamples (none are expected).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    values = [v for v in range(-bound, bound + 1) if v != 0]
    pairs_checked = 0
    classes = {ANTICOMMUTING: 0, NON_ANTICOMMUTING: 0}
    counterexamples: list[dict[str, object]] = []
    for a in values:
        for b in values:
            n1 = build_nilpotent(a, b).to_mat2()
            for c in values:
                for d in values:
                    n2 = build_nilpotent(c, d).to_mat2()
                    pairs_checked += 1
                    ac = anticommutator(n1, n2)
                    vanishes = ac.entries() == (0.0, 0.0, 0.0, 0.0)
                    cross = a * d - b * c
                    proportional = is_real_multiple(n1, n2)
                    sharper = ac.entries() == (
                        float(-cross * cross), 0.0, 0.0, float(-cross * cross))
                    if vanishes != (cross == 0) or vanishes != proportional or not sharper:
                        counterexamples.append({
                            "a": a, "b": b, "c": c, "d": d,
                            "anticommutator_vanishes": vanishes,
                            "ad_equals_bc": cross == 0,
                            "proportional": proportional,
                            "matches_sharper_identity": sharper,
                        })
                    classes[ANTICOMMUTING if vanishes else NON_ANTICOMMUTING] += 1
    return GridCheckReport(bound, pairs_checked, classes, tuple(counterexamples))
