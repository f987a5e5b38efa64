"""Complex scalars as explicit real pairs.

Every coefficient in this package is a :class:`ComplexValue`, a pair of
finite doubles ``(re, im)`` standing for ``re + i*im``.  Addition is
componentwise, multiplication is the textbook
``(a1*a2 - b1*b2, a1*b2 + a2*b1)`` rule, and the inverse is the conjugate
over the squared modulus.  On integer-valued components all of this is
bit-exact, which the rest of the package leans on for its exact checks.

Equality is tolerance based: two values compare equal when both component
differences are at most the active epsilon.  The active :class:`Tolerance`
is a module-level setting shared by every dependent module; override it
with :func:`set_tolerance` or, scoped, with :func:`local_tolerance`.
"""

from __future__ import annotations

import math
import random
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator, Mapping

DEFAULT_EPSILON = 1e-9

Real = int | float


@dataclass(frozen=True)
class Tolerance:
    """Comparison width used by every tolerance-based equality in the package."""

    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self) -> None:
        eps = self.epsilon
        if not isinstance(eps, (int, float)) or not math.isfinite(eps):
            raise ValueError(f"epsilon must be a finite number, got {eps!r}")
        if eps < 0:
            raise ValueError(f"epsilon must be non-negative, got {eps!r}")
        object.__setattr__(self, "epsilon", float(eps))


_active_tolerance = Tolerance()


def get_tolerance() -> Tolerance:
    """Return the tolerance currently in effect."""
    return _active_tolerance


def set_tolerance(value: Tolerance | Real) -> Tolerance:
    """Install a new package-wide tolerance and return the previous one."""
    global _active_tolerance
    previous = _active_tolerance
    _active_tolerance = value if isinstance(value, Tolerance) else Tolerance(float(value))
    return previous


def epsilon() -> float:
    """Shorthand for ``get_tolerance().epsilon``."""
    return _active_tolerance.epsilon


@contextmanager
def local_tolerance(value: Tolerance | Real) -> Iterator[Tolerance]:
    """Temporarily switch the package tolerance within a ``with`` block."""
    previous = set_tolerance(value)
    try:
        yield get_tolerance()
    finally:
        set_tolerance(previous)


def _as_component(x: Real, name: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise TypeError(f"{name} component must be a real number, got {type(x).__name__}")
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"{name} component must be finite, got {x!r}")
    return x


@dataclass(frozen=True, eq=False)
class ComplexValue:
    """A complex scalar ``re + i*im`` over two finite doubles.

    Instances are immutable; arithmetic returns new values.  ``==`` is the
    package-wide tolerance comparison (max component difference at most
    epsilon), so instances are deliberately unhashable.
    """

    re: float
    im: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _as_component(self.re, "real"))
        object.__setattr__(self, "im", _as_component(self.im, "imaginary"))

    __hash__ = None  # tolerance-based __eq__ is incompatible with hashing

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: ComplexValue | Real) -> ComplexValue:
        if not isinstance(other, (ComplexValue, int, float)):
            return NotImplemented
        other = as_complex(other)
        return ComplexValue(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> ComplexValue:
        return ComplexValue(-self.re, -self.im)

    def __sub__(self, other: ComplexValue | Real) -> ComplexValue:
        if not isinstance(other, (ComplexValue, int, float)):
            return NotImplemented
        other = as_complex(other)
        return ComplexValue(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: ComplexValue | Real) -> ComplexValue:
        if not isinstance(other, (ComplexValue, int, float)):
            return NotImplemented
        return as_complex(other) - self

    def __mul__(self, other: ComplexValue | Real) -> ComplexValue:
        if not isinstance(other, (ComplexValue, int, float)):
            return NotImplemented
        other = as_complex(other)
        a1, b1, a2, b2 = self.re, self.im, other.re, other.im
        return ComplexValue(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def inverse(self) -> ComplexValue:
        """Multiplicative inverse ``(re - i*im) / (re**2 + im**2)``.

        Raises ``ZeroDivisionError`` when the modulus is within tolerance
        of zero.
        """
        if self.modulus() <= epsilon():
            raise ZeroDivisionError("cannot invert a complex value that is zero within tolerance")
        d = self.re * self.re + self.im * self.im
        return ComplexValue(self.re / d, -self.im / d)

    def conjugate(self) -> ComplexValue:
        return ComplexValue(self.re, -self.im)

    def modulus(self) -> float:
        return math.hypot(self.re, self.im)

    def scale(self, factor: Real) -> ComplexValue:
        return ComplexValue(self.re * factor, self.im * factor)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, float)) and not isinstance(other, bool):
            other = ComplexValue(other, 0.0)
        if not isinstance(other, ComplexValue):
            return NotImplemented
        return deviation(self, other) <= epsilon()

    def is_zero(self) -> bool:
        return max(abs(self.re), abs(self.im)) <= epsilon()

    # -- presentation / serialization ----------------------------------------

    def __str__(self) -> str:
        if self.im == 0.0:
            return f"{self.re:g}"
        if self.re == 0.0:
            return f"{self.im:g}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re:g}{sign}{abs(self.im):g}i"

    def to_dict(self) -> dict[str, float]:
        return {"re": self.re, "im": self.im}

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> ComplexValue:
        if not isinstance(data, Mapping) or set(data) != {"re", "im"}:
            raise ValueError(f"expected an object with exactly 're' and 'im', got {data!r}")
        re, im = data["re"], data["im"]
        if isinstance(re, bool) or isinstance(im, bool):
            raise ValueError("'re' and 'im' must be numbers")
        if not isinstance(re, (int, float)) or not isinstance(im, (int, float)):
            raise ValueError("'re' and 'im' must be numbers")
        return cls(float(re), float(im))


ZERO = ComplexValue(0.0, 0.0)
ONE = ComplexValue(1.0, 0.0)
I = ComplexValue(0.0, 1.0)


def as_complex(value: ComplexValue | Real) -> ComplexValue:
    """Promote a plain real number to a ComplexValue; pass values through."""
    if isinstance(value, ComplexValue):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise TypeError(f"cannot interpret {type(value).__name__} as a complex scalar")
    return ComplexValue(float(value), 0.0)


def deviation(u: ComplexValue, v: ComplexValue) -> float:
    """Max component difference; the quantity the tolerance compares against."""
    return max(abs(u.re - v.re), abs(u.im - v.im))


def sample_complex(rng: random.Random, integer_bound: int | None = None, span: float = 1.0) -> ComplexValue:
    """Draw a random scalar, either from an integer grid or a float square.

    With ``integer_bound=B`` both components are uniform integers in
    ``[-B, B]`` (arithmetic on such values stays exact).  Otherwise both
    components are uniform floats in ``[-span, span]``.
    """
    if integer_bound is not None:
        return ComplexValue(float(rng.randint(-integer_bound, integer_bound)),
                            float(rng.randint(-integer_bound, integer_bound)))
    return ComplexValue(rng.uniform(-span, span), rng.uniform(-span, span))


@dataclass(frozen=True)
class FieldAxiomReport:
    """Outcome of a randomized field-axiom sweep over sampled triples.

    Deviations are tracked in two buckets because they behave
    differently on integer inputs: the ring laws (commutativity,
    associativity, distributivity) are division-free and come out
    bit-exact there, while the inverse round trip ``z * z**-1 == 1``
    always rounds through a real division and can only be held to
    tolerance.
    """

    samples: int
    checks: int
    failures: int
    worst_ring_deviation: float
    worst_inverse_deviation: float

    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict[str, object]:
        return {
            "samples": self.samples,
            "checks": self.checks,
            "failures": self.failures,
            "worst_ring_deviation": self.worst_ring_deviation,
            "worst_inverse_deviation": self.worst_inverse_deviation,
        }


def verify_field_axioms(samples: int, rng: random.Random,
                        integer_bound: int | None = None) -> FieldAxiomReport:
    """Check the field laws on random triples and count violations.

    Per triple ``(z1, z2, z3)``: commutativity and associativity of ``+``
    and ``*``, distributivity, and the inverse round trip ``z * z**-1 == 1``
    for each sampled value whose modulus clears the tolerance.  Failures
    are counted against the active tolerance; the worst observed deviations
    are reported either way.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    eps = epsilon()
    checks = 0
    failures = 0
    worst_ring = 0.0
    worst_inverse = 0.0

    def record(u: ComplexValue, v: ComplexValue, inverse: bool = False) -> None:
        nonlocal checks, failures, worst_ring, worst_inverse
        checks += 1
        d = deviation(u, v)
        if inverse:
            if d > worst_inverse:
                worst_inverse = d
        elif d > worst_ring:
            worst_ring = d
        if d > eps:
            failures += 1

    for _ in range(samples):
        z1 = sample_complex(rng, integer_bound)
        z2 = sample_complex(rng, integer_bound)
        z3 = sample_complex(rng, integer_bound)
        record(z1 + z2, z2 + z1)
        record(z1 * z2, z2 * z1)
        record((z1 + z2) + z3, z1 + (z2 + z3))
        record((z1 * z2) * z3, z1 * (z2 * z3))
        record(z1 * (z2 + z3), z1 * z2 + z1 * z3)
        for z in (z1, z2, z3):
            if z.modulus() > eps:
                record(z * z.inverse(), ONE, inverse=True)
    return FieldAxiomReport(samples, checks, failures, worst_ring, worst_inverse)
