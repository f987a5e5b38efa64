"""Anticommuting labels over the complex plane via an odd kernel function.

Here a "theta" is nothing but a labeled complex number.  Fix an odd
function F (``F(-z) == -F(z)``, hence ``F(0) == 0``) and define

    theta1 * theta2 = F(z1 - z2).

Oddness makes the operation anticommute and vanish on the diagonal, but
it is neither associative nor does it admit an identity, so the labels
form a magma rather than a group; :func:`find_nonassociativity_witness`
produces explicit counterexamples to associativity.

Admissible kernels are described, not passed as callables: an
:class:`OddFunctionSpec` is one of ``identity``, ``cube``, a polynomial
in odd powers only, or a truncated sine series.  Every representable
spec is odd by construction, so the anticommutation of ``*`` needs no
runtime hypothesis on user code.

The noncommutativity bookkeeping lives in :func:`omega`: for base points
``z1..zn`` the matrix ``Omega[i][j] = -2i * F(zi - zj)`` satisfies
``i * Omega[i][j] == theta_i * theta_j - theta_j * theta_i``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .complexes import (
    ComplexValue,
    I,
    Real,
    ZERO,
    as_complex,
    deviation,
    epsilon,
    sample_complex,
)

_MINUS_TWO_I = ComplexValue(0.0, -2.0)

KINDS = ("identity", "cube", "odd_polynomial", "sine_series")


@dataclass(frozen=True)
class OddFunctionSpec:
    """A validated description of an odd map on the complex plane.

    ``odd_coeffs`` pairs odd positive powers with complex coefficients
    (``odd_polynomial`` only); ``order`` is the truncation index of the
    sine series (terms ``(-1)**m * z**(2m+1) / (2m+1)!`` for m = 0..order).
    """

    kind: str
    odd_coeffs: tuple[tuple[int, ComplexValue], ...] = ()
    order: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown odd-function kind {self.kind!r}; choose from {KINDS}")
        if self.kind == "odd_polynomial":
            if not self.odd_coeffs:
                raise ValueError("odd_polynomial needs at least one coefficient")
            seen = set()
            for power, _ in self.odd_coeffs:
                if isinstance(power, bool) or not isinstance(power, int) or power < 1 or power % 2 == 0:
                    raise ValueError(f"powers must be odd positive integers, got {power!r}")
                if power in seen:
                    raise ValueError(f"duplicate power {power}")
                seen.add(power)
        elif self.odd_coeffs:
            raise ValueError(f"odd_coeffs only applies to odd_polynomial, not {self.kind!r}")
        if self.kind == "sine_series":
            if isinstance(self.order, bool) or not isinstance(self.order, int) or self.order < 0:
                raise ValueError(f"sine_series order must be a non-negative int, got {self.order!r}")
        elif self.order:
            raise ValueError(f"order only applies to sine_series, not {self.kind!r}")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def identity(cls) -> OddFunctionSpec:
        return cls("identity")

    @classmethod
    def cube(cls) -> OddFunctionSpec:
        return cls("cube")

    @classmethod
    def odd_polynomial(cls, coeffs: Mapping[int, ComplexValue | Real]
                       | Iterable[ComplexValue | Real]) -> OddFunctionSpec:
        """Polynomial in odd powers only.

        Accepts either a mapping ``{power: coefficient}`` with odd powers,
        or a plain sequence of coefficients for successive odd powers
        1, 3, 5, ...
        """
        if isinstance(coeffs, Mapping):
            pairs = [(p, as_complex(c)) for p, c in coeffs.items()]
        else:
            pairs = [(2 * k + 1, as_complex(c)) for k, c in enumerate(coeffs)]
        pairs = [(p, c) for p, c in pairs if not c.is_zero()]
        if not pairs:
            raise ValueError("odd_polynomial needs at least one nonzero coefficient")
        return cls("odd_polynomial", odd_coeffs=tuple(sorted(pairs)))

    @classmethod
    def sine_series(cls, order: int) -> OddFunctionSpec:
        return cls("sine_series", order=order)

    @classmethod
    def from_string(cls, text: str) -> OddFunctionSpec:
        """Parse the compact command-line form.

        ``identity`` and ``cube`` name themselves; ``sin:<order>``
        truncates the sine series; ``poly:<c1>,<c3>,...`` lists real
        coefficients for powers 1, 3, 5, ...  (complex coefficients are
        available through the JSON form or the constructors).
        """
        text = text.strip()
        if text == "identity":
            return cls.identity()
        if text == "cube":
            return cls.cube()
        if text.startswith("sin:"):
            try:
                return cls.sine_series(int(text[4:]))
            except ValueError as exc:
                raise ValueError(f"bad sine-series order in {text!r}: {exc}") from None
        if text.startswith("poly:"):
            try:
                coeffs = [float(part) for part in text[5:].split(",")]
            except ValueError:
                raise ValueError(f"bad polynomial coefficients in {text!r}") from None
            return cls.odd_polynomial(coeffs)
        raise ValueError(
            f"unknown odd function {text!r}; expected identity, cube, poly:<coeffs>, or sin:<order>")

    # -- evaluation -----------------------------------------------------------

    def __call__(self, z: ComplexValue) -> ComplexValue:
        if self.kind == "identity":
            return z
        if self.kind == "cube":
            return z * z * z
        if self.kind == "odd_polynomial":
            acc = ZERO
            for power, coeff in self.odd_coeffs:
                acc = acc + coeff * _power(z, power)
            return acc
        acc = ZERO
        for m in range(self.order + 1):
            weight = (-1.0 if m % 2 else 1.0) / math.factorial(2 * m + 1)
            acc = acc + _power(z, 2 * m + 1).scale(weight)
        return acc

    def describe(self) -> str:
        if self.kind == "odd_polynomial":
            body = " + ".join(f"({c})*z^{p}" for p, c in self.odd_coeffs)
            return f"odd_polynomial[{body}]"
        if self.kind == "sine_series":
            return f"sine_series[order={self.order}]"
        return self.kind

    # -- serialization ----------------------------------------------------------

    def to_dict(self) -> dict[str, object]:
        if self.kind == "odd_polynomial":
            return {"kind": self.kind,
                    "odd_coeffs": [{"power": p, "re": c.re, "im": c.im}
                                   for p, c in self.odd_coeffs]}
        if self.kind == "sine_series":
            return {"kind": self.kind, "order": self.order}
        return {"kind": self.kind}

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> OddFunctionSpec:
        if not isinstance(data, Mapping) or "kind" not in data:
            raise ValueError(f"expected an object with a 'kind', got {data!r}")
        kind = data["kind"]
        if kind in ("identity", "cube"):
            if set(data) != {"kind"}:
                raise ValueError(f"{kind} takes no parameters, got {data!r}")
            return cls(kind)
        if kind == "sine_series":
            if set(data) != {"kind", "order"}:
                raise ValueError(f"sine_series needs exactly 'kind' and 'order', got {data!r}")
            return cls.sine_series(data["order"])
        if kind == "odd_polynomial":
            if set(data) != {"kind", "odd_coeffs"} or not isinstance(data["odd_coeffs"], list):
                raise ValueError(f"odd_polynomial needs a list under 'odd_coeffs', got {data!r}")
            coeffs = {}
            for entry in data["odd_coeffs"]:
                if not isinstance(entry, Mapping) or set(entry) != {"power", "re", "im"}:
                    raise ValueError(
                        f"each coefficient needs exactly 'power', 're', 'im', got {entry!r}")
                coeffs[entry["power"]] = ComplexValue.from_dict(
                    {"re": entry["re"], "im": entry["im"]})
            return cls.odd_polynomial(coeffs)
        raise ValueError(f"unknown odd-function kind {kind!r}")


def _power(z: ComplexValue, exponent: int) -> ComplexValue:
    # repeated multiplication keeps (-z)**odd == -(z**odd) bit-exact
    acc = z
    for _ in range(exponent - 1):
        acc = acc * z
    return acc


def registry() -> dict[str, OddFunctionSpec]:
    """Representative specs, one per kind."""
    return {
        "identity": OddFunctionSpec.identity(),
        "cube": OddFunctionSpec.cube(),
        "odd_polynomial": OddFunctionSpec.odd_polynomial([1.0, 0.5]),
        "sine_series": OddFunctionSpec.sine_series(5),
    }


@dataclass(frozen=True, eq=False)
class ThetaLabel:
    """A complex number wearing its anticommuting-variable hat."""

    value: ComplexValue

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", as_complex(self.value))

    __hash__ = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ThetaLabel):
            return NotImplemented
        return self.value == other.value

    def __str__(self) -> str:
        return f"theta[{self.value}]"

    def to_dict(self) -> dict[str, float]:
        return self.value.to_dict()

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> ThetaLabel:
        return cls(ComplexValue.from_dict(data))


def as_label(value: ThetaLabel | ComplexValue | Real) -> ThetaLabel:
    if isinstance(value, ThetaLabel):
        return value
    return ThetaLabel(as_complex(value))


def star(f: OddFunctionSpec, t1: ThetaLabel | ComplexValue | Real,
         t2: ThetaLabel | ComplexValue | Real) -> ComplexValue:
    """``theta1 * theta2 = F(z1 - z2)``; anticommutes because F is odd."""
    return f(as_label(t1).value - as_label(t2).value)


def star_commutator(f: OddFunctionSpec, ti: ThetaLabel | ComplexValue | Real,
                    tj: ThetaLabel | ComplexValue | Real) -> ComplexValue:
    """``ti*tj - tj*ti``, which oddness collapses to ``2*F(zi - zj)``."""
    return star(f, ti, tj) - star(f, tj, ti)


def mixed_product(z: ComplexValue | Real, t: ThetaLabel) -> ThetaLabel:
    """Scalar times label stays a label (the boson-fermion typing rule)."""
    return ThetaLabel(as_complex(z) * t.value)


@dataclass(frozen=True)
class OddnessReport:
    """Outcome of a randomized oddness sweep for one function spec."""

    spec: OddFunctionSpec
    samples: int
    failures: int
    worst_deviation: float

    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict[str, object]:
        return {
            "function": self.spec.to_dict(),
            "samples": self.samples,
            "failures": self.failures,
            "worst_deviation": self.worst_deviation,
        }


def check_odd(f: OddFunctionSpec, samples: int, rng: random.Random) -> OddnessReport:
    """Probe ``F(z) + F(-z) == 0`` at random points, plus ``F(0) == 0``."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    eps = epsilon()
    failures = 0
    worst = deviation(f(ZERO), ZERO)
    if worst > eps:
        failures += 1
    for _ in range(samples):
        z = sample_complex(rng)
        d = deviation(f(z) + f(-z), ZERO)
        if d > worst:
            worst = d
        if d > eps:
            failures += 1
    return OddnessReport(f, samples, failures, worst)


@dataclass(frozen=True, eq=False)
class OmegaMatrix:
    """Noncommutativity table ``Omega[i][j] = -2i * F(zi - zj)`` for base points."""

    points: tuple[ComplexValue, ...]
    entries: tuple[tuple[ComplexValue, ...], ...]

    __hash__ = None

    def __getitem__(self, ij: tuple[int, int]) -> ComplexValue:
        i, j = ij
        return self.entries[i][j]

    def to_dict(self) -> dict[str, object]:
        return {
            "points": [z.to_dict() for z in self.points],
            "entries": [[e.to_dict() for e in row] for row in self.entries],
        }


def omega(f: OddFunctionSpec, points: Sequence[ComplexValue | Real]) -> OmegaMatrix:
    """Build the Omega table and cross-check it against the star commutator.

    Each entry must satisfy ``i * Omega[i][j] == star_commutator`` within
    tolerance; a violation would mean the arithmetic itself is broken, so
    it raises rather than being reported.
    """
    if not points:
        raise ValueError("points must be nonempty")
    zs = [as_complex(z) for z in points]
    rows = []
    for zi in zs:
        rows.append(tuple(_MINUS_TWO_I * f(zi - zj) for zj in zs))
    table = OmegaMatrix(tuple(zs), tuple(rows))
    for i, zi in enumerate(zs):
        for j, zj in enumerate(zs):
            expected = star_commutator(f, zi, zj)
            if deviation(I * table.entries[i][j], expected) > epsilon():
                raise ArithmeticError(
                    f"omega entry ({i}, {j}) disagrees with the star commutator")
    return table


@dataclass(frozen=True)
class NonassociativityWitness:
    """A triple with ``(a*b)*c != a*(b*c)`` plus both evaluated sides."""

    indices: tuple[int, int, int]
    labels: tuple[ThetaLabel, ThetaLabel, ThetaLabel]
    left: ComplexValue
    right: ComplexValue

    def to_dict(self) -> dict[str, object]:
        return {
            "indices": list(self.indices),
            "labels": [t.to_dict() for t in self.labels],
            "left": self.left.to_dict(),
            "right": self.right.to_dict(),
        }


def find_nonassociativity_witness(
        f: OddFunctionSpec,
        pool: Sequence[ThetaLabel | ComplexValue | Real]) -> NonassociativityWitness | None:
    """First ordered triple (repeats allowed) that breaks associativity.

    Scans index triples over the pool in lexicographic order.  Both
    bracketings relabel the inner complex result as a theta before the
    outer star, mirroring how the construction identifies the two sets.
    Returns None when every triple associates within tolerance.
    """
    if len(pool) < 3:
        raise ValueError(f"pool needs at least 3 labels, got {len(pool)}")
    labels = [as_label(t) for t in pool]
    n = len(labels)
    for i in range(n):
        for j in range(n):
            inner_left = star(f, labels[i], labels[j])
            for k in range(n):
                left = star(f, ThetaLabel(inner_left), labels[k])
                right = star(f, labels[i], ThetaLabel(star(f, labels[j], labels[k])))
                if left != right:
                    return NonassociativityWitness(
                        (i, j, k), (labels[i], labels[j], labels[k]), left, right)
    return None
