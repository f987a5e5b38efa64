"""Star product on multivariate polynomials with an antisymmetric kernel.

For polynomials f, g in variables x1..xn and a kernel matrix K with
``K[i][i] == 0`` and ``K[i][j] == -K[j][i]``, the star product is

    f * g = sum_m (1/m!) * K[i1][j1]...K[im][jm]
                  * (d_i1..d_im f) * (d_j1..d_jm g)

summed over all index tuples, with m ranging until the derivatives
exhaust one factor (the sum is finite: it stops at min(deg f, deg g)).
The m = 0 term is the ordinary product, so a zero kernel gives back
plain polynomial multiplication.

Rather than looping over index tuples, :func:`moyal_star` keeps a ledger
of (left-monomial, right-monomial) pairs and repeatedly applies the
bidifferential operator ``B = sum_ij K[i][j] d_i (x) d_j`` to it; the
stage-m ledger then holds exactly the ``B^m (f (x) g)`` data and
contributes with weight 1/m!.

Kernels are built from the label construction by :func:`build_kernel`:
``K[i][j] = F(zi - zj)`` inherits antisymmetry from the oddness of F.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from .complexes import ComplexValue, Real, ZERO, as_complex, deviation, epsilon
from .star import OddFunctionSpec

Exponents = tuple[int, ...]


class DimensionMismatch(ValueError):
    """Operands disagree on the number of variables."""


def _check_exponents(exps: Exponents, nvars: int) -> Exponents:
    exps = tuple(exps)
    if len(exps) != nvars:
        raise DimensionMismatch(
            f"exponent vector {exps} has length {len(exps)}, expected {nvars}")
    for e in exps:
        if isinstance(e, bool) or not isinstance(e, int) or e < 0:
            raise ValueError(f"exponents must be non-negative ints, got {e!r} in {exps}")
    return exps


class MultiPoly:
    """Sparse polynomial in x1..xn with complex coefficients.

    Terms live in a dict keyed by exponent vectors; zero coefficients
    are pruned on construction so equality and degree never see them.
    """

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int,
                 terms: Mapping[Exponents, ComplexValue | Real]
                 | Iterable[tuple[Exponents, ComplexValue | Real]]
                 | None = None) -> None:
        if isinstance(nvars, bool) or not isinstance(nvars, int) or nvars < 1:
            raise ValueError(f"nvars must be a positive int, got {nvars!r}")
        if terms is None:
            items: Iterable[tuple[Exponents, ComplexValue | Real]] = ()
        elif isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        folded: dict[Exponents, ComplexValue] = {}
        for exps, coeff in items:
            exps = _check_exponents(exps, nvars)
            coeff = as_complex(coeff)
            if exps in folded:
                coeff = folded[exps] + coeff
            folded[exps] = coeff
        self._nvars = nvars
        self._terms = {e: c for e, c in folded.items() if not c.is_zero()}

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> MultiPoly:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: ComplexValue | Real) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: as_complex(value)})

    @classmethod
    def variable(cls, index: int, nvars: int) -> MultiPoly:
        """The monomial x_index (1-based)."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        exps = tuple(1 if k == index - 1 else 0 for k in range(nvars))
        return cls(nvars, {exps: 1.0})

    # -- structure ------------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> dict[Exponents, ComplexValue]:
        return dict(self._terms)

    def coefficient(self, exps: Sequence[int]) -> ComplexValue:
        return self._terms.get(tuple(exps), ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._terms.values())

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -----------------------------------------------------------

    def _require_same_shape(self, other: MultiPoly) -> None:
        if self._nvars != other._nvars:
            raise DimensionMismatch(
                f"cannot combine polynomials in {self._nvars} and {other._nvars} variables")

    def __add__(self, other: MultiPoly | ComplexValue | Real) -> MultiPoly:
        other = self._coerce(other)
        merged = dict(self._terms)
        for exps, coeff in other._terms.items():
            merged[exps] = merged.get(exps, ZERO) + coeff
        return MultiPoly(self._nvars, merged)

    def __radd__(self, other: ComplexValue | Real) -> MultiPoly:
        return self.__add__(other)

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: MultiPoly | ComplexValue | Real) -> MultiPoly:
        return self.__add__(-self._coerce(other))

    def __rsub__(self, other: ComplexValue | Real) -> MultiPoly:
        return (-self).__add__(self._coerce(other))

    def __mul__(self, other: MultiPoly | ComplexValue | Real) -> MultiPoly:
        other = self._coerce(other)
        product: dict[Exponents, ComplexValue] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                contribution = c1 * c2
                if key in product:
                    contribution = product[key] + contribution
                product[key] = contribution
        return MultiPoly(self._nvars, product)

    def __rmul__(self, other: ComplexValue | Real) -> MultiPoly:
        return self.__mul__(other)

    def scale(self, factor: Real) -> MultiPoly:
        return MultiPoly(self._nvars, {e: c.scale(factor) for e, c in self._terms.items()})

    def _coerce(self, other: MultiPoly | ComplexValue | Real) -> MultiPoly:
        if isinstance(other, MultiPoly):
            self._require_same_shape(other)
            return other
        if isinstance(other, (ComplexValue, int, float)):
            return MultiPoly.constant(self._nvars, other)
        return NotImplemented  # type: ignore[return-value]

    def partial(self, var: int) -> MultiPoly:
        """Derivative with respect to x_var (1-based)."""
        if not 1 <= var <= self._nvars:
            raise ValueError(f"variable index {var} out of range 1..{self._nvars}")
        k = var - 1
        out: dict[Exponents, ComplexValue] = {}
        for exps, coeff in self._terms.items():
            if exps[k] == 0:
                continue
            lowered = exps[:k] + (exps[k] - 1,) + exps[k + 1:]
            out[lowered] = coeff.scale(exps[k])
        return MultiPoly(self._nvars, out)

    def evaluate(self, point: Sequence[ComplexValue | Real]) -> ComplexValue:
        if len(point) != self._nvars:
            raise DimensionMismatch(
                f"point has {len(point)} coordinates, expected {self._nvars}")
        values = [as_complex(v) for v in point]
        total = ZERO
        for exps, coeff in self._terms.items():
            term = coeff
            for v, e in zip(values, exps):
                for _ in range(e):
                    term = term * v
            total = total + term
        return total

    # -- comparison and display -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (ComplexValue, int, float)):
            other = MultiPoly.constant(self._nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self._nvars != other._nvars:
            return False
        for exps in self._terms.keys() | other._terms.keys():
            if deviation(self._terms.get(exps, ZERO), other._terms.get(exps, ZERO)) > epsilon():
                return False
        return True

    __hash__ = None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms):
            coeff = self._terms[exps]
            factors = [f"x{k + 1}^{e}" if e > 1 else f"x{k + 1}"
                       for k, e in enumerate(exps) if e > 0]
            if factors:
                parts.append(f"({coeff})" + "*" + "*".join(factors))
            else:
                parts.append(f"({coeff})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self._nvars}, {self._terms!r})"

    # -- serialization ----------------------------------------------------------

    def to_dict(self) -> dict[str, object]:
        return {
            "nvars": self._nvars,
            "terms": [{"exps": list(exps), "re": coeff.re, "im": coeff.im}
                      for exps, coeff in sorted(self._terms.items())],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> MultiPoly:
        if not isinstance(data, Mapping) or set(data) != {"nvars", "terms"}:
            raise ValueError(f"expected an object with 'nvars' and 'terms', got {data!r}")
        terms: dict[Exponents, ComplexValue] = {}
        for entry in data["terms"]:
            if not isinstance(entry, Mapping) or set(entry) != {"exps", "re", "im"}:
                raise ValueError(f"each term needs exactly 'exps', 're', 'im', got {entry!r}")
            terms[tuple(entry["exps"])] = ComplexValue.from_dict(
                {"re": entry["re"], "im": entry["im"]})
        return cls(data["nvars"], terms)


class StarKernel:
    """Antisymmetric coefficient matrix steering the star product.

    The diagonal must vanish and ``entries[i][j] == -entries[j][i]``
    must hold exactly — these are structural requirements, not tolerance
    checks, since the kernel is data rather than a computed result.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Sequence[Sequence[ComplexValue | Real]]) -> None:
        rows = tuple(tuple(as_complex(e) for e in row) for row in entries)
        n = len(rows)
        if n == 0:
            raise ValueError("kernel needs at least one variable")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"kernel row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            if rows[i][i].re != 0.0 or rows[i][i].im != 0.0:
                raise ValueError(f"kernel diagonal entry ({i}, {i}) must be zero")
            for j in range(i + 1, n):
                s = rows[i][j] + rows[j][i]
                if s.re != 0.0 or s.im != 0.0:
                    raise ValueError(
                        f"kernel must be antisymmetric: entries ({i},{j}) and ({j},{i}) "
                        f"sum to {s}")
        self._entries = rows

    @classmethod
    def zero(cls, nvars: int) -> StarKernel:
        row = [0.0] * nvars
        return cls([list(row) for _ in range(nvars)])

    @classmethod
    def from_upper(cls, nvars: int,
                   upper: Mapping[tuple[int, int], ComplexValue | Real]) -> StarKernel:
        """Build from the strictly-upper-triangle entries (1-based pairs)."""
        table = [[ZERO for _ in range(nvars)] for _ in range(nvars)]
        for (i, j), value in upper.items():
            if not (1 <= i < j <= nvars):
                raise ValueError(f"upper-triangle index ({i}, {j}) must satisfy 1 <= i < j <= {nvars}")
            value = as_complex(value)
            table[i - 1][j - 1] = value
            table[j - 1][i - 1] = -value
        return cls(table)

    @property
    def nvars(self) -> int:
        return len(self._entries)

    def __getitem__(self, ij: tuple[int, int]) -> ComplexValue:
        """Entry K[i][j], 1-based to match the variable names."""
        i, j = ij
        return self._entries[i - 1][j - 1]

    def entries(self) -> tuple[tuple[ComplexValue, ...], ...]:
        return self._entries

    def is_zero(self) -> bool:
        return all(e.re == 0.0 and e.im == 0.0 for row in self._entries for e in row)

    def nonzero_pairs(self) -> list[tuple[int, int]]:
        """0-based (i, j) with K[i][j] != 0, for the star-product loops."""
        return [(i, j)
                for i, row in enumerate(self._entries)
                for j, e in enumerate(row)
                if e.re != 0.0 or e.im != 0.0]

    def to_dict(self) -> dict[str, object]:
        return {"nvars": self.nvars,
                "entries": [[e.to_dict() for e in row] for row in self._entries]}

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> StarKernel:
        if not isinstance(data, Mapping) or set(data) != {"nvars", "entries"}:
            raise ValueError(f"expected an object with 'nvars' and 'entries', got {data!r}")
        kernel = cls([[ComplexValue.from_dict(e) for e in row] for row in data["entries"]])
        if kernel.nvars != data["nvars"]:
            raise ValueError(
                f"kernel declares {data['nvars']} variables but has {kernel.nvars} rows")
        return kernel

    def __str__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in row) for row in self._entries)
        return f"kernel[{body}]"


def build_kernel(f: OddFunctionSpec, points: Sequence[ComplexValue | Real]) -> StarKernel:
    """Kernel with ``K[i][j] = F(zi - zj)``; antisymmetric since F is odd."""
    zs = [as_complex(z) for z in points]
    if not zs:
        raise ValueError("points must be nonempty")
    table = []
    for zi in zs:
        table.append([f(zi - zj) for zj in zs])
    # floating error could in principle break exact antisymmetry, but the
    # sign symmetry of IEEE negation keeps F(z) == -F(-z) bitwise for the
    # representable specs, so the constructor's structural check holds.
    return StarKernel(table)


def moyal_star(f: MultiPoly, g: MultiPoly, kernel: StarKernel) -> MultiPoly:
    """Star product of two polynomials under the given kernel.

    Stage m keeps a ledger mapping (left-exponents, right-exponents) to
    the coefficient of ``(d..f)(x)(d..g)`` accumulated over all m-step
    derivative paths; each stage applies every kernel pair once and the
    ledger empties when either side runs out of derivatives.
    """
    if f.nvars != g.nvars:
        raise DimensionMismatch(
            f"cannot star polynomials in {f.nvars} and {g.nvars} variables")
    if kernel.nvars != f.nvars:
        raise DimensionMismatch(
            f"kernel is {kernel.nvars}x{kernel.nvars} but polynomials use {f.nvars} variables")

    nvars = f.nvars
    pairs = kernel.nonzero_pairs()
    result: dict[Exponents, ComplexValue] = {}

    ledger: dict[tuple[Exponents, Exponents], ComplexValue] = {}
    for ef, cf in f.terms.items():
        for eg, cg in g.terms.items():
            key = (ef, eg)
            contribution = cf * cg
            if key in ledger:
                contribution = ledger[key] + contribution
            ledger[key] = contribution

    m = 0
    while ledger:
        weight = math.factorial(m)
        for (ef, eg), coeff in ledger.items():
            merged = tuple(a + b for a, b in zip(ef, eg))
            # divide rather than multiply by 1/m! so integer-divisible
            # coefficients stay exact
            contribution = ComplexValue(coeff.re / weight, coeff.im / weight) if m > 1 else coeff
            if merged in result:
                contribution = result[merged] + contribution
            result[merged] = contribution
        next_ledger: dict[tuple[Exponents, Exponents], ComplexValue] = {}
        for (ef, eg), coeff in ledger.items():
            for i, j in pairs:
                if ef[i] == 0 or eg[j] == 0:
                    continue
                lowered_f = ef[:i] + (ef[i] - 1,) + ef[i + 1:]
                lowered_g = eg[:j] + (eg[j] - 1,) + eg[j + 1:]
                step = (coeff * kernel.entries()[i][j]).scale(ef[i] * eg[j])
                key = (lowered_f, lowered_g)
                if key in next_ledger:
                    step = next_ledger[key] + step
                next_ledger[key] = step
        ledger = {k: c for k, c in next_ledger.items()
                  if c.re != 0.0 or c.im != 0.0}
        m += 1

    return MultiPoly(nvars, result)


def moyal_commutator(f: MultiPoly, g: MultiPoly, kernel: StarKernel) -> MultiPoly:
    """``f*g - g*f`` under the star product."""
    return moyal_star(f, g, kernel) - moyal_star(g, f, kernel)
