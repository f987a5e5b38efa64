"""Parser and evaluator for the small expression language used by the CLI.

Two product symbols carry the whole point of the language: ``.`` is the
ordinary/exterior/mixed product and ``*`` is the star operation on
labels, so "theta_1 . theta_2" and "theta_1 * theta_2" are different
requests.  Precedence: unary minus binds tightest, then ``*`` and ``.``
(left-associative), then ``+`` (left-associative).  A binary ``-`` is
accepted as sugar for adding the negation, which is what makes literal
forms like "1-2i" work without a dedicated subtraction node.

Complex literals come in the forms "a", "bi", "a+bi", "a-bi"; generators
are "theta_k" with k >= 1; matrix literals are "[[a,b],[c,d]]" with real
entries.  Polynomial input (used by the star-product subcommand) swaps
generators for variables "x1", "x2", ... with optional "^n" powers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .complexes import ComplexValue, as_complex
from .exterior import GrassmannElement, theta
from .matrices import Mat2
from .moyal import DimensionMismatch, MultiPoly
from .star import OddFunctionSpec, ThetaLabel, as_label, mixed_product, star


class ParseError(ValueError):
    """Syntax error with a 1-based column and the token kinds expected there."""

    def __init__(self, position: int, message: str, expected: tuple[str, ...] = ()) -> None:
        self.position = position
        self.expected = expected
        suffix = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"column {position}: {message}{suffix}")


class EvalTypeError(TypeError):
    """An operation applied to operand types the mixing rules do not allow."""


class UnboundGenerator(ValueError):
    """A star-mode expression used theta_k without a label binding for k."""


# -- tokens ------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<WS>\s+)
  | (?P<IMAG>\d+(?:\.\d+)?(?:[eE][+-]?\d+)?i)
  | (?P<NUMBER>\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)
  | (?P<THETA>theta_\d+)
  | (?P<VAR>x\d+)
  | (?P<OP>[+\-*.^(),\[\]])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int  # 1-based column


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(pos + 1, f"unrecognized character {text[pos]!r}")
        kind = match.lastgroup
        if kind != "WS":
            word = match.group()
            if kind == "OP":
                kind = word
            tokens.append(Token(kind, word, pos + 1))
        pos = match.end()
    tokens.append(Token("END", "", len(text) + 1))
    return tokens


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class ComplexLit:
    value: ComplexValue


@dataclass(frozen=True)
class GeneratorRef:
    index: int


@dataclass(frozen=True)
class MatrixLit:
    value: Mat2


@dataclass(frozen=True)
class VarRef:
    index: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Binary:
    op: str  # '+', '*', or '.'
    left: "Node"
    right: "Node"


Node = Union[ComplexLit, GeneratorRef, MatrixLit, VarRef, Neg, Pow, Binary]


class _Parser:
    """Recursive descent over the token list.

    ``polynomial`` switches the vocabulary: variables and powers in,
    generators and matrices out.
    """

    def __init__(self, tokens: list[Token], polynomial: bool) -> None:
        self.tokens = tokens
        self.at = 0
        self.polynomial = polynomial

    def peek(self) -> Token:
        return self.tokens[self.at]

    def advance(self) -> Token:
        tok = self.tokens[self.at]
        self.at += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(tok.position, f"unexpected {_describe(tok)}", (repr(kind),))
        return self.advance()

    def parse(self) -> Node:
        node = self.sum()
        tok = self.peek()
        if tok.kind != "END":
            raise ParseError(tok.position, f"unexpected {_describe(tok)} after the expression",
                             ("'+'", "'-'", "'*'", "'.'", "end of input"))
        return node

    def sum(self) -> Node:
        node = self.product()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            right = self.product()
            node = Binary("+", node, Neg(right) if op.kind == "-" else right)
        return node

    def product(self) -> Node:
        node = self.unary()
        while self.peek().kind in ("*", "."):
            op = self.advance().kind
            node = Binary(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        node = self.primary()
        if self.polynomial and self.peek().kind == "^":
            caret = self.advance()
            tok = self.peek()
            if tok.kind != "NUMBER" or not tok.text.isdigit():
                raise ParseError(tok.position if tok.kind != "END" else caret.position + 1,
                                 "exponent must be a plain non-negative integer",
                                 ("integer",))
            self.advance()
            node = Pow(node, int(tok.text))
        return node

    def primary(self) -> Node:
        tok = self.peek()
        if tok.kind == "NUMBER":
            self.advance()
            return ComplexLit(ComplexValue(float(tok.text), 0.0))
        if tok.kind == "IMAG":
            self.advance()
            return ComplexLit(ComplexValue(0.0, float(tok.text[:-1])))
        if tok.kind == "THETA":
            if self.polynomial:
                raise ParseError(tok.position, "generators are not allowed in polynomial input",
                                 self._primary_expected())
            self.advance()
            index = int(tok.text[len("theta_"):])
            if index < 1:
                raise ParseError(tok.position, f"generator index must be >= 1, got {tok.text!r}")
            return GeneratorRef(index)
        if tok.kind == "VAR":
            if not self.polynomial:
                raise ParseError(tok.position, "variables are only allowed in polynomial input",
                                 self._primary_expected())
            self.advance()
            index = int(tok.text[1:])
            if index < 1:
                raise ParseError(tok.position, f"variable index must be >= 1, got {tok.text!r}")
            return VarRef(index)
        if tok.kind == "(":
            self.advance()
            node = self.sum()
            self.expect(")")
            return node
        if tok.kind == "[":
            if self.polynomial:
                raise ParseError(tok.position, "matrix literals are not allowed in polynomial input",
                                 self._primary_expected())
            return self.matrix()
        raise ParseError(tok.position, f"unexpected {_describe(tok)}", self._primary_expected())

    def _primary_expected(self) -> tuple[str, ...]:
        if self.polynomial:
            return ("number", "'bi'", "'xk'", "'('", "'-'")
        return ("number", "'bi'", "'theta_k'", "'[['", "'('", "'-'")

    def matrix(self) -> Node:
        self.expect("[")
        top = self.matrix_row()
        self.expect(",")
        bottom = self.matrix_row()
        self.expect("]")
        return MatrixLit(Mat2(top[0], top[1], bottom[0], bottom[1]))

    def matrix_row(self) -> tuple[float, float]:
        self.expect("[")
        first = self.matrix_entry()
        self.expect(",")
        second = self.matrix_entry()
        self.expect("]")
        return first, second

    def matrix_entry(self) -> float:
        sign = 1.0
        while self.peek().kind == "-":
            self.advance()
            sign = -sign
        tok = self.peek()
        if tok.kind != "NUMBER":
            raise ParseError(tok.position, f"matrix entries must be real numbers, got {_describe(tok)}",
                             ("number",))
        self.advance()
        return sign * float(tok.text)


def _describe(tok: Token) -> str:
    if tok.kind == "END":
        return "end of input"
    return f"token {tok.text!r}"


def parse_expression(text: str) -> Node:
    """Parse scalar/generator/matrix syntax into an AST."""
    return _Parser(tokenize(text), polynomial=False).parse()


def _fold_polynomial(node: Node, nvars: int) -> MultiPoly:
    if isinstance(node, ComplexLit):
        return MultiPoly.constant(nvars, node.value)
    if isinstance(node, VarRef):
        return MultiPoly.variable(node.index, nvars)
    if isinstance(node, Neg):
        return -_fold_polynomial(node.operand, nvars)
    if isinstance(node, Pow):
        base = _fold_polynomial(node.base, nvars)
        out = MultiPoly.constant(nvars, 1.0)
        for _ in range(node.exponent):
            out = out * base
        return out
    if isinstance(node, Binary):
        left = _fold_polynomial(node.left, nvars)
        right = _fold_polynomial(node.right, nvars)
        return left + right if node.op == "+" else left * right
    raise AssertionError(f"unreachable node in polynomial input: {node!r}")


def _max_var_index(node: Node) -> int:
    if isinstance(node, VarRef):
        return node.index
    if isinstance(node, Neg):
        return _max_var_index(node.operand)
    if isinstance(node, Pow):
        return _max_var_index(node.base)
    if isinstance(node, Binary):
        return max(_max_var_index(node.left), _max_var_index(node.right))
    return 0


def parse_polynomial(text: str, nvars: int | None = None) -> MultiPoly:
    """Parse "x1^2 . x2 + 3" style input into a sparse polynomial.

    Both product symbols mean the ordinary product here.  The variable
    count defaults to the highest index mentioned (at least 1); pass
    ``nvars`` to embed the result in a wider variable space.
    """
    ast = _Parser(tokenize(text), polynomial=True).parse()
    seen = _max_var_index(ast)
    if nvars is None:
        nvars = max(seen, 1)
    elif seen > nvars:
        raise DimensionMismatch(
            f"polynomial mentions x{seen} but only {nvars} variables are available")
    return _fold_polynomial(ast, nvars)


# -- evaluation --------------------------------------------------------------

Value = Union[ComplexValue, GrassmannElement, ThetaLabel, Mat2]

_TYPE_NAMES = {
    ComplexValue: "complex",
    GrassmannElement: "grassmann",
    ThetaLabel: "theta-label",
    Mat2: "matrix",
}


def _typename(value: Value) -> str:
    return _TYPE_NAMES[type(value)]


def eval_expression(node: Node, mode: str = "exterior",
                    labels: Mapping[int, ThetaLabel | ComplexValue | float] | None = None,
                    fspec: OddFunctionSpec | None = None) -> Value:
    """Evaluate an AST under the mixing rules of the chosen mode.

    Exterior mode reads theta_k as the k-th algebra generator and ``.``
    as the exterior/scalar product; ``*`` has no meaning there.  Star
    mode reads theta_k as the label bound for k (raising
    UnboundGenerator otherwise), ``*`` as the label product through
    ``fspec``, and ``.`` as scalar-on-label mixing.  The value types are
    closed under the rules: products of two grassmann values stay
    grassmann in exterior mode, while star products of two labels land
    in the complex scalars.
    """
    if mode not in ("exterior", "star"):
        raise ValueError(f"mode must be 'exterior' or 'star', got {mode!r}")
    labels = labels or {}
    return _eval(node, mode, labels, fspec or OddFunctionSpec.identity())


def _eval(node: Node, mode: str, labels: Mapping[int, object],
          fspec: OddFunctionSpec) -> Value:
    if isinstance(node, ComplexLit):
        return node.value
    if isinstance(node, MatrixLit):
        return node.value
    if isinstance(node, GeneratorRef):
        if mode == "exterior":
            return theta(node.index)
        if node.index not in labels:
            raise UnboundGenerator(
                f"theta_{node.index} has no label bound; star mode needs one per generator")
        return as_label(labels[node.index])
    if isinstance(node, Neg):
        inner = _eval(node.operand, mode, labels, fspec)
        if isinstance(inner, ThetaLabel):
            return ThetaLabel(-inner.value)
        return -inner
    if isinstance(node, Binary):
        left = _eval(node.left, mode, labels, fspec)
        right = _eval(node.right, mode, labels, fspec)
        if node.op == "+":
            return _eval_sum(left, right, mode)
        if node.op == ".":
            return _eval_dot(left, right, mode)
        return _eval_star(left, right, mode, fspec)
    raise EvalTypeError(f"node {node!r} is not part of the expression language")


def _eval_sum(left: Value, right: Value, mode: str) -> Value:
    if isinstance(left, ComplexValue) and isinstance(right, ComplexValue):
        return left + right
    if isinstance(left, Mat2) and isinstance(right, Mat2):
        return left + right
    if mode == "exterior":
        # scalars embed as grade-0 elements, so mixed sums promote
        if isinstance(left, (ComplexValue, GrassmannElement)) and \
                isinstance(right, (ComplexValue, GrassmannElement)):
            return left + right
    raise EvalTypeError(
        f"'+' cannot combine {_typename(left)} and {_typename(right)}"
        + (" in star mode; labels only combine under '*'" if mode == "star" else ""))


def _eval_dot(left: Value, right: Value, mode: str) -> Value:
    if isinstance(left, ComplexValue) and isinstance(right, ComplexValue):
        return left * right
    if isinstance(left, Mat2) and isinstance(right, Mat2):
        return left * right
    if mode == "exterior":
        if isinstance(left, (ComplexValue, GrassmannElement)) and \
                isinstance(right, (ComplexValue, GrassmannElement)):
            return left * right
    else:
        if isinstance(left, ComplexValue) and isinstance(right, ThetaLabel):
            return mixed_product(left, right)
        if isinstance(left, ThetaLabel) and isinstance(right, ComplexValue):
            return mixed_product(right, left)
        if isinstance(left, ThetaLabel) and isinstance(right, ThetaLabel):
            raise EvalTypeError(
                "'.' cannot multiply two labels in star mode; the label product is '*'")
    raise EvalTypeError(f"'.' cannot multiply {_typename(left)} and {_typename(right)}")


def _eval_star(left: Value, right: Value, mode: str, fspec: OddFunctionSpec) -> Value:
    if mode == "exterior":
        raise EvalTypeError(
            "'*' is the star-mode label product; use '.' for the exterior product")
    if isinstance(left, ThetaLabel) and isinstance(right, ThetaLabel):
        return star(fspec, left, right)
    raise EvalTypeError(
        f"'*' needs two labels, got {_typename(left)} and {_typename(right)}")


def parse_complex(text: str) -> ComplexValue:
    """Parse a pure complex literal expression such as "1-2i" or "-3"."""
    value = eval_expression(parse_expression(text), mode="star", labels={})
    if not isinstance(value, ComplexValue):
        raise ParseError(1, f"expected a complex scalar, got a {_typename(value)}")
    return as_complex(value)
