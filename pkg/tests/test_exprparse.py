"""Expression language: tokens, AST shapes, and the mode-dependent evaluator."""

import pytest

from grassalg.complexes import ComplexValue
from grassalg.exterior import GrassmannElement, theta
from grassalg.matrices import Mat2
from grassalg.moyal import DimensionMismatch, MultiPoly
from grassalg.exprparse import (
    Binary,
    ComplexLit,
    EvalTypeError,
    GeneratorRef,
    MatrixLit,
    Neg,
    ParseError,
    Pow,
    Token,
    UnboundGenerator,
    VarRef,
    eval_expression,
    parse_complex,
    parse_expression,
    parse_polynomial,
    tokenize,
)
from grassalg.star import OddFunctionSpec, ThetaLabel


def zc(a, b=0):
    return ComplexValue(float(a), float(b))


def lit(a, b=0):
    return ComplexLit(zc(a, b))


class TestTokenizer:
    def test_kinds_and_positions(self):
        toks = tokenize("1 + 2i")
        assert toks[:-1] == [
            Token("NUMBER", "1", 1),
            Token("+", "+", 3),
            Token("IMAG", "2i", 5),
        ]
        assert toks[-1].kind == "END" and toks[-1].position == 7

    def test_maximal_munch_on_decimals(self):
        assert [t.kind for t in tokenize("1.5")] == ["NUMBER", "END"]
        assert [t.kind for t in tokenize("1 . 5")] == ["NUMBER", ".", "NUMBER", "END"]

    def test_scientific_notation(self):
        toks = tokenize("1e-3 2.5E+2i")
        assert toks[0] == Token("NUMBER", "1e-3", 1)
        assert toks[1] == Token("IMAG", "2.5E+2i", 6)

    def test_generator_and_variable_tokens(self):
        assert tokenize("theta_12")[0] == Token("THETA", "theta_12", 1)
        assert tokenize("x7")[0] == Token("VAR", "x7", 1)

    def test_bare_i_is_rejected(self):
        with pytest.raises(ParseError) as err:
            tokenize("i")
        assert err.value.position == 1

    def test_unknown_character_position(self):
        with pytest.raises(ParseError) as err:
            tokenize("1 + $")
        assert err.value.position == 5


class TestParser:
    def test_complex_literal_sugar(self):
        assert parse_expression("1-2i") == Binary("+", lit(1), Neg(lit(0, 2)))
        assert parse_expression("1+2i") == Binary("+", lit(1), lit(0, 2))

    def test_precedence_product_over_sum(self):
        got = parse_expression("1 + 2 . 3")
        assert got == Binary("+", lit(1), Binary(".", lit(2), lit(3)))

    def test_left_associativity(self):
        got = parse_expression("1 + 2 + 3")
        assert got == Binary("+", Binary("+", lit(1), lit(2)), lit(3))

    def test_unary_minus_binds_tightest(self):
        got = parse_expression("-2 . 3")
        assert got == Binary(".", Neg(lit(2)), lit(3))

    def test_parentheses(self):
        got = parse_expression("-(1 + 2)")
        assert got == Neg(Binary("+", lit(1), lit(2)))

    def test_generator_nodes(self):
        got = parse_expression("theta_1 . theta_2 + theta_3")
        assert got == Binary("+", Binary(".", GeneratorRef(1), GeneratorRef(2)),
                             GeneratorRef(3))

    def test_star_operator_parses(self):
        assert parse_expression("theta_1 * theta_2") == \
            Binary("*", GeneratorRef(1), GeneratorRef(2))

    def test_theta_zero_rejected(self):
        with pytest.raises(ParseError):
            parse_expression("theta_0")

    def test_matrix_literal(self):
        got = parse_expression("[[1,-2],[2,1]]")
        assert got == MatrixLit(Mat2(1.0, -2.0, 2.0, 1.0))

    def test_malformed_matrix(self):
        for bad in ("[[1,2],[3]]", "[[1,2][3,4]]", "[[1,2i],[3,4]]", "[[1,2],[3,4]"):
            with pytest.raises(ParseError):
                parse_expression(bad)

    def test_empty_and_trailing_input(self):
        with pytest.raises(ParseError):
            parse_expression("")
        with pytest.raises(ParseError) as err:
            parse_expression("1 2")
        assert "after the expression" in str(err.value)

    def test_unbalanced_parenthesis(self):
        with pytest.raises(ParseError) as err:
            parse_expression("(1 + 2")
        assert "')'" in str(err.value)

    def test_variables_rejected_outside_polynomials(self):
        with pytest.raises(ParseError):
            parse_expression("x1")

    def test_caret_rejected_outside_polynomials(self):
        with pytest.raises(ParseError):
            parse_expression("2^3")

    def test_error_carries_expected_tokens(self):
        with pytest.raises(ParseError) as err:
            parse_expression("1 +")
        assert err.value.expected
        assert err.value.position == 4


class TestPolynomialParsing:
    def test_basic(self):
        p = parse_polynomial("x1^2 . x2 + 3")
        assert p.terms == {(2, 1): zc(1), (0, 0): zc(3)}

    def test_star_and_dot_agree(self):
        assert parse_polynomial("x1 * x2").terms == parse_polynomial("x1 . x2").terms

    def test_nvars_inferred_from_highest_index(self):
        assert parse_polynomial("x2").nvars == 2
        assert parse_polynomial("5").nvars == 1

    def test_explicit_nvars_widens(self):
        assert parse_polynomial("x1", nvars=3).terms == {(1, 0, 0): zc(1)}

    def test_nvars_overflow_rejected(self):
        with pytest.raises(DimensionMismatch):
            parse_polynomial("x3", nvars=2)

    def test_binomial_square(self):
        p = parse_polynomial("(x1 + 1)^2")
        assert p.terms == {(2,): zc(1), (1,): zc(2), (0,): zc(1)}

    def test_zero_power(self):
        assert parse_polynomial("x1^0") == MultiPoly.constant(1, zc(1))

    def test_complex_coefficients(self):
        p = parse_polynomial("2i . x1 - x1")
        assert p.terms == {(1,): zc(-1, 2)}

    def test_generators_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("theta_1")

    def test_matrices_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("[[1,2],[3,4]]")

    def test_bad_exponents(self):
        for bad in ("x1^-2", "x1^2.5", "x1^"):
            with pytest.raises(ParseError):
                parse_polynomial(bad)


CUBE = OddFunctionSpec.cube()


class TestExteriorEvaluation:
    def test_scalar_product(self):
        got = eval_expression(parse_expression("(1+0i) . (2+0i)"))
        assert got == zc(2)

    def test_generator_self_product_vanishes(self):
        got = eval_expression(parse_expression("theta_1 . theta_1"))
        assert isinstance(got, GrassmannElement) and got.is_zero()

    def test_anticommutation_through_parser(self):
        got = eval_expression(parse_expression("theta_1 . theta_2 + theta_2 . theta_1"))
        assert got.is_zero()

    def test_scalar_promotes_into_sums(self):
        got = eval_expression(parse_expression("1 + theta_1"))
        assert got == GrassmannElement.scalar(1) + theta(1)
        got = eval_expression(parse_expression("theta_1 + 1"))
        assert got == theta(1) + 1

    def test_scalar_scales_generators(self):
        got = eval_expression(parse_expression("2 . theta_1"))
        assert got == theta(1) * 2
        assert eval_expression(parse_expression("theta_1 . 2i")) == theta(1) * zc(0, 2)

    def test_negation(self):
        got = eval_expression(parse_expression("-theta_1"))
        assert got == -theta(1)

    def test_matrix_arithmetic(self):
        got = eval_expression(parse_expression("[[1,-2],[2,1]] . [[1,2],[3,4]]"))
        assert got == Mat2(-5.0, -6.0, 5.0, 8.0)
        got = eval_expression(parse_expression("[[1,0],[0,1]] + [[0,1],[-1,0]]"))
        assert got == Mat2(1.0, 1.0, -1.0, 1.0)

    def test_star_operator_rejected(self):
        with pytest.raises(EvalTypeError):
            eval_expression(parse_expression("theta_1 * theta_2"))

    def test_matrix_mixing_rejected(self):
        with pytest.raises(EvalTypeError):
            eval_expression(parse_expression("1 + [[1,0],[0,1]]"))
        with pytest.raises(EvalTypeError):
            eval_expression(parse_expression("[[1,0],[0,1]] . theta_1"))


class TestStarEvaluation:
    def eval(self, text, labels, fspec=CUBE):
        return eval_expression(parse_expression(text), mode="star",
                               labels=labels, fspec=fspec)

    def test_label_product(self):
        got = self.eval("theta_1 * theta_2", {1: zc(2), 2: zc(1)})
        assert got == zc(1)  # (2-1)^3

    def test_self_product_is_zero(self):
        got = self.eval("theta_1 * theta_1", {1: zc(2, -1)})
        assert got == zc(0)

    def test_commutator_expression(self):
        got = self.eval("theta_1 * theta_2 + theta_2 * theta_1",
                        {1: zc(1, 1), 2: zc(1, -1)})
        assert got == zc(0)

    def test_labels_accept_raw_numbers(self):
        assert self.eval("theta_1 * theta_2", {1: 2.0, 2: 1}) == zc(1)

    def test_scalar_label_mixing(self):
        got = self.eval("2 . theta_1", {1: zc(1, 1)})
        assert isinstance(got, ThetaLabel) and got.value == zc(2, 2)
        got = self.eval("theta_1 . 2i", {1: zc(1)})
        assert got.value == zc(0, 2)

    def test_label_negation(self):
        got = self.eval("-theta_1", {1: zc(3, -1)})
        assert isinstance(got, ThetaLabel) and got.value == zc(-3, 1)

    def test_unbound_generator(self):
        with pytest.raises(UnboundGenerator):
            self.eval("theta_1 * theta_3", {1: zc(0), 2: zc(1)})

    def test_dot_on_two_labels_rejected(self):
        with pytest.raises(EvalTypeError) as err:
            self.eval("theta_1 . theta_2", {1: zc(0), 2: zc(1)})
        assert "'*'" in str(err.value)

    def test_label_sums_rejected(self):
        with pytest.raises(EvalTypeError):
            self.eval("theta_1 + theta_2", {1: zc(0), 2: zc(1)})

    def test_star_needs_two_labels(self):
        with pytest.raises(EvalTypeError):
            self.eval("theta_1 * 2", {1: zc(0)})
        with pytest.raises(EvalTypeError):
            self.eval("2 * 3", {})

    def test_matrices_still_multiply(self):
        got = self.eval("[[0,1],[-1,0]] . [[0,1],[-1,0]]", {})
        assert got == Mat2(-1.0, 0.0, 0.0, -1.0)

    def test_default_fspec_is_identity(self):
        got = eval_expression(parse_expression("theta_1 * theta_2"),
                              mode="star", labels={1: zc(3), 2: zc(1)})
        assert got == zc(2)


class TestEvalGuards:
    def test_bad_mode(self):
        with pytest.raises(ValueError):
            eval_expression(parse_expression("1"), mode="matrix")

    def test_foreign_node_rejected(self):
        with pytest.raises(EvalTypeError):
            eval_expression(Pow(ComplexLit(zc(2)), 2))

    def test_var_refs_not_evaluable(self):
        with pytest.raises(EvalTypeError):
            eval_expression(VarRef(1))


class TestParseComplex:
    def test_literal_forms(self):
        assert parse_complex("1-2i") == zc(1, -2)
        assert parse_complex("-3") == zc(-3)
        assert parse_complex("2i") == zc(0, 2)
        assert parse_complex("1.5e2") == zc(150)

    def test_arithmetic_folds(self):
        assert parse_complex("(1+2i) . (3+4i)") == zc(-5, 10)

    def test_rejects_non_scalars(self):
        with pytest.raises(ParseError):
            parse_complex("[[1,0],[0,1]]")
        with pytest.raises(UnboundGenerator):
            parse_complex("theta_1")
