"""Exact scalar and Laurent-polynomial arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totpos.exact import (LaurentDivisionError, LaurentPoly, as_scalar,
                          format_scalar, laurent_divide_exact,
                          laurent_has_nonnegative_coeffs, sign)

VARS = ("p", "q")


def poly(terms):
    return LaurentPoly(VARS, terms)


def var(name):
    return LaurentPoly.variable(VARS, name)


class TestScalars:
    def test_sum(self):
        assert as_scalar("1/2") + as_scalar("1/3") == Fraction(5, 6)

    def test_sign_of_zero(self):
        assert sign(Fraction(0, 1)) == 0
        assert sign(Fraction(-2, 7)) == -1
        assert sign(Fraction(2, 7)) == 1

    def test_canonicalization(self):
        assert as_scalar("2/4") == Fraction(1, 2)
        assert format_scalar(Fraction(2, 4)) == "1/2"
        assert format_scalar(Fraction(5, 1)) == "5"

    def test_parse_round_trip(self):
        for text in ("0", "-3/4", "17", "22/7"):
            assert format_scalar(as_scalar(text)) == text

    @given(st.fractions(), st.fractions(), st.fractions())
    def test_field_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        if a != 0:
            assert a * (1 / a) == 1


class TestLaurentArithmetic:
    def test_zero_has_no_terms(self):
        assert (var("p") - var("p")).is_zero()

    def test_eval_with_negative_exponents(self):
        f = poly({(-1, 2): Fraction(3)})
        assert f.evaluate({"p": Fraction(2), "q": Fraction(1, 3)}) \
            == Fraction(3, 2) * Fraction(1, 9)

    def test_json_round_trip(self):
        f = poly({(-1, 2): Fraction(3, 7), (0, 0): Fraction(-2)})
        assert LaurentPoly.from_json(f.to_json()) == f

    def test_str(self):
        f = var("p") ** 2 - var("p") * var("q") + var("q") ** 2
        assert str(f) == "p^2 - p*q + q^2"


small_coeffs = st.integers(min_value=-4, max_value=4)
small_exps = st.tuples(st.integers(min_value=-2, max_value=2),
                       st.integers(min_value=-2, max_value=2))
small_polys = st.dictionaries(small_exps, small_coeffs, max_size=4).map(
    lambda terms: poly({e: Fraction(c) for e, c in terms.items()}))


class TestLaurentDivision:
    def test_cubes_over_sum(self):
        # (p^3 + q^3) / (p + q) = p^2 - p q + q^2
        num = var("p") ** 3 + var("q") ** 3
        den = var("p") + var("q")
        assert laurent_divide_exact(num, den) \
            == var("p") ** 2 - var("p") * var("q") + var("q") ** 2

    def test_identity(self):
        assert laurent_divide_exact(var("p"), var("p")) \
            == LaurentPoly.constant(VARS, 1)

    def test_monomial_denominator_shifts_exponents(self):
        num = var("p") * var("q") + 1
        assert laurent_divide_exact(num, var("p")) \
            == var("q") + poly({(-1, 0): 1})

    def test_inexact_division_fails(self):
        with pytest.raises(LaurentDivisionError):
            laurent_divide_exact(var("p") + 1, var("q") + 1)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            laurent_divide_exact(var("p"), LaurentPoly.zero(VARS))

    @settings(deadline=None, max_examples=60)
    @given(small_polys, small_polys)
    def test_product_division_round_trip(self, a, b):
        if b.is_zero():
            return
        assert laurent_divide_exact(a * b, b) == a

    @settings(deadline=None, max_examples=60)
    @given(small_polys, small_polys, st.integers(1, 7), st.integers(1, 7))
    def test_evaluation_homomorphism(self, a, b, pnum, qnum):
        point = {"p": Fraction(pnum, 3), "q": Fraction(qnum, 2)}
        assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
        assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)


class TestNonnegativity:
    def test_mixed_signs(self):
        f = var("p") ** 2 - var("p") * var("q") + var("q") ** 2
        assert not laurent_has_nonnegative_coeffs(f)

    def test_nonnegative(self):
        assert laurent_has_nonnegative_coeffs(var("p") + 2 * var("q"))

    def test_zero(self):
        assert laurent_has_nonnegative_coeffs(LaurentPoly.zero(VARS))

    def test_fractional_coefficient_rejected(self):
        assert not laurent_has_nonnegative_coeffs(
            poly({(1, 0): Fraction(1, 2)}))
