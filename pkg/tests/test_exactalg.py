from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bottsamelson.compute.exactalg import divide_exact_by_linear, homogeneous_degree, rank_over_field
from bottsamelson.exceptions import DivisionByZero, FieldMismatch, NotDivisible, NotHomogeneous, ZeroPolynomial
from bottsamelson.model.Field import Field
from bottsamelson.model.LaurentPoly import LaurentPoly
from bottsamelson.model.MultiPoly import MultiPoly
from tests.strategies import NVARS, fields, linear_forms, polynomials


def variables(field: Field):
    return [MultiPoly.variable(field, NVARS, i) for i in range(NVARS)]


class TestField:
    @pytest.mark.parametrize("p", [2, 4, 9, -3])
    def test_rejects_bad_characteristic(self, p):
        with pytest.raises(ValueError):
            Field(p)

    def test_prime_field_arithmetic(self):
        f5 = Field(5)
        assert f5.inv(2) == 3
        assert f5.coerce(-1) == 4
        assert f5.coerce(Fraction(1, 2)) == 3
        with pytest.raises(DivisionByZero):
            f5.inv(10)

    def test_rationals_keep_fractions(self, q):
        assert q.div(1, 3) == Fraction(1, 3)
        assert q.to_json(Fraction(2, 4)) == "1/2"
        assert q.to_json(Fraction(4, 2)) == 2
        assert q.from_json("1/2") == Fraction(1, 2)

    def test_scalars_over_different_fields_do_not_mix(self):
        with pytest.raises(FieldMismatch):
            Field(5).scalar(1) + Field(7).scalar(1)


class TestMultiPoly:
    def test_difference_of_squares(self, q):
        x, y, _ = variables(q)
        assert (x + y) * (x - y) == x**2 - y**2

    def test_display_uses_weight_and_delta_names(self, q):
        x, y, d = variables(q)
        assert str(2 * x - y) == "2*w1-w2"
        assert str(d) == "d"
        assert (x + y).to_dict()["vars"] == ["w1", "w2", "d"]

    def test_mixing_fields_raises(self, q, f5):
        with pytest.raises(FieldMismatch):
            MultiPoly.one(q, NVARS) + MultiPoly.one(f5, NVARS)

    def test_homogeneous_degree_counts_variables_twice(self, q):
        x, y, _ = variables(q)
        assert homogeneous_degree(x * y) == 4
        assert homogeneous_degree(MultiPoly.constant(q, NVARS, 3)) == 0
        with pytest.raises(NotHomogeneous):
            homogeneous_degree(x + x * y)
        with pytest.raises(ZeroPolynomial):
            homogeneous_degree(MultiPoly.zero(q, NVARS))

    def test_exact_division(self, q):
        x, y, d = variables(q)
        f = (x + y) * (2 * x - y + d)
        assert divide_exact_by_linear(f, x + y) == 2 * x - y + d

    def test_inexact_division_raises(self, q):
        x, y, _ = variables(q)
        with pytest.raises(NotDivisible):
            divide_exact_by_linear(x * y + 1, x + y)

    def test_division_by_constant_is_rejected(self, q):
        x, _, _ = variables(q)
        with pytest.raises(ValueError):
            divide_exact_by_linear(x, MultiPoly.one(q, NVARS))

    @settings(max_examples=200, deadline=None)
    @given(fields().flatmap(lambda f: st.tuples(polynomials(f), linear_forms(f))))
    def test_product_is_divisible_by_its_linear_factor(self, case):
        f, linear = case
        assert divide_exact_by_linear(f * linear, linear) == f


class TestRank:
    def test_rank_over_rationals(self, q):
        assert rank_over_field(q, [[1, 2], [2, 4]]) == 1
        assert rank_over_field(q, [[1, 2], [3, 1]]) == 2
        assert rank_over_field(q, []) == 0

    def test_rank_drops_modulo_p(self):
        assert rank_over_field(Field(5), [[1, 2], [3, 1]]) == 1
        assert rank_over_field(Field(7), [[1, 2], [3, 1]]) == 2

    def test_rank_of_wide_matrix(self, q):
        assert rank_over_field(q, [[0, 1, 1], [0, 2, 2], [1, 0, 0]]) == 2


class TestLaurentPoly:
    def test_display(self):
        assert LaurentPoly.from_dict({0: 1, -2: 3, -4: 1}).display() == "1+3v^-2+v^-4"
        assert LaurentPoly.from_dict({2: 1, 0: 1}).display() == "v^2+1"
        assert LaurentPoly.from_dict({1: -1}).display() == "-v"
        assert LaurentPoly.zero().display() == "0"

    def test_arithmetic(self):
        v = LaurentPoly.monomial(1)
        v_inv = LaurentPoly.monomial(-1)
        assert v * v_inv == LaurentPoly.one()
        assert (v + v_inv) * (v - v_inv) == LaurentPoly.from_dict({2: 1, -2: -1})
        assert (v + 1).bar() == v_inv + 1
        assert (v + 1).shift(2) == LaurentPoly.from_dict({3: 1, 2: 1})

    def test_valuation_and_value_at_one(self):
        f = LaurentPoly.from_dict({2: 1, 0: 1})
        assert f.valuation() == 0
        assert f.degree() == 2
        assert f.evaluate() == 2
        with pytest.raises(ValueError):
            LaurentPoly.zero().valuation()

    def test_json_shape(self):
        f = LaurentPoly.from_dict({0: 1, -2: 3})
        assert f.to_dict() == {"coeffs": {"-2": 3, "0": 1}, "display": "1+3v^-2"}
        assert LaurentPoly.from_json(f.to_dict()["coeffs"]) == f
