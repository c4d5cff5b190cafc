"""Exact rational sequences: identities, tables, exports."""

import json
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from agmbounds import coefficients as co

# first ten a_k, exact
A_TABLE = [
    Fraction(1, 4),
    Fraction(7, 48),
    Fraction(5, 48),
    Fraction(313, 3840),
    Fraction(43, 640),
    Fraction(12317, 215040),
    Fraction(10751, 215040),
    Fraction(183349, 4128768),
    Fraction(206329, 5160960),
    Fraction(66087019, 1816657920),
]


def pascal_binomial(n, k):
    """Oracle: C(n, k) by the Pascal-triangle recurrence."""
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]


def simpson_sin_power(n, panels=4000):
    """Oracle: integral_0^{pi/2} sin^n x dx by composite Simpson."""
    h = (math.pi / 2.0) / panels
    acc = math.sin(0.0) ** n + math.sin(math.pi / 2.0) ** n
    for i in range(1, panels):
        acc += (4.0 if i % 2 else 2.0) * math.sin(i * h) ** n
    return acc * h / 3.0


class TestCentralBinomial:
    def test_small(self):
        assert co.central_binomial(0) == 1
        assert co.central_binomial(1) == 2

    def test_k10_against_pascal(self):
        assert co.central_binomial(10) == 184756
        assert co.central_binomial(10) == pascal_binomial(20, 10)

    @given(st.integers(min_value=0, max_value=25))
    def test_matches_pascal(self, k):
        assert co.central_binomial(k) == pascal_binomial(2 * k, k)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            co.central_binomial(-1)


class TestDoubleFactorial:
    def test_conventions(self):
        assert co.double_factorial(-1) == 1
        assert co.double_factorial(0) == 1
        assert co.double_factorial(1) == 1

    def test_values(self):
        assert [co.double_factorial(n) for n in range(2, 9)] == [
            2, 3, 8, 15, 48, 105, 384,
        ]

    @given(st.integers(min_value=0, max_value=40))
    def test_wallis_ratio_shares_the_recurrence(self, k):
        direct = Fraction(co.double_factorial(2 * k - 1), co.double_factorial(2 * k))
        assert co.wallis_ratio(k) == direct


class TestWallisIntegral:
    def test_n1(self):
        assert co.wallis_integral(1) == (Fraction(1), 0)

    def test_n2(self):
        assert co.wallis_integral(2) == (Fraction(1, 2), 1)

    def test_n3_with_quadrature_oracle(self):
        value, pi_power = co.wallis_integral(3)
        assert (value, pi_power) == (Fraction(2, 3), 0)
        assert float(value) == pytest.approx(simpson_sin_power(3), abs=1e-14)

    @given(st.integers(min_value=1, max_value=12))
    def test_against_quadrature(self, n):
        value, pi_power = co.wallis_integral(n)
        numeric = float(value) * (math.pi / 2.0 if pi_power else 1.0)
        assert numeric == pytest.approx(simpson_sin_power(n), abs=1e-12)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            co.wallis_integral(0)


class TestBCoefficients:
    def test_first_three(self):
        assert co.b_coeff(0) == 1
        assert co.b_coeff(1) == Fraction(1, 4)
        assert co.b_coeff(2) == Fraction(9, 64)

    @given(st.integers(min_value=0, max_value=60))
    def test_ratio_recurrence(self, k):
        assert co.b_coeff(k + 1) / co.b_coeff(k) == Fraction(
            (2 * k + 1) ** 2, (2 * k + 2) ** 2
        )


class TestACoefficients:
    def test_empty_sum_at_zero(self):
        assert co.a_coeff_sum(0) == 1

    def test_table_values(self):
        for k, expected in enumerate(A_TABLE, start=1):
            assert co.a_coeff_sum(k) == expected
            assert co.a_coeff_closed(k) == expected

    def test_sum_equals_closed(self):
        for k in range(1, 80):
            assert co.a_coeff_sum(k) == co.a_coeff_closed(k)

    def test_strictly_decreasing(self):
        values = [co.a_coeff_sum(k) for k in range(1, 40)]
        assert all(x > y for x, y in zip(values, values[1:]))

    def test_closed_form_needs_positive_index(self):
        with pytest.raises(ValueError):
            co.a_coeff_closed(0)


class TestSummationIdentities:
    def test_h_base_case(self):
        assert co.h_sum(1) == Fraction(1, 4)
        assert co.h_closed(1) == Fraction(1, 4)

    def test_h_k2(self):
        assert co.h_sum(2) == Fraction(5, 16)
        assert co.h_closed(2) == Fraction(5, 16)

    def test_h_monotone_approach_to_half(self):
        values = [co.h_closed(k) for k in range(1, 60)]
        assert all(x < y for x, y in zip(values, values[1:]))
        assert all(v < Fraction(1, 2) for v in values)
        assert float(Fraction(1, 2) - values[-1]) < 0.07

    def test_g_small(self):
        assert co.g_sum(1) == Fraction(1, 4)
        assert co.g_closed(1) == Fraction(1, 4)
        assert co.g_sum(2) == Fraction(1, 4)
        assert co.g_closed(2) == Fraction(1, 4)
        assert co.g_sum(3) == co.g_closed(3)

    def test_sum_equals_closed(self):
        for k in range(1, 80):
            assert co.h_sum(k) == co.h_closed(k)
            assert co.g_sum(k) == co.g_closed(k)

    def test_zeilberger_recurrence(self):
        assert co.zeilberger_check(1)
        assert co.zeilberger_check(2)
        assert co.zeilberger_check(50)


class TestSignSequence:
    def test_k2(self):
        assert co.s_seq(2) == Fraction(9, 5) - Fraction(1, 3)
        assert co.s_seq(2) == Fraction(22, 15)

    def test_sign_change_exact(self):
        # exact fractions frozen from the rational evaluation
        assert co.s_seq(10) == Fraction(278266, 14549535)
        assert co.s_seq(11) == Fraction(-14233768, 334639305)
        assert co.s_seq(10) > 0 > co.s_seq(11)

    def test_decimal_expansions(self):
        assert float(co.s_seq(10)) == pytest.approx(0.0191254222, abs=1e-10)
        assert float(co.s_seq(11)) == pytest.approx(-0.0425346568, abs=1e-10)

    def test_strictly_decreasing(self):
        values = [co.s_seq(k) for k in range(2, 60)]
        assert all(x > y for x, y in zip(values, values[1:]))

    def test_requires_k_at_least_two(self):
        with pytest.raises(ValueError):
            co.s_seq(1)


class TestTable:
    def test_frozen_a_column(self):
        table = co.build_table(10)
        assert list(table.a) == A_TABLE

    def test_b_column(self):
        table = co.build_table(2)
        assert list(table.b) == [Fraction(1), Fraction(1, 4), Fraction(9, 64)]

    def test_h_column(self):
        table = co.build_table(3)
        assert list(table.h) == [Fraction(1, 4), Fraction(5, 16), Fraction(11, 32)]

    def test_matches_standalone_functions(self):
        table = co.build_table(30)
        for k in range(1, 31):
            assert table.a_at(k) == co.a_coeff_sum(k)
            assert table.b_at(k) == co.b_coeff(k)
            assert table.h_at(k) == co.h_sum(k)
            assert table.g_at(k) == co.g_sum(k)
            if k >= 2:
                assert table.s_at(k) == co.s_seq(k)

    def test_positive_entries(self):
        table = co.build_table(50)
        assert all(v > 0 for v in table.a)
        assert all(v > 0 for v in table.b)

    def test_index_validation(self):
        table = co.build_table(5)
        with pytest.raises(ValueError):
            table.a_at(0)
        with pytest.raises(ValueError):
            table.s_at(1)
        with pytest.raises(ValueError):
            co.build_table(1)

    def test_csv_layout(self):
        text = co.build_table(3).to_csv()
        lines = text.strip().split("\n")
        assert lines[0] == "k,a,b,h,g,s"
        assert lines[1] == "0,,1/1,,,"
        assert lines[2] == "1,1/4,1/4,1/4,1/4,"
        assert lines[3].startswith("2,7/48,9/64,5/16,1/4,22/15")

    def test_json_round_trip(self):
        table = co.build_table(12)
        blob = table.to_json()
        parsed = co.CoefficientTable.from_json_dict(json.loads(blob))
        assert parsed == table

    def test_json_uses_decimal_strings(self):
        data = co.build_table(2).to_json_dict()
        cell = data["rows"][1]["a"]
        assert cell == {"numerator": "1", "denominator": "4"}
