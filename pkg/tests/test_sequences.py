"""Sequence and polynomial source tests, each generator against an
independent oracle."""

from __future__ import annotations

import math
import time
from fractions import Fraction as F

import pytest

from turancheck.exact import DomainError, PreconditionError
from turancheck.sequences import (
    ParseError,
    PolynomialCoeffs,
    SequenceWindow,
    gen_binomial_row,
    gen_geometric_logconcave,
    gen_hermite,
    gen_laguerre,
    gen_partition,
    load_csv,
    normalize_binomial,
    normalize_factorial,
    partition_values,
)


def count_partitions_by_enumeration(n: int) -> int:
    """Count partitions by explicit recursive enumeration (largest part first)."""

    def count(remaining: int, largest: int) -> int:
        if remaining == 0:
            return 1
        return sum(
            count(remaining - part, part) for part in range(min(remaining, largest), 0, -1)
        )

    return count(n, n)


def euler_product_partitions(n_max: int) -> list[int]:
    """Coefficients of prod_{k=1..n_max} 1/(1 - x^k), truncated."""
    coeffs = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        for n in range(k, n_max + 1):
            coeffs[n] += coeffs[n - k]
    return coeffs


class TestPartition:
    def test_matches_enumeration_up_to_25(self):
        values = partition_values(25)
        for n in range(26):
            assert values[n] == count_partitions_by_enumeration(n)

    def test_matches_euler_product_up_to_300(self):
        assert partition_values(300) == euler_product_partitions(300)

    def test_window_shape(self):
        window = gen_partition(5)
        assert window.terms == (1, 1, 2, 3, 5, 7)
        assert window.start_index == 0
        assert gen_partition(0).terms == (F(1),)
        assert partition_values(10)[10] == 42

    def test_known_large_value(self):
        assert partition_values(200)[200] == 3972999029388

    def test_rejects_negative(self):
        with pytest.raises(PreconditionError):
            partition_values(-1)


class TestBinomialRow:
    @pytest.mark.parametrize("n,expected", [(4, (1, 4, 6, 4, 1)), (0, (1,)), (2, (1, 2, 1))])
    def test_rows(self, n, expected):
        assert gen_binomial_row(n).terms == expected

    def test_symmetry_and_logconcavity(self):
        for n in range(1, 40):
            row = gen_binomial_row(n).terms
            assert row == row[::-1]
            assert all(row[k] ** 2 >= row[k - 1] * row[k + 1] for k in range(1, n))


class TestGeometric:
    def test_examples(self):
        assert gen_geometric_logconcave(2, 4).terms == (1, 1, F(1, 2), F(1, 8))
        assert gen_geometric_logconcave(1, 5).terms == (1, 1, 1, 1, 1)
        assert gen_geometric_logconcave(3, 3).terms == (1, 1, F(1, 3))

    @pytest.mark.parametrize("r", [F(2), F(5, 2), F(3), F(7, 3)])
    def test_exact_identity(self, r):
        window = gen_geometric_logconcave(r, 12)
        a = window.terms
        for k in range(1, 11):
            assert a[k] * a[k] == r * a[k - 1] * a[k + 1]

    def test_rejects_bad_inputs(self):
        with pytest.raises(DomainError):
            gen_geometric_logconcave(0, 3)
        with pytest.raises(PreconditionError):
            gen_geometric_logconcave(2, 0)


def hermite_closed_form(n: int) -> list[F]:
    coeffs = [F(0)] * (n + 1)
    for m in range(n // 2 + 1):
        coeffs[n - 2 * m] = (
            F((-1) ** m)
            * math.factorial(n)
            / (math.factorial(m) * math.factorial(n - 2 * m))
            * 2 ** (n - 2 * m)
        )
    return coeffs


def laguerre_closed_form(n: int) -> list[F]:
    return [
        F((-1) ** k * math.comb(n, k), math.factorial(k)) for k in range(n + 1)
    ]


class TestOrthogonalPolynomials:
    def test_examples(self):
        assert gen_hermite(3).coeffs == (0, -12, 0, 8)
        assert gen_laguerre(2).coeffs == (1, -2, F(1, 2))
        assert gen_hermite(0).coeffs == (1,)

    def test_recurrence_matches_closed_form(self):
        for n in range(22):
            assert list(gen_hermite(n).coeffs) == hermite_closed_form(n)
            assert list(gen_laguerre(n).coeffs) == laguerre_closed_form(n)


class TestNormalizations:
    def test_binomial_normalization(self):
        assert normalize_binomial(PolynomialCoeffs(gen_binomial_row(4).terms)).terms == (
            1, 1, 1, 1, 1,
        )
        assert normalize_binomial(gen_hermite(3)).terms == (0, -4, 0, 8)
        assert normalize_binomial(PolynomialCoeffs((F(1),))).terms == (1,)

    def test_factorial_normalization(self):
        assert normalize_factorial(PolynomialCoeffs((F(1), F(2), F(1)))).terms == (2, 2, 2)
        assert normalize_factorial(PolynomialCoeffs((F(1),))).terms == (1,)
        assert normalize_factorial(gen_hermite(3)).terms == (0, -24, 0, 48)

    def test_factorial_is_scaled_binomial(self):
        for poly in (gen_hermite(7), gen_laguerre(9), PolynomialCoeffs(gen_binomial_row(6).terms)):
            n = poly.degree
            scaled = normalize_binomial(poly).scaled(math.factorial(n))
            assert scaled.terms == normalize_factorial(poly).terms


class TestWindowAndPolyTypes:
    def test_window_indexing(self):
        window = SequenceWindow("w", 3, (F(1), F(2), F(5)))
        assert window.end_index == 5
        assert window.term(4) == 2
        assert not window.has_index(6)
        with pytest.raises(IndexError):
            window.term(2)

    def test_window_validation(self):
        with pytest.raises(PreconditionError):
            SequenceWindow("w", 0, ())
        with pytest.raises(PreconditionError):
            SequenceWindow("w", -1, (F(1),))

    def test_poly_validation(self):
        with pytest.raises(PreconditionError):
            PolynomialCoeffs((F(1), F(0)))
        assert PolynomialCoeffs((F(0),)).is_zero()
        assert PolynomialCoeffs((F(1), F(2))).evaluate(F(1, 2)) == 2


class TestLoadCsv:
    def test_indexed_rows_with_header(self, tmp_path):
        path = tmp_path / "p.csv"
        path.write_text("n,a\n0,1\n1,1\n2,2\n")
        window = load_csv(path)
        assert window.start_index == 0
        assert window.terms == (1, 1, 2)
        assert window.name == "p"

    def test_value_forms(self, tmp_path):
        path = tmp_path / "vals.csv"
        path.write_text("1/3\n0.25\n-2\n")
        assert load_csv(path).terms == (F(1, 3), F(1, 4), F(-2))

    def test_nonzero_start(self, tmp_path):
        path = tmp_path / "w.csv"
        path.write_text("index,value\n5,10\n6,11\n")
        window = load_csv(path)
        assert window.start_index == 5 and window.term(6) == 11

    def test_parse_error_names_line(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("0,1\n1,abc\n")
        with pytest.raises(ParseError, match="line 2"):
            load_csv(path)

    def test_gap_in_indices_rejected(self, tmp_path):
        path = tmp_path / "gap.csv"
        path.write_text("0,1\n2,4\n")
        with pytest.raises(ParseError, match="line 2"):
            load_csv(path)

    def test_empty_rejected(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("\n")
        with pytest.raises(ParseError):
            load_csv(path)

    def test_header_only_rejected(self, tmp_path):
        path = tmp_path / "h.csv"
        path.write_text("index,value\n")
        with pytest.raises(ParseError):
            load_csv(path)


class TestRuntime:
    def test_partition_oracles_are_fast(self):
        started = time.monotonic()
        values = partition_values(300)
        assert values == euler_product_partitions(300)
        for n in range(26):
            assert values[n] == count_partitions_by_enumeration(n)
        assert time.monotonic() - started < 5.0
