import pytest

from reflectinv.errors import (
    NonIntegralCoefficient,
    NonTerminatingNumerator,
    NonUnitConstantTerm,
)
from reflectinv.exactmath import GaussianRational, QiMatrix, gauss_parse
from reflectinv.group import close
from reflectinv.molien import (
    HilbertData,
    TruncatedSeries,
    char_poly_reciprocal,
    denominator_expansion,
    molien_equivariant,
    molien_scalar,
    numerator_wrt,
    series_inverse,
    series_text,
)
from reflectinv.rep import trivial_representation

G = GaussianRational


def test_geometric_inverse():
    s = TruncatedSeries.one_minus_t_power(1, 10)
    inv = series_inverse(s)
    assert all(c == G(1) for c in inv.coeffs)
    assert series_inverse(TruncatedSeries.one(5)) == TruncatedSeries.one(5)
    with pytest.raises(NonUnitConstantTerm):
        series_inverse(TruncatedSeries.from_coeffs([0, 1], 3))


def test_product_denominator_expansion():
    # independent oracle: count solutions of 8a + 12b = d directly
    order = 30
    brute = [0] * (order + 1)
    for a in range(order // 8 + 1):
        for b in range(order // 12 + 1):
            if 8 * a + 12 * b <= order:
                brute[8 * a + 12 * b] += 1
    assert denominator_expansion([8, 12], order) == brute

    prod = TruncatedSeries.one_minus_t_power(8, order) * TruncatedSeries.one_minus_t_power(12, order)
    inv = series_inverse(prod)
    assert [int(c.re) for c in inv.coeffs] == brute
    assert brute[24] == 2


def test_series_mul_and_text():
    s = TruncatedSeries.from_coeffs([1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1], 12)
    assert str(s) == "1 + t^8 + t^12"
    assert series_text([G(0), G(1), G(0), G(2)]) == "t + 2*t^3"
    product = s * TruncatedSeries.one(12)
    assert product == s


def test_char_poly_reciprocal():
    assert char_poly_reciprocal(QiMatrix.identity(2)) == [G(1), G(-2), G(1)]

    D = QiMatrix.diagonal([1, "i"])
    # (1 - t)(1 - i t) = 1 - (1+i) t + i t^2
    assert char_poly_reciprocal(D) == [G(1), gauss_parse("-1-i"), gauss_parse("i")]

    h = gauss_parse("1/2+1/2i")
    T = QiMatrix.from_rows([[h, h], [h, -h]])
    assert char_poly_reciprocal(T) == [G(1), G(0), gauss_parse("-i")]


def test_molien_trivial_group():
    g = close([QiMatrix.identity(2)])
    series = molien_scalar(g, 3)
    assert series.integer_coefficients() == [1, 2, 3, 4]


def test_molien_scalar_group(group, fundamentals):
    series = molien_equivariant(group, fundamentals["rho1"], 16)
    assert str(series) == "1 + t^8 + t^12 + t^16"
    assert series == molien_scalar(group, 16)


def test_molien_rho10_coefficient(group, fundamentals):
    series = molien_equivariant(group, fundamentals["rho10"], 13)
    assert series.integer_coefficients()[13] == 2


def test_numerator_examples(group, fundamentals):
    for name, numerator in [
        ("rho5", (0, 0, 0, 0, 1, 0, 0, 0, 1)),
        ("rho15", (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1)),
        ("rho1", (1,)),
    ]:
        series = molien_equivariant(group, fundamentals[name], 40)
        hd = numerator_wrt(series, [8, 12])
        assert hd.numerator == numerator
        assert hd.verified_to == 40
        assert hd.nonnegative
        # free rank: numerator coefficients count generators, m in total
        assert hd.generator_count() == fundamentals[name].degree
        # round trip: closed form re-expands to the series
        assert hd.series(40) == series


def test_numerator_non_terminating(group, fundamentals):
    series = molien_equivariant(group, fundamentals["rho1"], 40)
    with pytest.raises(NonTerminatingNumerator):
        numerator_wrt(series, [8])
    with pytest.raises(NonTerminatingNumerator):
        numerator_wrt(series, [4, 12])


def test_numerator_text_and_generator_degrees():
    hd = HilbertData((0, 1, 0, 0, 0, 1), (8, 12), 40)
    assert str(hd) == "(t + t^5)/((1 - t^8)*(1 - t^12))"
    assert hd.generator_degrees() == [1, 5]
    assert hd.generator_count() == 2


def test_unextended_rep_rejected(group):
    fresh = trivial_representation(close([QiMatrix.identity(2)]))
    with pytest.raises(NonIntegralCoefficient):
        molien_equivariant(group, fresh, 5)


def test_equivariant_molien_matches_trivial_special_case(group, fundamentals):
    assert molien_equivariant(group, fundamentals["rho1"], 20) == molien_scalar(group, 20)
