import pytest

from reflectinv.errors import DimensionMismatch, ZeroVector
from reflectinv.exactmath import GaussianRational, QiMatrix, gauss_parse, mat_mul
from reflectinv.poly import (
    Poly,
    PolyVec,
    act,
    act_vec,
    monomials_of_degree,
    normalize,
    variables,
)

G = GaussianRational
x, y = variables(2)


def test_monomial_enumeration():
    assert monomials_of_degree(2, 3) == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert monomials_of_degree(2, 0) == [(0, 0)]
    assert len(monomials_of_degree(2, 8)) == 9
    assert len(monomials_of_degree(3, 4)) == 15  # C(6, 2)


def test_poly_arithmetic_and_text():
    theta = x**8 + 14 * x**4 * y**4 + y**8
    assert str(theta) == "x^8 + 14*x^4*y^4 + y^8"
    assert theta.degree() == 8
    assert theta.is_homogeneous()
    p = (x + y) * (x - y)
    assert p == x**2 - y**2
    assert str(p) == "x^2 - y^2"
    assert str(Poly.zero(2)) == "0"
    assert str(x - x) == "0"
    assert (x + y) ** 2 == x**2 + 2 * x * y + y**2


def test_poly_complex_coefficients_text():
    p = gauss_parse("i") * x + gauss_parse("1+i") * y
    assert str(p) == "i*x + (1+i)*y"
    q = gauss_parse("-2i") * x
    assert str(q) == "-2i*x"


def test_diff():
    theta = x**8 + 14 * x**4 * y**4 + y**8
    assert theta.diff(0) == 8 * x**7 + 56 * x**3 * y**4
    assert theta.diff(1) == 56 * x**4 * y**3 + 8 * y**7


def _D():
    return QiMatrix.diagonal([1, "i"])


def _T():
    h = gauss_parse("1/2+1/2i")
    return QiMatrix.from_rows([[h, h], [h, -h]])


def test_act_examples():
    f = x**5 * y
    assert act(_D(), f) == gauss_parse("i") * x**5 * y
    acted = act(_T(), x)
    h = gauss_parse("1/2+1/2i")
    assert acted == h * x + h * y
    with pytest.raises(DimensionMismatch):
        act(QiMatrix.identity(3), x)


def test_theta_invariant_under_whole_group(group, entry):
    theta = entry.theta
    assert all(act(e, theta) == theta for e in group.elements)


def test_act_composition(group):
    g = group.elements[17]
    h = group.elements[42]
    f = 3 * x**4 * y - y**5 + x**2 * y**3
    assert act(h, act(g, f)) == act(mat_mul(g, h), f)


def test_act_multiplicative():
    g = _T()
    f, p = x**2 + y**2, x - y
    assert act(g, f * p) == act(g, f) * act(g, p)
    assert act(QiMatrix.identity(2), f) == f


def test_act_vec_examples(entry):
    F = PolyVec([x, y])
    assert act_vec(_D(), F) == PolyVec([x, gauss_parse("i") * y])
    assert act_vec(QiMatrix.identity(2), F) == F

    # degree-4 vector transforming by diag(1, -1) under D
    F5 = PolyVec([x**4 + y**4, 6 * x**2 * y**2])
    acted = act_vec(_D(), F5)
    assert acted == PolyVec([x**4 + y**4, -6 * x**2 * y**2])


def test_polyvec_structure():
    F = PolyVec([Poly.zero(2), 3 * x**2])
    assert F.degree() == 2
    assert len(F) == 2
    with pytest.raises(DimensionMismatch):
        PolyVec([x, x + 1])  # not homogeneous
    with pytest.raises(DimensionMismatch):
        PolyVec([x, y**2])  # mixed degrees


def test_normalize_examples():
    F = PolyVec([-(x**5) + 5 * x * y**4, 5 * x**4 * y - y**5])
    assert normalize(F) == PolyVec([x**5 - 5 * x * y**4, -5 * x**4 * y + y**5])
    assert normalize(PolyVec([x, y])) == PolyVec([x, y])
    assert normalize(PolyVec([Poly.zero(2), 3 * x**2])) == PolyVec(
        [Poly.zero(2), x**2]
    )
    with pytest.raises(ZeroVector):
        normalize(PolyVec([Poly.zero(2)]))


def test_coefficients_round_trip():
    monos = monomials_of_degree(2, 5)
    F = PolyVec([x**5 - 5 * x * y**4, 5 * x**4 * y - y**5])
    coeffs = F.coefficients(monos)
    assert len(coeffs) == 2 * len(monos)
    back = PolyVec.from_coefficients(coeffs, monos, 2, 2)
    assert back == F
