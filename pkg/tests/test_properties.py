"""Property tests for the algebraic invariants of the exact kernels."""

from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from reflectinv.exactmath import (
    GaussianRational,
    QiMatrix,
    gauss_inverse,
    gauss_parse,
    gauss_print,
    kernel_basis,
    mat_det,
    mat_inverse,
    mat_mul,
    rref,
)
from reflectinv.molien import TruncatedSeries, series_inverse
from reflectinv.poly import Poly, PolyVec, act, monomials_of_degree, normalize

rationals = st.builds(mpq, st.integers(-30, 30), st.integers(1, 12))
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(bool)


def matrices(n):
    return st.lists(gaussians, min_size=n * n, max_size=n * n).map(
        lambda entries: QiMatrix(n, n, entries)
    )


@given(nonzero_gaussians)
def test_double_inverse(a):
    assert gauss_inverse(gauss_inverse(a)) == a
    assert a * gauss_inverse(a) == GaussianRational(1)


@given(gaussians)
def test_parse_print_round_trip(a):
    assert gauss_parse(gauss_print(a)) == a


@given(matrices(2))
def test_det_of_inverse(m):
    d = mat_det(m)
    if d:
        assert d * mat_det(mat_inverse(m)) == GaussianRational(1)
        assert mat_mul(m, mat_inverse(m)) == QiMatrix.identity(2)


@given(matrices(3))
@settings(max_examples=50)
def test_rref_rank_relations(m):
    reduced, pivots = rref(m)
    zero_rows = sum(1 for i in range(m.rows) if not any(reduced.row(i)))
    assert len(pivots) == m.rows - zero_rows
    kernel = kernel_basis(m)
    assert len(pivots) == m.cols - len(kernel)
    for vec in kernel:
        assert all(not v for v in m.apply(vec))


@given(matrices(2), matrices(2))
@settings(max_examples=50)
def test_action_composition(g, h):
    f = Poly({(2, 1): GaussianRational(3), (0, 2): GaussianRational(0, 1)}, 2)
    assert act(h, act(g, f)) == act(mat_mul(g, h), f)


@given(matrices(2))
@settings(max_examples=50)
def test_action_preserves_products(g):
    f = Poly({(1, 0): GaussianRational(1), (0, 1): GaussianRational(-2)}, 2)
    p = Poly({(1, 1): GaussianRational(1, 1)}, 2)
    assert act(g, f * p) == act(g, f) * act(g, p)


@given(st.lists(gaussians, min_size=1, max_size=8), nonzero_gaussians)
@settings(max_examples=50)
def test_series_inverse_is_inverse(tail, head):
    coeffs = [head] + tail
    s = TruncatedSeries(coeffs)
    product = s * series_inverse(s)
    assert product == TruncatedSeries.one(s.order)


@given(st.lists(gaussians, min_size=3, max_size=3).filter(lambda c: any(c)))
def test_normalize_leading_one(coeffs):
    monos = monomials_of_degree(2, 2)
    F = PolyVec.from_coefficients(coeffs, monos, 1, 2)
    scaled = normalize(F)
    lead = scaled.components[0].leading()
    assert lead is not None and lead[1] == GaussianRational(1)
    assert normalize(scaled) == scaled
