from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ruledinv.indices import (
    BundleType,
    Chamber,
    ChamberParams,
    H2Class,
    QuotProblem,
    RuledSurfaceGeometry,
    abelian_v,
    canonical_class,
    chamber_classify,
    classify_tau,
    douady_index,
    euler_char,
    expected_dim,
    index_wc,
    intersect,
    spinc_det,
)

F = H2Class(0, 1)
S = H2Class(1, 0)


def test_euler_char_examples():
    assert euler_char(BundleType(2, 3), 2) == 1
    assert euler_char(BundleType(1, 0), 0) == 1
    assert euler_char(BundleType(3, -2), 1) == -2


def test_expected_dim_example():
    p = QuotProblem(2, BundleType(1, -2), BundleType(3, 1))
    assert expected_dim(p) == 5


def test_abelian_v_examples():
    assert abelian_v(2, -1, 0, 1) == 2
    assert abelian_v(2, 1, 2, 1) == 0
    assert abelian_v(1, 0, 0, 5) == 0


@given(
    st.integers(1, 6),
    st.integers(-8, 8),
    st.integers(-8, 8),
    st.integers(0, 5),
)
def test_abelian_v_is_rank_one_expected_dim(r0, d, d0, genus):
    p = QuotProblem(genus, BundleType(1, d), BundleType(r0, d0))
    assert abelian_v(r0, d, d0, genus) == expected_dim(p)


def test_validation_errors():
    with pytest.raises(ValueError):
        BundleType(0, 3)
    with pytest.raises(ValueError):
        QuotProblem(-1, BundleType(1, 0), BundleType(1, 0))
    with pytest.raises(ValueError):
        abelian_v(0, 0, 0, 1)
    with pytest.raises(ValueError):
        euler_char(BundleType(1, 0), -2)


# -- chambers ----------------------------------------------------------------


def test_chamber_trichotomy_examples():
    line = lambda d: BundleType(1, d)
    assert classify_tau(Fraction(0), line(-3)) == Chamber.EMPTY_CHAMBER
    assert classify_tau(Fraction(1), line(0)) == Chamber.INTERESTING_CHAMBER
    assert classify_tau(Fraction(3), line(-3)) == Chamber.WALL


def test_chamber_params_use_exact_rationals():
    # tau = t * volume lands exactly on the wall; no float drift allowed
    params = ChamberParams(Fraction(3, 7), Fraction(7), BundleType(1, -3))
    assert chamber_classify(params) == Chamber.WALL
    nudged = ChamberParams(Fraction(3, 7) + Fraction(1, 10**12), Fraction(7), BundleType(1, -3))
    assert chamber_classify(nudged) == Chamber.INTERESTING_CHAMBER


def test_chamber_rank_restriction_and_volume():
    with pytest.raises(NotImplementedError):
        classify_tau(Fraction(0), BundleType(2, 0))
    with pytest.raises(ValueError):
        ChamberParams(Fraction(1), Fraction(0), BundleType(1, 0))


# -- ruled surface intersection ring ----------------------------------------


def test_intersection_ring_relations():
    geom = RuledSurfaceGeometry(2, 3)
    assert intersect(S, S, geom) == 3
    assert intersect(S, F, geom) == 1
    assert intersect(F, F, geom) == 0


@given(
    st.integers(-5, 5),
    st.integers(-5, 5),
    st.integers(-5, 5),
    st.integers(-5, 5),
    st.integers(0, 4),
    st.integers(-4, 4),
)
def test_intersect_symmetric_bilinear(xs, xf, ys, yf, genus, d0):
    geom = RuledSurfaceGeometry(genus, d0)
    x, y = H2Class(xs, xf), H2Class(ys, yf)
    assert intersect(x, y, geom) == intersect(y, x, geom)
    assert intersect(x + y, x + y, geom) == (
        intersect(x, x, geom) + 2 * intersect(x, y, geom) + intersect(y, y, geom)
    )


def test_canonical_class_examples():
    assert canonical_class(RuledSurfaceGeometry(0, 0)) == H2Class(-2, -2)
    assert canonical_class(RuledSurfaceGeometry(2, 1)) == H2Class(-2, 3)


@given(st.integers(0, 5), st.integers(-5, 5))
def test_canonical_square_is_eight_minus_eight_g(genus, d0):
    geom = RuledSurfaceGeometry(genus, d0)
    K = canonical_class(geom)
    assert intersect(K, K, geom) == 8 * (1 - genus)


def test_spinc_det_examples():
    assert spinc_det(1, 1, RuledSurfaceGeometry(1, 0)) == H2Class(4, 2)
    assert spinc_det(0, 0, RuledSurfaceGeometry(1, 0)) == H2Class(2, 0)


@given(st.integers(-4, 4), st.integers(-2, 4), st.integers(0, 4), st.integers(-4, 4))
def test_spinc_fibre_pairing_is_2n_plus_2(d, n, genus, d0):
    geom = RuledSurfaceGeometry(genus, d0)
    assert intersect(spinc_det(d, n, geom), F, geom) == 2 * n + 2


def test_index_wc_examples():
    g0 = RuledSurfaceGeometry(0, 0)
    assert index_wc(-1 * canonical_class(g0), g0) == 0
    assert index_wc(H2Class(4, 2), RuledSurfaceGeometry(1, 0)) == 4


def test_index_wc_rejects_non_characteristic_square():
    geom = RuledSurfaceGeometry(0, 1)
    with pytest.raises(ValueError):
        index_wc(H2Class(1, 0), geom)  # square 1, not divisible by 4


def test_douady_examples():
    for genus in range(4):
        geom = RuledSurfaceGeometry(genus, 0)
        assert douady_index(F, geom) == 1
    assert douady_index(H2Class(1, 1), RuledSurfaceGeometry(0, 0)) == 3


@given(st.integers(-3, 3), st.integers(0, 3), st.integers(0, 4), st.integers(-3, 3))
def test_douady_matches_halved_spinc_index(d, n, genus, d0):
    # the divisor problem for d*f + n*s and the monopole index see the same number
    geom = RuledSurfaceGeometry(genus, d0)
    m = H2Class(n, d)
    assert douady_index(m, geom) == index_wc(spinc_det(d, n, geom), geom) // 2


@given(st.integers(-3, 3), st.integers(0, 3), st.integers(0, 4), st.integers(-3, 3))
def test_index_dictionary_hits_abelian_v(d, n, genus, d0):
    geom = RuledSurfaceGeometry(genus, d0)
    w_c = index_wc(spinc_det(d, n, geom), geom)
    assert w_c % 2 == 0
    assert w_c // 2 == abelian_v(n + 1, -d, n * (n + 1) * d0 // 2, genus)
