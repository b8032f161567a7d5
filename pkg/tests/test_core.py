"""Band containers, alpha sequences, and the dense exact-arithmetic kernel."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tetrahess import (
    AlphaSequence,
    BandExhausted,
    Classification,
    DenseMatrix,
    IndexOutOfRange,
    NonPositiveSubSubDiagonal,
    alpha_factor_matrices,
    bands_from_alphas,
    leading_principal,
    tetra_from_alphas,
    tetra_from_bands,
    trailing_truncation,
)
from tetrahess.core import Band

import random

from conftest import pbf_corpus, random_band_matrix

rationals = st.fractions(min_value=F(-4), max_value=F(4), max_denominator=5)
positive_rationals = st.fractions(min_value=F(1, 5), max_value=F(4), max_denominator=5)


class TestBand:
    def test_explicit_values(self):
        band = Band("c", 0, values=(F(2), F(3)))
        assert band.get(0) == 2
        assert band.get(1) == 3
        assert band.last_index == 1
        with pytest.raises(BandExhausted):
            band.get(2)
        with pytest.raises(IndexOutOfRange):
            band.get(-1)

    def test_func_band_is_unbounded_unless_limited(self):
        band = Band("b", 1, func=lambda n: F(n))
        assert band.get(100) == 100
        assert band.last_index is None
        capped = Band("b", 1, func=lambda n: F(n), limit=3)
        assert capped.get(3) == 3
        with pytest.raises(BandExhausted):
            capped.get(4)

    def test_shifted_reindexes(self):
        band = Band("c", 0, values=(F(1), F(2), F(3)))
        assert band.shifted(2).get(0) == 3


class TestAlphaSequence:
    def test_nonpositive_indices_are_zero(self):
        alphas = AlphaSequence(values=(F(5),))
        assert alphas.at(0) == 0
        assert alphas.at(-7) == 0
        assert alphas.at(1) == 5

    def test_prefix_and_length(self):
        alphas = AlphaSequence(values=(F(1), F(2), F(3)))
        assert alphas.prefix(2) == (F(1), F(2))
        assert alphas.length == 3
        with pytest.raises(BandExhausted):
            alphas.at(4)

    def test_classify(self):
        assert AlphaSequence(values=(F(1), F(2))).classify() is Classification.PBF
        assert AlphaSequence(values=(F(1), F(0))).classify() is Classification.TN
        assert AlphaSequence(values=(F(1), F(-1))).classify() is Classification.INDEFINITE
        # a zero before a negative still reads as indefinite
        assert AlphaSequence(values=(F(0), F(-1))).classify() is Classification.INDEFINITE

    def test_classify_start_skips_leading_entries(self):
        alphas = AlphaSequence(values=(F(0), F(1), F(1)))
        assert alphas.classify() is Classification.TN
        assert alphas.classify(start=2) is Classification.PBF


ONES_BANDS = {
    # c_n = 1, 3, 3, ...   b_n = 2, 3, 3, ...   a_n = 1, 1, ...
    "c": (F(1), F(3), F(3), F(3)),
    "b": (F(2), F(3), F(3)),
    "a": (F(1), F(1)),
}


def test_bands_from_all_ones_alphas(ones_alphas):
    c, b, a = bands_from_alphas(ones_alphas)
    assert tuple(c(n) for n in range(4)) == ONES_BANDS["c"]
    assert tuple(b(n) for n in range(1, 4)) == ONES_BANDS["b"]
    assert tuple(a(n) for n in range(2, 4)) == ONES_BANDS["a"]


def test_band_formulas_at_low_indices():
    # alpha_j = j keeps every product distinguishable
    alphas = AlphaSequence(func=lambda j: F(j))
    c, b, _ = bands_from_alphas(alphas)
    assert c(0) == 1
    assert c(1) == 4 + 3 + 2
    assert b(1) == 3 * 1 + 2 * 1  # alpha_0 terms vanish
    assert b(2) == 6 * 4 + 5 * 4 + 5 * 3


def test_tetra_from_alphas_rejects_nonpositive_a():
    # a_2 = alpha_5 alpha_3 alpha_1 = 0 here
    alphas = AlphaSequence(values=(F(1), F(1), F(1), F(1), F(0), F(1), F(1)))
    with pytest.raises(NonPositiveSubSubDiagonal):
        tetra_from_alphas(alphas)


def test_entry_layout(t_ones):
    assert t_ones.entry(0, 1) == 1  # unit superdiagonal
    assert t_ones.entry(0, 2) == 0
    assert t_ones.entry(3, 0) == 0  # below the second subdiagonal
    assert t_ones.entry(2, 0) == t_ones.a(2)
    assert t_ones.entry(2, 1) == t_ones.b(2)
    assert t_ones.entry(2, 2) == t_ones.c(2)


def test_leading_principal_matches_entries(t_ones):
    m = leading_principal(t_ones, 2)
    assert m.to_lists() == [
        [F(1), F(1), F(0)],
        [F(2), F(3), F(1)],
        [F(1), F(3), F(3)],
    ]


def test_materializable_n_tracks_shortest_band():
    t = tetra_from_bands(a=[F(1)], b=[F(1), F(1)], c=[F(1), F(1), F(1)])
    assert t.materializable_n() == 2
    with pytest.raises(BandExhausted):
        leading_principal(t, 3)


def test_trailing_truncation_equals_shifted_leading(t_ones):
    # T^[N, k] is the leading truncation of the k-shifted operator
    for n, k in ((4, 1), (4, 2), (3, 0), (5, 3)):
        direct = trailing_truncation(t_ones, n, k)
        via_shift = leading_principal(t_ones.shifted(k), n - k)
        assert direct == via_shift


@settings(max_examples=40, derandomize=True)
@given(st.integers(min_value=0, max_value=200), st.integers(min_value=2, max_value=8))
def test_trailing_truncation_shift_property(seed, n):
    rng = random.Random(seed)
    t = random_band_matrix(rng, n)
    k = rng.randint(0, n)
    assert trailing_truncation(t, n, k) == leading_principal(t.shifted(k), n - k)


class TestDenseMatrix:
    def test_det_2x2(self):
        m = DenseMatrix([[F(1), F(2)], [F(3), F(4)]])
        assert m.det() == -2

    def test_det_singular(self):
        m = DenseMatrix([[F(1), F(2)], [F(2), F(4)]])
        assert m.det() == 0

    def test_char_poly_known(self):
        m = DenseMatrix([[F(2), F(1)], [F(1), F(2)]])
        # x^2 - 4x + 3
        assert m.char_poly().coeffs == (F(3), F(-4), F(1))

    def test_char_poly_empty_matrix_is_one(self):
        assert DenseMatrix([]).char_poly().coeffs == (F(1),)

    def test_minor_is_submatrix_det(self):
        m = DenseMatrix([[F(i * 3 + j) for j in range(3)] for i in range(3)])
        assert m.minor((0, 1), (1, 2)) == m.submatrix((0, 1), (1, 2)).det()

    def test_mul_identity(self):
        m = DenseMatrix([[F(1), F(2)], [F(3), F(4)]])
        assert m.mul(DenseMatrix.identity(2)) == m

    def test_det_against_sympy(self):
        sympy = pytest.importorskip("sympy")
        rng = random.Random(7)
        for _ in range(5):
            rows = [[F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)] for _ in range(4)]
            m = DenseMatrix(rows)
            sm = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in rows])
            assert sympy.Rational(m.det().numerator, m.det().denominator) == sm.det()


@settings(max_examples=30, derandomize=True)
@given(st.integers(min_value=0, max_value=500))
def test_alpha_factor_product_reproduces_truncation(seed):
    """L1 L2 U multiplied out must equal the leading truncation exactly."""
    rng = random.Random(seed)
    alphas = pbf_corpus(seed, 1, count=19)[0]
    n = rng.randint(1, 6)
    t = tetra_from_alphas(alphas)
    l1, l2, u = alpha_factor_matrices(alphas, n)
    assert l1.mul(l2).mul(u) == leading_principal(t, n)


def test_tetra_from_bands_band_budget():
    t = tetra_from_bands(a=[F(1), F(2)], b=[F(1), F(1), F(1)], c=[F(1)] * 4)
    assert t.a(3) == 2
    assert t.c(0) == 1
    with pytest.raises(BandExhausted):
        t.a(4)
