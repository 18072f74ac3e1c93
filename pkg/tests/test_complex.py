import pytest

from realgrass.combinatorics import SchubertSet, cell_counts, enumerate_subsets, partial_dim
from realgrass.complex import (
    Direction,
    SparseMatrix,
    boundary,
    build_complex,
    diff_coefficient,
    euler_characteristic,
    matmul,
    sigma_signs,
)
from realgrass.errors import InvalidArgument, InvalidCover, UnsupportedSize
from realgrass.modules import CoefficientRing
from realgrass.oracle import homology_with_coefficients


def S(n, *elems):
    return SchubertSet.of(n, *elems)


def test_sigma_signs_examples():
    assert sigma_signs(S(6, 1, 2, 4), S(6, 1, 3, 4)) == (-1, -1)
    assert sigma_signs(S(6, 1, 2, 5), S(6, 1, 3, 5)) == (1, 1)
    a, b = sigma_signs(S(6, 1, 3, 5), S(6, 1, 4, 5))
    assert a == -b


def test_sigma_signs_rejects_non_covers():
    with pytest.raises(InvalidCover):
        sigma_signs(S(6, 1, 2, 4), S(6, 1, 4, 4 + 1))
    with pytest.raises(InvalidCover):
        sigma_signs(S(6, 1, 2, 4), S(6, 1, 2, 6))
    with pytest.raises(InvalidCover):
        sigma_signs(S(6, 1, 2, 4), S(6, 1, 2, 4))


@pytest.mark.parametrize("cell,r,expected", [
    ((1, 2, 4), 2, -2),
    ((1, 3, 4), 3, -2),
    ((2, 4, 6), 1, 2),
    ((1, 2, 3), 3, 0),
])
def test_diff_coefficient_examples(cell, r, expected):
    assert diff_coefficient(S(6, *cell), r) == expected


def test_diff_coefficient_range():
    with pytest.raises(InvalidArgument):
        diff_coefficient(S(6, 1, 2, 4), 0)
    with pytest.raises(InvalidArgument):
        diff_coefficient(S(6, 1, 2, 4), 4)


def test_blocked_bump_is_zero():
    # s_{r+1} - s_r = 1 would collide; sentinel n+1 blocks the last entry
    assert diff_coefficient(S(6, 1, 2, 4), 1) == 0
    assert diff_coefficient(S(6, 1, 2, 6), 3) == 0


@pytest.mark.parametrize("n", range(1, 11))
def test_simplified_coefficient_equals_link_sum(n):
    for k in range(1, n + 1):
        for T in enumerate_subsets(n, k):
            for r in range(1, k + 1):
                U = T.bump(r)
                if U is None:
                    assert diff_coefficient(T, r) == 0
                else:
                    assert sum(sigma_signs(T, U)) == diff_coefficient(T, r)


def test_boundary_examples():
    terms = [(c.r, c.target, c.value) for c in boundary(S(6, 1, 2, 4))]
    assert terms == [(2, S(6, 1, 3, 4), -2), (3, S(6, 1, 2, 5), -2)]
    assert [(c.r, c.target, c.value) for c in boundary(S(3, 2))] == [(1, S(3, 3), -2)]


@pytest.mark.parametrize("n", range(2, 11, 2))
def test_minimal_cell_has_no_boundary_when_both_even(n):
    for k in range(2, n, 2):
        assert boundary(SchubertSet(n, tuple(range(1, k + 1)))) == []


def test_boundary_values_are_signed_d_r():
    for T in enumerate_subsets(8, 4):
        for c in boundary(T):
            assert c.value == (-1) ** partial_dim(T, c.r) * 2


class TestBuild:
    def test_circle(self):
        c = build_complex(2, 1, Direction.HOMOLOGICAL)
        assert c.bases == ((S(2, 1),), (S(2, 2),))
        assert c.maps[0].to_dense() == [[0]]

    def test_gr36_shape(self):
        c = build_complex(6, 3, "cohomological")
        assert sum(c.sizes()) == 20
        assert c.sizes() == [1, 1, 2, 3, 3, 3, 3, 2, 1, 1]

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_point(self, n):
        for k in (0, n):
            c = build_complex(n, k)
            assert c.sizes() == [1] and c.maps == ()

    def test_size_limit(self):
        with pytest.raises(UnsupportedSize):
            build_complex(65, 1)

    def test_transpose(self):
        coh = build_complex(7, 3, Direction.COHOMOLOGICAL)
        hom = build_complex(7, 3, Direction.HOMOLOGICAL)
        for a, b in zip(coh.maps, hom.maps):
            assert a.transpose() == b
            dense_a, dense_b = a.to_dense(), b.to_dense()
            assert dense_b == [list(col) for col in zip(*dense_a)] or not dense_a

    @pytest.mark.parametrize("n", range(1, 11))
    def test_differential_squares_to_zero(self, n):
        for k in range(n + 1):
            for direction in Direction:
                c = build_complex(n, k, direction)
                for _, composite in c.composites():
                    assert composite.is_zero()

    @pytest.mark.parametrize("n", range(1, 10))
    def test_entries_are_plus_minus_two(self, n):
        for k in range(n + 1):
            c = build_complex(n, k)
            assert c.sizes() == cell_counts(n, k)
            for m in c.maps:
                assert all(abs(v) == 2 for _, _, v in m.entries())
                assert all(len(col) <= k for col in m.columns)


def test_sparse_matmul():
    a = SparseMatrix(2, 2, (((0, 1), (1, 3)), ((1, 2),)))
    b = SparseMatrix(2, 1, (((0, 1), (1, 1)),))
    assert matmul(a, b).to_dense() == [[1], [5]]
    with pytest.raises(InvalidArgument):
        matmul(b, b)


def test_euler_characteristic():
    assert euler_characteristic(build_complex(2, 1)) == 0
    assert euler_characteristic(build_complex(3, 1)) == 1
    assert euler_characteristic(build_complex(4, 2)) == 2


@pytest.mark.parametrize("n", range(1, 10))
def test_euler_characteristic_matches_rational_betti(n):
    for k in range(n + 1):
        c = build_complex(n, k)
        h = homology_with_coefficients(c, CoefficientRing.rationals())
        assert euler_characteristic(c) == sum((-1) ** g.degree * g.free_rank for g in h.groups)


@pytest.mark.parametrize("n", range(1, 10))
def test_mod2_differentials_vanish(n):
    for k in range(n + 1):
        c = build_complex(n, k)
        for m in c.maps:
            assert all(v % 2 == 0 for _, _, v in m.entries())
        h = homology_with_coefficients(c, CoefficientRing.mod(2))
        assert h.free_ranks() == cell_counts(n, k)
