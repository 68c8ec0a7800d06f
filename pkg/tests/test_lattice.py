import pytest

from app.algebra.qcalc import q_int
from app.algebra.qpoly import monomial, render
from app.core.errors import IndexOutOfRange, InvalidParams, PointOutOfRange
from app.verify.lattice import (
    Hook,
    LatticePoint,
    Region,
    WeightedSquare,
    base_point,
    even_region_identity,
    hook_membership,
    hook_points,
    odd_region_identity,
    odd_region_tiling,
    region_membership,
    region_points,
    render_weight_matrix,
    verify_hook_partition,
    verify_region_partition,
    verify_region_weight,
    weight_of,
)


def test_weight_matrix_six():
    rows = render_weight_matrix(6).splitlines()
    assert rows[0] == "q^5 q^6 q^7 q^8 q^9 q^10"
    assert rows[-1] == "1 q q^2 q^3 q^4 q^5"
    expected = [
        " ".join(render(monomial(1, i + 5 - r)) for i in range(6))
        for r in range(6)
    ]
    assert rows == expected
    cells = [row.split() for row in rows]
    assert sum(len(c) for c in cells) == 36
    assert (cells[-1][0], cells[-1][-1], cells[0][0], cells[0][-1]) == ("1", "q^5", "q^5", "q^10")


@pytest.mark.parametrize("n", range(1, 9))
def test_square_weight(n):
    assert WeightedSquare(n=n).weight() == q_int(n) ** 2


def test_hook_sizes():
    for k in range(1, 8):
        assert len(hook_points(k, 7)) == 2 * k - 1


def test_hook_closed_weight():
    hook = Hook(k=3, n=5)
    assert weight_of(hook.points(), 5) == hook.closed_weight() == q_int(5).shift(2)


@pytest.mark.parametrize("n", range(1, 13))
def test_hook_partition(n):
    assert verify_hook_partition(n).passed


def test_hook_out_of_range():
    with pytest.raises(IndexOutOfRange):
        hook_points(0, 3)
    with pytest.raises(IndexOutOfRange):
        hook_points(4, 3)


def test_point_out_of_range():
    with pytest.raises(PointOutOfRange):
        weight_of([LatticePoint(5, 0)], 3)


def test_region_hooks():
    assert Region(j=2, n=3).hooks == range(2, 4)
    assert Region(j=3, n=3).side == 6


@pytest.mark.parametrize("n", range(1, 9))
def test_region_partition(n):
    assert verify_region_partition(n).passed


def test_region_sizes_are_cubes():
    for n in range(1, 7):
        for j in range(1, n + 1):
            assert len(region_points(j, n)) == j ** 3
            assert verify_region_weight(j, n).passed


def test_region_out_of_range():
    with pytest.raises(IndexOutOfRange):
        region_points(4, 3)
    with pytest.raises(IndexOutOfRange):
        verify_region_weight(0, 3)


@pytest.mark.parametrize("j", range(1, 16, 2))
def test_odd_region_identity(j):
    assert odd_region_identity(j).passed


def test_odd_region_identity_rejects_even():
    with pytest.raises(InvalidParams):
        odd_region_identity(4)


@pytest.mark.parametrize("ell", range(1, 9))
def test_even_region_identity(ell):
    assert even_region_identity(ell).passed


def test_odd_region_tiling():
    for n in range(1, 8):
        for j in range(1, n + 1, 2):
            report = odd_region_tiling(j, n)
            assert report.passed, report


def test_odd_region_tiling_rejects():
    with pytest.raises(InvalidParams):
        odd_region_tiling(2, 4)
    with pytest.raises(IndexOutOfRange):
        odd_region_tiling(5, 3)


def test_base_point():
    block = [LatticePoint(i, j) for i in range(2) for j in range(2)]
    assert base_point(block, 3) == LatticePoint(0, 1)
    with pytest.raises(InvalidParams):
        base_point([LatticePoint(0, 0), LatticePoint(1, 1)], 3)
    with pytest.raises(InvalidParams):
        base_point([], 3)


def test_hook_membership():
    assert hook_membership(3) == [[1, 2, 3], [2, 2, 3], [3, 3, 3]]


def test_region_membership():
    assert region_membership(2) == [[1, 2, 2], [2, 2, 2], [2, 2, 2]]
