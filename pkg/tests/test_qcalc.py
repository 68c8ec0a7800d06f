"""Tests for q-integers and Gaussian binomials."""

from math import comb

import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from app.algebra import qcalc
from app.algebra.qcalc import (
    GaussSpec,
    QIntSpec,
    gauss_binomial,
    gauss_pascal_high,
    gauss_pascal_low,
    gauss_product,
    q_int,
    triangular,
)
from app.algebra.qpoly import ONE, ZERO, LaurentPoly, eval_at_one, substitute_power
from app.core.config import Config
from app.core.errors import InternalInconsistency, InvalidParams
from app.utils import cache


def test_triangular():
    assert [triangular(n) for n in range(6)] == [0, 1, 3, 6, 10, 15]
    with pytest.raises(InvalidParams):
        triangular(-1)


def test_q_int():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert q_int(3) == LaurentPoly({0: 1, 1: 1, 2: 1})
    assert q_int(3, 2) == LaurentPoly({0: 1, 2: 1, 4: 1})


@pytest.mark.parametrize("j", range(1, 21))
def test_square_base_power_identity(j):
    # [j]^2 [j]_{q^j} = [j][j^2], even j included
    assert q_int(j) ** 2 * q_int(j, j) == q_int(j) * q_int(j * j)


def test_q_int_rejects_negative():
    with pytest.raises(InvalidParams):
        q_int(-1)
    with pytest.raises(InvalidParams):
        q_int(3, 0)


@given(st.integers(0, 40), st.integers(1, 5))
def test_q_int_base_power_is_substitution(n, b):
    assert q_int(n, b) == substitute_power(q_int(n), b)
    assert eval_at_one(q_int(n, b)) == n


def test_spec_models():
    assert QIntSpec(n=4, base_power=2).build() == q_int(4, 2)
    assert GaussSpec(n=4, k=2).build() == gauss_binomial(4, 2)
    with pytest.raises(ValidationError):
        QIntSpec(n=-1)


def test_gauss_small():
    assert gauss_binomial(4, 2) == LaurentPoly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert gauss_binomial(5, 0) == ONE
    assert gauss_binomial(5, 5) == ONE


def test_gauss_out_of_range():
    assert gauss_binomial(3, 5) == ZERO
    assert gauss_binomial(3, -1) == ZERO
    with pytest.raises(InvalidParams):
        gauss_binomial(-1, 0)


@given(st.integers(0, 16), st.integers(0, 16))
def test_gauss_properties(n, k):
    g = gauss_binomial(n, k)
    if k > n:
        assert g == ZERO
        return
    assert g == gauss_binomial(n, n - k)
    assert eval_at_one(g) == comb(n, k)
    assert g.degree == k * (n - k)
    assert all(c > 0 for _, c in g.items())


def test_gauss_recurrences_agree():
    for n in range(31):
        for k in range(n + 1):
            product = gauss_product(n, k)
            assert product == gauss_pascal_low(n, k) == gauss_pascal_high(n, k), (n, k)


def test_gauss_memo(monkeypatch):
    monkeypatch.setattr(Config, "MEMO_ENABLED", True)
    first = gauss_binomial(9, 4)
    assert cache.size() >= 1
    assert gauss_binomial(9, 4) == first


def test_gauss_memo_disabled(monkeypatch):
    monkeypatch.setattr(Config, "MEMO_ENABLED", False)
    value = gauss_binomial(9, 4)
    assert cache.size() == 0
    monkeypatch.setattr(Config, "MEMO_ENABLED", True)
    assert gauss_binomial(9, 4) == value


def test_gauss_inconsistency_detected(monkeypatch):
    monkeypatch.setattr(Config, "MEMO_ENABLED", False)
    monkeypatch.setattr(qcalc, "gauss_pascal_low", lambda n, k: ZERO)
    with pytest.raises(InternalInconsistency):
        gauss_binomial(4, 2)


def test_gauss_above_crosscheck_limit(monkeypatch):
    monkeypatch.setattr(Config, "MEMO_ENABLED", False)
    monkeypatch.setattr(Config, "GAUSS_CROSSCHECK_LIMIT", 3)
    monkeypatch.setattr(qcalc, "gauss_pascal_low", lambda n, k: ZERO)
    assert eval_at_one(gauss_binomial(10, 3)) == comb(10, 3)
