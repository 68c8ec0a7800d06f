"""Telescoping sums, difference identities and their telescoped totals."""

import pytest

from app.algebra.qcalc import q_int
from app.algebra.qpoly import ONE, Q, LaurentPoly, eval_at_one, monomial
from app.core.errors import InvalidParams
from app.verify.telescope import (
    BUILTIN_SEQUENCES,
    CUBES,
    DifferenceKind,
    SequenceSpec,
    backward_scaled,
    backward_sum,
    backward_telescope,
    difference_identity,
    forward_scaled,
    forward_sum,
    forward_telescope,
    general_difference,
    partial_sum_consistency,
    random_sequence,
    random_sequences,
    telescope_top,
    telescope_total,
    telescoped_difference_sum,
    verify_telescoped_difference,
)

SEQUENCE_CASES = [(name, n) for name in BUILTIN_SEQUENCES for n in range(1, 31)]


def test_forward_sum_small():
    seq = SequenceSpec(name="1,2", term=lambda j: j)
    assert forward_sum(seq, 2) == q_int(3)
    assert backward_sum(seq, 2) == q_int(3)


@pytest.mark.parametrize("name,n", SEQUENCE_CASES)
def test_builtin_sequences_telescope(name, n):
    seq = BUILTIN_SEQUENCES[name]
    assert forward_telescope(seq, n).passed
    assert backward_telescope(seq, n).passed


@pytest.mark.parametrize("seq", random_sequences(), ids=lambda s: s.name)
def test_random_sequences_telescope(seq):
    for n in range(1, 31):
        assert forward_telescope(seq, n).passed
        assert backward_telescope(seq, n).passed
    assert partial_sum_consistency(seq, 30).passed


def test_random_sequence_is_deterministic():
    assert random_sequence(7).values(10) == random_sequence(7).values(10)
    assert all(1 <= v <= 40 for v in random_sequence(7).values(50))


def test_cube_telescope_report():
    report = forward_telescope(CUBES, 3)
    assert report.id == "forward_telescope[j^3]"
    assert report.params == {"n": 3}
    assert report.outcome == "pass"


@pytest.mark.parametrize("name", list(BUILTIN_SEQUENCES))
def test_partial_sum_consistency(name):
    assert partial_sum_consistency(BUILTIN_SEQUENCES[name], 8).passed


def test_nonpositive_term_rejected():
    bad = SequenceSpec(name="j-2", term=lambda j: j - 2)
    with pytest.raises(InvalidParams):
        bad.values(3)


def test_telescope_needs_n():
    with pytest.raises(InvalidParams):
        forward_telescope(CUBES, 0)


@pytest.mark.parametrize("kind", list(DifferenceKind))
def test_difference_identities(kind):
    for n in range(1, 41):
        report = difference_identity(kind, n)
        assert report.passed, report


def test_difference_kind_rejects_unknown():
    with pytest.raises(ValueError):
        DifferenceKind("bogus")


@pytest.mark.parametrize("kind", list(DifferenceKind))
def test_telescoped_differences(kind):
    for n in range(1, 13):
        assert verify_telescoped_difference(kind, n).passed


def test_telescoped_sum_passes_through_laurent_weights():
    # the n = 1 closed form weighted by q^{-T(1)} has a negative exponent before the final shift
    total = telescoped_difference_sum(DifferenceKind.triangular_qint, 4)
    assert total.is_ordinary
    assert total == telescope_top(DifferenceKind.triangular_qint, 4) == q_int(10) ** 2


def test_odd_square_top():
    assert telescope_top(DifferenceKind.odd_square, 3) == LaurentPoly({0: 1, 1: 2, 2: 3, 3: 2, 4: 1})


@pytest.mark.parametrize("a", [0, 1, 2])
def test_general_difference(a):
    for n in range(1, 21):
        assert general_difference(n, a).passed


def test_general_difference_middle_exponent():
    for n in range(1, 21, 2):
        assert general_difference(n, (n - 1) // 2).passed


def test_general_difference_rejects_negative_a():
    with pytest.raises(InvalidParams):
        general_difference(3, -1)


@pytest.mark.parametrize("name", ["j", "j^2", "2j-1"])
def test_classical_content(name):
    seq = BUILTIN_SEQUENCES[name]
    for n in range(1, 15):
        total = sum(seq.values(n))
        assert eval_at_one(forward_sum(seq, n)) == eval_at_one(backward_sum(seq, n)) == total


def test_cube_examples():
    assert forward_sum(CUBES, 2) == q_int(1) + q_int(8).shift(1) == q_int(9)
    assert backward_sum(CUBES, 2) == q_int(1).shift(8) + q_int(8)


@pytest.mark.parametrize("name", ["j", "j^3", "2j-1"])
def test_scaled_form_is_dense_form_times_one_minus_q(name):
    seq = BUILTIN_SEQUENCES[name]
    for n in range(1, 9):
        lhs, rhs = forward_scaled(seq, n)
        assert lhs == (ONE - Q) * forward_sum(seq, n)
        assert rhs == (ONE - Q) * telescope_total(seq, n)
        lhs, rhs = backward_scaled(seq, n)
        assert lhs == (ONE - Q) * backward_sum(seq, n)


def test_scaled_path_when_dense_limit_exceeded():
    seq = BUILTIN_SEQUENCES["j^2"]
    for n in range(1, 11):
        assert forward_telescope(seq, n, dense_limit=0).passed
        assert backward_telescope(seq, n, dense_limit=0).passed


def test_scaled_telescope_at_thirty():
    seq = BUILTIN_SEQUENCES["(3^j-1)/2"]
    total = sum(seq.values(30))
    assert total > 10 ** 14
    lhs, rhs = forward_scaled(seq, 30)
    assert rhs == ONE - monomial(1, total)
    assert lhs == rhs
    assert len(lhs) == 2


def test_scaled_form_catches_a_wrong_total():
    seq = SequenceSpec(name="skip", term=lambda j: j)
    lhs, _ = forward_scaled(seq, 5)
    assert lhs != ONE - monomial(1, 16)
