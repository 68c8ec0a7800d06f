"""
Telescoping sums over q-integers and the difference identities behind them.

For a positive sequence a(1), a(2), ... both

    sum_j q^{a(1)+...+a(j-1)} [a(j)]_q      (forward)
    sum_j q^{a(j+1)+...+a(n)} [a(j)]_q      (backward)

collapse to [a(1)+...+a(n)]_q. The difference identities are the single steps
of the telescoping proofs for the square-of-binomial sums.
"""

import random
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from app.algebra.qcalc import gauss_binomial, q_int, triangular
from app.algebra.qpoly import ONE, LaurentPoly, RationalFn, monomial, poly_sum, rf_to_poly
from app.core.config import Config
from app.core.errors import InvalidParams
from app.verify.report import Stopwatch, VerificationReport, make_check, make_report


class SequenceSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    term: Callable[[int], int]

    def values(self, n: int) -> List[int]:
        out = []
        for j in range(1, n + 1):
            v = self.term(j)
            if not isinstance(v, int) or v < 1:
                raise InvalidParams(f"sequence {self.name!r} has a({j}) = {v!r}; terms must be positive integers")
            out.append(v)
        return out


BUILTIN_SEQUENCES: Dict[str, SequenceSpec] = {
    s.name: s
    for s in (
        SequenceSpec(name="1", term=lambda j: 1),
        SequenceSpec(name="j", term=lambda j: j),
        SequenceSpec(name="j^2", term=lambda j: j * j),
        SequenceSpec(name="j^3", term=lambda j: j ** 3),
        SequenceSpec(name="2j-1", term=lambda j: 2 * j - 1),
        SequenceSpec(name="(3^j-1)/2", term=lambda j: (3 ** j - 1) // 2),
    )
}

CUBES = BUILTIN_SEQUENCES["j^3"]


def random_sequence(seed: int, high: int = 40) -> SequenceSpec:
    """Seeded positive sequence; a(j) depends only on (seed, j)."""
    return SequenceSpec(
        name=f"random[{seed}]",
        term=lambda j: random.Random(seed * 1_000_003 + j).randint(1, high),
    )


def random_sequences(count: int = Config.RANDOM_SEQUENCE_CASES,
                     base_seed: int = Config.RANDOM_SEQUENCE_SEED) -> List[SequenceSpec]:
    return [random_sequence(base_seed + i) for i in range(count)]


def _require_n(n: int) -> None:
    if n < 1:
        raise InvalidParams(f"telescoping sums need n >= 1, got {n}")


def forward_sum(seq: SequenceSpec, n: int) -> LaurentPoly:
    a = seq.values(n)
    parts, offset = [], 0
    for v in a:
        parts.append(q_int(v).shift(offset))
        offset += v
    return poly_sum(parts)


def backward_sum(seq: SequenceSpec, n: int) -> LaurentPoly:
    a = seq.values(n)
    parts, offset = [], 0
    for v in reversed(a):
        parts.append(q_int(v).shift(offset))
        offset += v
    return poly_sum(parts)


def telescope_total(seq: SequenceSpec, n: int) -> LaurentPoly:
    return q_int(sum(seq.values(n)))


def _scaled(a: List[int]) -> LaurentPoly:
    """(1-q) times sum_j q^{offset(j)} [a(j)]_q, offsets taken in the order given."""
    parts, offset = [], 0
    for v in a:
        parts.append(monomial(1, offset) - monomial(1, offset + v))
        offset += v
    return poly_sum(parts)


def forward_scaled(seq: SequenceSpec, n: int) -> Tuple[LaurentPoly, LaurentPoly]:
    """
    Both sides of the forward telescope multiplied by 1 - q:
    sum_j q^{S(j-1)} (1 - q^{a(j)}) against 1 - q^{S(n)}.
    Every summand has two terms, so S(n) may be astronomically large.
    """
    a = seq.values(n)
    return _scaled(a), ONE - monomial(1, sum(a))


def backward_scaled(seq: SequenceSpec, n: int) -> Tuple[LaurentPoly, LaurentPoly]:
    a = seq.values(n)
    return _scaled(list(reversed(a))), ONE - monomial(1, sum(a))


def _telescope(rid: str, seq: SequenceSpec, n: int,
               dense: Callable[[SequenceSpec, int], LaurentPoly],
               scaled: Callable[[SequenceSpec, int], Tuple[LaurentPoly, LaurentPoly]],
               dense_limit: Optional[int]) -> VerificationReport:
    _require_n(n)
    watch = Stopwatch()
    limit = Config.TELESCOPE_DENSE_LIMIT if dense_limit is None else dense_limit
    if sum(seq.values(n)) <= limit:
        lhs, rhs = dense(seq, n), telescope_total(seq, n)
    else:
        # 1 - q is not a zero divisor, so the scaled sides agree iff the dense ones do
        lhs, rhs = scaled(seq, n)
    return make_report(rid, {"n": n}, lhs=lhs, rhs=rhs, watch=watch)


def forward_telescope(seq: SequenceSpec, n: int, dense_limit: Optional[int] = None) -> VerificationReport:
    """Dense [S(n)]_q comparison while S(n) <= dense_limit, the (1 - q)-scaled form above it."""
    return _telescope(f"forward_telescope[{seq.name}]", seq, n, forward_sum, forward_scaled, dense_limit)


def backward_telescope(seq: SequenceSpec, n: int, dense_limit: Optional[int] = None) -> VerificationReport:
    return _telescope(f"backward_telescope[{seq.name}]", seq, n, backward_sum, backward_scaled, dense_limit)


def partial_sum_consistency(seq: SequenceSpec, n: int) -> VerificationReport:
    """
    Every prefix m <= n satisfies the inductive steps
      [S(m-1)] + q^{S(m-1)} [a(m)] = [S(m)]
      q^{a(m)} [S(m-1)] + [a(m)]   = [S(m)]
    and the running forward sum equals [S(m)].
    """
    _require_n(n)
    watch = Stopwatch()
    rid = f"partial_sums[{seq.name}]"
    running = LaurentPoly()
    total = 0
    for m, v in enumerate(seq.values(n), start=1):
        prev = q_int(total)
        running = running + q_int(v).shift(total)
        target = q_int(total + v)
        forward_step = prev + q_int(v).shift(total)
        backward_step = prev.shift(v) + q_int(v)
        for got in (running, forward_step, backward_step):
            if got != target:
                return make_report(rid, {"n": n, "m": m}, lhs=got, rhs=target, watch=watch)
        total += v
    return make_check(rid, {"n": n}, True, watch=watch)


# ------------------------ difference identities ------------------------

class DifferenceKind(str, Enum):
    garrett_hummel = "garrett_hummel"
    warnaar = "warnaar"
    zhao_feng = "zhao_feng"
    triangular_qint = "triangular_qint"
    odd_square = "odd_square"


def _gauss_square_gap(n: int, shift: int) -> LaurentPoly:
    top, low = gauss_binomial(n + 1, 2), gauss_binomial(n, 2)
    return top * top - (low * low).shift(shift)


def difference_sides(kind: DifferenceKind, n: int) -> Tuple[LaurentPoly, RationalFn]:
    """(difference of consecutive squares, claimed closed form) at index n."""
    kind = DifferenceKind(kind)
    qn = q_int(n)
    if kind is DifferenceKind.garrett_hummel:
        return (_gauss_square_gap(n, 0),
                RationalFn((qn * qn * (q_int(n - 1) + q_int(n + 1))).shift(n - 1), q_int(2)))
    if kind is DifferenceKind.warnaar:
        return _gauss_square_gap(n, 2), RationalFn.from_poly(qn * qn * q_int(n, 2))
    if kind is DifferenceKind.zhao_feng:
        return (_gauss_square_gap(n, 4),
                RationalFn(qn * qn * (ONE + monomial(1, 2) - monomial(2, n + 1)), ONE - monomial(1, 2)))
    if kind is DifferenceKind.triangular_qint:
        top, low = q_int(triangular(n)), q_int(triangular(n - 1))
        return top * top - (low * low).shift(n), RationalFn.from_poly(qn * q_int(n * n))
    prev = q_int(n - 1)
    return qn * qn - (prev * prev).shift(1), RationalFn.from_poly(q_int(2 * n - 1))


def difference_identity(kind: DifferenceKind, n: int) -> VerificationReport:
    """Raises NotPolynomial when a fractional closed form fails to cancel."""
    _require_n(n)
    kind = DifferenceKind(kind)
    watch = Stopwatch()
    lhs, rhs = difference_sides(kind, n)
    return make_report(f"difference[{kind.value}]", {"n": n}, lhs=lhs, rhs=rf_to_poly(rhs), watch=watch)


_WEIGHT_EXPONENT: Dict[DifferenceKind, Callable[[int], int]] = {
    DifferenceKind.garrett_hummel: lambda j: 0,
    DifferenceKind.warnaar: lambda j: 2 * j,
    DifferenceKind.zhao_feng: lambda j: 4 * j,
    DifferenceKind.triangular_qint: triangular,
    DifferenceKind.odd_square: lambda j: j,
}


def telescope_top(kind: DifferenceKind, n: int) -> LaurentPoly:
    """The value the weighted differences collapse to."""
    kind = DifferenceKind(kind)
    if kind is DifferenceKind.triangular_qint:
        t = q_int(triangular(n))
        return t * t
    if kind is DifferenceKind.odd_square:
        return q_int(n) * q_int(n)
    g = gauss_binomial(n + 1, 2)
    return g * g


def telescoped_difference_sum(kind: DifferenceKind, n: int) -> LaurentPoly:
    """
    q^{A(n)} * sum_j q^{-A(j)} * closed_form(j), j = 1..n.
    The weights are Laurent monomials; the total must come out ordinary.
    """
    kind = DifferenceKind(kind)
    weight = _WEIGHT_EXPONENT[kind]
    inner = poly_sum(
        monomial(1, -weight(j)) * rf_to_poly(difference_sides(kind, j)[1]) for j in range(1, n + 1)
    )
    return monomial(1, weight(n)) * inner


def verify_telescoped_difference(kind: DifferenceKind, n: int) -> VerificationReport:
    _require_n(n)
    kind = DifferenceKind(kind)
    watch = Stopwatch()
    return make_report(f"telescoped[{kind.value}]", {"n": n},
                       lhs=telescoped_difference_sum(kind, n), rhs=telescope_top(kind, n), watch=watch)


def _one_minus(e: int) -> LaurentPoly:
    return ONE - monomial(1, e)


def general_difference(n: int, a: int) -> VerificationReport:
    """
    [n+1 2]^2 - q^{2a}[n 2]^2
      = (1-q^n)^2 (1-q^{n+1} - (q^a - q^{n-1+a})) (1-q^{n+1} + (q^a - q^{n-1+a}))
        / ((1-q)^2 (1-q^2)^2)
    """
    _require_n(n)
    if a < 0:
        raise InvalidParams(f"general difference needs a >= 0, got {a}")
    watch = Stopwatch()
    lhs = _gauss_square_gap(n, 2 * a)
    gap = monomial(1, a) - monomial(1, n - 1 + a)
    head = _one_minus(n + 1)
    num = _one_minus(n) ** 2 * (head - gap) * (head + gap)
    den = _one_minus(1) ** 2 * _one_minus(2) ** 2
    rhs = RationalFn(num, den)
    return make_report("general_difference", {"n": n, "a": a},
                       lhs=lhs, rhs=rf_to_poly(rhs), watch=watch)
