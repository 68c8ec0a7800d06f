"""
Checks that tie independent computations of the same object together: the
lattice enumeration against the symbolic sums, the odd-number sum regrouped
into cube blocks, the three forms of the base-3 block sum, the telescoped
differences against the identities they prove, and the Gaussian binomial
product formula against both Pascal recurrences.
"""

from typing import Dict

from app.algebra.qcalc import gauss_pascal_high, gauss_pascal_low, gauss_product, triangular
from app.algebra.qpoly import poly_sum, rf_to_poly
from app.core.errors import InvalidParams
from app.verify.catalog import eq10_lhs, eq11_lhs, eq14_lhs, eq30_lhs, eq30_mid_form, eq30_rhs
from app.verify.engine import build_polynomial
from app.verify.lattice import WeightedSquare, lattice_theorem_sum
from app.verify.report import Stopwatch, VerificationReport, combine, make_report
from app.verify.telescope import DifferenceKind, telescoped_difference_sum

# difference kind -> the full identity its telescoped sum proves
DIFFERENCE_TARGETS: Dict[DifferenceKind, str] = {
    DifferenceKind.garrett_hummel: "eq6_garrett_hummel",
    DifferenceKind.warnaar: "eq7_warnaar",
    DifferenceKind.zhao_feng: "eq8_zhao_feng",
    DifferenceKind.triangular_qint: "eq10_theorem1",
    DifferenceKind.odd_square: "eq11_odd_sum",
}


def _require_n(n: int, lo: int = 1) -> None:
    if n < lo:
        raise InvalidParams(f"cross-check needs n >= {lo}, got {n}")


def lattice_vs_symbolic(n: int) -> VerificationReport:
    """Enumerated region weights equal the symbolic sum and the right-hand side."""
    _require_n(n)
    watch = Stopwatch()
    params = {"n": n}
    enumerated = lattice_theorem_sum(n)
    checks = [
        make_report("lattice_vs_symbolic[lhs]", params, lhs=enumerated, rhs=rf_to_poly(eq10_lhs(n))),
        make_report("lattice_vs_symbolic[rhs]", params, lhs=WeightedSquare(n=triangular(n)).weight(),
                    rhs=build_polynomial("eq10_theorem1", "rhs", params)),
    ]
    return combine("lattice_vs_symbolic", params, checks, watch=watch)


def second_proof_chain(n: int) -> VerificationReport:
    """
    The odd-number sum up to T(n), grouped into consecutive blocks of j terms,
    is sum_j q^{T(n)-T(j)} (block j). Each block is a Wheatstone group, and the
    grouped sum is the cube sum; both ends of the chain must agree.
    """
    _require_n(n)
    watch = Stopwatch()
    params = {"n": n}
    t = triangular(n)
    odd_sum = rf_to_poly(eq11_lhs(t))
    grouped = poly_sum(rf_to_poly(eq14_lhs(j)).shift(t - triangular(j)) for j in range(1, n + 1))
    cubes = rf_to_poly(eq10_lhs(n))
    checks = [
        make_report("second_proof[regroup]", params, lhs=odd_sum, rhs=grouped),
        make_report("second_proof[blocks]", params, lhs=grouped, rhs=cubes),
        make_report("second_proof[rhs]", params,
                    lhs=build_polynomial("eq11_odd_sum", "rhs", {"n": t}),
                    rhs=build_polynomial("eq10_theorem1", "rhs", params)),
    ]
    return combine("second_proof", params, checks, watch=watch)


def eq30_three_forms(n: int) -> VerificationReport:
    """Term-by-term sum, block sum over powers of 3 and the Gaussian binomial all agree."""
    _require_n(n, 0)
    watch = Stopwatch()
    params = {"n": n}
    lhs, mid, rhs = (rf_to_poly(f(n)) for f in (eq30_lhs, eq30_mid_form, eq30_rhs))
    checks = [
        make_report("eq30[lhs=mid]", params, lhs=lhs, rhs=mid),
        make_report("eq30[mid=rhs]", params, lhs=mid, rhs=rhs),
    ]
    return combine("eq30_three_forms", params, checks, watch=watch)


def difference_sum_vs_identity(kind: DifferenceKind, n: int) -> VerificationReport:
    """The telescoped closed forms reproduce both sides of the identity they prove."""
    _require_n(n)
    kind = DifferenceKind(kind)
    target = DIFFERENCE_TARGETS[kind]
    watch = Stopwatch()
    params = {"n": n}
    total = telescoped_difference_sum(kind, n)
    checks = [
        make_report(f"{target}[lhs]", params, lhs=total, rhs=build_polynomial(target, "lhs", params)),
        make_report(f"{target}[rhs]", params, lhs=total, rhs=build_polynomial(target, "rhs", params)),
    ]
    return combine(f"difference_sum[{kind.value}]", params, checks, watch=watch)


def gauss_agreement(n: int, k: int) -> VerificationReport:
    if n < 0:
        raise InvalidParams(f"gauss agreement needs n >= 0, got {n}")
    watch = Stopwatch()
    params = {"n": n, "k": k}
    product = gauss_product(n, k)
    checks = [
        make_report("gauss[low]", params, lhs=product, rhs=gauss_pascal_low(n, k)),
        make_report("gauss[high]", params, lhs=product, rhs=gauss_pascal_high(n, k)),
    ]
    return combine("gauss_agreement", params, checks, watch=watch)
