from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Dict, Iterable, List, Literal, Mapping, Optional, Sequence, Tuple, Union

from app.algebra.qpoly import LaurentPoly, RationalFn, eval_at_one, render, rf_to_poly
from app.core.config import Config
from app.core.errors import (
    InternalInconsistency,
    InvalidParams,
    NonzeroRemainder,
    NotPolynomial,
    UnknownIdentity,
)
from app.core.logger import logger
from app.verify.catalog import BY_ID, CATALOG, IdentityDescriptor
from app.verify.report import GridReport, Stopwatch, VerificationReport, make_error, make_report

Side = Literal["lhs", "rhs"]
RangeSpec = Union[Tuple[int, int], Sequence[int], range]

# raised while building a side; reported as an `error` outcome
BUILD_ERRORS = (NotPolynomial, NonzeroRemainder, InternalInconsistency)


def list_identities() -> List[IdentityDescriptor]:
    return list(CATALOG)


def get_descriptor(identity_id: str) -> IdentityDescriptor:
    try:
        return BY_ID[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def build_side(identity_id: str, side: Side, params: Mapping[str, int]) -> RationalFn:
    desc = get_descriptor(identity_id)
    values = desc.validate_params(params)
    if side == "lhs":
        return desc.lhs(**values)
    if side == "rhs":
        return desc.rhs(**values)
    raise InvalidParams(f"side must be 'lhs' or 'rhs', got {side!r}")


def _ordinary(r: RationalFn, side: Side) -> LaurentPoly:
    try:
        p = rf_to_poly(r)
    except NotPolynomial as e:
        raise NotPolynomial(f"{side}: {e}") from None
    if not p.is_ordinary:
        raise NotPolynomial(f"{side}: negative exponent q^{p.valuation} survives")
    return p


def build_polynomial(identity_id: str, side: Side, params: Mapping[str, int]) -> LaurentPoly:
    """build_side collapsed to an ordinary polynomial."""
    return _ordinary(build_side(identity_id, side, params), side)


def verify_instance(identity_id: str, params: Mapping[str, int]) -> VerificationReport:
    desc = get_descriptor(identity_id)
    values = desc.validate_params(params)
    watch = Stopwatch()
    sides: Dict[str, LaurentPoly] = {}
    for side in ("lhs", "rhs"):
        try:
            builder = desc.lhs if side == "lhs" else desc.rhs
            sides[side] = _ordinary(builder(**values), side)
        except BUILD_ERRORS as e:
            logger.warning("[engine] %s %s: %s", identity_id, values, e)
            message = str(e) if str(e).startswith(side) else f"{side}: {e}"
            return make_error(identity_id, values, message, watch=watch)
    report = make_report(identity_id, values, lhs=sides["lhs"], rhs=sides["rhs"], watch=watch)
    logger.debug("[engine] %s %s %s in %.1f ms", identity_id, values, report.outcome, report.elapsed_ms)
    return report


def _verify_job(job: Tuple[str, Dict[str, int]]) -> VerificationReport:
    return verify_instance(*job)


def _expand(axis: RangeSpec) -> List[int]:
    if isinstance(axis, range):
        values = list(axis)
    elif isinstance(axis, tuple) and len(axis) == 2 and all(isinstance(v, int) for v in axis):
        lo, hi = axis
        values = list(range(lo, hi + 1))
    else:
        values = [int(v) for v in axis]
    if not values:
        raise InvalidParams(f"empty parameter range {axis!r}")
    return values


def default_ranges(identity_id: str) -> Dict[str, Tuple[int, int]]:
    return dict(get_descriptor(identity_id).default_grid)


def assignments(identity_id: str, ranges: Optional[Mapping[str, RangeSpec]] = None) -> List[Dict[str, int]]:
    """Cartesian product in the descriptor's parameter order; missing parameters use the default grid."""
    desc = get_descriptor(identity_id)
    ranges = dict(ranges or {})
    unknown = sorted(set(ranges) - set(desc.params))
    if unknown:
        raise InvalidParams(f"{identity_id} has no parameter(s) {unknown}; expected {list(desc.params)}")
    axes = [_expand(ranges.get(name, desc.default_grid[name])) for name in desc.params]
    out = [dict(zip(desc.params, combo)) for combo in product(*axes)]
    for values in out:
        desc.validate_params(values)
    return out


def verify_grid(identity_id: str, ranges: Optional[Mapping[str, RangeSpec]] = None,
                workers: Optional[int] = None) -> GridReport:
    jobs = assignments(identity_id, ranges)
    workers = Config.GRID_WORKERS if workers is None else workers
    watch = Stopwatch()
    logger.info("[grid] %s: %d instance(s), workers=%d", identity_id, len(jobs), workers)

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_verify_job, [(identity_id, values) for values in jobs]))
    else:
        reports = [verify_instance(identity_id, values) for values in jobs]

    first_failure = next((r for r in reports if not r.passed), None)
    grid = GridReport(
        id=identity_id,
        ranges={name: sorted({values[name] for values in jobs}) for name in get_descriptor(identity_id).params},
        outcome=first_failure.outcome if first_failure else "pass",
        reports=reports,
        first_failure=first_failure,
        elapsed_ms=watch.ms,
    )
    logger.info("[grid] %s: %s in %.1f ms", identity_id, grid.outcome, grid.elapsed_ms)
    return grid


def classical_limit_check(identity_id: str, params: Mapping[str, int]) -> VerificationReport:
    """Both sides at q = 1 agree with each other and with the recorded integer statement."""
    desc = get_descriptor(identity_id)
    values = desc.validate_params(params)
    watch = Stopwatch()
    try:
        lhs = eval_at_one(_ordinary(desc.lhs(**values), "lhs"))
        rhs = eval_at_one(_ordinary(desc.rhs(**values), "rhs"))
    except BUILD_ERRORS as e:
        return make_error(identity_id, values, str(e), watch=watch)
    expected = desc.classical_value(**values)
    ok = lhs == rhs == expected
    return VerificationReport(
        id=identity_id,
        params=values,
        outcome="pass" if ok else "fail",
        lhs=None if ok else f"{lhs} (expected {expected})",
        rhs=None if ok else f"{rhs} (expected {expected})",
        elapsed_ms=watch.ms,
    )


def classical_values(identity_id: str, params: Mapping[str, int]) -> Tuple[int, int, int]:
    """(lhs at q=1, rhs at q=1, classical closed form)."""
    desc = get_descriptor(identity_id)
    values = desc.validate_params(params)
    return (
        eval_at_one(build_polynomial(identity_id, "lhs", values)),
        eval_at_one(build_polynomial(identity_id, "rhs", values)),
        desc.classical_value(**values),
    )


def render_side(identity_id: str, side: Side, params: Mapping[str, int]) -> str:
    return render(build_polynomial(identity_id, side, params))


def verify_all(ids: Optional[Iterable[str]] = None, workers: Optional[int] = None) -> List[GridReport]:
    return [verify_grid(i, None, workers) for i in (ids or [d.id for d in CATALOG])]
