"""
Weighted lattice squares, hooks and regions.

S_n = {(i, j) : 0 <= i, j < n} with point weight q^{i + (n-1-j)}. Rendered as a
matrix, j indexes rows top to bottom and i indexes columns, so the bottom-left
entry is q^0. The hook h_k is the set of points with max(i, j) = k-1, and the
region R_j of S_{T(n)} is the union of the hooks h_{T(j-1)+1} .. h_{T(j)}.
"""

from collections import Counter
from typing import FrozenSet, Iterable, List, NamedTuple

from pydantic import BaseModel, ConfigDict, Field

from app.algebra.qcalc import q_int, triangular
from app.algebra.qpoly import ONE, LaurentPoly, RationalFn, monomial, poly_sum, render, rf_to_poly
from app.core.errors import IndexOutOfRange, InvalidParams, PointOutOfRange
from app.core.logger import logger
from app.verify.report import Stopwatch, VerificationReport, combine, make_check, make_report


class LatticePoint(NamedTuple):
    i: int
    j: int


PointSet = FrozenSet[LatticePoint]


class WeightedSquare(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)

    def exponent(self, p: LatticePoint) -> int:
        return p.i + (self.n - 1 - p.j)

    def contains(self, p: LatticePoint) -> bool:
        return 0 <= p.i < self.n and 0 <= p.j < self.n

    def points(self) -> PointSet:
        return frozenset(LatticePoint(i, j) for i in range(self.n) for j in range(self.n))

    def weight(self) -> LaurentPoly:
        return weight_of(self.points(), self.n)

    def exponent_rows(self) -> List[List[int]]:
        """Weight exponents, rows top to bottom."""
        return [[self.exponent(LatticePoint(i, j)) for i in range(self.n)] for j in range(self.n)]


class Hook(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1)
    n: int = Field(..., ge=1)

    def points(self) -> PointSet:
        return hook_points(self.k, self.n)

    def closed_weight(self) -> LaurentPoly:
        return q_int(2 * self.k - 1).shift(self.n - self.k)


class Region(BaseModel):
    model_config = ConfigDict(frozen=True)

    j: int = Field(..., ge=1)
    n: int = Field(..., ge=1)

    @property
    def side(self) -> int:
        """Side of the ambient square S_{T(n)}."""
        return triangular(self.n)

    @property
    def hooks(self) -> range:
        return range(triangular(self.j - 1) + 1, triangular(self.j) + 1)

    def points(self) -> PointSet:
        return region_points(self.j, self.n)

    def closed_weight(self) -> LaurentPoly:
        return (q_int(self.j) * q_int(self.j * self.j)).shift(self.side - triangular(self.j))


def weight_of(points: Iterable[LatticePoint], n: int) -> LaurentPoly:
    square = WeightedSquare(n=n)
    counts: Counter = Counter()
    for p in points:
        p = LatticePoint(*p)
        if not square.contains(p):
            raise PointOutOfRange(f"point {tuple(p)} lies outside S_{n}")
        counts[square.exponent(p)] += 1
    return LaurentPoly(counts)


def base_point(points: Iterable[LatticePoint], n: int) -> LatticePoint:
    """The unique minimal-weight point of an axis-aligned block."""
    square = WeightedSquare(n=n)
    pts = sorted(points, key=lambda p: (square.exponent(p), p))
    if not pts:
        raise InvalidParams("base point of an empty set")
    if len(pts) > 1 and square.exponent(pts[0]) == square.exponent(pts[1]):
        raise InvalidParams("minimal weight is attained twice; no unique base point")
    return pts[0]


def hook_points(k: int, n: int) -> PointSet:
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"hook index k={k} outside 1..{n}")
    arm = {LatticePoint(k - 1, t) for t in range(k)}
    arm |= {LatticePoint(t, k - 1) for t in range(k - 1)}
    return frozenset(arm)


def _partition_problem(parts: List[PointSet], whole: PointSet) -> str:
    union: set = set()
    for idx, part in enumerate(parts, start=1):
        overlap = union & part
        if overlap:
            return f"part {idx} overlaps earlier parts at {sorted(overlap)[:3]}"
        union |= part
    if union != whole:
        return f"union misses {len(whole - union)} points and adds {len(union - whole)}"
    return ""


def verify_hook_partition(n: int) -> VerificationReport:
    """h_1..h_n partition S_n and sum_k q^{n-k}[2k-1] = [n]^2."""
    if n < 1:
        raise InvalidParams(f"hook partition needs n >= 1, got {n}")
    watch = Stopwatch()
    square = WeightedSquare(n=n)
    hooks = [Hook(k=k, n=n) for k in range(1, n + 1)]
    point_sets = [h.points() for h in hooks]
    problem = _partition_problem(point_sets, square.points())
    checks = [make_check("hook_partition", {"n": n}, not problem, detail=problem)]
    weights = []
    for hook, pts in zip(hooks, point_sets):
        w = weight_of(pts, n)
        weights.append(w)
        checks.append(make_report("hook_weight", {"n": n, "k": hook.k}, lhs=w, rhs=hook.closed_weight()))
    qn = q_int(n)
    checks.append(make_report("hook_sum", {"n": n}, lhs=poly_sum(weights), rhs=qn * qn))
    return combine("hook_partition", {"n": n}, checks, watch=watch)


def region_points(j: int, n: int) -> PointSet:
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"region index j={j} outside 1..{n}")
    side = triangular(n)
    pts: set = set()
    for k in Region(j=j, n=n).hooks:
        pts |= hook_points(k, side)
    return frozenset(pts)


def verify_region_weight(j: int, n: int) -> VerificationReport:
    """w(R_j) = q^{T(n)-T(j)} [j][j^2] and |R_j| = j^3."""
    pts = region_points(j, n)
    watch = Stopwatch()
    region = Region(j=j, n=n)
    size_ok = len(pts) == j ** 3
    checks = [
        make_check("region_size", {"j": j, "n": n}, size_ok, detail=f"|R_{j}| = {len(pts)}, expected {j ** 3}"),
        make_report("region_weight", {"j": j, "n": n}, lhs=weight_of(pts, region.side), rhs=region.closed_weight()),
    ]
    return combine("region_weight", {"j": j, "n": n}, checks, watch=watch)


def verify_region_partition(n: int) -> VerificationReport:
    """R_1..R_n partition S_{T(n)} and their weights add up to [T(n)]^2."""
    if n < 1:
        raise InvalidParams(f"region partition needs n >= 1, got {n}")
    watch = Stopwatch()
    side = triangular(n)
    regions = [region_points(j, n) for j in range(1, n + 1)]
    problem = _partition_problem(regions, WeightedSquare(n=side).points())
    checks = [make_check("region_partition", {"n": n}, not problem, detail=problem)]
    checks.extend(verify_region_weight(j, n) for j in range(1, n + 1))
    qt = q_int(side)
    checks.append(make_report("region_sum", {"n": n}, lhs=lattice_theorem_sum(n), rhs=qt * qt))
    return combine("region_partition", {"n": n}, checks, watch=watch)


def lattice_theorem_sum(n: int) -> LaurentPoly:
    """sum_j w(R_j) by enumeration."""
    side = triangular(n)
    return poly_sum(weight_of(region_points(j, n), side) for j in range(1, n + 1))


def odd_region_identity(j: int) -> VerificationReport:
    """[j]^2 (1 + q^j + ... + q^{(j-1)j}) = [j]^2 [j]_{q^j} = [j][j^2] for odd j."""
    if j < 1 or j % 2 == 0:
        raise InvalidParams(f"odd region identity needs odd j >= 1, got {j}")
    watch = Stopwatch()
    qj = q_int(j)
    explicit = poly_sum(monomial(1, m * j) for m in range(j))
    first = qj * qj * explicit
    second = qj * qj * q_int(j, j)
    third = qj * q_int(j * j)
    checks = [
        make_report("odd_region[sum]", {"j": j}, lhs=first, rhs=second),
        make_report("odd_region[product]", {"j": j}, lhs=second, rhs=third),
    ]
    return combine("odd_region", {"j": j}, checks, watch=watch)


def even_region_identity(ell: int) -> VerificationReport:
    """
    With j = 2l:
      [2l][l] (sum_{m=0}^{2l-2} q^{l+2lm} [2l]/[l] + q^{4l^2-l} + 1) = [2l][4l^2]
    Every quotient in the chain must cancel to a polynomial.
    """
    if ell < 1:
        raise InvalidParams(f"even region identity needs l >= 1, got {ell}")
    watch = Stopwatch()
    params = {"ell": ell}
    j, top = 2 * ell, 4 * ell * ell
    q2l, ql = q_int(j), q_int(ell)

    ratio = rf_to_poly(RationalFn(q2l, ql))
    squares = poly_sum(ratio.shift(ell + j * m) for m in range(j - 1))
    inner = squares + monomial(1, top - ell) + ONE
    lhs = q2l * ql * inner

    geometric = rf_to_poly(RationalFn(monomial(1, ell) - monomial(1, top - ell), ONE - monomial(1, ell)))
    collapsed = rf_to_poly(RationalFn(ONE - monomial(1, top), ONE - monomial(1, ell)))
    checks = [
        make_report("even_region[squares]", params, lhs=squares, rhs=geometric),
        make_report("even_region[inner]", params, lhs=inner, rhs=collapsed),
        make_report("even_region[total]", params, lhs=lhs, rhs=q2l * ql * collapsed),
        make_report("even_region[closed]", params, lhs=lhs, rhs=q2l * q_int(top)),
    ]
    return combine("even_region", params, checks, watch=watch)


def odd_region_tiling(j: int, n: int) -> VerificationReport:
    """
    For odd j, R_j is tiled by j squares of side j: (j+1)/2 stacked in the
    vertical arm and (j-1)/2 side by side in the horizontal arm. Their base
    points carry the exponents T(n) - T(j) + m*j, m = 0..j-1.
    """
    if j % 2 == 0:
        raise InvalidParams(f"odd region tiling needs odd j, got {j}")
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"region index j={j} outside 1..{n}")
    watch = Stopwatch()
    params = {"j": j, "n": n}
    region = Region(j=j, n=n)
    side = region.side
    lo, hi = triangular(j - 1), triangular(j)
    corners = [(lo, t * j) for t in range(hi // j)] + [(s * j, lo) for s in range(lo // j)]
    blocks = [
        frozenset(LatticePoint(x + u, y + v) for u in range(j) for v in range(j)) for x, y in corners
    ]
    problem = _partition_problem(blocks, region.points())
    checks = [make_check("odd_tiling[cover]", params, not problem, detail=problem)]
    square = WeightedSquare(n=side)
    qj = q_int(j)
    bases = []
    for block in blocks:
        b = square.exponent(base_point(block, side))
        bases.append(b)
        checks.append(make_report("odd_tiling[block]", params, lhs=weight_of(block, side), rhs=(qj * qj).shift(b)))
    expected = [side - triangular(j) + m * j for m in range(j)]
    checks.append(make_check("odd_tiling[bases]", params, sorted(bases) == expected,
                             detail=f"base exponents {sorted(bases)}, expected {expected}"))
    logger.debug("[lattice] odd tiling j=%d n=%d blocks=%d", j, n, len(blocks))
    return combine("odd_tiling", params, checks, watch=watch)


# ------------------------ rendering ------------------------

def render_weight_matrix(n: int) -> str:
    """S_n as rows of monomials, top to bottom, space separated."""
    rows = WeightedSquare(n=n).exponent_rows()
    return "\n".join(" ".join(render(monomial(1, e)) for e in row) for row in rows)


def hook_membership(n: int) -> List[List[int]]:
    """Hook index of every cell, rows top to bottom."""
    return [[max(i, j) + 1 for i in range(n)] for j in range(n)]


def region_membership(n: int) -> List[List[int]]:
    """Region index of every cell of S_{T(n)}, rows top to bottom."""
    side = triangular(n)
    owner = {}
    for j in range(1, n + 1):
        for k in Region(j=j, n=n).hooks:
            owner[k] = j
    return [[owner[max(i, r) + 1] for i in range(side)] for r in range(side)]
