"""
Catalog of the q-identities around the sum of cubes.

Every entry builds both sides as exact RationalFn values for one parameter
assignment. Sums are accumulated term by term; entries whose summands carry
explicit denominators stay in RationalFn arithmetic until the very end.
"""

from math import comb
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from app.algebra.qcalc import gauss_binomial, q_int, triangular
from app.algebra.qpoly import ONE, ZERO, LaurentPoly, RationalFn, monomial, poly_sum
from app.core.errors import InternalInconsistency, InvalidParams
from app.verify.telescope import CUBES, DifferenceKind, backward_sum, difference_sides, forward_sum, telescope_total

Builder = Callable[..., RationalFn]


class IdentityDescriptor(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    equation: str
    params: Tuple[str, ...]
    minimums: Dict[str, int]
    lhs: Builder
    rhs: Builder
    classical: str
    classical_value: Callable[..., int]
    default_grid: Dict[str, Tuple[int, int]]
    notes: str = ""

    def validate_params(self, params: Mapping[str, int]) -> Dict[str, int]:
        given = set(params)
        expected = set(self.params)
        if given != expected:
            missing = sorted(expected - given)
            extra = sorted(given - expected)
            raise InvalidParams(
                f"{self.id} takes parameters {list(self.params)}; missing {missing}, unexpected {extra}"
            )
        out: Dict[str, int] = {}
        for name in self.params:
            value = params[name]
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidParams(f"{self.id}: parameter {name} must be an integer, got {value!r}")
            low = self.minimums.get(name, 1)
            if value < low:
                raise InvalidParams(f"{self.id}: parameter {name} must be >= {low}, got {value}")
            out[name] = value
        return out


# ------------------------ helpers ------------------------

P = RationalFn.from_poly


def _q(e: int) -> LaurentPoly:
    return monomial(1, e)


def _qb(n: int, b: int) -> LaurentPoly:
    """[n]_{q^b}; base q^0 = 1 gives the constant n."""
    return monomial(n, 0) if b == 0 else q_int(n, b)


def _half(x: int) -> int:
    h, r = divmod(x, 2)
    if r:
        raise InternalInconsistency(f"exponent {x} expected to be even")
    return h


def _rsum(parts: Iterable[RationalFn]) -> RationalFn:
    total = P(ZERO)
    for part in parts:
        total = total + part
    return total


def _ps(parts: Iterable[LaurentPoly]) -> RationalFn:
    return P(poly_sum(parts))


def _gauss_sq(n: int) -> LaurentPoly:
    g = gauss_binomial(n + 1, 2)
    return g * g


def _tri_sq(n: int) -> LaurentPoly:
    t = q_int(triangular(n))
    return t * t


# ------------------------ builders ------------------------

def eq6_lhs(n: int) -> RationalFn:
    return _rsum(
        RationalFn((q_int(k) ** 2 * (q_int(k - 1) + q_int(k + 1))).shift(k - 1), q_int(2)) for k in range(1, n + 1)
    )


def eq7_lhs(n: int) -> RationalFn:
    return _ps((q_int(k) ** 2 * q_int(k, 2)).shift(2 * n - 2 * k) for k in range(1, n + 1))


def eq8_lhs(n: int) -> RationalFn:
    return _rsum(
        RationalFn((q_int(k) ** 2 * (ONE + _q(2) - monomial(2, k + 1))).shift(4 * (n - k)), ONE - _q(2))
        for k in range(0, n + 1)
    )


def eq9_lhs(n: int) -> RationalFn:
    return P(difference_sides(DifferenceKind.triangular_qint, n)[0])


def eq10_lhs(n: int) -> RationalFn:
    t = triangular(n)
    return _ps((q_int(j) * q_int(j * j)).shift(t - triangular(j)) for j in range(1, n + 1))


def eq11_lhs(n: int) -> RationalFn:
    return _ps(q_int(2 * k - 1).shift(n - k) for k in range(1, n + 1))


def eq14_lhs(n: int) -> RationalFn:
    return _ps(q_int(n * n - n + 2 * j - 1).shift(n - j) for j in range(1, n + 1))


def eq19_lhs(n: int, k: int) -> RationalFn:
    return _ps(gauss_binomial(j, k).shift(j - 1) for j in range(1, n + 1))


def eq20_lhs(n: int, k: int) -> RationalFn:
    return _ps(gauss_binomial(j, k).shift((k + 1) * (n - j)) for j in range(1, n + 1))


def cube_expansion_rhs(n: int) -> RationalFn:
    q23 = q_int(2) * q_int(3)
    return P((q23 * gauss_binomial(n, 3)).shift(3) + q23 * gauss_binomial(n, 2) + q_int(n).shift(n - 1))


def _eq21_tail(n: int) -> RationalFn:
    return RationalFn(gauss_binomial(n + 1, 2) * (ONE + _q(n) + _q(n + 1)), q_int(3))


def eq21_lhs(n: int) -> RationalFn:
    return _ps((q_int(j) ** 3).shift(j - 1) for j in range(1, n + 1))


def eq21_rhs(n: int) -> RationalFn:
    q23 = q_int(2) * q_int(3)
    head = (q23 * gauss_binomial(n + 1, 4)).shift(5) + (q23 * gauss_binomial(n + 1, 3)).shift(1)
    return P(head) + _eq21_tail(n)


def eq21_aux_lhs(n: int) -> RationalFn:
    return _ps(q_int(j).shift(2 * (j - 1)) for j in range(1, n + 1))


def eq24_lhs(n: int, k: int) -> RationalFn:
    nk, top = n ** k, n ** (k + 1)
    return _ps(q_int(top - nk + 2 * j - 1).shift(nk - j) for j in range(1, nk + 1))


def eq25_lhs(n: int) -> RationalFn:
    return _ps(q_int(n + 1 + 2 * j).shift(n - 1 - j) for j in range(n))


def eq26_lhs(n: int, m: int) -> RationalFn:
    return _ps(q_int(m * n + k, 2).shift(n - k) for k in range(n + 1))


def eq26_rhs(n: int, m: int) -> RationalFn:
    return P(gauss_binomial(n + 1, 2) * _qb(2 * m + 1, n))


def _thirds(n: int) -> Tuple[int, int, int]:
    """(3^n, first index, last index) of the n-th block of Eq. (29)."""
    p = 3 ** n
    return p, _half(p + 1), _half(3 * p - 1)


def eq29_lhs(n: int) -> RationalFn:
    p, lo, hi = _thirds(n)
    return _ps(q_int(j, 2).shift(_half(3 * p - 1 - 2 * j)) for j in range(lo, hi + 1))


def eq29_rhs(n: int) -> RationalFn:
    p = 3 ** n
    return P(q_int(p) * q_int(p, 2))


def eq30_lhs(n: int) -> RationalFn:
    p, _, hi = _thirds(n)
    return _ps(q_int(j, 2).shift(_half(3 * p - 2 * j - 1)) for j in range(1, hi + 1))


def eq30_mid_form(n: int) -> RationalFn:
    """sum_k q^{(3^{n+1} - 3^{k+1})/2} [3^k]_q [3^k]_{q^2}, k = 0..n."""
    top = 3 ** (n + 1)
    return _ps((q_int(3 ** k) * q_int(3 ** k, 2)).shift(_half(top - 3 ** (k + 1))) for k in range(n + 1))


def eq30_rhs(n: int) -> RationalFn:
    return P(gauss_binomial(_half(3 ** (n + 1) + 1), 2))


def eq31_lhs(n: int) -> RationalFn:
    return _ps(q_int(k, 2).shift(n - k) for k in range(n + 1))


def eq32_lhs(n: int) -> RationalFn:
    return _ps(q_int(2 * (n + 1) * j + 1).shift(n * n - 1 - (n + 1) * j) for j in range(n))


def eq33_lhs(n: int) -> RationalFn:
    return _ps(q_int((2 * k + 1) * n).shift(n * (n - 1) - n * k) for k in range(n))


def eq34_lhs(n: int, m: int) -> RationalFn:
    nm = n ** m
    return _ps(q_int((2 * k + 1) * nm).shift(nm * (n - 1) - k * nm) for k in range(n))


def eq34_rhs(n: int, m: int) -> RationalFn:
    nm = n ** m
    return P(q_int(nm * n) * q_int(n, nm))


def _wheatstone_exponent(n: int, j: int) -> int:
    """binom(n, 2) - binom(j+1, 2)."""
    return comb(n, 2) - comb(j + 1, 2)


def eq35_lhs(n: int) -> RationalFn:
    t = triangular(n)
    return _ps(q_int(t + n * j).shift(_wheatstone_exponent(n, j)) for j in range(n))


def eq35_rhs(n: int) -> RationalFn:
    weights = poly_sum(_q(_wheatstone_exponent(n, j)) for j in range(n))
    return P(q_int(n * n) * weights)


def eq36_lhs(n: int) -> RationalFn:
    t = triangular(n)
    return _ps(q_int(t + n * j, 2).shift(n * (n - 1) - n * j) for j in range(n))


def eq37_lhs(n: int) -> RationalFn:
    g, qn = gauss_binomial(n + 1, 2), q_int(n)
    return _ps(g.shift(n - 1 - j) + (qn * q_int(j, 2)).shift(2 * n - j) for j in range(n))


def eq38_lhs(n: int) -> RationalFn:
    base = (2 * n - 1) ** 2
    return _ps(q_int(base + 8 * j).shift(8 * n - 4 * j) for j in range(2 * n + 1))


def eq38_rhs(n: int) -> RationalFn:
    s = 2 * n + 1
    return P(q_int(s) * q_int(s, 4) * q_int(s, s))


# ------------------------ catalog ------------------------

def _entry(ident: str, equation: str, params: Tuple[str, ...], lhs: Builder, rhs: Builder, classical: str,
           classical_value: Callable[..., int], grid: Dict[str, Tuple[int, int]],
           minimums: Optional[Dict[str, int]] = None, notes: str = "") -> IdentityDescriptor:
    return IdentityDescriptor(
        id=ident, equation=equation, params=params, minimums=minimums or {p: 1 for p in params},
        lhs=lhs, rhs=rhs, classical=classical, classical_value=classical_value,
        default_grid=grid, notes=notes,
    )


def _n(lo: int, hi: int) -> Dict[str, Tuple[int, int]]:
    return {"n": (lo, hi)}


CATALOG: List[IdentityDescriptor] = [
    _entry("eq6_garrett_hummel", "Eq. (6)", ("n",), eq6_lhs, lambda n: P(_gauss_sq(n)),
           "1^3 + 2^3 + ... + n^3 = binom(n+1,2)^2", lambda n: triangular(n) ** 2, _n(1, 40),
           notes="right-hand side squared; the unsquared Gaussian binomial already fails at n = 2"),
    _entry("eq7_warnaar", "Eq. (7)", ("n",), eq7_lhs, lambda n: P(_gauss_sq(n)),
           "1^3 + 2^3 + ... + n^3 = binom(n+1,2)^2", lambda n: triangular(n) ** 2, _n(1, 40)),
    _entry("eq8_zhao_feng", "Eq. (8)", ("n",), eq8_lhs, lambda n: P(_gauss_sq(n)),
           "1^3 + 2^3 + ... + n^3 = binom(n+1,2)^2", lambda n: triangular(n) ** 2, _n(0, 40),
           minimums={"n": 0}),
    _entry("eq9_triangular_difference", "Eq. (9)", ("n",), eq9_lhs,
           lambda n: P(q_int(n) * q_int(n * n)),
           "binom(n+1,2)^2 - binom(n,2)^2 = n^3", lambda n: n ** 3, _n(1, 40)),
    _entry("eq10_theorem1", "Theorem 1, Eq. (10)", ("n",), eq10_lhs, lambda n: P(_tri_sq(n)),
           "1^3 + 2^3 + ... + n^3 = (1 + 2 + ... + n)^2 = binom(n+1,2)^2", lambda n: triangular(n) ** 2,
           _n(1, 40)),
    _entry("eq11_odd_sum", "Eq. (11)", ("n",), eq11_lhs, lambda n: P(q_int(n) ** 2),
           "1 + 3 + ... + (2n-1) = n^2", lambda n: n * n, _n(1, 60)),
    _entry("eq14_wheatstone_group", "Eq. (14)", ("n",), eq14_lhs, lambda n: P(q_int(n) * q_int(n * n)),
           "(n^2-n+1) + (n^2-n+3) + ... + (n^2+n-1) = n^3", lambda n: n ** 3, _n(1, 60)),
    _entry("eq17_cube_forward", "Theorem 2, Eq. (17)", ("n",), lambda n: P(forward_sum(CUBES, n)),
           lambda n: P(telescope_total(CUBES, n)),
           "1^3 + 2^3 + ... + n^3 = binom(n+1,2)^2", lambda n: triangular(n) ** 2, _n(1, 30),
           notes="the a(j) = j^3 case of the forward telescope; weights q^{binom(j,2)^2}, total [binom(n+1,2)^2]"),
    _entry("eq18_cube_backward", "Theorem 2, Eq. (18)", ("n",), lambda n: P(backward_sum(CUBES, n)),
           lambda n: P(telescope_total(CUBES, n)),
           "1^3 + 2^3 + ... + n^3 = binom(n+1,2)^2", lambda n: triangular(n) ** 2, _n(1, 30),
           notes="the a(j) = j^3 case of the backward telescope"),
    _entry("eq19_binsum_a", "Eq. (19)", ("n", "k"), eq19_lhs,
           lambda n, k: P(gauss_binomial(n + 1, k + 1).shift(k - 1)),
           "sum_{j=1}^n binom(j,k) = binom(n+1,k+1)", lambda n, k: comb(n + 1, k + 1),
           {"n": (1, 20), "k": (1, 20)}, notes="k = 0 is excluded; k > n gives 0 = 0"),
    _entry("eq20_binsum_b", "Eq. (20)", ("n", "k"), eq20_lhs,
           lambda n, k: P(gauss_binomial(n + 1, k + 1)),
           "sum_{j=1}^n binom(j,k) = binom(n+1,k+1)", lambda n, k: comb(n + 1, k + 1),
           {"n": (1, 20), "k": (1, 20)}, notes="k = 0 is excluded; k > n gives 0 = 0"),
    _entry("cube_expansion", "[n]^3 expansion before Eq. (21)", ("n",), lambda n: P(q_int(n) ** 3),
           cube_expansion_rhs, "n^3 = 6 binom(n,3) + 6 binom(n,2) + n", lambda n: n ** 3, _n(1, 30)),
    _entry("eq21_qcube_sum", "Eq. (21)", ("n",), eq21_lhs, eq21_rhs,
           "sum j^3 = 6 binom(n+1,4) + 6 binom(n+1,3) + binom(n+1,2) = binom(n+1,2)^2",
           lambda n: triangular(n) ** 2, _n(1, 30)),
    _entry("eq21_aux", "auxiliary sum in Eq. (21)", ("n",), eq21_aux_lhs, _eq21_tail,
           "1 + 2 + ... + n = binom(n+1,2)", triangular, _n(1, 30)),
    _entry("eq24_luthy", "Eq. (24)", ("n", "k"), eq24_lhs,
           lambda n, k: P(q_int(n ** k) * q_int(n ** (k + 1))),
           "sum_{j=1}^{n^k} (n^{k+1} - n^k + 2j - 1) = n^{2k+1}", lambda n, k: n ** (2 * k + 1),
           {"n": (2, 5), "k": (0, 4)}, minimums={"n": 1, "k": 0}),
    _entry("eq25", "Eq. (25)", ("n",), eq25_lhs, lambda n: P(q_int(2) * q_int(n) * q_int(n, 2)),
           "sum_{j=0}^{n-1} (n+1+2j) = 2n^2", lambda n: 2 * n * n, _n(1, 40)),
    _entry("eq26", "Eq. (26)", ("n", "m"), eq26_lhs, eq26_rhs,
           "sum_{k=0}^n (mn+k) = binom(n+1,2)(2m+1)", lambda n, m: triangular(n) * (2 * m + 1),
           {"n": (0, 15), "m": (0, 6)}, minimums={"n": 0, "m": 0},
           notes="at n = 0 the factor [2m+1]_{q^0} is the constant 2m+1"),
    _entry("eq29_theorem3", "Theorem 3, Eq. (29)", ("n",), eq29_lhs, eq29_rhs,
           "sum_{j=(3^n+1)/2}^{(3^{n+1}-1)/2} j = 3^{2n}", lambda n: 9 ** n, _n(0, 6), minimums={"n": 0}),
    _entry("eq30_theorem3", "Theorem 3, Eq. (30)", ("n",), eq30_lhs, eq30_rhs,
           "sum_{j=1}^{(3^{n+1}-1)/2} j = sum_{k=0}^n 3^{2k}", lambda n: sum(9 ** k for k in range(n + 1)),
           _n(0, 6), minimums={"n": 0},
           notes="right-hand side read as the Gaussian binomial [(3^{n+1}+1)/2, 2]"),
    _entry("eq31_schlosser", "Eq. (31)", ("n",), eq31_lhs, lambda n: P(gauss_binomial(n + 1, 2)),
           "0 + 1 + ... + n = binom(n+1,2)", triangular, _n(0, 40), minimums={"n": 0}),
    _entry("eq32", "Eq. (32)", ("n",), eq32_lhs, lambda n: P(q_int(n * n) * q_int(n, n + 1)),
           "sum_{j=0}^{n-1} (2(n+1)j + 1) = n^3", lambda n: n ** 3, _n(1, 20)),
    _entry("eq33", "Eq. (33)", ("n",), eq33_lhs, lambda n: P(q_int(n * n) * q_int(n, n)),
           "sum_{k=0}^{n-1} (2k+1)n = n^3", lambda n: n ** 3, _n(1, 20)),
    _entry("eq34", "Eq. (34)", ("n", "m"), eq34_lhs, eq34_rhs,
           "sum_{k=0}^{n-1} (2k+1)n^m = n^{m+2}", lambda n, m: n ** (m + 2),
           {"n": (1, 8), "m": (0, 3)}, minimums={"n": 1, "m": 0}),
    _entry("eq35_theorem4a", "Theorem 4, Eq. (35)", ("n",), eq35_lhs, eq35_rhs,
           "sum_{j=0}^{n-1} (binom(n+1,2) + jn) = n^3", lambda n: n ** 3, _n(1, 25),
           notes="the weight sum on the right is kept unsimplified"),
    _entry("eq36_theorem4b", "Theorem 4, Eq. (36)", ("n",), eq36_lhs,
           lambda n: P(q_int(n * n, 2) * q_int(n, n)),
           "sum_{j=0}^{n-1} (binom(n+1,2) + jn) = n^3", lambda n: n ** 3, _n(1, 25)),
    _entry("eq37_theorem4c", "Theorem 4, Eq. (37)", ("n",), eq37_lhs,
           lambda n: P(q_int(n) ** 2 * q_int(n, 2)),
           "sum_{j=0}^{n-1} (binom(n+1,2) + jn) = n^3", lambda n: n ** 3, _n(1, 25),
           notes="the bracket is the Gaussian binomial [n+1, 2]; the q-integer [binom(n+1,2)] fails at n = 3"),
    _entry("eq38_theorem5", "Theorem 5, Eq. (38)", ("n",), eq38_lhs, eq38_rhs,
           "sum_{j=0}^{2n} ((2n-1)^2 + 8j) = (2n+1)^3", lambda n: (2 * n + 1) ** 3, _n(1, 20),
           notes="summands taken in base q"),
]

BY_ID: Dict[str, IdentityDescriptor] = {d.id: d for d in CATALOG}
