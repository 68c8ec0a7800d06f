"""
q-integers and Gaussian binomial coefficients.

Gaussian binomials are computed by the product formula and, up to
Config.GAUSS_CROSSCHECK_LIMIT, re-derived from both Pascal recurrences; any
disagreement raises InternalInconsistency.
"""

from typing import Callable, List

from pydantic import BaseModel, Field

from app.algebra.qpoly import ONE, ZERO, LaurentPoly, exact_div
from app.core.config import Config
from app.core.errors import InternalInconsistency, InvalidParams
from app.core.logger import logger
from app.utils.cache import get_json, set_json


class QIntSpec(BaseModel):
    n: int = Field(..., ge=0)
    base_power: int = Field(1, ge=1)

    def build(self) -> LaurentPoly:
        return q_int(self.n, self.base_power)


class GaussSpec(BaseModel):
    n: int = Field(..., ge=0)
    k: int

    def build(self) -> LaurentPoly:
        return gauss_binomial(self.n, self.k)


def triangular(n: int) -> int:
    if n < 0:
        raise InvalidParams(f"triangular number needs n >= 0, got {n}")
    return n * (n + 1) // 2


def q_int(n: int, base_power: int = 1) -> LaurentPoly:
    """[n]_{q^b} = 1 + q^b + ... + q^{(n-1)b}, built term by term."""
    if n < 0 or base_power < 1:
        raise InvalidParams(f"q-integer needs n >= 0 and base power >= 1, got n={n}, b={base_power}")
    return LaurentPoly._raw({i * base_power: 1 for i in range(n)})


def gauss_product(n: int, k: int) -> LaurentPoly:
    """[n][n-1]...[n-k+1] / ([1][2]...[k]) by exact division."""
    if k < 0 or k > n:
        return ZERO
    num, den = ONE, ONE
    for i in range(k):
        num = num * q_int(n - i)
        den = den * q_int(i + 1)
    return exact_div(num, den)


def _pascal(n: int, k: int, step: Callable[[int, int, LaurentPoly, LaurentPoly], LaurentPoly]) -> LaurentPoly:
    if k < 0 or k > n:
        return ZERO
    row: List[LaurentPoly] = [ONE] + [ZERO] * k
    for m in range(n):
        nxt = [ONE]
        for j in range(1, k + 1):
            nxt.append(step(m, j, row[j], row[j - 1]))
        row = nxt
    return row[k]


def gauss_pascal_low(n: int, k: int) -> LaurentPoly:
    """From [m+1, j] = q^j [m, j] + [m, j-1]."""
    return _pascal(n, k, lambda m, j, same, prev: same.shift(j) + prev)


def gauss_pascal_high(n: int, k: int) -> LaurentPoly:
    """From [m+1, j] = [m, j] + q^{m-j+1} [m, j-1]."""
    return _pascal(n, k, lambda m, j, same, prev: same + prev.shift(m - j + 1))


def _memo_key(n: int, k: int) -> str:
    return f"gauss:{n}:{k}"


def gauss_binomial(n: int, k: int) -> LaurentPoly:
    if n < 0:
        raise InvalidParams(f"Gaussian binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return ZERO

    key = _memo_key(n, k)
    if Config.MEMO_ENABLED:
        cached = get_json(key)
        if cached is not None:
            return LaurentPoly({e: c for e, c in cached})

    result = gauss_product(n, k)
    if n <= Config.GAUSS_CROSSCHECK_LIMIT:
        low, high = gauss_pascal_low(n, k), gauss_pascal_high(n, k)
        if not (result == low == high):
            raise InternalInconsistency(f"Gaussian binomial [{n} {k}] disagrees across product and recurrences")
    else:
        logger.debug("[qcalc] gauss(%d,%d) above cross-check limit %d", n, k, Config.GAUSS_CROSSCHECK_LIMIT)

    if Config.MEMO_ENABLED:
        set_json(key, [[e, c] for e, c in result.items()])
    return result
