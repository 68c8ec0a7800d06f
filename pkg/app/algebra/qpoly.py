"""
Exact sparse Laurent polynomials and rational functions in q over the integers.

A LaurentPoly is a finite map exponent -> nonzero coefficient. Exponents may be
negative and coefficients are Python ints, so every operation here is exact.
A RationalFn is always held in canonical form (see ``rf_normalize``), so two
rational functions are equal iff their numerators and denominators are equal.
"""

from __future__ import annotations

from math import gcd
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from app.core.errors import DivisionByZero, InvalidParams, NonzeroRemainder, NotPolynomial

Operand = Union["LaurentPoly", int]


class LaurentPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        clean: Dict[int, int] = {}
        for e, c in (terms or {}).items():
            if c:
                clean[int(e)] = int(c)
        object.__setattr__(self, "_terms", clean)

    @classmethod
    def _raw(cls, terms: Dict[int, int]) -> "LaurentPoly":
        # caller guarantees there are no zero coefficients
        p = object.__new__(cls)
        object.__setattr__(p, "_terms", terms)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # ------------------------ inspection ------------------------

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[int, int]]:
        """Terms in ascending exponent order."""
        return sorted(self._terms.items())

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    @property
    def valuation(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    @property
    def is_ordinary(self) -> bool:
        """True for ordinary polynomials (no negative exponents)."""
        return not self._terms or min(self._terms) >= 0

    @property
    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.items())

    # ------------------------ ring ------------------------

    @staticmethod
    def _coerce(other: Operand) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return monomial(other, 0)
        return NotImplemented

    def __add__(self, other: Operand) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Operand) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Operand) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: Operand) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((eb, cb),) = b.items()
            return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
        out: Dict[int, int] = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                k = e1 + e2
                out[k] = get(k, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int) or k < 0:
            raise InvalidParams(f"power must be a nonnegative integer, got {k!r}")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    # ------------------------ comparison ------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})


def monomial(coeff: int, exp: int) -> LaurentPoly:
    """coeff * q^exp; the zero polynomial when coeff is 0."""
    return LaurentPoly._raw({int(exp): int(coeff)}) if coeff else ZERO


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def sub(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a - b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def neg(a: LaurentPoly) -> LaurentPoly:
    return -a


def poly_sum(parts) -> LaurentPoly:
    """Sum an iterable of polynomials into one accumulator."""
    out: Dict[int, int] = {}
    get = out.get
    for p in parts:
        for e, c in p._terms.items():
            out[e] = get(e, 0) + c
    return LaurentPoly._raw({e: c for e, c in out.items() if c})


def _short(p: LaurentPoly) -> str:
    if len(p) <= 6:
        return render(p)
    return f"<{len(p)} terms, exponents {p.valuation}..{p.degree}>"


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return c with a = b*c in the Laurent ring, or raise NonzeroRemainder."""
    if b.is_zero:
        raise DivisionByZero("division by the zero polynomial")
    if a.is_zero:
        return ZERO
    va, vb = a.valuation, b.valuation
    bt = b.shift(-vb)._terms
    db = max(bt)
    lead = bt[db]
    rem = dict(a.shift(-va)._terms)
    out: Dict[int, int] = {}
    for d in range(max(rem), db - 1, -1):
        c = rem.pop(d, 0)
        if not c:
            continue
        qc, r = divmod(c, lead)
        if r:
            raise NonzeroRemainder(f"{_short(b)} does not divide {_short(a)}")
        s = d - db
        out[s] = qc
        for e, bc in bt.items():
            if e == db:
                continue
            k = e + s
            v = rem.get(k, 0) - qc * bc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    if rem:
        raise NonzeroRemainder(f"{_short(b)} does not divide {_short(a)}")
    return LaurentPoly._raw(out).shift(va - vb)


def substitute_power(a: LaurentPoly, b: int) -> LaurentPoly:
    """q -> q^b."""
    if b < 1:
        raise InvalidParams(f"base power must be >= 1, got {b}")
    if b == 1:
        return a
    return LaurentPoly._raw({e * b: c for e, c in a._terms.items()})


def eval_at_one(a: LaurentPoly) -> int:
    return sum(a._terms.values())


def render(p: LaurentPoly) -> str:
    """Canonical text: ascending exponents, `c*q^e`, q^0 and unit coefficients elided."""
    if p.is_zero:
        return "0"
    out = []
    for idx, (e, c) in enumerate(p.items()):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "q" if e == 1 else f"q^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# ------------------------ dense integer polynomials (gcd) ------------------------
# ascending coefficient lists, index = exponent, last entry nonzero

def _to_dense(p: LaurentPoly) -> List[int]:
    dense = [0] * (p.degree + 1)
    for e, c in p._terms.items():
        dense[e] = c
    return dense


def _from_dense(coeffs: List[int]) -> LaurentPoly:
    return LaurentPoly._raw({e: c for e, c in enumerate(coeffs) if c})


def _content(coeffs: List[int]) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _primitive(coeffs: List[int]) -> List[int]:
    g = _content(coeffs)
    if coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def _pseudo_rem(a: List[int], b: List[int]) -> List[int]:
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db:
        lr = r[-1]
        s = len(r) - 1 - db
        if lb != 1:
            r = [c * lb for c in r]
        for i, bc in enumerate(b):
            r[i + s] -= lr * bc
        while r and r[-1] == 0:
            r.pop()
    return r


def _poly_gcd(a: List[int], b: List[int]) -> List[int]:
    """Primitive gcd over Z[q] by the primitive remainder sequence."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while True:
        if len(b) == 1:
            return [1]
        r = _pseudo_rem(a, b)
        if not r:
            return b
        a, b = b, _primitive(r)


class RationalFn:
    """Quotient num/den of Laurent polynomials, always canonical."""

    __slots__ = ("num", "den")

    def __init__(self, num: Operand, den: Operand = 1):
        num, den = LaurentPoly._coerce(num), LaurentPoly._coerce(den)
        canon = rf_normalize(num, den)
        object.__setattr__(self, "num", canon.num)
        object.__setattr__(self, "den", canon.den)

    @classmethod
    def _make(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFn":
        r = object.__new__(cls)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        return r

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFn":
        return cls._make(p, ONE)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    @staticmethod
    def _coerce(other) -> "RationalFn":
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, (LaurentPoly, int)):
            return RationalFn.from_poly(LaurentPoly._coerce(other))
        return NotImplemented

    @property
    def is_polynomial(self) -> bool:
        return self.den == ONE

    def __add__(self, other) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            if self.den == ONE:
                return RationalFn._make(self.num + other.num, ONE)
            return rf_normalize(self.num + other.num, self.den)
        return rf_normalize(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn._make(-self.num, self.den)

    def __sub__(self, other) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == ONE and other.den == ONE:
            return RationalFn._make(self.num * other.num, ONE)
        return rf_normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero:
            raise DivisionByZero("division by the zero rational function")
        return rf_normalize(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFn":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFn({render(self.num)!r}, {render(self.den)!r})"

    def __str__(self) -> str:
        if self.den == ONE:
            return render(self.num)
        return f"({render(self.num)})/({render(self.den)})"


def rf_normalize(num: LaurentPoly, den: LaurentPoly) -> RationalFn:
    """
    Canonical form of num/den:
      - common factors removed (primitive gcd over Z[q]),
      - den has lowest exponent 0 and a positive leading coefficient,
      - the integer contents of num and den are coprime.
    """
    if den.is_zero:
        raise DivisionByZero("rational function with zero denominator")
    if num.is_zero:
        return RationalFn._make(ZERO, ONE)
    vn, vd = num.valuation, den.valuation
    n0 = _to_dense(num.shift(-vn))
    d0 = _to_dense(den.shift(-vd))
    cn, cd = _content(n0), _content(d0)
    pn = [c // cn for c in n0]
    pd = [c // cd for c in d0]
    if len(pd) > 1 and len(pn) > 1:
        g = _poly_gcd(pn, pd)
        if len(g) > 1:
            gp = _from_dense(g)
            pn = _to_dense(exact_div(_from_dense(pn), gp))
            pd = _to_dense(exact_div(_from_dense(pd), gp))
    h = gcd(cn, cd)
    cn, cd = cn // h, cd // h
    sign = 1 if pd[-1] > 0 else -1
    out_num = _from_dense([sign * cn * c for c in pn]).shift(vn - vd)
    out_den = _from_dense([sign * cd * c for c in pd])
    return RationalFn._make(out_num, out_den)


def rf_to_poly(r: RationalFn) -> LaurentPoly:
    if r.den != ONE:
        raise NotPolynomial(f"denominator {_short(r.den)} does not cancel (numerator {_short(r.num)})")
    return r.num
