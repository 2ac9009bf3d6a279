"""Exact arithmetic in cyclotomic fields Q(zeta_L).

An element is stored as a rational polynomial of degree < phi(L) in the power
basis 1, z, ..., z^(phi(L)-1), reduced modulo the L-th cyclotomic polynomial.
Since the representation is canonical, equality is coefficient-wise.
Polynomial arithmetic is delegated to FLINT, so nothing ever overflows or
rounds and dense products stay cheap.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

from flint import fmpq, fmpq_poly, fmpz_poly

__all__ = [
    "Cyc",
    "DivisionByZero",
    "NonDivisibleConductor",
    "ScalarParseError",
    "root_of_unity",
    "lift",
    "as_cyc",
    "parse_scalar",
    "common_conductor",
]

_ZERO_POLY = fmpq_poly([])


class DivisionByZero(ZeroDivisionError):
    pass


class NonDivisibleConductor(ValueError):
    pass


class ScalarParseError(ValueError):
    pass


def _q(x) -> fmpq:
    if isinstance(x, fmpq):
        return x
    if isinstance(x, int):
        return fmpq(x)
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, str):
        f = Fraction(x)
        return fmpq(f.numerator, f.denominator)
    # other rational types expose numerator/denominator
    try:
        return fmpq(int(x.numerator), int(x.denominator))
    except AttributeError:
        raise TypeError(f"not a rational: {x!r}") from None


def _is_rational_type(x) -> bool:
    return isinstance(x, (int, Fraction, fmpq)) and not isinstance(x, bool)


class _Field:
    """Per-conductor data: phi(L), Phi_L and the reduced powers of z."""

    def __init__(self, L: int):
        self.L = L
        self.poly = fmpq_poly(list(fmpz_poly.cyclotomic(L).coeffs()))
        self.phi = self.poly.degree()
        self.red = [fmpq_poly([0] * e + [1]) % self.poly for e in range(L)]


@lru_cache(maxsize=None)
def _field(L: int) -> _Field:
    if L < 1:
        raise ValueError(f"conductor must be positive, got {L}")
    return _Field(L)


class Cyc:
    """An element of Q(zeta_L).

    Arithmetic with ``int`` or ``Fraction`` operands promotes them.
    Two elements with different conductors are lifted to the lcm first.
    """

    __slots__ = ("L", "p")

    def __init__(self, L: int, coeffs=None):
        f = _field(L)
        self.L = L
        if coeffs is None:
            self.p = _ZERO_POLY
        else:
            c = [_q(x) for x in coeffs]
            if len(c) != f.phi:
                raise ValueError(f"expected {f.phi} coefficients for L={L}, got {len(c)}")
            self.p = fmpq_poly(c)

    @classmethod
    def _raw(cls, L: int, p: fmpq_poly) -> "Cyc":
        obj = object.__new__(cls)
        obj.L = L
        obj.p = p
        return obj

    @classmethod
    def _reduce(cls, L: int, p: fmpq_poly) -> "Cyc":
        """Wrap a polynomial in z of any degree (used by batched kernels)."""
        f = _field(L)
        if p.degree() >= f.phi:
            p = p % f.poly
        return cls._raw(L, p)

    @classmethod
    def rational(cls, value, L: int = 1) -> "Cyc":
        _field(L)
        return cls._raw(L, fmpq_poly([_q(value)]))

    @classmethod
    def zero(cls, L: int = 1) -> "Cyc":
        _field(L)
        return cls._raw(L, _ZERO_POLY)

    @classmethod
    def one(cls, L: int = 1) -> "Cyc":
        return cls.rational(1, L)

    @property
    def coeffs(self) -> tuple:
        """Power-basis coefficients as Fractions, length phi(L)."""
        n = _field(self.L).phi
        c = self.p.coeffs()
        return tuple(
            Fraction(int(q.p), int(q.q)) for q in c + [fmpq(0)] * (n - len(c))
        )

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.L == self.L:
                return self, other
            L = math.lcm(self.L, other.L)
            return lift(self, L), lift(other, L)
        if _is_rational_type(other):
            return self, Cyc._raw(self.L, fmpq_poly([_q(other)]))
        return NotImplemented, NotImplemented

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Cyc) and other.L == self.L:
            return Cyc._raw(self.L, self.p + other.p)
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyc._raw(a.L, a.p + b.p)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Cyc) and other.L == self.L:
            return Cyc._raw(self.L, self.p - other.p)
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyc._raw(a.L, a.p - b.p)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyc._raw(a.L, b.p - a.p)

    def __neg__(self):
        return Cyc._raw(self.L, -self.p)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Cyc) and other.L == self.L:
            a, b = self, other
        else:
            a, b = self._coerce(other)
            if a is NotImplemented:
                return NotImplemented
        p = a.p * b.p
        if p.degree() >= _field(a.L).phi:
            p = p % _field(a.L).poly
        return Cyc._raw(a.L, p)

    __rmul__ = __mul__

    def inv(self) -> "Cyc":
        """Multiplicative inverse; raises ``DivisionByZero`` on 0."""
        if not self.p:
            raise DivisionByZero("inverse of zero in Q(zeta_%d)" % self.L)
        if self.p.degree() == 0:
            return Cyc._raw(self.L, fmpq_poly([1 / self.p[0]]))
        # Phi_L is irreducible, so gcd = 1 and s * p = 1 mod Phi_L
        g, s, _ = self.p.xgcd(_field(self.L).poly)
        return Cyc._raw(self.L, (s / g[0]) % _field(self.L).poly)

    def __truediv__(self, other):
        if isinstance(other, Cyc):
            return self * other.inv()
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return b * a.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = Cyc.one(self.L)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.p

    def __bool__(self):
        return bool(self.p)

    def is_rational(self) -> bool:
        return self.p.degree() <= 0

    def __eq__(self, other):
        if isinstance(other, Cyc):
            if other.L == self.L:
                return self.p == other.p
            a, b = self._coerce(other)
            return a.p == b.p
        if _is_rational_type(other):
            return self.is_rational() and self.p[0] == _q(other)
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.p[0])
        return hash((self.L, tuple(self.p.coeffs())))

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        q = self.p[0]
        return Fraction(int(q.p), int(q.q))

    # -- formatting -------------------------------------------------------
    def __str__(self):
        c = self.coeffs
        terms = []
        for e in range(len(c) - 1, -1, -1):
            q = c[e]
            if not q:
                continue
            sign = "-" if q < 0 else "+"
            mag = abs(q)
            if e == 0:
                body = _fmt_q(mag)
            else:
                mono = "z" if e == 1 else f"z^{e}"
                body = mono if mag == 1 else f"{_fmt_q(mag)}*{mono}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return f"Cyc({self.L}, '{self}')"


def _fmt_q(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def root_of_unity(L: int, k: int = 1) -> Cyc:
    """zeta_L ** k in canonical form."""
    if L < 1:
        raise ValueError("L must be >= 1")
    return Cyc._raw(L, _field(L).red[k % L])


def lift(a: Cyc, L2: int) -> Cyc:
    """Represent ``a`` in Q(zeta_L2); requires a.L | L2."""
    if L2 % a.L:
        raise NonDivisibleConductor(f"conductor {a.L} does not divide {L2}")
    if L2 == a.L:
        return a
    step = L2 // a.L
    f2 = _field(L2)
    # substitute z -> z2^step
    return Cyc._raw(L2, a.p(fmpq_poly([0] * step + [1])) % f2.poly)


def as_cyc(x, L: int) -> Cyc:
    """Coerce ints, rationals or Cyc values into Q(zeta_L)."""
    if isinstance(x, Cyc):
        return lift(x, L) if x.L != L else x
    if isinstance(x, str):
        return parse_scalar(x, L)
    return Cyc.rational(x, L)


def common_conductor(*values) -> int:
    L = 1
    for v in values:
        if isinstance(v, Cyc):
            L = math.lcm(L, v.L)
        elif isinstance(v, int):
            L = math.lcm(L, v)
    return L


_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:(\d+(?:/\d+)?)\s*(\*)?\s*)?
        (z(?:\s*\^\s*(\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_scalar(text: str, L: int) -> Cyc:
    """Parse ``-3/4``, ``z^2-1``, ``1/2*z^3-2*z+1`` with z = zeta_L."""
    s = text.strip()
    if not s:
        raise ScalarParseError("empty scalar literal")
    pos = 0
    acc = Cyc.zero(L)
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ScalarParseError(f"cannot parse scalar {text!r} at {pos}")
        sign, coef, star, mono, exp = m.groups()
        if sign is None and not first:
            raise ScalarParseError(f"missing operator in {text!r}")
        if coef is None and mono is None:
            raise ScalarParseError(f"dangling sign in {text!r}")
        if star and mono is None:
            raise ScalarParseError(f"dangling '*' in {text!r}")
        if coef is not None and mono is not None and not star:
            raise ScalarParseError(f"expected '*' between coefficient and z in {text!r}")
        try:
            q = Fraction(coef) if coef is not None else Fraction(1)
        except ZeroDivisionError:
            raise ScalarParseError(f"zero denominator in {text!r}") from None
        if sign == "-":
            q = -q
        if mono is not None:
            e = int(exp) if exp is not None else 1
            term = root_of_unity(L, e) * Cyc.rational(q, L)
        else:
            term = Cyc.rational(q, L)
        acc = acc + term
        pos = m.end()
        first = False
    return acc

