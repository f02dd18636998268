"""Exact scalar tower: rationals, polynomials in u, rational functions, and
truncated series in 1/u.

Everything is over Q via fractions.Fraction. Polynomials are stored as tuples
of coefficients in ascending powers of u with no trailing zeros. Rational
functions are kept reduced with a monic denominator, so == is structural.
A SeriesU holds coefficients of u^0, u^-1, ..., u^-K for a fixed order K.
"""

from __future__ import annotations

import os
from fractions import Fraction

Rat = Fraction


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


def default_order() -> int:
    """Series truncation order used when none is given (env YF_ORDER)."""
    return int(os.environ.get("YF_ORDER", "4"))


class PolyU:
    """Polynomial in u with rational coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "PolyU":
        return PolyU([_rat(c)])

    @staticmethod
    def x() -> "PolyU":
        "The polynomial u."
        return PolyU([0, 1])

    def degree(self) -> int:
        # degree of the zero polynomial is -1 here, callers check is_zero first
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, PolyU) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyU.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyU([
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(n)
        ])

    __radd__ = __add__

    def __neg__(self):
        return PolyU([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyU.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyU([c * _rat(other) for c in self.coeffs])
        if not isinstance(other, PolyU):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return PolyU()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyU(out)

    __rmul__ = __mul__

    def __call__(self, x):
        "Evaluate at a rational point (Horner)."
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * _rat(x) + c
        return acc

    def divmod(self, other: "PolyU"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = PolyU()
        r = self
        d = other.degree()
        lead = other.leading()
        while not r.is_zero() and r.degree() >= d:
            k = r.degree() - d
            c = r.leading() / lead
            t = PolyU([0] * k + [c])
            q = q + t
            r = r - t * other
        return q, r

    def monic(self) -> "PolyU":
        if self.is_zero():
            return self
        inv = 1 / self.leading()
        return PolyU([c * inv for c in self.coeffs])

    def shift(self, a) -> "PolyU":
        "p(u) -> p(u+a), exact composition by Horner in PolyU arithmetic."
        a = _rat(a)
        acc = PolyU()
        xa = PolyU([a, 1])
        for c in reversed(self.coeffs):
            acc = acc * xa + PolyU.const(c)
        return acc

    def __repr__(self):
        if self.is_zero():
            return "PolyU(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*u")
            else:
                parts.append(f"{c}*u^{i}")
        return "PolyU(" + " + ".join(parts) + ")"


def poly_gcd(a: PolyU, b: PolyU) -> PolyU:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def shift(p: PolyU, a) -> PolyU:
    return p.shift(a)


class RatFuncU:
    """Rational function num/den, reduced, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = PolyU.const(num)
        if den is None:
            den = PolyU.const(1)
        elif isinstance(den, (int, Fraction)):
            den = PolyU.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = PolyU(), PolyU.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.leading()
            if lead != 1:
                inv = 1 / lead
                num = num * inv
                den = den * inv
        self.num = num
        self.den = den

    @staticmethod
    def one() -> "RatFuncU":
        return RatFuncU(PolyU.const(1))

    def __eq__(self, other):
        return (isinstance(other, RatFuncU)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PolyU)):
            other = RatFuncU(other if isinstance(other, PolyU) else PolyU.const(other))
        return RatFuncU(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, PolyU)):
            other = RatFuncU(other if isinstance(other, PolyU) else PolyU.const(other))
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFuncU(self.num * other.den, self.den * other.num)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, PolyU)):
            other = RatFuncU(other if isinstance(other, PolyU) else PolyU.const(other))
        return RatFuncU(self.num * other.den + other.num * self.den,
                        self.den * other.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, PolyU)):
            other = RatFuncU(other if isinstance(other, PolyU) else PolyU.const(other))
        return RatFuncU(self.num * other.den - other.num * self.den,
                        self.den * other.den)

    def is_one(self) -> bool:
        return self.num == PolyU.const(1) and self.den == PolyU.const(1)

    def shift_arg(self, a) -> "RatFuncU":
        "f(u) -> f(u+a)."
        return RatFuncU(self.num.shift(a), self.den.shift(a))

    def __repr__(self):
        return f"RatFuncU({self.num!r} / {self.den!r})"


class SeriesU:
    """Truncated series c_0 + c_1 u^-1 + ... + c_K u^-K at fixed order K."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        cs = [_rat(c) for c in coeffs]
        if len(cs) != order + 1:
            raise ValueError("coefficient list must have length order+1")
        self.order = order
        self.coeffs = tuple(cs)

    @staticmethod
    def one(order: int) -> "SeriesU":
        return SeriesU(order, [1] + [0] * order)

    @staticmethod
    def zero(order: int) -> "SeriesU":
        return SeriesU(order, [0] * (order + 1))

    def __eq__(self, other):
        return (isinstance(other, SeriesU)
                and self.order == other.order and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def _align(self, other):
        if not isinstance(other, SeriesU):
            raise TypeError("series arithmetic needs two SeriesU")
        if self.order != other.order:
            raise ValueError("series orders differ")
        return other

    def __add__(self, other):
        other = self._align(other)
        return SeriesU(self.order,
                       [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        other = self._align(other)
        return SeriesU(self.order,
                       [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return SeriesU(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SeriesU(self.order, [c * _rat(other) for c in self.coeffs])
        other = self._align(other)
        K = self.order
        out = [Fraction(0)] * (K + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(K + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return SeriesU(K, out)

    __rmul__ = __mul__

    def inverse(self) -> "SeriesU":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term")
        K = self.order
        out = [Fraction(0)] * (K + 1)
        out[0] = 1 / c0
        for k in range(1, K + 1):
            s = Fraction(0)
            for j in range(1, k + 1):
                s += self.coeffs[j] * out[k - j]
            out[k] = -s / c0
        return SeriesU(K, out)

    def __repr__(self):
        terms = [str(self.coeffs[0])]
        terms += [f"{c}*u^-{k}" for k, c in enumerate(self.coeffs) if k and c]
        return f"SeriesU[{self.order}](" + " + ".join(terms) + ")"


def expand(f: RatFuncU, order: int | None = None) -> SeriesU:
    """Laurent expansion of f at u = infinity, truncated.

    Requires deg num <= deg den so that the expansion lives in u^0, u^-1, ...
    """
    if order is None:
        order = default_order()
    if f.num.is_zero():
        return SeriesU.zero(order)
    D = f.den.degree()
    if f.num.degree() > D:
        raise ValueError("not expandable at infinity")
    # coefficients indexed by depth below u^D
    def at(p, k):
        i = D - k
        return p.coeffs[i] if 0 <= i < len(p.coeffs) else Fraction(0)

    d0 = at(f.den, 0)
    out = [Fraction(0)] * (order + 1)
    for k in range(order + 1):
        s = at(f.num, k)
        for j in range(1, k + 1):
            s -= at(f.den, j) * out[k - j]
        out[k] = s / d0
    return SeriesU(order, out)
