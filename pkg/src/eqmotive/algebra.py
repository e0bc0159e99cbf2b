"""Exact rational polynomials and rational functions in one variable ``q``.

A :class:`Poly` is a dense tuple of :class:`~fractions.Fraction` coefficients,
constant term first, with no trailing zeros (the zero polynomial is the empty
tuple).  A :class:`RatFunc` is a pair ``num / den`` kept in lowest terms with
a monic denominator, so structural equality is mathematical equality.

Both types serialise to JSON as little-endian arrays of ``"p/q"`` strings.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import DivisionByZero

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """A polynomial in ``q`` with rational coefficients.

    >>> Poly([-1, 1])
    Poly('q - 1')
    >>> Poly([0, 1]) ** 2 - 1
    Poly('q^2 - 1')
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple[Fraction, ...] = _trim([_frac(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "Poly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, exp: int, coeff: Scalar = 1) -> "Poly":
        if exp < 0:
            raise ValueError("negative exponent")
        return cls([0] * exp + [coeff])

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls([x])
        raise TypeError(f"cannot coerce {type(x).__name__} to Poly")

    # --- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([_frac(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    # --- ring operations -------------------------------------------------
    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Poly":
        if isinstance(other, RatFunc):
            return NotImplemented
        o = Poly.coerce(other).coeffs
        a = self.coeffs
        if len(a) < len(o):
            a, o = o, a
        out = list(a)
        for i, c in enumerate(o):
            out[i] += c
        return Poly._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, RatFunc):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other) -> "Poly":
        return Poly.coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, RatFunc):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly._raw(())
            return Poly._raw(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, Poly.coerce(other).coeffs
        if not a or not b:
            return Poly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division of a polynomial by zero")
            return Poly._raw(tuple(c / other for c in self.coeffs))
        if isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self, Poly.coerce(other))

    def __rtruediv__(self, other):
        return RatFunc(Poly.coerce(other), self)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division ``self = quot * other + rem``."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        dl = len(d) - 1
        inv = 1 / d[-1]
        if len(rem) <= dl:
            return Poly._raw(()), self
        quot = [Fraction(0)] * (len(rem) - dl)
        for k in range(len(rem) - 1, dl - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c * inv
            quot[k - dl] = f
            base = k - dl
            for i in range(dl + 1):
                rem[base + i] -= f * d[i]
        return Poly._raw(_trim(quot)), Poly._raw(_trim(rem[:dl]))

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self / self.coeffs[-1]

    # --- evaluation and substitution --------------------------------------
    def __call__(self, x):
        """Horner evaluation at a scalar or at another Poly/RatFunc."""
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        acc = Poly([])
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def subs_power(self, k: int) -> "Poly":
        """The polynomial ``p(q^k)``."""
        if k < 1:
            raise ValueError("substitution exponent must be positive")
        if k == 1 or len(self.coeffs) <= 1:
            return self
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Poly._raw(tuple(out))

    # --- text -------------------------------------------------------------
    def to_str(self, var: str = "q", latex: bool = False) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if i == 0:
                mono = ""
            elif i == 1:
                mono = var
            else:
                mono = f"{var}^{{{i}}}" if latex else f"{var}^{i}"
            if mono and a == 1:
                body = mono
            else:
                if latex and a.denominator != 1:
                    num = rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
                else:
                    num = str(a)
                body = f"{num}{'' if latex else '*'}{mono}" if mono else num
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly('{self.to_str()}')"

    # --- JSON -------------------------------------------------------------
    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "Poly":
        if not isinstance(data, (list, tuple)):
            raise ValueError("a polynomial must be a JSON array of coefficients")
        out = []
        for c in data:
            if isinstance(c, bool) or not isinstance(c, (int, str)):
                raise ValueError(f"bad coefficient {c!r}")
            out.append(_frac(c))
        return cls(out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero():
        if b.degree == 0:
            return Poly([1])
        a, b = b, a.divmod(b)[1]
    return a.monic()


Q = Poly([0, 1])
ONE = Poly([1])
ZERO = Poly([])


class RatFunc:
    """An element ``num / den`` of the field ``Q(q)`` in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly.coerce(num)
        if den is None:
            self.num, self.den = num, ONE
            self._hash = None
            return
        den = den if isinstance(den, Poly) else Poly.coerce(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
        else:
            if den.degree > 0:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.lead()
            if lc != 1:
                num, den = num / lc, den / lc
            self.num, self.den = num, den
        self._hash = None

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction)):
            return self.den == ONE and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den)) if self.den != ONE else hash(self.num)
        return self._hash

    def __neg__(self):
        r = object.__new__(RatFunc)
        r.num, r.den, r._hash = -self.num, self.den, None
        return r

    def __add__(self, other):
        o = RatFunc.coerce(other)
        if self.den == ONE and o.den == ONE:
            return RatFunc(self.num + o.num)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFunc(ZERO)
            r = object.__new__(RatFunc)
            r.num, r.den, r._hash = self.num * other, self.den, None
            return r
        o = RatFunc.coerce(other)
        if self.den == ONE and o.den == ONE:
            return RatFunc(self.num * o.num)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc.coerce(other)
        if o.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            if self.is_zero():
                raise DivisionByZero("negative power of zero")
            return RatFunc(self.den ** (-k), self.num ** (-k))
        r = object.__new__(RatFunc)
        r.num, r.den, r._hash = self.num**k, self.den**k, None
        return r

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at {x}")
        return self.num(x) / d

    def subs_power(self, k: int) -> "RatFunc":
        return RatFunc(self.num.subs_power(k), self.den.subs_power(k))

    def to_str(self, latex: bool = False) -> str:
        if self.den == ONE:
            return self.num.to_str(latex=latex)
        if latex:
            return rf"\frac{{{self.num.to_str(latex=True)}}}{{{self.den.to_str(latex=True)}}}"
        return f"({self.num})/({self.den})"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RatFunc('{self}')"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RatFunc":
        if isinstance(data, list):
            return cls(Poly.from_json(data))
        if not isinstance(data, dict) or "num" not in data:
            raise ValueError("a rational function must be {num, den}")
        return cls(Poly.from_json(data["num"]), Poly.from_json(data.get("den", ["1/1"])))


def ratfunc(x) -> RatFunc:
    return RatFunc.coerce(x)


# --- integer helpers -----------------------------------------------------


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n`` in increasing order."""
    if n < 1:
        raise ValueError("divisors of a non-positive integer")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation as ``((p, e), ...)``."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


def binom(a, b) -> int:
    """Binomial coefficient that vanishes outside ``0 <= b <= a``."""
    a, b = int(a), int(b)
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)
