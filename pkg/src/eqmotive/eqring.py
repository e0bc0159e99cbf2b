"""Classes in the Burnside-type ring ``K(Var_C) (x) B(Gamma)`` for a cyclic group.

For a cyclic group of order ``N`` every subgroup is determined by its index
``d | N``; ``Q^d`` denotes the permutation representation on the ``d`` cosets
of the subgroup of index ``d``.  An :class:`EqClass` is a finite sum
``sum_d c_d (x) Q^d`` with coefficients ``c_d`` in ``Q(q)``.

The ring structure comes from products of coset spaces:
``Q^a * Q^b = gcd(a, b) Q^lcm(a, b)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .algebra import Poly, RatFunc, divisors, lcm
from .errors import DivisionByZero, GroupMismatch, InternalInconsistency, ZeroPivot

_ZERO = RatFunc(Poly([]))


def _canon(terms: Mapping[int, object]) -> dict[int, RatFunc]:
    out: dict[int, RatFunc] = {}
    for d, c in terms.items():
        c = RatFunc.coerce(c)
        if not c.is_zero():
            out[int(d)] = c
    return dict(sorted(out.items()))


@dataclass(frozen=True, eq=False)
class EqClass:
    """A class ``sum_d c_d (x) Q^d`` over the cyclic group of order ``order``."""

    order: int
    terms: dict[int, RatFunc] = field(default_factory=dict)

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("group order must be positive")
        terms = _canon(self.terms)
        for d in terms:
            if d < 1 or self.order % d:
                raise ValueError(f"Q^{d} is not a coset space of a group of order {self.order}")
        object.__setattr__(self, "terms", terms)

    # --- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "EqClass":
        return cls(order, {})

    @classmethod
    def one(cls, order: int) -> "EqClass":
        return cls(order, {1: RatFunc(Poly([1]))})

    @classmethod
    def trivial(cls, order: int, coeff) -> "EqClass":
        """``coeff (x) Q^1``: a variety with trivial action."""
        return cls(order, {1: coeff})

    @classmethod
    def basis(cls, order: int, d: int, coeff=1) -> "EqClass":
        return cls(order, {d: coeff})

    # --- queries ----------------------------------------------------------
    def coeff(self, d: int) -> RatFunc:
        return self.terms.get(d, _ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, EqClass):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, tuple(self.terms.items())))

    def _check(self, other: "EqClass") -> None:
        if not isinstance(other, EqClass):
            raise TypeError(f"expected an EqClass, got {type(other).__name__}")
        if other.order != self.order:
            raise GroupMismatch(f"classes over groups of order {self.order} and {other.order}")

    # --- additive structure ----------------------------------------------------
    def __add__(self, other: "EqClass") -> "EqClass":
        self._check(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms[d] + c if d in terms else c
        return EqClass(self.order, terms)

    def __neg__(self) -> "EqClass":
        return EqClass(self.order, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "EqClass") -> "EqClass":
        return self + (-other)

    def scale(self, c) -> "EqClass":
        """Multiply every coefficient by the scalar or rational function ``c``."""
        c = c if isinstance(c, (int, Fraction)) else RatFunc.coerce(c)
        return EqClass(self.order, {d: v * c for d, v in self.terms.items()})

    # --- multiplicative structure ----------------------------------------------
    def __mul__(self, other):
        if not isinstance(other, EqClass):
            return self.scale(other)
        self._check(other)
        terms: dict[int, RatFunc] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                g = math.gcd(a, b)
                key = a // g * b
                v = x * y * g
                terms[key] = terms[key] + v if key in terms else v
        return EqClass(self.order, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "EqClass":
        if k < 0:
            raise ValueError("use divide() for negative powers")
        result = EqClass.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divide(self, other: "EqClass") -> "EqClass":
        """The unique ``h`` with ``other * h == self``.

        The product is triangular in the divisor lattice: the coefficient of
        ``Q^d`` in ``g * h`` is ``h_d * sum_{e|d} e g_e`` plus terms involving
        ``h_e`` for proper divisors ``e`` of ``d``.  Solving upward in ``d``
        needs every pivot ``sum_{e|d} e g_e`` to be non-zero.
        """
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero class")
        n = self.order
        divs = divisors(n)
        g = other.terms
        h: dict[int, RatFunc] = {}
        for d in divs:
            pivot = _ZERO
            for e in divs:
                if e > d:
                    break
                if d % e == 0 and e in g:
                    pivot = pivot + g[e] * e
            if pivot.is_zero():
                raise ZeroPivot(f"pivot for Q^{d} vanishes; the divisor is not invertible")
            rest = self.coeff(d)
            for d2, h2 in h.items():
                if d % d2 or d2 == d:
                    continue
                for d1, g1 in g.items():
                    if d % d1 == 0 and lcm(d1, d2) == d:
                        rest = rest - g1 * h2 * math.gcd(d1, d2)
            val = rest / pivot
            if not val.is_zero():
                h[d] = val
        result = EqClass(n, h)
        if other * result != self:
            raise InternalInconsistency("division failed its multiplication check")
        return result

    def __truediv__(self, other):
        if isinstance(other, EqClass):
            return self.divide(other)
        return self.scale(1 / RatFunc.coerce(other) if not isinstance(other, (int, Fraction)) else Fraction(1) / other)

    # --- change of group ----------------------------------------------------
    def induce(self, target_order: int) -> "EqClass":
        """Induction to a cyclic group of order ``target_order`` containing this one."""
        if target_order % self.order:
            raise GroupMismatch(f"order {self.order} does not divide {target_order}")
        k = target_order // self.order
        return EqClass(target_order, {d * k: c for d, c in self.terms.items()})

    def restrict(self, index: int) -> "EqClass":
        """Restriction to the subgroup of the given index."""
        if index < 1 or self.order % index:
            raise GroupMismatch(f"no subgroup of index {index} in a group of order {self.order}")
        terms: dict[int, RatFunc] = {}
        for d, c in self.terms.items():
            g = math.gcd(d, index)
            key = d // g  # lcm(d, index) / index
            v = c * g
            terms[key] = terms[key] + v if key in terms else v
        return EqClass(self.order // index, terms)

    def inner(self, other: "EqClass") -> RatFunc:
        """Bilinear pairing ``<Q^a, Q^b> = gcd(a, b)`` (orbits on a product)."""
        self._check(other)
        total = _ZERO
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                total = total + x * y * math.gcd(a, b)
        return total

    def quotient_class(self, index: int) -> RatFunc:
        """Class of the quotient by the subgroup of the given index.

        ``index = order`` gives the underlying (non-equivariant) class and
        ``index = 1`` the quotient by the whole group.
        """
        if index < 1 or self.order % index:
            raise GroupMismatch(f"no subgroup of index {index} in a group of order {self.order}")
        total = _ZERO
        for d, c in self.terms.items():
            total = total + c * math.gcd(d, index)
        return total

    def plain(self) -> RatFunc:
        """Underlying class after forgetting the action: ``sum_d d c_d``."""
        return self.quotient_class(self.order)

    def fixed_part(self) -> "EqClass":
        """The part ``self - (1/N) plain(self) (x) Q^N`` that sees the action.

        Its underlying class is always zero; it vanishes exactly when only the
        regular summand ``Q^N`` occurs.
        """
        if self.is_zero():
            return self
        return self - EqClass.basis(self.order, self.order, self.plain() * Fraction(1, self.order))

    def map(self, fn) -> "EqClass":
        return EqClass(self.order, {d: fn(c) for d, c in self.terms.items()})

    def evaluate(self, q) -> dict[int, Fraction]:
        return {d: c(q) for d, c in self.terms.items()}

    # --- presentation ---------------------------------------------------------
    def to_str(self, latex: bool = False) -> str:
        if not self.terms:
            return "0"
        parts = []
        for d, c in self.terms.items():
            s = c.to_str(latex=latex)
            if latex:
                parts.append(rf"\left({s}\right)\otimes Q^{{{d}}}")
            else:
                parts.append(f"({s}) Q^{d}")
        return " + ".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"EqClass({self.order}, {self.to_str()})"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "terms": [
                {"d": d, "num": c.num.to_json(), "den": c.den.to_json()}
                for d, c in self.terms.items()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "EqClass":
        if not isinstance(data, dict) or "order" not in data:
            raise ValueError("an equivariant class needs an 'order' and 'terms'")
        order = data["order"]
        if isinstance(order, bool) or not isinstance(order, int) or order < 1:
            raise ValueError("'order' must be a positive integer")
        terms: dict[int, RatFunc] = {}
        for t in data.get("terms", []):
            d = t.get("d")
            if isinstance(d, bool) or not isinstance(d, int):
                raise ValueError("each term needs an integer 'd'")
            c = RatFunc(Poly.from_json(t.get("num", [])), Poly.from_json(t.get("den", [1])))
            terms[d] = terms[d] + c if d in terms else c
        return cls(order, terms)


def eq_sum(items: Iterable[EqClass], order: int) -> EqClass:
    total = EqClass.zero(order)
    for x in items:
        total = total + x
    return total
