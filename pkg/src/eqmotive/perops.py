"""Equivariant power structure: ``Per_Gamma^{G}`` for a cyclic extension.

Fix a cyclic group ``Gamma`` of order ``base`` and a cyclic extension ``G_N``
containing it with index ``N``.  For a ``Gamma``-variety ``X`` the variety
``X^N`` carries a ``G_N``-action (a generator permutes the factors cyclically
and its ``N``-th power acts through ``Gamma``).  Its class depends only on the
class of ``X``; computing it is the job of :func:`per`.

The construction goes through *towers*: families ``(X_m)_{m | N}`` with
``X_m`` a class over ``G_m`` (order ``base * m``).  Towers form a ring under
:func:`star_add` and the entrywise product, and a monomial ``q^a (x) Q^h``
corresponds to an explicit tower (:func:`omega_monomial`).  Expanding an
integer class into monomials and adding the towers gives ``Per``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import Poly, RatFunc, divisors, factorize, is_prime, mobius
from .eqring import EqClass
from .errors import NonIntegerInput, NotPrime, TowerMismatch


@lru_cache(maxsize=None)
def per_character(h: int, n: int) -> EqClass:
    """Class of ``(Gamma/H)^n`` as a ``G_n``-set, for ``H`` of index ``h``.

    The answer is a sum over divisors of ``n`` that are multiples of the part
    of ``n`` supported on the primes of ``h``; each term is a Moebius-inverted
    count of orbits with a given stabiliser.  The result lives over a group
    of order ``h * n``.  When ``Gamma`` is bigger the same terms can be reused
    over the larger group, because the labels only record coset sizes.
    """
    if h < 1 or n < 1:
        raise ValueError("index and extension degree must be positive")
    m_part = 1
    for p, _ in factorize(h):
        while n % (m_part * p) == 0:
            m_part *= p
    terms: dict[int, Fraction] = {}
    for d in divisors(n):
        if d % m_part:
            continue
        s = sum(Fraction(h) ** dp * mobius(d // dp) for dp in divisors(d) if dp % m_part == 0)
        c = s / (h * d)
        if c:
            terms[h * d] = c
    return EqClass(h * n, terms)


def _relabel(x: EqClass, order: int) -> EqClass:
    """Same coset sizes, viewed in a cyclic group of a multiple order."""
    if order % x.order:
        raise TowerMismatch(f"cannot view a class of order {x.order} inside order {order}")
    return EqClass(order, dict(x.terms))


def per_prime(p: Poly, h: int, n: int, base: int | None = None) -> EqClass:
    """``Per`` of ``p (x) Q^h`` for a prime extension degree ``n``.

    For prime ``n`` the only orbit types on ``X^n`` are the diagonal (fixed
    by the cyclic shift) and free shift-orbits, which gives the closed form
    ``p(q^n) Q^{Per(h)} + h^{n-1} (p^n - p(q^n))/n Q^{hn}``.
    """
    if not is_prime(n):
        raise NotPrime(f"extension degree {n} is not prime")
    base = h if base is None else base
    if base % h:
        raise TowerMismatch(f"Q^{h} is not a coset space of a group of order {base}")
    order = base * n
    p = Poly.coerce(p)
    pn = p.subs_power(n)
    diag = _relabel(per_character(h, n) if h > 1 else EqClass.one(n), order).scale(RatFunc(pn))
    free = (p**n - pn) * Fraction(h ** (n - 1), n)
    return diag + EqClass.basis(order, h * n, RatFunc(free))


# --- towers --------------------------------------------------------------------


class Tower:
    """A family ``X_m`` for ``m | N``, with ``X_m`` a class over order ``base * m``."""

    __slots__ = ("base", "n", "entries")

    def __init__(self, base: int, n: int, entries: dict[int, EqClass]):
        self.base, self.n = base, n
        for m in divisors(n):
            e = entries.get(m)
            if e is None or e.order != base * m:
                raise TowerMismatch(f"tower entry {m} must be a class over order {base * m}")
        self.entries = entries

    def __getitem__(self, m: int) -> EqClass:
        return self.entries[m]

    def _check(self, other: "Tower") -> None:
        if (self.base, self.n) != (other.base, other.n):
            raise TowerMismatch("towers over different groups")

    @classmethod
    def zero(cls, base: int, n: int) -> "Tower":
        return cls(base, n, {m: EqClass.zero(base * m) for m in divisors(n)})

    def __mul__(self, other: "Tower") -> "Tower":
        self._check(other)
        return Tower(self.base, self.n, {m: self[m] * other[m] for m in divisors(self.n)})

    def is_coherent(self) -> bool:
        """Check ``Res(X_m) = X_d^{m/d}`` for all ``d | m | N``."""
        for m in divisors(self.n):
            for d in divisors(m):
                if self[m].restrict(m // d) != self[d] ** (m // d):
                    return False
        return True


def _star_level(x: Tower, y: dict[int, EqClass], m: int, skip_top: bool = False) -> EqClass:
    base = x.base
    total = EqClass.zero(base * m)
    for d in divisors(m):
        if skip_top and d == m:
            continue
        inner = EqClass.zero(base * d)
        for dp in divisors(m):
            if dp % d:
                continue
            mu = mobius(dp // d)
            if mu == 0:
                continue
            k = dp // d
            s = x[d] ** k + y[d] ** k
            term = s ** (m // dp)
            inner = inner + term if mu > 0 else inner - term
        total = total + inner.induce(base * m).scale(Fraction(d, m))
    return total


def star_add(x: Tower, y: Tower) -> Tower:
    """Tower addition: the tower of a disjoint union.

    ``(X*Y)_m = sum_{d|m} (d/m) Ind_{G_d}^{G_m} sum_{d|d'|m}
    mu(d'/d) (X_d^{d'/d} + Y_d^{d'/d})^{m/d'}``; on underlying classes this is
    the binomial expansion of ``(x + y)^m``.
    """
    x._check(y)
    return Tower(x.base, x.n, {m: _star_level(x, y.entries, m) for m in divisors(x.n)})


def star_neg(x: Tower) -> Tower:
    """The additive inverse for :func:`star_add`, solved level by level."""
    y: dict[int, EqClass] = {}
    for m in divisors(x.n):
        rest = _star_level(x, y, m, skip_top=True)
        y[m] = -x[m] - rest
    return Tower(x.base, x.n, y)


def omega_monomial(a: int, h: int, base: int, n: int) -> Tower:
    """Tower of the monomial ``q^a (x) Q^h`` over a group of order ``base``."""
    if base % h:
        raise TowerMismatch(f"Q^{h} is not a coset space of a group of order {base}")
    entries = {}
    for m in divisors(n):
        pc = per_character(h, m) if h > 1 else EqClass.one(m)
        entries[m] = _relabel(pc, base * m).scale(RatFunc(Poly.monomial(a * m)))
    return Tower(base, n, entries)


def _monomials(xi: EqClass):
    for h, c in xi.terms.items():
        if not c.is_poly() or not c.num.is_integral():
            raise NonIntegerInput(f"coefficient of Q^{h} is not an integer polynomial: {c}")
        for a, coef in enumerate(c.num.coeffs):
            if coef:
                yield a, h, int(coef)


def _scaled(t: Tower, k: int) -> Tower:
    """``t * t * ... * t`` (``k`` copies under star addition), by doubling."""
    acc = None
    base = t
    while k:
        if k & 1:
            acc = base if acc is None else star_add(acc, base)
        k >>= 1
        if k:
            base = star_add(base, base)
    return acc


def per_tower(xi: EqClass, n: int) -> Tower:
    total = Tower.zero(xi.order, n)
    pos, neg = [], []
    for a, h, k in _monomials(xi):
        mono = omega_monomial(a, h, xi.order, n)
        (pos if k > 0 else neg).append(_scaled(mono, abs(k)))
    for t in pos:
        total = star_add(total, t)
    for t in neg:
        total = star_add(total, star_neg(t))
    return total


def per(xi: EqClass, n: int) -> EqClass:
    """``Per_Gamma^{G_n}(xi)`` for a class with integer polynomial coefficients."""
    if n < 1:
        raise ValueError("extension degree must be positive")
    return per_tower(xi, n)[n]
