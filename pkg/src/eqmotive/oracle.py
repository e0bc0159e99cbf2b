"""Brute-force validators that share no code with the algebraic routines.

* :func:`perm_character_bruteforce` builds the permutation-of-factors action
  on ``(Z/h)^N`` explicitly, counts fixed points of every power of the
  generator and solves for the multiplicities of the coset spaces ``Q^d``.
* :func:`point_count` counts matrices over a prime field with a given rank
  profile by enumerating all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import kernels
from .errors import TooLarge
from .varieties import RankProfile

PERM_LIMIT = 16
_POINT_LIMITS = {2: 9, 3: 9, 5: 6}


@dataclass(frozen=True)
class FiniteActionSpec:
    """``Z/(hN)`` acting on ``(Z/h)^N`` by shifting factors and translating the wrapped one."""

    h: int
    N: int

    def __post_init__(self):
        if self.h < 1 or self.N < 1:
            raise ValueError("h and N must be positive")
        if self.h * self.N > PERM_LIMIT:
            raise TooLarge(f"h*N = {self.h * self.N} exceeds the enumeration bound {PERM_LIMIT}")

    @property
    def order(self) -> int:
        return self.h * self.N

    def act(self, x: tuple[int, ...]) -> tuple[int, ...]:
        return ((x[-1] + 1) % self.h,) + x[:-1]


def fixed_point_counts(spec: FiniteActionSpec) -> dict[int, int]:
    """``k -> |Fix(sigma^k)|`` for ``k = 0 .. hN - 1``."""
    points = list(product(range(spec.h), repeat=spec.N))
    counts = {}
    for k in range(spec.order):
        fixed = 0
        for x in points:
            y = x
            for _ in range(k):
                y = spec.act(y)
            fixed += y == x
        counts[k] = fixed
    return counts


def perm_character_bruteforce(spec: FiniteActionSpec) -> dict[int, int]:
    """Multiplicities ``d -> mult_d`` of ``Q^d`` in the permutation representation.

    ``sigma^k`` fixes every point of ``Q^d`` when ``d | k`` and none otherwise,
    so ``|Fix(sigma^e)| = sum_{d | e} d mult_d`` for each divisor ``e`` of the
    group order; this is solved from the bottom of the divisor lattice up.
    """
    fix = fixed_point_counts(spec)
    order = spec.order
    divs = [e for e in range(1, order + 1) if order % e == 0]
    mult: dict[int, int] = {}
    for e in divs:
        rest = fix[e % order] - sum(d * mult[d] for d in mult if e % d == 0)
        val = Fraction(rest, e)
        if val.denominator != 1 or val < 0:
            raise ArithmeticError(f"fixed-point data is not a permutation character at {e}")
        if val:
            mult[e] = int(val)
    return mult


def _check_point_bounds(n: int, m: int, p: int) -> None:
    if p not in _POINT_LIMITS:
        raise TooLarge(f"point counting is supported over F_2, F_3 and F_5, not F_{p}")
    if n * m > _POINT_LIMITS[p]:
        raise TooLarge(f"{n}x{m} matrices over F_{p} exceed the enumeration bound")


@lru_cache(maxsize=None)
def _histogram(n: int, m: int, p: int, prefix: tuple[int, ...] = ()) -> dict[tuple[int, ...], int]:
    return kernels.profile_histogram(n, m, p, prefix)


def profile_key(profile: RankProfile) -> tuple[int, ...]:
    return tuple(profile.ranks[s] for s in range(1, 1 << profile.n))


def fixed_prefix(profile: RankProfile, p: int) -> tuple[int, ...] | None:
    """First choice of the ``t`` fixed rows realising the restricted profile, if any."""
    t = profile.t
    if t == 0:
        return ()
    want = tuple(profile.ranks[s] for s in range(1, 1 << t))
    vectors = [kernels.decode(c, profile.m, p) for c in range(p**profile.m)]
    for rows in product(range(p**profile.m), repeat=t):
        ranks = tuple(
            kernels.rank_mod_p([vectors[rows[i]] for i in range(t) if s >> i & 1], p) for s in range(1, 1 << t)
        )
        if ranks == want:
            return rows
    return None


def point_count(profile: RankProfile, p: int) -> int:
    """Number of ``n x m`` matrices over ``F_p`` with the given rank profile.

    With ``t > 0`` the first ``t`` rows are fixed to one realisation of the
    restricted profile and only completions are counted (zero if the
    restricted profile has no realisation over ``F_p``).
    """
    _check_point_bounds(profile.n, profile.m, p)
    prefix = fixed_prefix(profile, p)
    if prefix is None:
        return 0
    return _histogram(profile.n, profile.m, p, prefix).get(profile_key(profile), 0)


def realizable_profiles(n: int, m: int, p: int) -> dict[RankProfile, int]:
    """All profiles occurring for ``n x m`` matrices over ``F_p``, with counts."""
    _check_point_bounds(n, m, p)
    out = {}
    for key, cnt in _histogram(n, m, p).items():
        ranks = {s: key[s - 1] for s in range(1, 1 << n)}
        out[RankProfile(n, m, 0, ranks)] = cnt
    return out
