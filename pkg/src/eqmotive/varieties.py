"""Classes of matrix strata and of conjugacy-orbit quotients.

A :class:`RankProfile` prescribes the rank of every set of rows of an
``n x m`` matrix.  :func:`vclass` computes the class of the variety of such
matrices, row by row: given the first ``j-1`` rows, row ``j`` must lie in the
span of every row set ``S`` with ``r(S + j) = r(S)`` and outside the span of
every other row set.  Inclusion-exclusion over the "outside" conditions
leaves only dimensions of intersections of spans, which are determined by
the profile.

:func:`conj_quotient` computes the equivariant class of
``GL_n / prod GL_lambda`` where a cyclic group permutes the diagonal blocks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .algebra import ONE, Poly, Q, RatFunc
from .eqring import EqClass
from .errors import InvalidProfile, ProfileTooLarge
from .perops import per

MAX_ROWS = 6


@lru_cache(maxsize=None)
def gl_class(n: int) -> Poly:
    """``[GL_n] = prod_{i<n} (q^n - q^i)``."""
    out = ONE
    for i in range(n):
        out = out * (Poly.monomial(n) - Poly.monomial(i))
    return out


def pgl_class(n: int) -> Poly:
    return gl_class(n).exact_div(Q - 1)


@dataclass(frozen=True)
class RankProfile:
    """Ranks of row subsets of an ``n x m`` matrix; the first ``t`` rows are fixed.

    ``ranks`` maps a bitmask of rows (bit ``i`` for row ``i + 1``) to a rank.
    Every non-empty subset must be present.
    """

    n: int
    m: int
    t: int
    ranks: Mapping[int, int]

    def __post_init__(self):
        if self.n > MAX_ROWS:
            raise ProfileTooLarge(f"{self.n} rows exceeds the supported maximum of {MAX_ROWS}")
        if self.n < 1 or self.m < 0 or not 0 <= self.t <= self.n:
            raise InvalidProfile("need n >= 1, m >= 0 and 0 <= t <= n")
        full = {0: 0}
        for mask in range(1, 1 << self.n):
            if mask not in self.ranks:
                raise InvalidProfile(f"missing rank for rows {_rows(mask)}")
            full[mask] = int(self.ranks[mask])
        object.__setattr__(self, "ranks", full)
        self._validate()

    def _validate(self) -> None:
        r = self.ranks
        for s in range(1, 1 << self.n):
            if not 0 <= r[s] <= min(bin(s).count("1"), self.m):
                raise InvalidProfile(f"rank of rows {_rows(s)} out of range")
            for i in range(self.n):
                if s >> i & 1:
                    lower = r[s & ~(1 << i)]
                    if not lower <= r[s] <= lower + 1:
                        raise InvalidProfile(f"adding a row to {_rows(s & ~(1 << i))} changes rank by more than one")

    def __hash__(self):
        return hash((self.n, self.m, self.t, tuple(sorted(self.ranks.items()))))

    def rank(self, mask: int) -> int:
        return self.ranks[mask]

    @classmethod
    def from_function(cls, n: int, m: int, t: int, fn) -> "RankProfile":
        ranks = {mask: fn(frozenset(_rows(mask))) for mask in range(1, 1 << n)}
        return cls(n, m, t, ranks)

    @classmethod
    def full_rank(cls, n: int, m: int | None = None) -> "RankProfile":
        m = n if m is None else m
        return cls.from_function(n, m, 0, lambda s: min(len(s), m))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]], m: int, p: int, t: int = 0) -> "RankProfile":
        from .kernels import rank_mod_p

        n = len(rows)
        ranks = {mask: rank_mod_p([rows[i] for i in range(n) if mask >> i & 1], p) for mask in range(1, 1 << n)}
        return cls(n, m, t, ranks)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "t": self.t,
            "ranks": [
                {"subset": _rows(mask), "rank": self.ranks[mask]} for mask in range(1, 1 << self.n)
            ],
        }

    @classmethod
    def from_json(cls, data) -> "RankProfile":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n, m, t = int(data["n"]), int(data["m"]), int(data.get("t", 0))
            entries = data["ranks"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed rank profile: {exc}") from None
        if n > MAX_ROWS:
            raise ProfileTooLarge(f"{n} rows exceeds the supported maximum of {MAX_ROWS}")
        ranks: dict[int, int] = {}
        for entry in entries:
            mask = 0
            for row in entry["subset"]:
                if not 1 <= int(row) <= n:
                    raise InvalidProfile(f"row {row} out of range 1..{n}")
                mask |= 1 << (int(row) - 1)
            if mask:
                ranks[mask] = int(entry["rank"])
        return cls(n, m, t, ranks)


def _rows(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def _minimal(family: Iterable[int]) -> frozenset[int]:
    """Inclusion-minimal members of a family of row sets (as bitmasks)."""
    fam = sorted(set(family), key=lambda s: bin(s).count("1"))
    kept: list[int] = []
    for s in fam:
        if not any(k & s == k for k in kept):
            kept.append(s)
    return frozenset(kept)


class _Dims:
    """Dimensions ``d(F)`` of intersections of row spans for a fixed profile.

    ``d(F)`` obeys ``r(union F) = sum_{0 != F' <= F} (-1)^{|F'|-1} d(F')``
    with ``d({S}) = r(S)`` and ``d(empty) = m``.  Inverting gives
    ``d(F) = sum_{0 != F' <= F} (-1)^{|F'|-1} r(union F')``, and that sum is
    unchanged when a member containing another member is dropped, so it is
    enough to evaluate it on antichains.
    """

    def __init__(self, profile: RankProfile):
        self.r = profile.ranks
        self.m = profile.m
        self.cache: dict[frozenset[int], int] = {}

    def __call__(self, family: frozenset[int]) -> int:
        if not family:
            return self.m
        got = self.cache.get(family)
        if got is not None:
            return got
        members = list(family)
        total = 0
        k = len(members)
        unions = [0] * (1 << k)
        for sub in range(1, 1 << k):
            low = sub & -sub
            i = low.bit_length() - 1
            unions[sub] = unions[sub ^ low] | members[i]
            sign = 1 if bin(sub).count("1") % 2 else -1
            total += sign * self.r[unions[sub]]
        if total < 0:
            # the modular identity behind d(F) fails for this configuration
            # (e.g. three pairwise independent rows spanning a plane)
            sets = sorted(_rows(s) for s in family)
            raise InvalidProfile(f"negative intersection dimension {total} for row sets {sets}")
        self.cache[family] = total
        return total


def vclass(profile: RankProfile) -> Poly:
    """Class of matrices with the given row-rank profile (first ``t`` rows fixed)."""
    n, r = profile.n, profile.ranks
    dims = _Dims(profile)
    result = ONE
    for j in range(profile.t + 1, n + 1):
        bit = 1 << (j - 1)
        earlier = range(1 << (j - 1))
        dependent = [s for s in earlier if r[s | bit] == r[s]]
        independent = [s for s in earlier if r[s | bit] != r[s]]
        start = _minimal(dependent)
        # signed sum over subfamilies of the independent sets, tracked by antichain
        states: dict[frozenset[int], int] = {start: 1}
        for s in independent:
            nxt = dict(states)
            for fam, c in states.items():
                key = _minimal(fam | {s})
                nxt[key] = nxt.get(key, 0) - c
            states = {k: v for k, v in nxt.items() if v}
        factor = Poly([])
        for fam, c in states.items():
            factor = factor + Poly.monomial(dims(fam), c)
        result = result * factor
        if result.is_zero():
            break
    return result


# --- orbit quotients -------------------------------------------------------------


@dataclass(frozen=True)
class OrbitBlocks:
    """Blocks ``(lambda, ell)``: an orbit of ``ell`` diagonal ``GL_lambda`` blocks."""

    order: int
    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        blocks = tuple((int(a), int(b)) for a, b in self.blocks)
        for lam, ell in blocks:
            if lam < 1 or ell < 1 or self.order % ell:
                raise ValueError(f"block ({lam}, {ell}) does not fit a group of order {self.order}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def size(self) -> int:
        return sum(lam * ell for lam, ell in self.blocks)

    def to_json(self) -> dict:
        return {"order": self.order, "blocks": [{"lambda": a, "ell": b} for a, b in self.blocks]}

    @classmethod
    def from_json(cls, data) -> "OrbitBlocks":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["order"]), tuple((b["lambda"], b["ell"]) for b in data["blocks"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed orbit blocks: {exc}") from None


def conj_quotient(blocks: OrbitBlocks) -> EqClass:
    """Equivariant class of ``GL_n / prod_blocks GL_lambda^ell``.

    A block of ``ell`` copies of ``GL_lambda`` permuted by the group is the
    power ``Per`` of ``GL_lambda`` from the subgroup of index ``ell``.
    """
    order = blocks.order
    num = EqClass.trivial(order, RatFunc(gl_class(blocks.size)))
    den = EqClass.one(order)
    for lam, ell in blocks.blocks:
        inner = EqClass.trivial(order // ell, RatFunc(gl_class(lam)))
        den = den * per(inner, ell)
    return num.divide(den)
