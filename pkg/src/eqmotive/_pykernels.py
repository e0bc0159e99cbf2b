"""Pure-Python enumeration kernels (reference implementation and fallback).

Vectors of length ``m`` over the prime field ``F_p`` are encoded as integers
in base ``p`` (least significant digit first).  See :mod:`eqmotive.kernels`.
"""

from __future__ import annotations

from itertools import product


def decode(code: int, m: int, p: int) -> list[int]:
    out = []
    for _ in range(m):
        code, r = divmod(code, p)
        out.append(r)
    return out


def rank_mod_p(rows, p: int) -> int:
    """Rank of a list of integer vectors over ``F_p`` by Gaussian elimination."""
    mat = [[x % p for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        prow = [(x * inv) % p for x in mat[rank]]
        mat[rank] = prow
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def profile_histogram(n: int, m: int, p: int, prefix=()) -> dict[tuple[int, ...], int]:
    """Count ``n x m`` matrices over ``F_p`` by rank profile.

    The first ``len(prefix)`` rows are fixed to the given codes.  Keys are
    tuples ``(r(S) for S = 1 .. 2^n - 1)`` with ``S`` a row bitmask.
    """
    vectors = [decode(c, m, p) for c in range(p**m)]
    cache: dict[tuple[int, ...], int] = {}

    def rank_of(ids: tuple[int, ...]) -> int:
        key = tuple(sorted(ids))
        got = cache.get(key)
        if got is None:
            got = rank_mod_p([vectors[i] for i in key], p)
            cache[key] = got
        return got

    masks = range(1, 1 << n)
    members = [tuple(i for i in range(n) if s >> i & 1) for s in masks]
    hist: dict[tuple[int, ...], int] = {}
    free = n - len(prefix)
    for tail in product(range(p**m), repeat=free):
        rows = tuple(prefix) + tail
        key = tuple(rank_of(tuple(rows[i] for i in mem)) for mem in members)
        hist[key] = hist.get(key, 0) + 1
    return hist
