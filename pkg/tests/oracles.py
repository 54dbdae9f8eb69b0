"""Brute-force reference implementations used as test oracles.

Everything here is plain Python over tuples and sets and never imports
``leebounds``, so that an error in the library cannot leak into the value it
is checked against.  Only tiny codes are feasible.
"""

from __future__ import annotations

import itertools
from math import gcd


def lee(a: int, q: int) -> int:
    a %= q
    return min(a, q - a)


def lee_vec(x, q: int) -> int:
    return sum(lee(a, q) for a in x)


def hamming_vec(x) -> int:
    return sum(1 for a in x if a)


def valuation(a: int, p: int, s: int) -> int:
    a %= p**s
    if a == 0:
        return s
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def span(rows, q: int) -> frozenset:
    """Closure of ``rows`` under addition (a Z/qZ-span is an additive span)."""
    rows = [tuple(int(a) % q for a in r) for r in rows]
    n = len(rows[0]) if rows else 0
    zero = (0,) * n
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for w in frontier:
            for r in rows:
                v = tuple((a + b) % q for a, b in zip(w, r))
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(seen)


def nonzero(words):
    return [w for w in words if any(w)]


def d_lee(words, q: int) -> int:
    return min(lee_vec(w, q) for w in nonzero(words))


def d_hamming(words) -> int:
    return min(hamming_vec(w) for w in nonzero(words))


def rank_mod(words, p: int, q: int) -> int:
    """``log_p |D / pD|`` for an additive subgroup ``D`` of (Z/qZ)^n."""
    words = frozenset(words)
    pD = {tuple((p * a) % q for a in w) for w in words}
    ratio = len(words) // len(pD)
    r = 0
    while ratio > 1:
        ratio //= p
        r += 1
    return r


def join_support(words, q: int) -> list[int]:
    n = len(next(iter(words)))
    return [max(lee(w[j], q) for w in words) for j in range(n)]


def meet_support(words, q: int) -> list[int]:
    n = len(next(iter(words)))
    out = []
    for j in range(n):
        vals = [lee(w[j], q) for w in words if w[j] % q]
        out.append(min(vals) if vals else 0)
    return out


def column_weight(rows, q: int) -> int:
    n = len(rows[0])
    return sum(max(lee(r[j], q) for r in rows) for j in range(n))


def generalized_column_weight(words, r: int, p: int, q: int) -> int:
    """Minimum column weight over ``r``-tuples of codewords spanning a rank-``r`` subcode."""
    pool = sorted(set(nonzero(words)))
    best = None
    for tup in itertools.combinations(pool, r):
        wt = column_weight(tup, q)
        if best is not None and wt >= best:
            continue
        if rank_mod(span(tup, q), p, q) == r:
            best = wt
    return best


def generating_column_weight(words, r: int, q: int, limit: int | None = None):
    """Minimum column weight over ``r``-tuples of codewords that generate all of ``words``.

    With ``limit`` only words of Lee weight at most ``limit`` are tried; the
    answer is still exact when it is at most ``limit`` (each word's Lee weight
    is bounded by the column weight of any tuple containing it), and ``None``
    means it exceeds ``limit``.
    """
    target = frozenset(words)
    pool = sorted(w for w in set(nonzero(words)) if limit is None or lee_vec(w, q) <= limit)
    best = None
    for tup in itertools.combinations(pool, r):
        wt = column_weight(tup, q)
        if best is not None and wt >= best:
            continue
        if len(span(tup, q)) == len(target):
            best = wt
    if limit is not None and best is not None and best > limit:
        return None
    return best


def generalized_join_weight(words, r: int, p: int, q: int) -> int:
    """Minimum join-support size over rank-``r`` subcodes spanned by ``r`` codewords."""
    pool = sorted(set(nonzero(words)))
    best = None
    seen = set()
    for tup in itertools.combinations(pool, r):
        D = span(tup, q)
        if D in seen:
            continue
        seen.add(D)
        if rank_mod(D, p, q) != r:
            continue
        wt = sum(join_support(D, q))
        if best is None or wt < best:
            best = wt
    return best


def generalized_hamming_weight(words_fp, r: int, p: int) -> int:
    """Classical generalized Hamming weight of an F_p-code given as a set of words."""
    pool = sorted(set(nonzero(words_fp)))
    best = None
    for tup in itertools.combinations(pool, r):
        D = span(tup, p)
        if len(D) != p**r:
            continue
        supp = sum(1 for j in range(len(tup[0])) if any(w[j] for w in D))
        if best is None or supp < best:
            best = supp
    return best


def filtration_subcode(words, i: int, p: int) -> frozenset:
    """``C ∩ (p^i)``: codewords whose entries are all divisible by ``p^i``."""
    return frozenset(w for w in words if all(a % p**i == 0 for a in w))


def column_valuations(words, p: int, s: int) -> list[int]:
    n = len(next(iter(words)))
    return [min(valuation(w[j], p, s) for w in words) for j in range(n)]


def support_subtype(words, p: int, s: int) -> tuple[int, ...]:
    cv = column_valuations(words, p, s)
    return tuple(cv.count(i) for i in range(s + 1))


def torsion_words(words, i: int, p: int, s: int) -> frozenset:
    """Reduction of ``C`` modulo ``p^(s-i)``."""
    m = p ** (s - i)
    return frozenset(tuple(a % m for a in w) for w in words)


def isometry_image(words, perm, signs, q: int) -> frozenset:
    return frozenset(tuple((w[perm[j]] * signs[j]) % q for j in range(len(perm))) for w in words)


def count_units(q: int, p: int) -> int:
    return sum(1 for a in range(q) if gcd(a, p) == 1)
