"""Distance oracles and generalized weight hierarchies.

Every exact quantity here is computed by exhaustive enumeration, so the
functions are only meant for small codes; each accepts an enumeration cap and
fails loudly above it.  Closed forms (supports from the support subtype, the
socle correspondence for join weights) are offered next to the brute-force
versions so the two can be compared.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .code import (
    DEFAULT_CAP,
    LinearCode,
    ZeroCodeError,
    codeword_array,
    filtration_subcode,
    iter_codeword_chunks,
    socle_matrix_fp,
    systematic_form,
)
from .ring import Modulus, ideal_max_lee_weight, lee_weights


@dataclass(frozen=True)
class SupportVector:
    """An n-tuple of nonnegative integers; its size is the entry sum."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.entries)
        if any(x < 0 for x in entries):
            raise ValueError("support entries must be nonnegative")
        object.__setattr__(self, "entries", entries)

    @property
    def size(self) -> int:
        return sum(self.entries)

    def join(self, other: "SupportVector") -> "SupportVector":
        return SupportVector(tuple(max(a, b) for a, b in zip(self.entries, other.entries)))

    def meet(self, other: "SupportVector") -> "SupportVector":
        return SupportVector(tuple(min(a, b) for a, b in zip(self.entries, other.entries)))

    def __len__(self) -> int:
        return len(self.entries)


# minimum distances ---------------------------------------------------------


def _minimum_weight(code: LinearCode, metric: str, cap: int) -> tuple[int, np.ndarray]:
    if code.is_zero:
        raise ZeroCodeError()
    best, witness = None, None
    for chunk in iter_codeword_chunks(code, cap):
        if metric == "lee":
            w = lee_weights(chunk, code.modulus).sum(axis=1)
        else:
            w = np.count_nonzero(chunk, axis=1)
        w = np.where(w == 0, np.iinfo(np.int64).max, w)
        i = int(np.argmin(w))
        if best is None or w[i] < best:
            best, witness = int(w[i]), chunk[i].copy()
    return best, witness


def min_lee_distance(code: LinearCode, cap: int = DEFAULT_CAP) -> int:
    """Minimum Lee weight of a nonzero codeword (exhaustive)."""
    return _minimum_weight(code, "lee", cap)[0]


def min_hamming_distance(code: LinearCode, cap: int = DEFAULT_CAP) -> int:
    """Minimum Hamming weight of a nonzero codeword (exhaustive)."""
    return _minimum_weight(code, "hamming", cap)[0]


def minimum_lee_codeword(code: LinearCode, cap: int = DEFAULT_CAP) -> np.ndarray:
    """A nonzero codeword of minimal Lee weight (the first one enumerated)."""
    return _minimum_weight(code, "lee", cap)[1]


# join and meet supports ----------------------------------------------------


def join_support(code: LinearCode, method: str = "closed",
                 cap: int = DEFAULT_CAP) -> SupportVector:
    """Largest Lee weight seen in each coordinate.

    ``method="closed"`` reads it off the column ideals (``M_i`` for a column
    generating ``(p^i)``); ``method="brute"`` scans every codeword.
    """
    if method == "closed":
        ladder = code.modulus.ladder
        return SupportVector(tuple(ladder[v] for v in code.column_valuations.tolist()))
    if method != "brute":
        raise ValueError(f"unknown method {method!r}")
    out = np.zeros(code.n, dtype=np.int64)
    for chunk in iter_codeword_chunks(code, cap):
        out = np.maximum(out, lee_weights(chunk, code.modulus).max(axis=0))
    return SupportVector(tuple(out.tolist()))


def meet_support(code: LinearCode, method: str = "closed",
                 cap: int = DEFAULT_CAP) -> SupportVector:
    """Smallest nonzero Lee weight seen in each coordinate (0 for zero columns)."""
    if method == "closed":
        s, p = code.s, code.p
        return SupportVector(tuple(0 if v == s else p**v
                                   for v in code.column_valuations.tolist()))
    if method != "brute":
        raise ValueError(f"unknown method {method!r}")
    big = np.iinfo(np.int64).max
    out = np.full(code.n, big, dtype=np.int64)
    for chunk in iter_codeword_chunks(code, cap):
        w = lee_weights(chunk, code.modulus)
        out = np.minimum(out, np.where(w == 0, big, w).min(axis=0))
    out[out == big] = 0
    return SupportVector(tuple(out.tolist()))


def wt_join(code: LinearCode) -> int:
    """``sum_i n_i M_i``."""
    return sum(ni * mi for ni, mi in zip(code.support_subtype, code.modulus.ladder))


def wt_meet(code: LinearCode) -> int:
    """``sum_{i<s} n_i p^i``."""
    return sum(ni * code.p**i for i, ni in enumerate(code.support_subtype[:-1]))


# generalized Hamming weights over F_p --------------------------------------


def _rref_fp(G: np.ndarray, p: int) -> np.ndarray:
    """Row-reduced echelon form over F_p with zero rows removed."""
    A = np.mod(np.asarray(G, dtype=np.int64), p).copy()
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        r += 1
    return A[:r]


def gaussian_binomial(k: int, r: int, p: int) -> int:
    """Number of r-dimensional subspaces of F_p^k."""
    if not 0 <= r <= k:
        return 0
    num = den = 1
    for i in range(r):
        num *= p ** (k - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def _rref_bases(k: int, r: int, p: int) -> "itertools.chain[np.ndarray]":
    """Yield every r x k matrix over F_p in reduced row echelon form with rank r."""
    for pivots in itertools.combinations(range(k), r):
        free = [(i, c) for i in range(r) for c in range(pivots[i] + 1, k) if c not in pivots]
        base = np.zeros((r, k), dtype=np.int64)
        base[np.arange(r), list(pivots)] = 1
        for values in itertools.product(range(p), repeat=len(free)):
            B = base.copy()
            for (i, c), x in zip(free, values):
                B[i, c] = x
            yield B


def generalized_hamming_weight(G_fp, p: int, r: int, cap: int = 10**6) -> int:
    """``d^r``: smallest support of an r-dimensional subcode of an F_p-code."""
    basis = _rref_fp(G_fp, p)
    dim = basis.shape[0]
    if not 1 <= r <= dim:
        raise ValueError(f"r={r} outside [1, {dim}]")
    count = gaussian_binomial(dim, r, p)
    if count > cap:
        raise ValueError(f"{count} subspaces of dimension {r} exceed the cap {cap}")
    best = basis.shape[1]
    for B in _rref_bases(dim, r, p):
        span = (B @ basis) % p
        best = min(best, int(np.count_nonzero(span.any(axis=0))))
    return best


def generalized_join_lee_weight(code: LinearCode, r: int) -> int:
    """``d^r_join``, via the Hamming hierarchy of the socle times ``M_{s-1}``."""
    if not 1 <= r <= code.K:
        raise ValueError(f"r={r} outside [1, {code.K}]")
    G = socle_matrix_fp(code)
    return generalized_hamming_weight(G, code.p, r) * ideal_max_lee_weight(code.modulus, code.s - 1)


def join_hierarchy(code: LinearCode) -> list[int]:
    return [generalized_join_lee_weight(code, r) for r in range(1, code.K + 1)]


def rank(rows, modulus: Modulus) -> int:
    """Rank of the submodule spanned by ``rows``."""
    arr = np.asarray(rows, dtype=np.int64)
    if arr.size == 0 or not np.mod(arr, modulus.q).any():
        return 0
    return len(systematic_form(arr, modulus).pivot_valuations)


def _rank_r_tuples(code: LinearCode, r: int, cap: int, tuple_cap: int):
    words = codeword_array(code, cap)
    words = words[words.any(axis=1)]
    total = math.comb(len(words), r)
    if total > tuple_cap:
        raise ValueError(f"{total} codeword {r}-subsets exceed the cap {tuple_cap}")
    for idx in itertools.combinations(range(len(words)), r):
        rows = words[list(idx)]
        if rank(rows, code.modulus) == r:
            yield rows


def generalized_join_lee_weight_bruteforce(code: LinearCode, r: int, cap: int = 4096,
                                           tuple_cap: int = 2 * 10**5) -> int:
    """``d^r_join`` by minimising over spans of rank-r codeword tuples.

    The join support of each span is computed by enumerating the span, so
    this is independent of the socle correspondence.  Tiny codes only.
    """
    if not 1 <= r <= code.K:
        raise ValueError(f"r={r} outside [1, {code.K}]")
    best = None
    seen: set[bytes] = set()
    for rows in _rank_r_tuples(code, r, cap, tuple_cap):
        sub = LinearCode.from_generators(rows, code.modulus)
        key = np.asarray(sub.generator).tobytes()
        if key in seen:
            continue
        seen.add(key)
        value = join_support(sub, method="brute").size
        best = value if best is None else min(best, value)
    return best


def generalized_meet_lee_weight(code: LinearCode, r: int, cap: int = 4096,
                                tuple_cap: int = 2 * 10**5) -> int:
    """``d^r_meet``: smallest meet-support size of a rank-r subcode (tiny codes)."""
    if not 1 <= r <= code.K:
        raise ValueError(f"r={r} outside [1, {code.K}]")
    best = None
    for rows in _rank_r_tuples(code, r, cap, tuple_cap):
        value = meet_support(LinearCode.from_generators(rows, code.modulus)).size
        best = value if best is None else min(best, value)
    return best


# column Lee weights --------------------------------------------------------


def column_lee_weight_matrix(A, modulus: Modulus) -> int:
    """``sum_j max_i wt_L(A_ij)``."""
    arr = np.asarray(A, dtype=np.int64)
    if arr.size == 0:
        return 0
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    return int(lee_weights(arr, modulus).max(axis=0).sum())


class SearchBudgetExceeded(RuntimeError):
    """The branch-and-bound search ran out of budget before certifying optimality."""

    def __init__(self, upper_bound: int, nodes: int) -> None:
        super().__init__(f"search budget of {nodes} nodes exhausted; best value so far "
                         f"{upper_bound} is an upper bound, not certified")
        self.upper_bound = upper_bound
        self.nodes = nodes


@dataclass(frozen=True)
class ColumnSearchResult:
    value: int
    witness: np.ndarray
    nodes: int


def _sign_representatives(words: np.ndarray, q: int) -> np.ndarray:
    """Keep one of each pair ``{c, -c}`` (the lexicographically smaller)."""
    neg = (-words) % q
    keep = []
    for w, m in zip(words.tolist(), neg.tolist()):
        if w <= m:
            keep.append(w)
    return np.asarray(keep, dtype=np.int64).reshape(-1, words.shape[1])


def _span_size(rows: np.ndarray, modulus: Modulus) -> int:
    form = systematic_form(rows, modulus)
    return math.prod(modulus.p ** (modulus.s - v) for v in form.pivot_valuations)


def column_search(code: LinearCode, r: int, *, generating: bool = False,
                  budget: int = 5 * 10**6, cap: int = DEFAULT_CAP) -> ColumnSearchResult:
    """Branch-and-bound for the smallest column Lee weight of r codewords.

    Searches r-subsets of codewords (up to sign, sorted by Lee weight) whose
    span has rank r, minimising the column Lee weight of the r x n matrix.
    With ``generating=True`` (and ``r = K``) the span must be the whole code,
    which gives the column Lee weight of the code itself.  Every prefix of a
    valid tuple is independent, which prunes dependent prefixes; partial
    column maxima prune against the incumbent.
    """
    if not 1 <= r <= code.K:
        raise ValueError(f"r={r} outside [1, {code.K}]")
    if generating and r != code.K:
        raise ValueError("a generating tuple has exactly K rows")
    mod = code.modulus
    words = codeword_array(code, cap)
    words = _sign_representatives(words[words.any(axis=1)], code.q)
    W = lee_weights(words, mod)
    tot = W.sum(axis=1)
    order = np.lexsort(tuple(words.T[::-1]) + (tot,))
    words, W, tot = words[order], W[order], tot[order]
    N = len(words)

    def accept(rows: np.ndarray) -> bool:
        return not generating or _span_size(rows, mod) == code.size

    if generating:
        # the systematic rows always generate the code
        start_rows = np.asarray(code.generator)
        best = column_lee_weight_matrix(start_rows, mod) + 1
        witness = start_rows
    else:
        # greedy incumbent: lightest word, then the cheapest independent extension
        chosen = [0]
        colmax = W[0].copy()
        for _ in range(1, r):
            sums = np.maximum(colmax, W).sum(axis=1)
            for i in np.argsort(sums, kind="stable").tolist():
                if i not in chosen and rank(words[chosen + [i]], mod) == len(chosen) + 1:
                    chosen.append(i)
                    colmax = np.maximum(colmax, W[i])
                    break
        best = int(colmax.sum()) + 1
        witness = words[chosen]
    nodes = 0

    def dfs(prefix: list[int], colmax: np.ndarray, start: int) -> None:
        nonlocal best, witness, nodes
        depth = len(prefix)
        sums = np.maximum(colmax, W[start:]).sum(axis=1)
        for off in np.flatnonzero(sums < best).tolist():
            i = start + off
            if tot[i] >= best:
                break
            if sums[off] >= best:
                continue
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(best, nodes)
            cand = prefix + [i]
            if depth and rank(words[cand], mod) != depth + 1:
                continue
            if depth + 1 == r:
                if accept(words[cand]):
                    best = int(sums[off])
                    witness = words[cand]
            elif N - i - 1 >= r - depth - 1:
                dfs(cand, np.maximum(colmax, W[i]), i + 1)

    dfs([], np.zeros(code.n, dtype=np.int64), 0)
    return ColumnSearchResult(best, witness, nodes)


def generalized_column_lee_weight(code: LinearCode, r: int, *, budget: int = 5 * 10**6,
                                  cap: int = DEFAULT_CAP) -> int:
    """``d^r_col``: smallest column Lee weight of a rank-r subcode."""
    return column_search(code, r, budget=budget, cap=cap).value


def column_lee_weight_code(code: LinearCode, *, budget: int = 5 * 10**6,
                           cap: int = DEFAULT_CAP) -> int:
    """Smallest column Lee weight of a generator matrix of ``code``.

    Only K-row generating tuples are searched: extra rows never lower a
    column maximum.  The zero code has weight 0.
    """
    if code.is_zero:
        return 0
    return column_search(code, code.K, generating=True, budget=budget, cap=cap).value


def column_hierarchy(code: LinearCode, **kw) -> list[int]:
    return [generalized_column_lee_weight(code, r, **kw) for r in range(1, code.K + 1)]


# filtration distances ------------------------------------------------------


def generalized_filtration_distance(code: LinearCode, r: int, cap: int = DEFAULT_CAP) -> int:
    """``d^r_L(C) = d_L(C_{r-1})``."""
    if not 1 <= r <= code.s:
        raise ValueError(f"r={r} outside [1, {code.s}]")
    return min_lee_distance(filtration_subcode(code, r - 1), cap)


def filtration_hierarchy(code: LinearCode, cap: int = DEFAULT_CAP) -> list[int]:
    return [generalized_filtration_distance(code, r, cap) for r in range(1, code.s + 1)]


__all__ = [
    "ColumnSearchResult", "SearchBudgetExceeded", "SupportVector", "column_hierarchy",
    "column_lee_weight_code", "column_lee_weight_matrix", "column_search",
    "filtration_hierarchy", "gaussian_binomial", "generalized_column_lee_weight",
    "generalized_filtration_distance", "generalized_hamming_weight",
    "generalized_join_lee_weight", "generalized_join_lee_weight_bruteforce",
    "generalized_meet_lee_weight", "join_hierarchy", "join_support", "meet_support",
    "min_hamming_distance", "min_lee_distance", "minimum_lee_codeword", "rank",
    "wt_join", "wt_meet",
]
