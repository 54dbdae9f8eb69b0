"""Linear codes over Z/p^sZ: normal forms and derived subcodes.

A :class:`LinearCode` is normalised on construction.  The stored matrix is in
systematic form with respect to a column permutation ``perm``: column ``j`` of
``sys_matrix`` is column ``perm[j]`` of the original coordinates.  Codewords
and supports are always reported in the original coordinates.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .ring import Modulus, centered, unit_inverse, valuations

DEFAULT_CAP = 2**24


class ZeroCodeError(ValueError):
    """Raised when an operation needs a nonzero code."""

    def __init__(self, message: str = "zero code") -> None:
        super().__init__(message)


class EnumerationCapError(RuntimeError):
    """Raised when a code has more codewords than the enumeration cap allows."""

    def __init__(self, size: int, cap: int) -> None:
        super().__init__(f"code has {size} codewords, above the enumeration cap {cap}")
        self.size = size
        self.cap = cap


def _as_matrix(G, modulus: Modulus) -> np.ndarray:
    arr = np.asarray(G, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError("generator matrix must be two-dimensional")
    return np.mod(arr, modulus.q)


@dataclass(frozen=True)
class SystematicForm:
    """Result of :func:`systematic_form`."""

    matrix: np.ndarray
    permutation: tuple[int, ...]
    subtype: tuple[int, ...]
    pivot_valuations: tuple[int, ...]


def systematic_form(G, modulus: Modulus) -> SystematicForm:
    """Bring ``G`` to systematic form by row operations and column swaps.

    Pivots are chosen with minimal valuation, then leftmost column, then
    topmost row, and are scaled to exactly ``p^j``.  Entries above a pivot are
    cleared only inside the same block, so an input that is already systematic
    comes back unchanged.
    """
    A = _as_matrix(G, modulus).copy()
    p, s, q = modulus.p, modulus.s, modulus.q
    R, n = A.shape
    perm = list(range(n))
    val = valuations(A, modulus)
    pivots: list[int] = []
    t = 0
    while t < min(R, n):
        sub = val[t:, t:]
        v = int(sub.min())
        if v == s:
            break
        c = t + int(np.flatnonzero((sub == v).any(axis=0))[0])
        r = t + int(np.flatnonzero(val[t:, c] == v)[0])
        A[[t, r]] = A[[r, t]]
        val[[t, r]] = val[[r, t]]
        A[:, [t, c]] = A[:, [c, t]]
        val[:, [t, c]] = val[:, [c, t]]
        perm[t], perm[c] = perm[c], perm[t]
        scale = p**v
        A[t] = (A[t] * unit_inverse(A[t, t] // scale, modulus)) % q
        targets = list(range(t + 1, R)) + [i for i in range(t) if pivots[i] == v]
        for i in targets:
            if A[i, t]:
                A[i] = (A[i] - (A[i, t] // scale) * A[t]) % q
        val = valuations(A, modulus)
        pivots.append(v)
        t += 1
    if t == 0:
        raise ZeroCodeError()
    subtype = tuple(pivots.count(i) for i in range(s))
    return SystematicForm(A[:t].copy(), tuple(perm), subtype, tuple(pivots))


def _check_systematic(G: np.ndarray, modulus: Modulus) -> list[int]:
    """Return the pivot valuations of a systematic matrix, or raise."""
    K, n = G.shape
    if K > n:
        raise ValueError("not systematic: more rows than columns")
    p, s = modulus.p, modulus.s
    val = valuations(G, modulus)
    pivots: list[int] = []
    for r in range(K):
        v = int(val[r, r])
        if v == s or G[r, r] != p**v:
            raise ValueError(f"not systematic: entry ({r},{r}) is not a power of p")
        if pivots and v < pivots[-1]:
            raise ValueError("not systematic: pivot valuations decrease")
        if np.any(G[r, :r] != 0):
            raise ValueError(f"not systematic: nonzero entry left of pivot in row {r}")
        if np.any(val[r] < v):
            raise ValueError(f"not systematic: row {r} leaves the ideal of its pivot")
        pivots.append(v)
    return pivots


def reduced_systematic_form(G_sys, modulus: Modulus) -> np.ndarray:
    """Reduce the entries above every pivot to centred residues.

    Above a pivot ``p^j`` each entry is replaced by its centred representative
    modulo ``p^j`` by subtracting a multiple of the pivot row.  Columns are
    processed left to right, so later columns see the earlier row operations.
    """
    G = _as_matrix(G_sys, modulus).copy()
    pivots = _check_systematic(G, modulus)
    q = modulus.q
    for c, v in enumerate(pivots):
        scale = modulus.p**v
        for i in range(c):
            a = int(G[i, c])
            target = centered(a, scale)
            f = (a - target) // scale
            if f:
                G[i] = (G[i] - f * G[c]) % q
    return G


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A Z/p^sZ-linear code stored in normalised systematic form."""

    modulus: Modulus
    n: int
    sys_matrix: np.ndarray
    permutation: tuple[int, ...]
    subtype: tuple[int, ...]
    pivot_valuations: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        self.sys_matrix.setflags(write=False)

    @classmethod
    def from_generators(cls, G, modulus: Modulus | None = None, *, p: int | None = None,
                        s: int | None = None, n: int | None = None,
                        allow_zero: bool = False) -> "LinearCode":
        """Build the code spanned by the rows of ``G``.

        Either pass a :class:`Modulus` or ``p`` and ``s``.  An all-zero ``G``
        raises :class:`ZeroCodeError` unless ``allow_zero`` is set.
        """
        if modulus is None:
            if p is None or s is None:
                raise ValueError("need a modulus or both p and s")
            modulus = Modulus(p, s)
        arr = np.asarray(G, dtype=np.int64)
        if arr.size == 0:
            if n is None:
                raise ValueError("cannot infer the length of an empty generator matrix")
            arr = np.zeros((0, n), dtype=np.int64)
        arr = _as_matrix(arr, modulus)
        if n is not None and arr.shape[1] != n:
            raise ValueError(f"generator rows have length {arr.shape[1]}, expected {n}")
        length = arr.shape[1]
        if not arr.any():
            if not allow_zero:
                raise ZeroCodeError()
            return cls.zero(modulus, length)
        form = systematic_form(arr, modulus)
        return cls(modulus, length, form.matrix, form.permutation, form.subtype,
                   form.pivot_valuations)

    @classmethod
    def zero(cls, modulus: Modulus, n: int) -> "LinearCode":
        return cls(modulus, n, np.zeros((0, n), dtype=np.int64), tuple(range(n)),
                   (0,) * modulus.s, ())

    # basic parameters -------------------------------------------------------

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def s(self) -> int:
        return self.modulus.s

    @property
    def q(self) -> int:
        return self.modulus.q

    @property
    def K(self) -> int:
        """Rank: the number of rows of a systematic generator matrix."""
        return int(sum(self.subtype))

    @property
    def k(self) -> Fraction:
        """Z/p^sZ-dimension, ``log_q |C|``, as an exact fraction."""
        return sum((Fraction(self.s - i, self.s) * ki for i, ki in enumerate(self.subtype)),
                   Fraction(0))

    @property
    def size(self) -> int:
        return int(np.prod([self.p ** (self.s - v) for v in self.pivot_valuations],
                           dtype=object)) if self.pivot_valuations else 1

    @property
    def is_zero(self) -> bool:
        return self.K == 0

    @property
    def is_free(self) -> bool:
        return self.K == self.subtype[0]

    @property
    def sigma(self) -> int:
        """Largest index ``i`` with ``k_i != 0``."""
        if self.is_zero:
            raise ZeroCodeError()
        return max(i for i, ki in enumerate(self.subtype) if ki)

    # matrices in original coordinates --------------------------------------

    def _unpermute(self, mat: np.ndarray) -> np.ndarray:
        out = np.empty_like(mat)
        out[:, list(self.permutation)] = mat
        return out

    @cached_property
    def generator(self) -> np.ndarray:
        """Systematic generator rows in the original column order."""
        g = self._unpermute(np.asarray(self.sys_matrix))
        g.setflags(write=False)
        return g

    @cached_property
    def reduced_matrix(self) -> np.ndarray:
        """Reduced systematic form (permuted coordinates, like ``sys_matrix``)."""
        if self.is_zero:
            return np.asarray(self.sys_matrix)
        return reduced_systematic_form(self.sys_matrix, self.modulus)

    # supports -------------------------------------------------------------

    @cached_property
    def column_valuations(self) -> np.ndarray:
        """Valuation of the ideal generated by each coordinate (``s`` for zero columns)."""
        if self.is_zero:
            return np.full(self.n, self.s, dtype=np.int64)
        return valuations(self.generator, self.modulus).min(axis=0)

    @property
    def support_subtype(self) -> tuple[int, ...]:
        """``(n_0, ..., n_s)``: how many coordinates generate each ideal ``(p^i)``."""
        counts = np.bincount(self.column_valuations, minlength=self.s + 1)
        return tuple(int(c) for c in counts)

    @property
    def is_degenerate(self) -> bool:
        return self.support_subtype[self.s] > 0

    @property
    def tail_support_subtype(self) -> tuple[int, ...]:
        """Support subtype ``mu`` of the last ``n - K`` systematic columns."""
        if self.is_zero:
            tail = np.full(self.n, self.s, dtype=np.int64)
        else:
            tail = valuations(self.sys_matrix[:, self.K:], self.modulus).min(axis=0)
        counts = np.bincount(tail, minlength=self.s + 1)
        return tuple(int(c) for c in counts)

    def __repr__(self) -> str:
        return (f"LinearCode({self.modulus}, n={self.n}, subtype={self.subtype}, "
                f"generator={self.generator.tolist()})")


# enumeration ---------------------------------------------------------------


def iter_codeword_chunks(code: LinearCode, cap: int = DEFAULT_CAP,
                         chunk_size: int = 1 << 16, start: int = 0,
                         stop: int | None = None) -> Iterator[np.ndarray]:
    """Yield all codewords (original coordinates) as ``(m, n)`` arrays.

    Codeword number ``t`` uses the mixed-radix digits of ``t`` as
    coefficients, so ranges ``[start, stop)`` can be consumed independently.
    """
    size = code.size
    if size > cap:
        raise EnumerationCapError(size, cap)
    stop = size if stop is None else min(stop, size)
    if code.is_zero:
        if start < stop:
            yield np.zeros((1, code.n), dtype=np.int64)
        return
    radices = [code.p ** (code.s - v) for v in code.pivot_valuations]
    G = code.generator.astype(np.int64)
    for lo in range(start, stop, chunk_size):
        idx = np.arange(lo, min(lo + chunk_size, stop), dtype=np.int64)
        coeffs = np.empty((idx.size, len(radices)), dtype=np.int64)
        rest = idx
        for r in range(len(radices) - 1, -1, -1):
            coeffs[:, r] = rest % radices[r]
            rest = rest // radices[r]
        yield (coeffs @ G) % code.q


def codeword_array(code: LinearCode, cap: int = DEFAULT_CAP) -> np.ndarray:
    """All codewords as one array; intended for small codes."""
    return np.concatenate(list(iter_codeword_chunks(code, cap)), axis=0)


def enumerate_codewords(code: LinearCode, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every codeword exactly once as a tuple of ints."""
    for chunk in iter_codeword_chunks(code, cap):
        for row in chunk.tolist():
            yield tuple(row)


def codeword_set(code: LinearCode, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    return set(enumerate_codewords(code, cap))


# subcodes ------------------------------------------------------------------


def filtration_subcode(code: LinearCode, i: int) -> LinearCode:
    """``C_i``: the codewords all of whose entries are divisible by ``p^i``."""
    if not 0 <= i <= code.s - 1:
        raise ValueError(f"filtration index {i} outside [0, {code.s - 1}]")
    if code.is_zero or i == 0:
        return code
    factors = np.array([code.p ** max(i - v, 0) for v in code.pivot_valuations],
                       dtype=np.int64)
    rows = (code.generator * factors[:, None]) % code.q
    return LinearCode.from_generators(rows, code.modulus)


def socle(code: LinearCode) -> LinearCode:
    """The bottom filtration subcode ``C ∩ (p^{s-1})``."""
    return filtration_subcode(code, code.s - 1)


def torsion_code(code: LinearCode, i: int) -> LinearCode:
    """``C mod p^{s-i}``, a code over the smaller ring Z/p^{s-i}Z."""
    if not 0 <= i <= code.s - 1:
        raise ValueError(f"torsion index {i} outside [0, {code.s - 1}]")
    if i == 0:
        return code
    small = Modulus(code.p, code.s - i)
    return LinearCode.from_generators(code.generator % small.q, small, n=code.n,
                                      allow_zero=True)


def information_sets(code: LinearCode) -> list[tuple[int, ...]]:
    """All ``K``-subsets ``S`` of coordinates on which the projection of ``C`` is injective.

    These are exactly the pivot column sets of the systematic generator
    matrices of ``C``.
    """
    if code.is_zero:
        return [()]
    G = np.asarray(code.generator)
    target = sorted(code.pivot_valuations)
    out = []
    for S in itertools.combinations(range(code.n), code.K):
        sub = G[:, list(S)]
        if sub.any() and sorted(systematic_form(sub, code.modulus).pivot_valuations) == target:
            out.append(S)
    return out


def socle_matrix_fp(code: LinearCode) -> np.ndarray:
    """Generator matrix of the socle divided by ``p^{s-1}``, as an F_p matrix."""
    soc = socle(code)
    if soc.is_zero:
        return np.zeros((0, code.n), dtype=np.int64)
    return (np.asarray(soc.generator) // code.p ** (code.s - 1)) % code.p


# isometries ----------------------------------------------------------------


@dataclass(frozen=True)
class Isometry:
    """Signed coordinate permutation ``c -> (signs[j] * c[perm[j]])_j``."""

    permutation: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        perm = tuple(int(x) for x in self.permutation)
        signs = tuple(int(x) for x in self.signs)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError("permutation is not a bijection of the coordinates")
        if len(signs) != len(perm) or any(x not in (1, -1) for x in signs):
            raise ValueError("signs must be +1/-1, one per coordinate")
        object.__setattr__(self, "permutation", perm)
        object.__setattr__(self, "signs", signs)

    @property
    def n(self) -> int:
        return len(self.permutation)

    @classmethod
    def identity(cls, n: int) -> "Isometry":
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "Isometry":
        return cls(tuple(rng.permutation(n).tolist()),
                   tuple(rng.choice([-1, 1], size=n).tolist()))

    def apply_vector(self, x, modulus: Modulus) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        return np.mod(x[..., list(self.permutation)] * np.asarray(self.signs), modulus.q)


def apply_isometry(code: LinearCode, iso: Isometry) -> LinearCode:
    """Image of ``code`` under a Lee isometry."""
    if iso.n != code.n:
        raise ValueError(f"isometry has length {iso.n}, code has length {code.n}")
    if code.is_zero:
        return code
    return LinearCode.from_generators(iso.apply_vector(code.generator, code.modulus),
                                      code.modulus)


# file format ---------------------------------------------------------------


def code_to_dict(code: LinearCode) -> dict:
    return {"p": code.p, "s": code.s, "n": code.n,
            "generators": np.asarray(code.generator).tolist()}


def code_from_dict(data: dict, *, allow_zero: bool = False) -> LinearCode:
    """Parse the JSON code format ``{"p", "s", "n", "generators"}``."""
    try:
        p, s, n = int(data["p"]), int(data["s"]), int(data["n"])
        rows: Sequence[Sequence[int]] = data["generators"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed code description: {exc}") from None
    if any(len(row) != n for row in rows):
        raise ValueError(f"every generator row must have length n={n}")
    return LinearCode.from_generators(rows, Modulus(p, s), n=n, allow_zero=allow_zero)


def load_code(path: str | Path, *, allow_zero: bool = False) -> LinearCode:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return code_from_dict(data, allow_zero=allow_zero)


def dump_code(code: LinearCode, path: str | Path) -> None:
    Path(path).write_text(json.dumps(code_to_dict(code)) + "\n", encoding="utf-8")


def code_size_from_subtype(modulus: Modulus, subtype: Sequence[int]) -> int:
    """``|C| = prod_i p^{(s-i) k_i}``."""
    return int(np.prod([modulus.p ** ((modulus.s - i) * ki) for i, ki in enumerate(subtype)],
                       dtype=object))


__all__ = [
    "DEFAULT_CAP", "EnumerationCapError", "Isometry", "LinearCode", "SystematicForm",
    "ZeroCodeError", "apply_isometry", "code_from_dict", "code_size_from_subtype",
    "code_to_dict", "codeword_array", "codeword_set", "dump_code", "enumerate_codewords",
    "filtration_subcode", "information_sets", "iter_codeword_chunks", "load_code",
    "reduced_systematic_form", "socle", "socle_matrix_fp", "systematic_form", "torsion_code",
]
