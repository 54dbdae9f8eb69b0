"""Random codes, closed-form probabilities and exhaustive censuses.

The sampling model draws the non-pivot blocks of a systematic generator
matrix uniformly.  Closed forms are exact :class:`~fractions.Fraction` values
and Monte Carlo estimates carry a binomial standard error.  At tiny
parameters a census enumerates every matrix of the model, so ``count / total``
can be compared with a closed form exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .bounds import (
    bound_alderson,
    bound_column_cancelling,
    bound_column_static,
    bound_filtration_min,
    bound_filtration_simple,
    bound_join,
    bound_puncturing,
    bound_shiromoto,
    filtration_profile,
    shiromoto_attained,
)
from .code import Isometry, LinearCode, codeword_array
from .ring import Modulus, valuations
from .weights import _rref_fp, min_lee_distance

CENSUS_CAP = 2 * 10**6


def make_rng(seed: int | None) -> np.random.Generator:
    """Counter-based generator (Philox) seeded with a 64-bit integer."""
    return np.random.Generator(np.random.Philox(seed))


def _check_subtype(s: int, n: int, subtype: Sequence[int]) -> tuple[int, ...]:
    subtype = tuple(int(x) for x in subtype)
    if len(subtype) != s or any(x < 0 for x in subtype):
        raise ValueError(f"subtype must be {s} nonnegative integers, got {subtype}")
    if sum(subtype) > n:
        raise ValueError(f"subtype {subtype} has rank above n={n}")
    if sum(subtype) == 0:
        raise ValueError("subtype of the zero code")
    return subtype


def _free_positions(s: int, n: int, subtype: tuple[int, ...]) -> list[tuple[int, int, int]]:
    """``(row, column, block)`` for every entry drawn at random in a systematic matrix."""
    blocks = [j for j, kj in enumerate(subtype) for _ in range(kj)]
    out = []
    for r, j in enumerate(blocks):
        start = sum(subtype[: j + 1])
        for c in range(start, n):
            out.append((r, c, j))
    return out


def _systematic_skeleton(p: int, s: int, n: int, subtype: tuple[int, ...]) -> np.ndarray:
    blocks = [j for j, kj in enumerate(subtype) for _ in range(kj)]
    G = np.zeros((len(blocks), n), dtype=np.int64)
    for r, j in enumerate(blocks):
        G[r, r] = p**j
    return G


def sample_random_systematic_code(p: int, s: int, n: int, subtype: Sequence[int],
                                  rng_seed: int | np.random.Generator | None = None
                                  ) -> LinearCode:
    """Systematic generator of the given subtype with uniformly random blocks.

    An entry of a block-``j`` row outside the pivot columns of blocks
    ``0..j`` is ``p^j`` times a uniform element of Z/p^{s-j}Z.
    """
    modulus = Modulus(p, s)
    subtype = _check_subtype(s, n, subtype)
    rng = rng_seed if isinstance(rng_seed, np.random.Generator) else make_rng(rng_seed)
    G = _systematic_skeleton(p, s, n, subtype)
    for r, c, j in _free_positions(s, n, subtype):
        G[r, c] = p**j * int(rng.integers(0, p ** (s - j)))
    return LinearCode.from_generators(G, modulus)


def sample_uniform_matrix_code(p: int, s: int, n: int, rows: int,
                               rng_seed: int | np.random.Generator | None = None
                               ) -> LinearCode | None:
    """Code spanned by a uniform ``rows x n`` matrix (``None`` if it is zero)."""
    modulus = Modulus(p, s)
    rng = rng_seed if isinstance(rng_seed, np.random.Generator) else make_rng(rng_seed)
    G = rng.integers(0, modulus.q, size=(rows, n))
    if not G.any():
        return None
    return LinearCode.from_generators(G, modulus)


# closed forms ---------------------------------------------------------------


def prob_ell_zero_closed(p: int, K: int, n: int) -> Fraction:
    """Probability that a uniform ``A`` in (Z/p^sZ)^{K x (n-K)} has only unit entries."""
    if not 0 <= K <= n:
        raise ValueError("need 0 <= K <= n")
    return (1 - Fraction(1, p)) ** (K * (n - K))


def prob_free_closed(p: int, n: int, rows: int) -> Fraction:
    """Probability that a uniform ``rows x n`` matrix generates a free code of rank ``rows``."""
    if rows > n:
        return Fraction(0)
    return math.prod((1 - Fraction(p**i, p**n) for i in range(rows)), start=Fraction(1))


def prob_column_optimal_closed(p: int, s: int, K: int, n: int, mu: Sequence[int]) -> Fraction:
    """``2^{n-K} prod_i (p^{i+1} / (p^s (p-1)))^{mu_i}``."""
    mu = tuple(mu)
    if sum(mu) != n - K:
        raise ValueError(f"mu must sum to n-K={n - K}")
    out = Fraction(2) ** (n - K)
    for i, m in enumerate(mu):
        if m:
            out *= Fraction(p ** (i + 1), p**s * (p - 1)) ** m
    return out


def prob_full_row_closed(p: int, s: int, K: int, n: int, ell_tilde: int) -> Fraction:
    """``(p^-l - p^-(l+1))^{(n-K-1)K+1} (p^-1 - p^-(l+1))^{K-1}`` for ``l = ell_tilde``."""
    if not 0 < ell_tilde < s:
        raise ValueError(f"ell_tilde must lie strictly between 0 and s={s}")
    exact = Fraction(1, p**ell_tilde) - Fraction(1, p ** (ell_tilde + 1))
    low = Fraction(1, p) - Fraction(1, p ** (ell_tilde + 1))
    return exact ** ((n - K - 1) * K + 1) * low ** (K - 1)


# events on batches of A-blocks ----------------------------------------------


def event_ell_zero(A: np.ndarray, modulus: Modulus) -> np.ndarray:
    """All entries are units (batch axis first)."""
    return (A % modulus.p != 0).all(axis=(-2, -1))


def event_full_row(A: np.ndarray, modulus: Modulus, ell_tilde: int) -> np.ndarray:
    """Row 0 has every entry of valuation exactly ``l``; every other row has its first
    entry of valuation in ``[1, l]`` and its remaining entries of valuation exactly ``l``."""
    val = valuations(A, modulus)
    ok = (val[:, 0, :] == ell_tilde).all(axis=-1)
    if A.shape[1] > 1:
        first = val[:, 1:, 0]
        ok &= ((first >= 1) & (first <= ell_tilde)).all(axis=-1)
        ok &= (val[:, 1:, 1:] == ell_tilde).all(axis=(-2, -1))
    return ok


def _mu_column_valuations(mu: Sequence[int]) -> list[int]:
    return [i for i, m in enumerate(mu) for _ in range(m)]


def event_column_optimal(tail: np.ndarray, modulus: Modulus, mu: Sequence[int]) -> np.ndarray:
    """Designated entry of each tail column (valuation fixed by ``mu``) has Lee weight ``M_i``."""
    ladder = modulus.ladder
    targets = np.array([ladder[i] for i in _mu_column_valuations(mu)], dtype=np.int64)
    w = np.minimum(tail, modulus.q - tail)
    return (w == targets).all(axis=-1)


# Monte Carlo ----------------------------------------------------------------


@dataclass(frozen=True)
class MonteCarloResult:
    event: str
    params: dict
    estimate: float
    stderr: float
    hits: int
    trials: int
    seed: int | None
    exact: Fraction | None = None

    def as_dict(self) -> dict:
        return {
            **{k: (list(v) if isinstance(v, tuple) else v) for k, v in self.params.items()},
            "event": self.event,
            "exact": None if self.exact is None else str(self.exact),
            "exact_float": None if self.exact is None else float(self.exact),
            "estimate": self.estimate,
            "stderr": self.stderr,
            "trials": self.trials,
            "seed": self.seed,
        }


def _finish(event: str, params: dict, hits: int, trials: int, seed, exact) -> MonteCarloResult:
    est = hits / trials
    return MonteCarloResult(event, params, est, math.sqrt(est * (1 - est) / trials), hits,
                            trials, seed, exact)


_ATTAINMENT: dict[str, Callable] = {
    "shiromoto": bound_shiromoto,
    "alderson": bound_alderson,
    "puncturing": bound_puncturing,
    "join": bound_join,
    "column_static": bound_column_static,
    "column_cancelling": bound_column_cancelling,
    "filtration_min": bound_filtration_min,
    "filtration_simple": bound_filtration_simple,
}


def attains(code: LinearCode, bound_name: str, d: int | None = None) -> bool:
    """Whether ``code`` meets the named bound with equality.

    Shiromoto's bound is tested in its inequality form
    ``floor((d-1)/M) = n - ceil(k)``; every other bound compares values.
    """
    if bound_name not in _ATTAINMENT:
        raise ValueError(f"unknown bound {bound_name!r}; choose from {sorted(_ATTAINMENT)}")
    d = min_lee_distance(code) if d is None else d
    if bound_name == "shiromoto":
        return shiromoto_attained(d, code.n, code.k, code.modulus.M)
    report = _ATTAINMENT[bound_name](code)
    return report.applicable and report.value == d


def monte_carlo_probability(event: str, *, p: int, K: int, n: int, trials: int,
                            seed: int | None = 0, s: int = 1, ell_tilde: int | None = None,
                            mu: Sequence[int] | None = None, subtype: Sequence[int] | None = None,
                            bound_name: str | None = None, batch: int = 20000
                            ) -> MonteCarloResult:
    """Estimate the probability of an event under the uniform sampling model.

    Events: ``"ell-zero"`` and ``"full-row"`` on uniform A-blocks of a free
    code, ``"column-optimal"`` on the designated tail entries, ``"free"`` on
    uniform ``K x n`` matrices, and ``"attain"`` (a random code of ``subtype``
    meets ``bound_name``).
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    modulus = Modulus(p, s)
    rng = make_rng(seed)
    params: dict = {"p": p, "s": s, "K": K, "n": n}
    hits = 0
    if event in ("ell-zero", "full-row"):
        if event == "full-row":
            if ell_tilde is None:
                raise ValueError("full-row needs ell_tilde")
            exact = prob_full_row_closed(p, s, K, n, ell_tilde)
            params["ell_tilde"] = ell_tilde
        else:
            exact = prob_ell_zero_closed(p, K, n)
        done = 0
        while done < trials:
            m = min(batch, trials - done)
            A = rng.integers(0, modulus.q, size=(m, K, n - K))
            ok = (event_ell_zero(A, modulus) if event == "ell-zero"
                  else event_full_row(A, modulus, ell_tilde))
            hits += int(ok.sum())
            done += m
    elif event == "column-optimal":
        if mu is None:
            raise ValueError("column-optimal needs mu")
        exact = prob_column_optimal_closed(p, s, K, n, mu)
        params["mu"] = tuple(mu)
        cols = _mu_column_valuations(mu)
        done = 0
        while done < trials:
            m = min(batch, trials - done)
            tail = np.empty((m, len(cols)), dtype=np.int64)
            for c, i in enumerate(cols):
                units = np.array([u for u in range(1, p ** (s - i)) if u % p], dtype=np.int64)
                tail[:, c] = units[rng.integers(0, len(units), size=m)] * p**i
            hits += int(event_column_optimal(tail, modulus, mu).sum())
            done += m
    elif event == "free":
        exact = prob_free_closed(p, n, K)
        for _ in range(trials):
            G = rng.integers(0, modulus.q, size=(K, n))
            hits += int(_rref_fp(G % p, p).shape[0] == K)
    elif event == "attain":
        if subtype is None or bound_name is None:
            raise ValueError("attain needs subtype and bound_name")
        exact = None
        params.update(subtype=tuple(subtype), bound=bound_name)
        for _ in range(trials):
            hits += int(attains(sample_random_systematic_code(p, s, n, subtype, rng), bound_name))
    else:
        raise ValueError(f"unknown event {event!r}")
    return _finish(event, params, hits, trials, seed, exact)


# censuses -------------------------------------------------------------------


def _all_blocks(q: int, shape: tuple[int, ...], cap: int) -> np.ndarray:
    size = int(np.prod(shape))
    total = q**size
    if total > cap:
        raise ValueError(f"census of {total} matrices exceeds the cap {cap}")
    idx = np.arange(total, dtype=np.int64)
    digits = np.empty((total, size), dtype=np.int64)
    for c in range(size - 1, -1, -1):
        digits[:, c] = idx % q
        idx //= q
    return digits.reshape((total,) + shape)


def census_ell_zero(p: int, s: int, K: int, n: int, cap: int = CENSUS_CAP) -> Fraction:
    modulus = Modulus(p, s)
    A = _all_blocks(modulus.q, (K, n - K), cap)
    return Fraction(int(event_ell_zero(A, modulus).sum()), len(A))


def census_full_row(p: int, s: int, K: int, n: int, ell_tilde: int,
                    cap: int = CENSUS_CAP) -> Fraction:
    modulus = Modulus(p, s)
    A = _all_blocks(modulus.q, (K, n - K), cap)
    return Fraction(int(event_full_row(A, modulus, ell_tilde).sum()), len(A))


def census_full_row_profile(p: int, s: int, K: int, n: int, ell_tilde: int,
                            cap: int = CENSUS_CAP) -> Fraction:
    """Fraction of free codes ``(I | A)`` whose filtration profile has ``l = ell_tilde``
    and ``n' = n - K``."""
    modulus = Modulus(p, s)
    A = _all_blocks(modulus.q, (K, n - K), cap)
    hits = 0
    eye = np.eye(K, dtype=np.int64)
    for block in A:
        prof = filtration_profile(LinearCode.from_generators(np.hstack([eye, block]), modulus))
        hits += prof.ell == ell_tilde and prof.nprime == n - K
    return Fraction(hits, len(A))


def census_column_optimal(p: int, s: int, K: int, n: int, mu: Sequence[int]) -> Fraction:
    """Exact fraction of designated tail entries (valuations fixed by ``mu``) hitting ``M_i``."""
    modulus = Modulus(p, s)
    cols = _mu_column_valuations(mu)
    if len(cols) != n - K:
        raise ValueError(f"mu must sum to n-K={n - K}")
    choices = [[u * p**i for u in range(1, p ** (s - i)) if u % p] for i in cols]
    total = hits = 0
    for tail in itertools.product(*choices):
        total += 1
        hits += bool(event_column_optimal(np.array([tail], dtype=np.int64), modulus, mu)[0])
    return Fraction(hits, total)


def isometry_class_key(code: LinearCode, cap: int = 4096) -> tuple:
    """Canonical key of the isometry class: the smallest sorted codeword list over
    all signed permutations.  Only for tiny codes."""
    words = codeword_array(code, cap)
    q, n = code.q, code.n
    best = None
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            image = Isometry(perm, signs).apply_vector(words, code.modulus)
            key = tuple(sorted(map(tuple, image.tolist())))
            if best is None or key < best:
                best = key
    return (code.p, code.s, n, best)


@dataclass(frozen=True)
class CensusResult:
    p: int
    s: int
    n: int
    subtype: tuple[int, ...]
    bound_name: str
    total: int
    attaining: int
    classes: tuple[tuple[tuple[int, ...], ...], ...] = field(default=())

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.attaining, self.total) if self.total else Fraction(0)

    def as_dict(self) -> dict:
        return {
            "p": self.p, "s": self.s, "n": self.n, "subtype": list(self.subtype),
            "bound": self.bound_name, "total": self.total, "attaining": self.attaining,
            "fraction": str(self.fraction), "isometry_classes": len(self.classes),
            "class_representatives": [[list(r) for r in g] for g in self.classes],
        }


def census_optimal_codes(p: int, s: int, n: int, subtype: Sequence[int], bound_name: str,
                         cap: int = CENSUS_CAP, classify: bool = True) -> CensusResult:
    """Enumerate every systematic generator of ``subtype`` and count those meeting a bound.

    Attaining codes are grouped into isometry classes when ``classify`` is set
    (one representative generator matrix per class).
    """
    subtype = _check_subtype(s, n, subtype)
    modulus = Modulus(p, s)
    positions = _free_positions(s, n, subtype)
    ranges = [p ** (s - j) for _, _, j in positions]
    total = math.prod(ranges)
    if total > cap:
        raise ValueError(f"census of {total} generator matrices exceeds the cap {cap}")
    skeleton = _systematic_skeleton(p, s, n, subtype)
    attaining = 0
    classes: dict[tuple, tuple] = {}
    for values in itertools.product(*(range(r) for r in ranges)):
        G = skeleton.copy()
        for (r, c, j), x in zip(positions, values):
            G[r, c] = p**j * x
        code = LinearCode.from_generators(G, modulus)
        if attains(code, bound_name):
            attaining += 1
            if classify:
                key = isometry_class_key(code)
                classes.setdefault(key, tuple(map(tuple, np.asarray(code.generator).tolist())))
    return CensusResult(p, s, n, subtype, bound_name, total, attaining,
                        tuple(classes.values()))


__all__ = [
    "CensusResult", "MonteCarloResult", "attains", "census_column_optimal", "census_ell_zero",
    "census_full_row", "census_full_row_profile", "census_optimal_codes", "event_column_optimal",
    "event_ell_zero", "event_full_row", "isometry_class_key", "make_rng",
    "monte_carlo_probability", "prob_column_optimal_closed", "prob_ell_zero_closed",
    "prob_free_closed", "prob_full_row_closed", "sample_random_systematic_code",
    "sample_uniform_matrix_code",
]
