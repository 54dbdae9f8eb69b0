"""Singleton-type upper bounds on the minimum Lee (and Hamming) distance.

Each ``bound_*`` function takes a :class:`~leebounds.code.LinearCode` and
returns a :class:`BoundReport`.  The parameter-level helpers
(``shiromoto_value``, ``filtration_value`` and friends) work from the numeric
parameters alone and drive the comparison table.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .code import DEFAULT_CAP, EnumerationCapError, LinearCode, ZeroCodeError, information_sets
from .ring import Modulus, valuations
from .weights import (
    SearchBudgetExceeded,
    column_lee_weight_code,
    min_hamming_distance,
    min_lee_distance,
)


@dataclass(frozen=True)
class BoundReport:
    """A named bound value with its applicability and intermediate parameters.

    ``metric`` says whether the value bounds the Lee or the Hamming distance;
    ``kind`` is ``"bound"`` for upper bounds and ``"oracle"`` for exact
    distances computed by enumeration.
    """

    name: str
    value: int | None
    applicable: bool = True
    reason: str = ""
    params: dict = field(default_factory=dict)
    metric: str = "lee"
    kind: str = "bound"

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "applicable": self.applicable,
            "reason": self.reason,
            "metric": self.metric,
            "kind": self.kind,
            "params": _jsonable(self.params),
        }


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


def _not_applicable(name: str, reason: str, metric: str = "lee", **params) -> BoundReport:
    return BoundReport(name, None, False, reason, params, metric)


# parameter-level formulas ---------------------------------------------------


def shiromoto_value(n: int, k: Fraction, M: int) -> int:
    """Largest d with ``floor((d-1)/M) <= n - k``, namely ``M (n - ceil(k) + 1)``."""
    return M * (n - math.ceil(k) + 1)


def shiromoto_attained(d: int, n: int, k: Fraction, M: int) -> bool:
    """Whether ``d`` meets the inequality ``floor((d-1)/M) <= n - k`` with equality
    in its integer form ``floor((d-1)/M) = n - ceil(k)``."""
    return (d - 1) // M == n - math.ceil(k)


def alderson_applicable(n: int, k: Fraction) -> bool:
    return k.denominator == 1 and 1 < k < n


def alderson_value(n: int, k: Fraction, M: int) -> int:
    return int(M * (n - k))


def join_value(modulus: Modulus, n: int, K: int) -> int:
    return modulus.ladder[modulus.s - 1] * (n - K + 1)


def filtration_value(modulus: Modulus, n: int, K: int, sigma: int, ell: int,
                     nprime: int) -> int:
    """``p^{s-l+sigma} + (n-K-n') M_{s-l+sigma}`` for ``l > sigma``, else the fallback
    ``p^sigma + (n-K) M_sigma``."""
    p, s = modulus.p, modulus.s
    if ell <= sigma:
        return p**sigma + (n - K) * modulus.ladder[sigma]
    e = s - ell + sigma
    return p**e + (n - K - nprime) * modulus.ladder[e]


def admissible_subtypes(K: int, s: int, sigma: int) -> list[tuple[int, ...]]:
    """All subtypes of rank K whose largest nonzero index is ``sigma``."""
    out = []
    for head in itertools.product(range(K + 1), repeat=sigma):
        rest = K - sum(head)
        if rest >= 1:
            out.append(tuple(head) + (rest,) + (0,) * (s - sigma - 1))
    return out


def z_dimension(subtype: Iterable[int], s: int) -> Fraction:
    return sum((Fraction(s - i, s) * ki for i, ki in enumerate(subtype)), Fraction(0))


# filtration profile ---------------------------------------------------------


@dataclass(frozen=True)
class FiltrationProfile:
    """Valuation statistics of the block ``A`` of a ``(p^sigma I | A)`` generator of ``C_sigma``.

    ``ell_per_row[i]`` is the largest valuation in row ``i`` of ``A`` (a zero
    entry counts as valuation ``s``) and ``nprime_per_row[i]`` the number of
    entries of that row lying in ``(p^{ell_i})``.  ``per_r`` maps each
    ``r in {sigma+1, ..., s}`` to ``(ell^{(r-1)}, n'^{(r-1)})`` with
    ``ell^{(r-1)} = None`` when no row qualifies.  ``Nprime`` is the largest
    number of entries of a row of ``A`` lying in ``(p^{sigma+1})``.
    """

    sigma: int
    matrix: tuple[tuple[int, ...], ...]
    ell_per_row: tuple[int, ...]
    nprime_per_row: tuple[int, ...]
    ell: int
    nprime: int
    per_r: dict
    Nprime: int
    info_set: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return {
            "sigma": self.sigma,
            "ell_per_row": list(self.ell_per_row),
            "nprime_per_row": list(self.nprime_per_row),
            "ell": self.ell,
            "nprime": self.nprime,
            "per_r": {str(r): list(v) for r, v in self.per_r.items()},
            "Nprime": self.Nprime,
            "info_set": list(self.info_set),
        }


def _solve_mod(B: np.ndarray, R: np.ndarray, p: int, m: int) -> np.ndarray | None:
    """``B^{-1} R`` over Z/mZ for a power ``m`` of ``p``; ``None`` if ``B`` is singular mod p."""
    K = B.shape[0]
    aug = np.hstack([B, R]).astype(np.int64) % m
    for c in range(K):
        pivots = [r for r in range(c, K) if aug[r, c] % p]
        if not pivots:
            return None
        r = pivots[0]
        if r != c:
            aug[[c, r]] = aug[[r, c]]
        aug[c] = aug[c] * pow(int(aug[c, c]), -1, m) % m
        for r in range(K):
            if r != c and aug[r, c]:
                aug[r] = (aug[r] - aug[r, c] * aug[c]) % m
    return aug[:, K:]


def filtration_generator(code: LinearCode) -> np.ndarray:
    """Generator ``(p^sigma I | A)`` of ``C_sigma`` in the systematic coordinates."""
    if code.is_zero:
        raise ZeroCodeError()
    p, q, sigma = code.p, code.q, code.sigma
    G = np.asarray(code.sys_matrix).copy()
    for r, v in enumerate(code.pivot_valuations):
        G[r] = (G[r] * p ** (sigma - v)) % q
    scale = p**sigma
    for c in range(code.K):
        for i in range(c):
            f = int(G[i, c]) // scale
            if f:
                G[i] = (G[i] - f * G[c]) % q
    return G


def filtration_matrix(code: LinearCode, info_set: Sequence[int] | None = None
                      ) -> tuple[np.ndarray, tuple[int, ...]] | None:
    """``(p^sigma I | A)`` generating ``C_sigma`` with the identity on ``info_set``.

    Returns the matrix together with its column order (``info_set`` followed
    by the remaining coordinates in increasing order), or ``None`` when
    ``info_set`` is not an information set of ``C_sigma``.  Without
    ``info_set`` the systematic coordinates of ``code`` are used.
    """
    F = filtration_generator(code)
    perm = tuple(code.permutation)
    if info_set is None:
        return F, perm
    p, s, sigma, K = code.p, code.s, code.sigma, code.K
    S = tuple(int(j) for j in info_set)
    if len(S) != K or len(set(S)) != K:
        raise ValueError(f"an information set needs {K} distinct coordinates")
    rest = tuple(j for j in range(code.n) if j not in S)
    orig = np.empty_like(F)
    orig[:, list(perm)] = F
    m = p ** (s - sigma)
    B = (orig // p**sigma) % m
    A = _solve_mod(B[:, list(S)], B[:, list(rest)], p, m)
    if A is None:
        return None
    G = np.hstack([np.eye(K, dtype=np.int64), A]) * p**sigma % code.q
    return G, S + rest


def filtration_profile(code: LinearCode,
                       info_set: Sequence[int] | None = None) -> FiltrationProfile:
    """Profile of ``C_sigma`` read off ``(p^sigma I | A)`` with the identity on ``info_set``."""
    built = filtration_matrix(code, info_set)
    if built is None:
        raise ValueError(f"{tuple(info_set)} is not an information set of C_sigma")
    G, coords = built
    s, sigma, K, n = code.s, code.sigma, code.K, code.n
    A = G[:, K:]
    if n == K:
        ells = [sigma] * K
        nps = [0] * K
        Nprime = 0
    else:
        val = valuations(A, code.modulus)
        ells = [int(row.max()) for row in val]
        nps = [int(np.count_nonzero(row >= e)) for row, e in zip(val, ells)]
        Nprime = int((val >= sigma + 1).sum(axis=1).max())
    ell = max(ells)
    nprime = max(x for x, e in zip(nps, ells) if e == ell)
    per_r = {}
    for r in range(sigma + 1, s + 1):
        rows = [i for i in range(K) if ells[i] > s - r + sigma]
        if not rows:
            per_r[r] = (None, 0)
            continue
        best_n = max(nps[i] for i in rows)
        best_l = max(ells[i] for i in rows if nps[i] == best_n)
        per_r[r] = (best_l, best_n)
    return FiltrationProfile(sigma, tuple(map(tuple, G.tolist())), tuple(ells), tuple(nps),
                             ell, nprime, per_r, Nprime, tuple(coords[:K]))


def filtration_profiles(code: LinearCode) -> list[FiltrationProfile]:
    """One profile per information set of ``C_sigma``."""
    out = []
    for S in itertools.combinations(range(code.n), code.K):
        if filtration_matrix(code, S) is not None:
            out.append(filtration_profile(code, S))
    return out


ProfileArg = Union[FiltrationProfile, Sequence[FiltrationProfile], None]


def _profile_list(code: LinearCode, profiles: ProfileArg) -> list[FiltrationProfile]:
    if profiles is None:
        return filtration_profiles(code)
    if isinstance(profiles, FiltrationProfile):
        return [profiles]
    return list(profiles)


def _best(reports: Iterable[BoundReport]) -> BoundReport:
    return min(reports, key=lambda r: r.value)


# bounds ---------------------------------------------------------------------


def bound_hamming_singleton(code: LinearCode) -> BoundReport:
    value = code.n - math.ceil(code.k) + 1
    return BoundReport("hamming_singleton", value, params={"n": code.n, "k": code.k},
                       metric="hamming")


def bound_mdr(code: LinearCode) -> BoundReport:
    return BoundReport("mdr", code.n - code.K + 1, params={"n": code.n, "K": code.K},
                       metric="hamming")


def bound_shiromoto(code: LinearCode) -> BoundReport:
    n, k, M = code.n, code.k, code.modulus.M
    params = {
        "n": n, "k": k, "M": M,
        "alpha_one_variant": M * (n - math.ceil(k)) + 1,
        "floor_variant": M * (n - math.floor(k) + 1),
    }
    return BoundReport("shiromoto", shiromoto_value(n, k, M), params=params)


def bound_alderson(code: LinearCode) -> BoundReport:
    n, k, M = code.n, code.k, code.modulus.M
    if not alderson_applicable(n, k):
        return _not_applicable("alderson", f"needs an integral k with 1 < k < n, got k={k}",
                               n=n, k=k, M=M)
    return BoundReport("alderson", alderson_value(n, k, M), params={"n": n, "k": k, "M": M})


def _nondegenerate(code: LinearCode) -> bool:
    return code.support_subtype[code.s] == 0


def bound_puncturing(code: LinearCode) -> BoundReport:
    """Largest d satisfying ``K <= n - B_j - floor((d - A_j - 1)/M_{j-1})``.

    ``j`` is the smallest index in ``{1, ..., s}`` with ``A_j < d``.
    """
    ns = code.support_subtype
    if not _nondegenerate(code):
        return _not_applicable("puncturing", "code is degenerate", support_subtype=ns)
    s, n, K = code.s, code.n, code.K
    ladder = code.modulus.ladder
    A = [sum(ns[i] * ladder[i] for i in range(j, s)) for j in range(s + 1)]
    B = [sum(ns[i] for i in range(j, s)) for j in range(s + 1)]
    for d in range(n * code.modulus.M, 0, -1):
        j = next(j for j in range(1, s + 1) if A[j] < d)
        if K <= n - B[j] - (d - A[j] - 1) // ladder[j - 1]:
            return BoundReport("puncturing", d, params={
                "j": j, "A_j": A[j], "B_j": B[j], "M_j_minus_1": ladder[j - 1],
                "support_subtype": ns})
    raise AssertionError("unreachable: d = 1 always satisfies the inequality")


def bound_join(code: LinearCode) -> BoundReport:
    if not _nondegenerate(code):
        return _not_applicable("join", "code is degenerate",
                               support_subtype=code.support_subtype)
    return BoundReport("join", join_value(code.modulus, code.n, code.K),
                       params={"M_s_minus_1": code.modulus.ladder[code.s - 1], "K": code.K})


def bound_column_exact(code: LinearCode, *, budget: int = 5 * 10**6,
                       cap: int = DEFAULT_CAP) -> BoundReport:
    try:
        wt = column_lee_weight_code(code, budget=budget, cap=cap)
    except SearchBudgetExceeded as exc:
        return _not_applicable("column_exact", str(exc),
                               partial_value=exc.upper_bound - code.K + 1)
    except EnumerationCapError as exc:
        return _not_applicable("column_exact", str(exc))
    return BoundReport("column_exact", wt - code.K + 1, params={"wt_col": wt, "K": code.K})


def _column_static_parts(code: LinearCode) -> tuple[int, int, tuple[int, ...], tuple[int, ...]]:
    """Pivot part ``sum p^i k_i`` and the smallest tail part ``sum mu_i M_i`` over all
    information sets, with the minimizing ``mu`` and information set."""
    head = sum(code.p**i * ki for i, ki in enumerate(code.subtype))
    cv = code.column_valuations
    ladder = code.modulus.ladder
    best = None
    for S in information_sets(code):
        tail_cols = [j for j in range(code.n) if j not in S]
        tail = sum(ladder[cv[j]] for j in tail_cols)
        if best is None or tail < best[0]:
            mu = np.bincount(cv[tail_cols], minlength=code.s + 1) if tail_cols else \
                np.zeros(code.s + 1, dtype=np.int64)
            best = (tail, tuple(int(x) for x in mu), S)
    tail, mu, S = best
    return head, tail, mu, S


def bound_column_static(code: LinearCode) -> BoundReport:
    head, tail, mu, S = _column_static_parts(code)
    return BoundReport("column_static", head + tail - code.K + 1,
                       params={"mu": mu, "sum_p_i_k_i": head, "sum_mu_i_M_i": tail,
                               "info_set": S})


def bound_column_cancelling(code: LinearCode) -> BoundReport:
    if code.p == 2:
        return _not_applicable("column_cancelling", "requires an odd prime p")
    head, tail, mu, S = _column_static_parts(code)
    p, sigma, kk = code.p, code.sigma, code.subtype
    cancel = sum(sum(kk[: i + 1]) * (p // 2) * p**i for i in range(sigma))
    cancel += (kk[sigma] - 1) * p**sigma
    return BoundReport("column_cancelling", head + tail - cancel,
                       params={"mu": mu, "sigma": sigma, "cancelled": cancel, "info_set": S})


def bound_filtration_rth(code: LinearCode, r: int, profile: ProfileArg = None) -> BoundReport:
    """Bound on ``d^r_L(C) = d_L(C_{r-1})``, valid for ``sigma+1 <= r <= s``."""
    profiles = _profile_list(code, profile)
    if not profiles[0].sigma + 1 <= r <= code.s:
        raise ValueError(f"r={r} outside [{profiles[0].sigma + 1}, {code.s}]")

    def one(prof: FiltrationProfile) -> BoundReport:
        _, nprime = prof.per_r[r]
        value = code.p ** (r - 1) + (code.n - code.K - nprime) * code.modulus.ladder[r - 1]
        return BoundReport(f"filtration_r{r}", value,
                           params={"r": r, "nprime": nprime, "info_set": prof.info_set})

    return _best(map(one, profiles))


def bound_filtration_min(code: LinearCode, profile: ProfileArg = None) -> BoundReport:
    def one(prof: FiltrationProfile) -> BoundReport:
        sigma, n, K = prof.sigma, code.n, code.K
        best = None
        for r, (ell, nprime) in prof.per_r.items():
            if ell is None:
                continue
            value = filtration_value(code.modulus, n, K, sigma, ell, nprime)
            key = (value, -nprime, -ell)
            if best is None or key < best[0]:
                best = (key, r, ell, nprime)
        if best is None:
            value = filtration_value(code.modulus, n, K, sigma, sigma, 0)
            return BoundReport("filtration_min", value,
                               params={"sigma": sigma, "fallback": True,
                                       "info_set": prof.info_set})
        (value, _, _), r, ell, nprime = best
        return BoundReport("filtration_min", value,
                           params={"sigma": sigma, "r": r, "ell": ell, "nprime": nprime,
                                   "fallback": False, "info_set": prof.info_set})

    return _best(map(one, _profile_list(code, profile)))


def bound_filtration_simple(code: LinearCode, profile: ProfileArg = None) -> BoundReport:
    def one(prof: FiltrationProfile) -> BoundReport:
        value = filtration_value(code.modulus, code.n, code.K, prof.sigma, prof.ell,
                                 prof.nprime)
        return BoundReport("filtration_simple", value,
                           params={"sigma": prof.sigma, "ell": prof.ell,
                                   "nprime": prof.nprime, "info_set": prof.info_set})

    return _best(map(one, _profile_list(code, profile)))


def bound_filtration_cases(code: LinearCode, profile: ProfileArg = None) -> BoundReport:
    """Evaluate the four case conditions exactly; report the least value among fired cases."""
    p, s, n, K = code.p, code.s, code.n, code.K
    ladder = code.modulus.ladder

    def one(prof: FiltrationProfile) -> BoundReport:
        sigma, ell, nprime, Np = prof.sigma, prof.ell, prof.nprime, prof.Nprime
        ratio = Fraction(p ** (s - ell) - 1, p ** (s - sigma) - 1)
        half = Fraction(nprime, 2)
        fired: dict[int, int] = {}
        if ell == sigma or half <= ratio:
            fired[1] = p**sigma + (n - K) * ladder[sigma]
        if ell == s:
            fired[2] = p**sigma + (n - K - nprime) * ladder[sigma]
        if ell not in (sigma, s) and half >= ratio:
            e = s - ell + sigma
            fired[3] = p**e + (n - K - nprime) * ladder[e]
        if ell > sigma:
            d = p ** (ell - sigma) - 1
            threshold = (Fraction(Np * (p ** (ell - sigma) - p ** (ell - sigma - 1)), d)
                         + Fraction((n - K - 2) * (p ** (ell - sigma - 1) - 1), d))
            if nprime <= threshold:
                fired[4] = p ** (s - 1) + (n - K - Np) * ladder[s - 1]
        case = min(fired, key=lambda c: (fired[c], c))
        return BoundReport("filtration_cases", fired[case],
                           params={"case": case, "fired": fired, "ell": ell, "nprime": nprime,
                                   "Nprime": Np, "sigma": sigma, "info_set": prof.info_set})

    return _best(map(one, _profile_list(code, profile)))


def bound_hamming_filtration(code: LinearCode, profile: ProfileArg = None) -> BoundReport:
    def one(prof: FiltrationProfile) -> BoundReport:
        if prof.ell > prof.sigma:
            value = 1 + (code.n - code.K - prof.nprime)
        else:
            value = 1 + (code.n - code.K)
        return BoundReport("hamming_filtration", value,
                           params={"ell": prof.ell, "nprime": prof.nprime,
                                   "info_set": prof.info_set},
                           metric="hamming")

    return _best(map(one, _profile_list(code, profile)))


def all_bounds(code: LinearCode, *, cap: int = DEFAULT_CAP,
               budget: int = 5 * 10**6, oracles: bool = True) -> list[BoundReport]:
    """Every bound for ``code`` plus the exact distances when enumeration is allowed.

    Bounds that depend on a choice of information set are minimized over all
    of them, which makes every value invariant under isometries.  Applicable
    reports come first, sorted by value; the rest keep their order.
    """
    if code.is_zero:
        raise ZeroCodeError()
    profiles = filtration_profiles(code)
    sigma = profiles[0].sigma
    reports = [
        bound_hamming_singleton(code),
        bound_mdr(code),
        bound_shiromoto(code),
        bound_alderson(code),
        bound_puncturing(code),
        bound_join(code),
        bound_column_exact(code, budget=budget, cap=cap),
        bound_column_static(code),
        bound_column_cancelling(code),
        *(bound_filtration_rth(code, r, profiles) for r in range(sigma + 1, code.s + 1)),
        bound_filtration_min(code, profiles),
        bound_filtration_simple(code, profiles),
        bound_filtration_cases(code, profiles),
        bound_hamming_filtration(code, profiles),
    ]
    if oracles:
        for name, fn, metric in (("d_L", min_lee_distance, "lee"),
                                 ("d_H", min_hamming_distance, "hamming")):
            try:
                reports.append(BoundReport(name, fn(code, cap), metric=metric, kind="oracle"))
            except EnumerationCapError as exc:
                reports.append(BoundReport(name, None, False, str(exc), metric=metric,
                                           kind="oracle"))
    usable = sorted((r for r in reports if r.applicable), key=lambda r: r.value)
    return usable + [r for r in reports if not r.applicable]


# comparison table -----------------------------------------------------------


@dataclass(frozen=True)
class TableBlock:
    """One parameter block ``(n, K, q, sigma)`` of the comparison table."""

    n: int
    K: int
    q: int
    sigma: int
    alderson: tuple[tuple[tuple[int, ...], int | None], ...]
    shiromoto: tuple[tuple[tuple[int, ...], int], ...]
    shiromoto_min: int
    join: int
    filtration: tuple[tuple[str, str, int], ...]

    def as_dict(self) -> dict:
        return {
            "params": [self.n, self.K, self.q, self.sigma],
            "alderson": [{"subtype": list(t), "value": v, "applicable": v is not None}
                         for t, v in self.alderson],
            "shiromoto": [{"subtype": list(t), "value": v} for t, v in self.shiromoto],
            "shiromoto_min": self.shiromoto_min,
            "join": self.join,
            "filtration": [{"ell": e, "nprime": m, "value": v} for e, m, v in self.filtration],
        }


def table_block(n: int, K: int, q: int, sigma: int) -> TableBlock:
    """Entries of the comparison table for one parameter block.

    Alderson and Shiromoto depend on the subtype, so one value is listed per
    admissible subtype (Alderson only for integral k); ``shiromoto_min`` is the
    smallest Shiromoto value over those subtypes.
    """
    modulus = Modulus.from_order(q)
    s = modulus.s
    if not 0 <= sigma < s:
        raise ValueError(f"sigma={sigma} outside [0, {s - 1}]")
    if not 1 <= K <= n:
        raise ValueError("need 1 <= K <= n")
    M = modulus.M
    subtypes = admissible_subtypes(K, s, sigma)
    alderson, shiromoto = [], []
    for t in subtypes:
        k = z_dimension(t, s)
        shiromoto.append((t, shiromoto_value(n, k, M)))
        if k.denominator == 1:
            alderson.append((t, alderson_value(n, k, M) if alderson_applicable(n, k) else None))
    cells = []
    first = f"{n - K}" if sigma == 0 else "*"
    cells.append((str(sigma), first, filtration_value(modulus, n, K, sigma, sigma, 0)))
    for ell in range(sigma + 1, s + 1):
        for nprime in range(1, n - K + 1):
            cells.append((str(ell), str(nprime),
                          filtration_value(modulus, n, K, sigma, ell, nprime)))
    return TableBlock(n, K, q, sigma, tuple(alderson), tuple(shiromoto),
                      min(v for _, v in shiromoto), join_value(modulus, n, K), tuple(cells))


TABLE_PARAMETERS = ((6, 3, 9, 0), (6, 3, 9, 1), (6, 3, 125, 0), (6, 3, 125, 1), (6, 3, 125, 2))


__all__ = [
    "BoundReport", "FiltrationProfile", "TABLE_PARAMETERS", "TableBlock", "admissible_subtypes",
    "alderson_applicable", "alderson_value", "all_bounds", "bound_alderson",
    "bound_column_cancelling", "bound_column_exact", "bound_column_static",
    "bound_filtration_cases", "bound_filtration_min", "bound_filtration_rth",
    "bound_filtration_simple", "bound_hamming_filtration", "bound_hamming_singleton",
    "bound_join", "bound_mdr", "bound_puncturing", "bound_shiromoto", "filtration_generator",
    "filtration_matrix", "filtration_profile", "filtration_profiles", "filtration_value",
    "join_value", "shiromoto_attained", "shiromoto_value", "table_block", "z_dimension",
]
