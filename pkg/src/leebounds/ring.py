"""Arithmetic over the residue ring Z/p^sZ and Lee-weight primitives.

Elements are stored as their canonical representative in ``[0, q)``.  Most
functions accept plain integers or numpy arrays together with a
:class:`Modulus`; :class:`Residue` is a small value type for callers that
want the modulus attached to every element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

MAX_ORDER = 2**31


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (fine for n <= 2^31)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Modulus:
    """The ring Z/p^sZ, described by the prime ``p`` and the exponent ``s``."""

    p: int
    s: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, (int, np.integer)) or not is_prime(int(self.p)):
            raise ValueError(f"p must be prime, got {self.p!r}")
        if not isinstance(self.s, (int, np.integer)) or self.s < 1:
            raise ValueError(f"s must be a positive integer, got {self.s!r}")
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "s", int(self.s))
        if self.p**self.s > MAX_ORDER:
            raise ValueError(f"ring order {self.p}^{self.s} exceeds 2^31")

    @classmethod
    def from_order(cls, q: int) -> "Modulus":
        """Recover ``(p, s)`` from a prime power ``q``."""
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        p = next(d for d in range(2, q + 1) if q % d == 0)
        s, rest = 0, q
        while rest % p == 0:
            rest //= p
            s += 1
        if rest != 1:
            raise ValueError(f"{q} is not a prime power")
        return cls(p, s)

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def M(self) -> int:
        """Largest Lee weight in the ring, floor(q/2)."""
        return self.q // 2

    @cached_property
    def ladder(self) -> tuple[int, ...]:
        """``(M_0, ..., M_s)``, the largest Lee weight inside each ideal."""
        return tuple(ideal_max_lee_weight(self, i) for i in range(self.s + 1))

    def reduce(self, x):
        """Canonical representative(s) of an integer or integer array."""
        if isinstance(x, (int, np.integer)):
            return int(x) % self.q
        return np.mod(np.asarray(x, dtype=np.int64), self.q)

    def __str__(self) -> str:
        return f"Z/{self.q}" if self.s == 1 else f"Z/{self.p}^{self.s}"


@dataclass(frozen=True)
class Residue:
    """A single element of Z/p^sZ carrying its modulus."""

    value: int
    modulus: Modulus

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", int(self.value) % self.modulus.q)

    def _coerce(self, other: Union["Residue", int]) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("residues live in different rings")
            return other.value
        return int(other)

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.modulus)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __int__(self) -> int:
        return self.value

    def centered(self) -> int:
        """Representative in ``(-q/2, q/2]``."""
        return centered(self.value, self.modulus.q)

    def lee_weight(self) -> int:
        return lee_weight(self)

    def valuation(self) -> int:
        return p_valuation(self)


def _as_value(a, modulus: Modulus | None) -> tuple[int, Modulus]:
    if isinstance(a, Residue):
        if modulus is not None and modulus != a.modulus:
            raise ValueError("residue does not belong to the given modulus")
        return a.value, a.modulus
    if modulus is None:
        raise ValueError("a modulus is required for plain integers")
    return int(a) % modulus.q, modulus


def centered(a: int, m: int) -> int:
    """Representative of ``a mod m`` in ``(-m/2, m/2]``."""
    r = int(a) % m
    return r - m if 2 * r > m else r


def lee_weight(a, modulus: Modulus | None = None) -> int:
    """Lee weight ``min(a, q - a)`` of a single ring element."""
    value, mod = _as_value(a, modulus)
    return min(value, mod.q - value)


def lee_weights(x, modulus: Modulus) -> np.ndarray:
    """Entrywise Lee weights of an integer array (any shape)."""
    arr = np.mod(np.asarray(x, dtype=np.int64), modulus.q)
    return np.minimum(arr, modulus.q - arr)


def _vector_values(x: Iterable, modulus: Modulus | None) -> tuple[np.ndarray, Modulus]:
    items = list(x)
    residues = [a for a in items if isinstance(a, Residue)]
    if residues:
        moduli = {a.modulus for a in residues}
        if modulus is not None:
            moduli.add(modulus)
        if len(moduli) > 1:
            raise ValueError("vector mixes elements of different rings")
        modulus = moduli.pop()
    if modulus is None:
        if not items:
            return np.zeros(0, dtype=np.int64), None  # type: ignore[return-value]
        raise ValueError("a modulus is required for plain integers")
    vals = [a.value if isinstance(a, Residue) else int(a) % modulus.q for a in items]
    return np.asarray(vals, dtype=np.int64), modulus


def lee_weight_vector(x: Sequence, modulus: Modulus | None = None) -> int:
    """Lee weight of a vector: the sum of its entry weights."""
    vals, mod = _vector_values(x, modulus)
    if vals.size == 0:
        return 0
    return int(lee_weights(vals, mod).sum())


def hamming_weight_vector(x: Sequence, modulus: Modulus | None = None) -> int:
    """Number of nonzero entries."""
    items = list(x)
    if modulus is None and not any(isinstance(a, Residue) for a in items):
        return sum(1 for a in items if int(a) != 0)
    vals, _ = _vector_values(items, modulus)
    return int(np.count_nonzero(vals))


def p_valuation(a, modulus: Modulus | None = None) -> int:
    """Largest ``i <= s`` with ``p^i | a``; zero has valuation ``s``."""
    value, mod = _as_value(a, modulus)
    if value == 0:
        return mod.s
    i = 0
    while value % mod.p == 0:
        value //= mod.p
        i += 1
    return i


def valuations(x, modulus: Modulus) -> np.ndarray:
    """Entrywise p-adic valuations (zero maps to ``s``) of an integer array."""
    arr = np.mod(np.asarray(x, dtype=np.int64), modulus.q)
    out = np.where(arr == 0, modulus.s, 0).astype(np.int64)
    for i in range(1, modulus.s):
        out[(arr % modulus.p**i == 0) & (arr != 0)] = i
    return out


def ideal_max_lee_weight(modulus: Modulus, i: int) -> int:
    """``M_i = floor(p^(s-i)/2) * p^i``, the largest Lee weight in the ideal (p^i)."""
    if not 0 <= i <= modulus.s:
        raise ValueError(f"ideal index {i} outside [0, {modulus.s}]")
    return (modulus.p ** (modulus.s - i) // 2) * modulus.p**i


def unit_inverse(u: int, modulus: Modulus) -> int:
    """Inverse of a unit of Z/p^sZ."""
    return pow(int(u) % modulus.q, -1, modulus.q)
