"""Bit-string combinatorics: weights, distances, modular inner products and residue classes.

Bit strings are written with bit 1 leftmost, so ``01111`` has ``x_1 = 0``.  The
integer encoding used internally follows the same convention: bit 1 is the most
significant bit of ``BitString.value``.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

MAX_QUBITS = 24


class DimensionError(ValueError):
    """Raised when sequences that must share a length do not."""


@dataclass(frozen=True, order=True)
class BitString:
    """An ``n``-bit string stored as an integer, bit 1 most significant."""

    n: int
    value: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"bit strings must have 1 <= n <= {MAX_QUBITS}, got {self.n}")
        if not 0 <= self.value < (1 << self.n):
            raise ValueError(f"value {self.value} does not fit in {self.n} bits")

    @classmethod
    def parse(cls, text: str) -> BitString:
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"not a bit string: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitString:
        bits = tuple(bits)
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bits must be 0/1, got {b!r}")
            value = (value << 1) | b
        return cls(len(bits), value)

    @classmethod
    def zeros(cls, n: int) -> BitString:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> BitString:
        return cls(n, (1 << n) - 1)

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"BitString('{self}')"

    def __len__(self) -> int:
        return self.n

    def bit(self, i: int) -> int:
        """Bit ``x_i`` with ``i`` counted from 1 at the left."""
        if not 1 <= i <= self.n:
            raise IndexError(f"site {i} outside 1..{self.n}")
        return (self.value >> (self.n - i)) & 1

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self.bit(i) for i in range(1, self.n + 1))

    @property
    def weight(self) -> int:
        return bin(self.value).count("1")

    def flip(self, i: int) -> BitString:
        """Return ``x XOR e_i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"site {i} outside 1..{self.n}")
        return BitString(self.n, self.value ^ (1 << (self.n - i)))


def hamming_weight(x: BitString) -> int:
    return x.weight


def hamming_distance(x: BitString, y: BitString) -> int:
    if x.n != y.n:
        raise DimensionError(f"length mismatch: {x.n} vs {y.n}")
    return bin(x.value ^ y.value).count("1")


def sign_vector(x: BitString) -> tuple[int, ...]:
    """``((-1)^{x_1}, ..., (-1)^{x_n})``."""
    return tuple(1 - 2 * b for b in x.bits)


def modular_inner_product(w: Sequence[int], x: BitString, m: int) -> int:
    """``sum_i w_i x_i mod m``."""
    if len(w) != x.n:
        raise DimensionError(f"weight vector has length {len(w)}, bit string has {x.n}")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return sum(wi for wi, b in zip(w, x.bits) if b) % m


@dataclass(frozen=True)
class SearchParams:
    """One SSLP candidate ``(n, K, m, w, S)``.

    The constructor accepts any weights in ``[0, m-1]`` and any residue tuple
    starting at 0, so degenerate (repeated) residues and unsorted weights used by
    the analytic constructions are representable.  ``is_canonical`` tells whether
    the tuple is a sweep representative: ``w`` nondecreasing in ``[1, m-1]`` and
    ``S`` strictly increasing.
    """

    n: int
    K: int
    m: int
    w: tuple[int, ...]
    S: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "w", tuple(int(v) for v in self.w))
        object.__setattr__(self, "S", tuple(int(v) for v in self.S))
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"n must lie in 1..{MAX_QUBITS}, got {self.n}")
        if self.K < 1:
            raise ValueError(f"K must be >= 1, got {self.K}")
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")
        if len(self.w) != self.n:
            raise DimensionError(f"w has length {len(self.w)}, expected n={self.n}")
        if len(self.S) != self.K:
            raise DimensionError(f"S has length {len(self.S)}, expected K={self.K}")
        if any(not 0 <= v < self.m for v in self.w):
            raise ValueError(f"weights must lie in [0, {self.m - 1}]: {self.w}")
        if any(not 0 <= s < self.m for s in self.S):
            raise ValueError(f"residues must lie in [0, {self.m - 1}]: {self.S}")
        if self.S[0] != 0:
            raise ValueError(f"S_0 must be 0, got {self.S}")

    @property
    def is_canonical(self) -> bool:
        return (
            all(1 <= v for v in self.w)
            and all(a <= b for a, b in itertools.pairwise(self.w))
            and all(a < b for a, b in itertools.pairwise(self.S))
        )

    @property
    def is_degenerate(self) -> bool:
        return len(set(self.S)) < self.K

    def canonical(self) -> SearchParams:
        """Sorted representative; raises on degenerate residues."""
        if self.is_degenerate:
            raise ValueError(f"degenerate residues have no canonical form: {self.S}")
        return SearchParams(self.n, self.K, self.m, tuple(sorted(self.w)), tuple(sorted(self.S)))

    def residue(self, x: BitString) -> int:
        return modular_inner_product(self.w, x, self.m)


@dataclass(frozen=True)
class ResidueClass:
    """All members of ``{0,1}^n`` with ``<w, x> = residue (mod m)``, ascending."""

    residue: int
    members: tuple[BitString, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self._member_set

    @functools.cached_property
    def _member_set(self) -> frozenset[BitString]:
        return frozenset(self.members)


@functools.lru_cache(maxsize=32)
def all_bits(n: int) -> np.ndarray:
    """``(2^n, n)`` array of all strings, row ``v`` is the string with value ``v``."""
    values = np.arange(1 << n, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    bits = (values[:, None] >> shifts[None, :]) & 1
    bits.setflags(write=False)
    return bits


def residues(w: Sequence[int], m: int) -> np.ndarray:
    """Residue ``<w, x> mod m`` of every string, indexed by string value."""
    w = np.asarray(w, dtype=np.int64)
    return (all_bits(len(w)) @ w) % m


def residue_class(params: SearchParams, residue: int) -> ResidueClass:
    if not 0 <= residue < params.m:
        raise ValueError(f"residue {residue} outside [0, {params.m - 1}]")
    values = np.flatnonzero(residues(params.w, params.m) == residue)
    return ResidueClass(residue, tuple(BitString(params.n, int(v)) for v in values))


def residue_classes(params: SearchParams) -> list[ResidueClass]:
    """One class per logical index, ``C_{S_j}(w)`` for ``j = 0..K-1``."""
    res = residues(params.w, params.m)
    return [
        ResidueClass(s, tuple(BitString(params.n, int(v)) for v in np.flatnonzero(res == s)))
        for s in params.S
    ]


def union_distance(classes: Iterable[ResidueClass | Iterable[BitString]]) -> int | float:
    """Minimum Hamming distance over distinct pairs of the union support.

    Returns ``math.inf`` when the union has fewer than two strings.
    """
    union = sorted({x for c in classes for x in c})
    if len(union) < 2:
        return math.inf
    n = union[0].n
    if any(x.n != n for x in union):
        raise DimensionError("classes mix string lengths")
    values = np.fromiter((x.value for x in union), dtype=np.int64)
    xor = values[:, None] ^ values[None, :]
    dist = _popcount(xor)
    np.fill_diagonal(dist, n + 1)
    return int(dist.min())


def _popcount(a: np.ndarray) -> np.ndarray:
    a = a.astype(np.uint64)
    count = np.zeros(a.shape, dtype=np.int64)
    while a.any():
        count += (a & np.uint64(1)).astype(np.int64)
        a = a >> np.uint64(1)
    return count
