"""Closed-form code families and the degenerate-residue controlled-phase code."""

from __future__ import annotations

import itertools
import math
import warnings
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bitspace import BitString, SearchParams, all_bits, residues
from .codes import Amplitude, LogicalCode


class FamilySpecError(ValueError):
    """Parameters outside the family's domain."""


class ScreenWarning(UserWarning):
    """The residue-shift screen does not certify distance 2 for these parameters."""


@dataclass(frozen=True)
class ExtremaFamilySpec:
    """``C_0 = {0^n, 1^n}`` with ``w = (1, ..., 1, m - n + 1)`` and logical residue ``s``."""

    n: int
    m: int
    s: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise FamilySpecError(f"need n >= 2, got {self.n}")
        if self.m < self.n:
            raise FamilySpecError(f"need m >= n so that C_0 = {{0^n, 1^n}}; got m={self.m}, n={self.n}")
        lo, hi = self.m - (self.n - 1), self.n - 1
        if not lo <= self.s <= hi:
            raise FamilySpecError(f"s={self.s} outside the two-slice window [{lo}, {hi}]")

    @property
    def t(self) -> int:
        return self.n - 1 + self.s - self.m

    @property
    def weights(self) -> tuple[int, ...]:
        return (1,) * (self.n - 1) + (self.m - (self.n - 1),)

    @property
    def screen_ok(self) -> bool:
        m, s, last = self.m, self.s % self.m, (self.m - (self.n - 1)) % self.m
        bad = {1 % m, (-1) % m, last, (-last) % m}
        return s not in bad

    @staticmethod
    def window(n: int, m: int) -> range:
        return range(max(m - (n - 1), 0), n)


@dataclass(frozen=True)
class EvenParityFamilySpec:
    n: int
    m: int
    w: tuple[int, ...]
    S: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "w", tuple(int(v) for v in self.w))
        object.__setattr__(self, "S", tuple(int(v) for v in self.S))
        if self.n < 2 or self.n % 2:
            raise FamilySpecError(f"n must be even and positive, got {self.n}")
        if self.m < 3:
            raise FamilySpecError(f"need m >= 3, got {self.m}")
        if len(self.w) != self.n:
            raise FamilySpecError(f"w has length {len(self.w)}, expected {self.n}")
        if any(not 0 <= v < self.m for v in self.w):
            raise FamilySpecError(f"weights must lie in [0, {self.m - 1}]")
        if not self.S or self.S[0] != 0:
            raise FamilySpecError("residues must start with S_0 = 0")
        if len(set(s % self.m for s in self.S)) != len(self.S) or any(not 0 <= s < self.m for s in self.S):
            raise FamilySpecError(f"residues must be distinct values in [0, {self.m - 1}]: {self.S}")

    @property
    def params(self) -> SearchParams:
        return SearchParams(self.n, len(self.S), self.m, self.w, self.S)


def _weight_slice(n: int, k: int, last: int) -> list[BitString]:
    """Strings ``(u, last)`` with ``wt(u) = k``, ``u`` of length ``n - 1``."""
    out = []
    for ones in itertools.combinations(range(n - 1), k):
        bits = [0] * (n - 1)
        for i in ones:
            bits[i] = 1
        out.append(BitString.from_bits(bits + [last]))
    return out


def build_extrema_code(spec: ExtremaFamilySpec) -> LogicalCode:
    """Two-extremal-string code with ``<Z_i> = 1 - 2s/m`` at every site."""
    n, m, s, t = spec.n, spec.m, spec.s, spec.t
    if not spec.screen_ok:
        warnings.warn(
            f"s={s} collides with a weight shift mod {m}; distance 2 is not certified by the screen",
            ScreenWarning,
            stacklevel=2,
        )
    p0 = Fraction(m - s, m)
    zero = {
        BitString.zeros(n): Amplitude.real(p0),
        BitString.ones(n): Amplitude.real(1 - p0),
    }
    one: dict[BitString, Amplitude] = {}
    for x in _weight_slice(n, s, 0):
        one[x] = Amplitude.real(p0 / math.comb(n - 1, s))
    for x in _weight_slice(n, t, 1):
        one[x] = Amplitude.real((1 - p0) / math.comb(n - 1, t))
    return LogicalCode(SearchParams(n, 2, m, spec.weights, (0, s)), (zero, one))


def even_parity_classes(spec: EvenParityFamilySpec) -> list[list[BitString]]:
    """``C+_{S_k}``: even-weight strings in each residue class, ascending."""
    res = residues(spec.w, spec.m)
    even = all_bits(spec.n).sum(axis=1) % 2 == 0
    return [
        [BitString(spec.n, int(v)) for v in np.flatnonzero(even & (res == s))] for s in spec.S
    ]


def column_counts(members: Sequence[BitString]) -> list[int]:
    return [sum(x.bit(i) for x in members) for i in range(1, members[0].n + 1)] if members else []


def build_even_parity_code(spec: EvenParityFamilySpec) -> LogicalCode:
    """Uniform superpositions over column-balanced even-parity residue classes."""
    states = []
    for k, members in enumerate(even_parity_classes(spec)):
        if not members:
            raise FamilySpecError(f"class {k} (residue {spec.S[k]}) is empty")
        for i, c in enumerate(column_counts(members), start=1):
            if 2 * c != len(members):
                raise FamilySpecError(
                    f"class {k} (residue {spec.S[k]}) is not column-balanced at site {i}: "
                    f"{c} ones among {len(members)} strings"
                )
        amp = Amplitude.real(Fraction(1, len(members)))
        states.append({x: amp for x in members})
    return LogicalCode(spec.params, tuple(states))


def _phi(t: tuple[int, int, int]) -> tuple[int, ...]:
    return (*t, t[0] ^ t[1] ^ t[2])


def _psi(t: tuple[int, int, int]) -> tuple[int, ...]:
    return (*t, 1 ^ t[0] ^ t[1] ^ t[2])


def build_642_code() -> LogicalCode:
    """((6,4,2)) code with transversal ``diag(1, 1, 1, i)``.

    States 0-2 share residue 0 and are separated by character signs over
    ``F_2^3``; state 3 sits in residue 1.  Every amplitude is ``+-1/4``.
    """
    params = SearchParams(6, 4, 4, (1, 3, 2, 2, 2, 2), (0, 0, 0, 1))
    chi = lambda t, a: -1 if t[a] else 1  # noqa: E731
    signs = (
        lambda t: 1,
        lambda t: chi(t, 0) * chi(t, 1),
        lambda t: chi(t, 0) * chi(t, 2),
    )
    q = Fraction(1, 16)
    states: list[dict[BitString, Amplitude]] = []
    for s in signs:
        state = {}
        for t in itertools.product((0, 1), repeat=3):
            amp = Amplitude.real(q, s(t) < 0)
            state[BitString.from_bits((0, 0, *_phi(t)))] = amp
            state[BitString.from_bits((1, 1, *_phi(t)))] = amp
        states.append(state)
    last = {}
    for t in itertools.product((0, 1), repeat=3):
        amp = Amplitude.real(q, chi(t, 2) < 0)
        last[BitString.from_bits((1, 0, *_phi(t)))] = amp
        last[BitString.from_bits((0, 1, *_psi(t)))] = amp
    states.append(last)
    return LogicalCode(params, tuple(states))
