"""Logical states with exact amplitudes, their transversal action and logical order."""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

import numpy as np

from .bitspace import BitString, SearchParams, modular_inner_product

if TYPE_CHECKING:
    from .zfeas import ProbabilityTable


class EigenoperatorViolation(ValueError):
    """A support string does not carry the residue of its logical state."""

    def __init__(self, j: int, x: BitString, residue: int, expected: int) -> None:
        super().__init__(
            f"state {j}: string {x} has residue {residue}, expected {expected}"
        )
        self.j = j
        self.x = x
        self.residue = residue
        self.expected = expected


@dataclass(frozen=True, order=True)
class Amplitude:
    """``exp(2 pi i * phase) * sqrt(radicand)`` with ``phase`` reduced into ``[0, 1)``."""

    phase: Fraction
    radicand: Fraction

    def __post_init__(self) -> None:
        phase = Fraction(self.phase)
        object.__setattr__(self, "phase", phase - math.floor(phase))
        radicand = Fraction(self.radicand)
        if radicand < 0:
            raise ValueError(f"negative radicand {radicand}")
        object.__setattr__(self, "radicand", radicand)

    @classmethod
    def real(cls, radicand: Fraction | int, negative: bool = False) -> Amplitude:
        return cls(Fraction(1, 2) if negative else Fraction(0), Fraction(radicand))

    @property
    def probability(self) -> Fraction:
        return self.radicand

    def __complex__(self) -> complex:
        angle = 2 * math.pi * float(self.phase)
        r = math.sqrt(self.radicand)
        # keep +-1 and +-i phases exact in floating point
        q = self.phase * 4
        if q.denominator == 1:
            return complex(r * (1, 1j, -1, -1j)[int(q)])
        return complex(r * math.cos(angle), r * math.sin(angle))


@dataclass(frozen=True)
class LogicalCode:
    """Logical basis states, state ``j`` supported on strings of residue ``params.S[j]``."""

    params: SearchParams
    states: tuple[Mapping[BitString, Amplitude], ...]

    def __post_init__(self) -> None:
        states = tuple(
            {x: a for x, a in sorted(state.items()) if a.radicand != 0} for state in self.states
        )
        object.__setattr__(self, "states", states)
        if len(states) != self.params.K:
            raise ValueError(f"{len(states)} states given for K={self.params.K}")
        for j, state in enumerate(states):
            for x in state:
                if x.n != self.params.n:
                    raise ValueError(f"state {j}: string {x} has length {x.n} != n={self.params.n}")

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def K(self) -> int:
        return self.params.K

    def support(self, j: int) -> tuple[BitString, ...]:
        return tuple(self.states[j])

    def norms(self) -> tuple[Fraction, ...]:
        return tuple(sum((a.radicand for a in s.values()), Fraction(0)) for s in self.states)

    def probabilities(self) -> tuple[dict[BitString, Fraction], ...]:
        return tuple({x: a.radicand for x, a in s.items()} for s in self.states)

    def vector(self, j: int) -> np.ndarray:
        """Dense complex state vector of length ``2^n`` indexed by string value."""
        v = np.zeros(1 << self.n, dtype=complex)
        for x, a in self.states[j].items():
            v[x.value] = complex(a)
        return v


@dataclass(frozen=True)
class TransversalAction:
    """Induced logical gate ``diag(omega_m^{S_j})`` of ``U(w, m)``."""

    m: int
    residues: tuple[int, ...]
    order: int

    @property
    def phases(self) -> tuple[Fraction, ...]:
        """Eigenphase of each logical state as a fraction of a full turn."""
        return tuple(Fraction(s, self.m) for s in self.residues)

    def eigenvalues(self) -> np.ndarray:
        return np.exp(2j * np.pi * np.array([float(p) for p in self.phases]))

    def describe(self) -> str:
        """Human-readable ``diag(...)`` using 1, -1, i, -i where exact."""
        names = []
        for s, ph in zip(self.residues, self.phases):
            if ph == 0:
                names.append("1")
            elif ph == Fraction(1, 2):
                names.append("-1")
            elif ph == Fraction(1, 4):
                names.append("i")
            elif ph == Fraction(3, 4):
                names.append("-i")
            else:
                names.append(f"w{self.m}^{s}")
        return "diag(" + ", ".join(names) + ")"


def logical_order(m: int, S: Sequence[int]) -> int:
    """``m / gcd(m, S_1, ..., S_{K-1})``."""
    return m // math.gcd(m, *S)


def assemble(params: SearchParams, probs: ProbabilityTable) -> LogicalCode:
    """States with amplitudes ``sqrt(p_{j,x})`` and trivial phase."""
    if probs.K != params.K:
        raise ValueError(f"table has {probs.K} blocks, params have K={params.K}")
    states = tuple(
        {x: Amplitude(Fraction(0), p) for x, p in block.items() if p} for block in probs.blocks
    )
    return LogicalCode(params, states)


def transversal_action(code: LogicalCode) -> TransversalAction:
    p = code.params
    for j, state in enumerate(code.states):
        for x in state:
            r = modular_inner_product(p.w, x, p.m)
            if r != p.S[j] % p.m:
                raise EigenoperatorViolation(j, x, r, p.S[j])
    return TransversalAction(p.m, p.S, logical_order(p.m, p.S))


def z_expectations(code: LogicalCode) -> tuple[tuple[Fraction, ...], ...]:
    """Exact ``<Z_i>`` for each logical state, sites ``1..n``."""
    out = []
    for state in code.states:
        out.append(
            tuple(
                sum(((1 - 2 * x.bit(i)) * a.radicand for x, a in state.items()), Fraction(0))
                for i in range(1, code.n + 1)
            )
        )
    return tuple(out)
