"""Combinatorial pre-filters: the modular shift screen, the distance gate and separators.

A separator ``(alpha, beta)`` proves that the convex hulls of the sign vectors
``v(x) = ((-1)^{x_1}, ...)`` of two residue classes are disjoint, so no pair of
probability vectors on those classes can share Z-marginals.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .bitspace import BitString, ResidueClass, SearchParams, sign_vector, union_distance


@dataclass(frozen=True)
class ScreenResult:
    passed: bool
    offender: tuple[int, int, int] | None = None
    """``(i, j, k)`` with ``S_j - S_k = +-w_i (mod m)``; ``i`` is 1-based."""

    def __bool__(self) -> bool:
        return self.passed


def shift_screen(params: SearchParams) -> ScreenResult:
    """Pass iff ``S_j - S_k != +-w_i (mod m)`` for every site and every pair ``j != k``."""
    m = params.m
    for j, k in ((j, k) for j in range(params.K) for k in range(j)):
        diff = (params.S[j] - params.S[k]) % m
        for i, wi in enumerate(params.w, start=1):
            if diff == wi % m or diff == (-wi) % m:
                return ScreenResult(False, (i, j, k))
    return ScreenResult(True)


@dataclass(frozen=True)
class DistanceResult:
    passed: bool
    distance: int | float

    @property
    def exactly_two(self) -> bool:
        return self.distance == 2

    def __bool__(self) -> bool:
        return self.passed


def distance_check(classes: Sequence[ResidueClass | Iterable[BitString]]) -> DistanceResult:
    """Union distance at least 2."""
    d = union_distance(classes)
    return DistanceResult(d >= 2, d)


@dataclass(frozen=True)
class SeparatorCertificate:
    """``max_{x in C_low} alpha.v(x) < beta < min_{x in C_high} alpha.v(x)``."""

    alpha: tuple[int, ...]
    beta: Fraction
    class_low: int
    class_high: int


def _projections(alpha: Sequence[int], members: Iterable[BitString]) -> list[int]:
    return [sum(a * s for a, s in zip(alpha, sign_vector(x))) for x in members]


def verify_separator(cert: SeparatorCertificate, classes: Sequence[ResidueClass | Sequence[BitString]]) -> bool:
    """Exact check of the strict separation inequalities."""
    if not (0 <= cert.class_low < len(classes) and 0 <= cert.class_high < len(classes)):
        raise IndexError("certificate refers to a missing class")
    low = list(classes[cert.class_low])
    high = list(classes[cert.class_high])
    if not low or not high:
        return False
    if any(x.n != len(cert.alpha) for x in itertools.chain(low, high)):
        return False
    beta = Fraction(cert.beta)
    return max(_projections(cert.alpha, low)) < beta < min(_projections(cert.alpha, high))


def separator_family(n: int, weights: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """``+-e_i``, ``+-`` all-ones and ``+-`` indicators of equal-weight coordinate groups.

    Duplicates are dropped; order is deterministic.
    """
    family: list[tuple[int, ...]] = []
    for i in range(n):
        e = tuple(1 if t == i else 0 for t in range(n))
        family += [e, tuple(-v for v in e)]
    ones = (1,) * n
    family += [ones, tuple(-v for v in ones)]
    if weights is not None:
        for value in sorted(set(weights)):
            ind = tuple(1 if wi == value else 0 for wi in weights)
            family += [ind, tuple(-v for v in ind)]
    seen: set[tuple[int, ...]] = set()
    out = []
    for a in family:
        if a not in seen:
            seen.add(a)
            out.append(a)
    return out


def propose_separators(
    classes: Sequence[ResidueClass | Sequence[BitString]],
    weights: Sequence[int] | None = None,
    family: Iterable[Sequence[int]] | None = None,
) -> list[SeparatorCertificate]:
    """Every verified certificate from a fixed heuristic family of directions.

    An empty result says nothing about feasibility.
    """
    populated = [list(c) for c in classes]
    if len(populated) < 2 or any(not c for c in populated):
        return []
    n = populated[0][0].n
    alphas = [tuple(a) for a in family] if family is not None else separator_family(n, weights)
    certs = []
    for alpha in alphas:
        proj = [_projections(alpha, c) for c in populated]
        for lo, hi in itertools.permutations(range(len(populated)), 2):
            top, bottom = max(proj[lo]), min(proj[hi])
            if top < bottom:
                cert = SeparatorCertificate(alpha, Fraction(top + bottom, 2), lo, hi)
                if verify_separator(cert, classes):
                    certs.append(cert)
    return certs


def coprime_residues(params: SearchParams) -> bool:
    """``gcd(m, S_1, ..., S_{K-1}) = 1``, i.e. full logical order ``m``."""
    return math.gcd(params.m, *params.S) == 1
