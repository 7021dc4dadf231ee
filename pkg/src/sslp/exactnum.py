"""Exact arithmetic: rationals, continued-fraction rounding, fraction-free elimination
and sums of square roots of rationals.
"""

from __future__ import annotations

import functools
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

Rational = Fraction


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Strict inverse of :func:`format_rational`: ``"num/den"`` with ``den > 0``."""
    if not isinstance(text, str):
        raise ValueError(f"rational must be a 'num/den' string, got {text!r}")
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"rational must be written 'num/den': {text!r}")
    try:
        p, q = int(num), int(den)
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q <= 0:
        raise ValueError(f"denominator must be positive in {text!r}")
    return Fraction(p, q)


# ---------------------------------------------------------------------------
# continued-fraction rounding


def cf_round(v: float, D: int) -> Fraction:
    """Closest rational to ``v`` with denominator at most ``D``.

    Candidates are the last convergent and the best semiconvergent of the
    continued-fraction expansion of the exact binary value of ``v``.  Exact ties
    go to the smaller denominator, then to the smaller numerator.
    """
    if not math.isfinite(v):
        raise ValueError(f"cannot round non-finite value {v!r}")
    if D < 1:
        raise ValueError(f"denominator bound must be >= 1, got {D}")
    x = Fraction(v)
    if x.denominator <= D:
        return x

    p0, q0, p1, q1 = 0, 1, 1, 0
    n, d = x.numerator, x.denominator
    while True:
        a = n // d
        q2 = q0 + a * q1
        if q2 > D:
            break
        p0, q0, p1, q1 = p1, q1, p0 + a * p1, q2
        n, d = d, n - a * d
    k = (D - q0) // q1
    semi = Fraction(p0 + k * p1, q0 + k * q1)
    conv = Fraction(p1, q1)
    candidates = [conv, semi]
    # the floor/ceil pair at denominator 1 can tie with neither candidate
    candidates += [Fraction(math.floor(x)), Fraction(math.ceil(x))]
    return min(candidates, key=lambda c: (abs(c - x), c.denominator, c.numerator))


# ---------------------------------------------------------------------------
# exact linear systems


@dataclass(frozen=True)
class LinearSystem:
    """``A x = b`` with exact entries (integers, or rationals cleared row by row)."""

    A: tuple[tuple[Fraction | int, ...], ...]
    b: tuple[Fraction | int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", tuple(tuple(row) for row in self.A))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.A) != len(self.b):
            raise ValueError(f"A has {len(self.A)} rows but b has {len(self.b)} entries")
        widths = {len(row) for row in self.A}
        if len(widths) > 1:
            raise ValueError("ragged coefficient matrix")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.A), (len(self.A[0]) if self.A else 0)

    def residual(self, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(
            sum((Fraction(a) * xi for a, xi in zip(row, x) if a), Fraction(0)) - bi
            for row, bi in zip(self.A, self.b)
        )

    def is_solved_by(self, x: Sequence[Fraction]) -> bool:
        x = [Fraction(v) for v in x]
        if len(x) != self.shape[1]:
            return False
        if any(isinstance(a, Fraction) and a.denominator != 1 for row in self.A for a in row):
            return all(r == 0 for r in self.residual(x))
        # integer matrix: clear the denominators of x once
        L = 1
        for v in x:
            L = math.lcm(L, v.denominator)
        xi = [v.numerator * (L // v.denominator) for v in x]
        for row, bi in zip(self.A, self.b):
            if sum(int(a) * v for a, v in zip(row, xi) if a) != Fraction(bi) * L:
                return False
        return True


@dataclass(frozen=True)
class ExactSolution:
    """Result of :func:`solve_exact`.

    ``status`` is ``"unique"``, ``"underdetermined"`` (``x`` is the particular
    solution with free variables set to zero) or ``"inconsistent"`` (``x`` is None).
    """

    status: str
    x: tuple[Fraction, ...] | None
    rank: int
    nullspace_rank: int
    pivot_columns: tuple[int, ...] = field(default=())

    @property
    def consistent(self) -> bool:
        return self.status != "inconsistent"


def _integer_rows(A: Sequence[Sequence], b: Sequence) -> list[list[int]]:
    rows = []
    for row, rhs in zip(A, b):
        entries = [Fraction(a) for a in row] + [Fraction(rhs)]
        scale = math.lcm(*(e.denominator for e in entries))
        rows.append([int(e * scale) for e in entries])
    return rows


def bareiss_echelon(M: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of the integer matrix ``M`` (modified in place).

    Only the first ``ncols`` columns are eligible as pivots.  Returns the
    reduced rows and the pivot column of each nonzero row.
    """
    rows = len(M)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        pivot_row = M[r]
        for i in range(r + 1, rows):
            row = M[i]
            f = row[c]
            M[i] = [(piv * a - f * b) // prev for a, b in zip(row, pivot_row)]
        prev = piv
        pivots.append(c)
        r += 1
    return M, pivots


def solve_exact(system: LinearSystem) -> ExactSolution:
    """Solve ``A x = b`` exactly by Bareiss elimination and rational back-substitution."""
    nrows, ncols = system.shape
    if nrows == 0:
        return ExactSolution(
            "underdetermined" if ncols else "unique",
            tuple(Fraction(0) for _ in range(ncols)),
            0,
            ncols,
        )
    M, pivots = bareiss_echelon(_integer_rows(system.A, system.b), ncols)
    rank = len(pivots)
    if any(M[i][ncols] != 0 for i in range(rank, nrows)):
        return ExactSolution("inconsistent", None, rank, ncols - rank, tuple(pivots))
    x = [Fraction(0)] * ncols
    for r in range(rank - 1, -1, -1):
        c = pivots[r]
        row = M[r]
        acc = Fraction(row[ncols])
        for k in range(c + 1, ncols):
            if row[k] and x[k]:
                acc -= row[k] * x[k]
        x[c] = acc / row[c]
    status = "unique" if rank == ncols else "underdetermined"
    return ExactSolution(status, tuple(x), rank, ncols - rank, tuple(pivots))


def matrix_rank(A: Sequence[Sequence]) -> int:
    if not A:
        return 0
    M = _integer_rows(A, [0] * len(A))
    _, pivots = bareiss_echelon(M, len(A[0]))
    return len(pivots)


def independent_rows(A: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal linearly independent subset of rows, greedy in order."""
    chosen: list[int] = []
    basis: list[Sequence] = []
    for i, row in enumerate(A):
        if matrix_rank(basis + [row]) > len(basis):
            basis.append(row)
            chosen.append(i)
    return chosen


# ---------------------------------------------------------------------------
# sums of square roots


@functools.lru_cache(maxsize=4096)
def squarefree_split(k: int) -> tuple[int, int]:
    """Write ``k = s * r^2`` with ``s`` square-free; return ``(r, s)``."""
    if k <= 0:
        raise ValueError(f"expected a positive integer, got {k}")
    outside, inside = 1, 1
    p = 2
    while p * p <= k:
        e = 0
        while k % p == 0:
            k //= p
            e += 1
        outside *= p ** (e // 2)
        if e % 2:
            inside *= p
        p += 1 if p == 2 else 2
    return outside, inside * k


@functools.lru_cache(maxsize=1 << 16)
def sqrt_rational(q: Fraction | int) -> tuple[Fraction, int]:
    """``sqrt(q) = c * sqrt(s)`` with rational ``c`` and square-free integer ``s``.

    Uses ``sqrt(a/b) = sqrt(a*b) / b``.  Returns ``(0, 1)`` for ``q = 0``.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"negative radicand {q}")
    if q == 0:
        return Fraction(0), 1
    outside, s = squarefree_split(q.numerator * q.denominator)
    return Fraction(outside, q.denominator), s


class RadicalSum:
    """An exact real number ``sum_s c_s * sqrt(s)`` over distinct square-free ``s``.

    Distinct square-free radicals are linearly independent over the rationals,
    so the value is zero exactly when no terms remain.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Fraction | int] | None = None) -> None:
        self._terms: dict[int, Fraction] = {}
        for s, c in (terms or {}).items():
            if s <= 0 or squarefree_split(s)[0] != 1:
                raise ValueError(f"radicand {s} is not a positive square-free integer")
            if c:
                self._terms[s] = Fraction(c)

    @classmethod
    def _trusted(cls, terms: dict[int, Fraction]) -> RadicalSum:
        """Wrap an already canonical term map (square-free keys, nonzero values)."""
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def sqrt(cls, q: Fraction | int, coefficient: Fraction | int = 1) -> RadicalSum:
        """``coefficient * sqrt(q)``."""
        c, s = sqrt_rational(q)
        c = c * Fraction(coefficient)
        return cls._trusted({s: c} if c else {})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return set(self._terms) <= {1}

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self._terms.get(1, Fraction(0))

    def __add__(self, other: RadicalSum | Fraction | int) -> RadicalSum:
        if not isinstance(other, RadicalSum):
            other = RadicalSum({1: Fraction(other)})
        out = dict(self._terms)
        for s, c in other._terms.items():
            out[s] = out.get(s, 0) + c
        return RadicalSum._trusted({s: c for s, c in out.items() if c})

    __radd__ = __add__

    def __neg__(self) -> RadicalSum:
        return RadicalSum._trusted({s: -c for s, c in self._terms.items()})

    def __sub__(self, other: RadicalSum | Fraction | int) -> RadicalSum:
        if not isinstance(other, RadicalSum):
            other = RadicalSum({1: Fraction(other)})
        return self + (-other)

    def __mul__(self, other: RadicalSum | Fraction | int) -> RadicalSum:
        if not isinstance(other, RadicalSum):
            k = Fraction(other)
            return RadicalSum._trusted({s: c * k for s, c in self._terms.items() if k})
        out: dict[int, Fraction] = {}
        for s1, c1 in self._terms.items():
            for s2, c2 in other._terms.items():
                g = math.gcd(s1, s2)
                s = (s1 // g) * (s2 // g)
                out[s] = out.get(s, 0) + c1 * c2 * g
        return RadicalSum._trusted({s: c for s, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RadicalSum({1: Fraction(other)})
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __float__(self) -> float:
        return float(sum(float(c) * math.sqrt(s) for s, c in self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "RadicalSum(0)"
        parts = [f"{c}" if s == 1 else f"{c}*sqrt({s})" for s, c in self.terms.items()]
        return "RadicalSum(" + " + ".join(parts) + ")"


def radical_inner(
    terms_a: Iterable[tuple[Fraction | int, Fraction | int]],
    terms_b: Iterable[tuple[Fraction | int, Fraction | int]],
) -> RadicalSum:
    """``sum_k qa_k * qb_k * sqrt(ra_k * rb_k)`` for paired ``(coefficient, radicand)`` lists."""
    terms_a, terms_b = list(terms_a), list(terms_b)
    if len(terms_a) != len(terms_b):
        raise ValueError(f"term lists differ in length: {len(terms_a)} vs {len(terms_b)}")
    total = RadicalSum()
    for (qa, ra), (qb, rb) in zip(terms_a, terms_b):
        ra, rb = Fraction(ra), Fraction(rb)
        if ra < 0 or rb < 0:
            raise ValueError("negative radicand")
        total = total + RadicalSum.sqrt(ra * rb, Fraction(qa) * Fraction(qb))
    return total
