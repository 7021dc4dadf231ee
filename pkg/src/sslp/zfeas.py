"""The Z-marginal feasibility program and its exact solution.

For residue classes ``C_{S_0}, ..., C_{S_{K-1}}`` the unknowns are block
probabilities ``p_{j,x}``.  Rows ``(j-1)*n + i`` equate the ``Z_i`` expectation of
block ``j`` with that of block 0, and the last ``K`` rows normalize each block.
The program is decided by a phase-1 simplex run on an integer tableau with a
single common denominator (exact rational arithmetic) and Bland's rule.
Two reconstruction routes turn floating LP output into exact tables: basis
selection followed by an exact solve, and continued-fraction rounding followed by
exact projection.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bitspace import BitString, ResidueClass
from .exactnum import LinearSystem, cf_round, independent_rows, solve_exact

log = logging.getLogger(__name__)


class ReconstructionError(RuntimeError):
    """An exact table could not be recovered from a numeric solution."""


def default_denominator_bound(m: int, n: int) -> int:
    return 2 * m * n


@dataclass(frozen=True)
class ZFeasibilityLP:
    system: LinearSystem
    column_index: tuple[tuple[int, BitString], ...]
    n: int
    K: int
    modulus: int | None = None

    @property
    def shape(self) -> tuple[int, int]:
        return self.system.shape

    @property
    def basis_size(self) -> int:
        return (self.K - 1) * self.n + self.K

    @property
    def denominator_bound(self) -> int:
        if self.modulus is not None:
            return default_denominator_bound(self.modulus, self.n)
        return 2 * self.n * self.basis_size

    def table_from_vector(self, p: Sequence[Fraction]) -> ProbabilityTable:
        blocks: list[dict[BitString, Fraction]] = [{} for _ in range(self.K)]
        for (j, x), v in zip(self.column_index, p):
            if v:
                blocks[j][x] = Fraction(v)
        return ProbabilityTable(tuple(blocks))

    def vector_from_table(self, table: ProbabilityTable) -> tuple[Fraction, ...]:
        return tuple(table.blocks[j].get(x, Fraction(0)) for j, x in self.column_index)

    def accepts(self, p: Sequence[Fraction]) -> bool:
        """Exact check of ``A p = b`` and ``p >= 0``."""
        return all(v >= 0 for v in p) and self.system.is_solved_by(p)


@dataclass(frozen=True)
class ProbabilityTable:
    """Exact block probabilities; only strictly positive entries are stored."""

    blocks: tuple[dict[BitString, Fraction], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "blocks",
            tuple({x: Fraction(v) for x, v in sorted(b.items()) if v} for b in self.blocks),
        )

    @property
    def K(self) -> int:
        return len(self.blocks)

    def z_expectations(self) -> tuple[tuple[Fraction, ...], ...]:
        """``sum_x (1 - 2 x_i) p_{j,x}`` per block and site."""
        out = []
        for block in self.blocks:
            if not block:
                out.append(())
                continue
            n = next(iter(block)).n
            L = 1
            for p in block.values():
                L = math.lcm(L, p.denominator)
            acc = [0] * n
            for x, p in block.items():
                v = p.numerator * (L // p.denominator)
                for i in range(n):
                    acc[i] += -v if (x.value >> (n - 1 - i)) & 1 else v
            out.append(tuple(Fraction(a, L) for a in acc))
        return tuple(out)

    def is_valid(self) -> bool:
        if any(not b for b in self.blocks):
            return False
        if any(p < 0 for b in self.blocks for p in b.values()):
            return False
        if any(sum(b.values(), Fraction(0)) != 1 for b in self.blocks):
            return False
        z = self.z_expectations()
        return all(row == z[0] for row in z)

    @property
    def nonzeros(self) -> int:
        return sum(len(b) for b in self.blocks)


def build_lp(classes: Sequence[ResidueClass], modulus: int | None = None) -> ZFeasibilityLP:
    if not classes:
        raise ValueError("need at least one class")
    for j, c in enumerate(classes):
        if len(c) == 0:
            raise ValueError(f"class {j} (residue {c.residue}) is empty")
    n = classes[0].members[0].n
    K = len(classes)
    column_index = tuple((j, x) for j, c in enumerate(classes) for x in c.members)
    signs = [tuple(1 - 2 * ((x.value >> (n - 1 - i)) & 1) for i in range(n)) for _, x in column_index]
    rows: list[tuple[int, ...]] = []
    for j in range(1, K):
        for i in range(n):
            rows.append(
                tuple(
                    s[i] if jj == 0 else (-s[i] if jj == j else 0)
                    for (jj, _), s in zip(column_index, signs)
                )
            )
    for j in range(K):
        rows.append(tuple(1 if jj == j else 0 for jj, _ in column_index))
    b = (0,) * ((K - 1) * n) + (1,) * K
    return ZFeasibilityLP(LinearSystem(tuple(rows), b), column_index, n, K, modulus)


# ---------------------------------------------------------------------------
# exact phase-1 simplex


try:  # optional compiled kernel; results are identical to the Python path
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

_SAFE = 1 << 30  # entries below this keep every product inside int64


def _pivot_loop(T, basis, R, N, d, limit):
    """Bland phase-1 pivots on the tableau ``T`` in place.

    Returns ``(status, d)``: 0 when optimal, 1 when an entry reached ``limit``
    (checked only for ``limit > 0``; the caller then continues with Python
    integers), 2 if the objective were unbounded.
    """
    width = T.shape[1]
    while True:
        c = -1
        for k in range(N + R):
            if T[R, k] < 0:
                c = k
                break
        if c < 0:
            return 0, d
        if limit > 0:
            big = 0
            for i in range(R + 1):
                for k in range(width):
                    v = abs(T[i, k])
                    if v > big:
                        big = v
            if big >= limit:
                return 1, d
        r = -1
        for i in range(R):
            a = T[i, c]
            if a > 0:
                if r < 0:
                    r = i
                    continue
                lhs = T[i, width - 1] * T[r, c]
                rhs = T[r, width - 1] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                    r = i
        if r < 0:
            return 2, d
        p = T[r, c]
        for i in range(R + 1):
            if i == r:
                continue
            f = T[i, c]
            for k in range(width):
                T[i, k] = (p * T[i, k] - f * T[r, k]) // d
        basis[r] = c
        d = p


_pivot_kernel = njit(cache=True)(_pivot_loop) if njit is not None else None


def _phase_one(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """Find ``p >= 0`` with ``A p = b`` (``b >= 0``), or None when infeasible.

    The tableau holds integers ``T`` with a shared positive denominator ``d``;
    every pivot is an exact Bareiss-style update, so ``T / d`` is the rational
    tableau at all times.  Pivoting runs on int64 while entries are small and
    on Python integers afterwards.
    """
    R = len(A)
    N = len(A[0]) if R else 0
    T = np.zeros((R + 1, N + R + 1), dtype=np.int64)
    if R:
        T[:R, :N] = np.asarray(A, dtype=np.int64)
        T[:R, N : N + R] = np.eye(R, dtype=np.int64)
        T[:R, -1] = np.asarray(b, dtype=np.int64)
        T[R] = -T[:R].sum(axis=0)
        T[R, N : N + R] = 0
    basis = np.arange(N, N + R, dtype=np.int64)
    d = 1
    if _pivot_kernel is not None and int(np.abs(T).max(initial=0)) < _SAFE:
        status, d = _pivot_kernel(T, basis, R, N, d, _SAFE)
        d = int(d)
        if status == 2:
            raise AssertionError("unbounded phase-1 objective")
        if status == 1:
            T = T.astype(object)
    else:
        T = T.astype(object)
    if T.dtype == object:
        status, d = _pivot_loop(T, basis, R, N, d, 0)
        if status == 2:  # cannot happen in phase 1: the objective is bounded below
            raise AssertionError("unbounded phase-1 objective")
    if T[R, -1] != 0:
        return None
    x = [Fraction(0)] * N
    for i, col in enumerate(basis):
        if col < N:
            x[int(col)] = Fraction(int(T[i, -1]), int(d))
    return x


def solve_feasibility(lp: ZFeasibilityLP) -> ProbabilityTable | None:
    """Exact basic feasible solution of the Z-marginal program, or None if infeasible."""
    p = _phase_one(lp.system.A, lp.system.b)
    if p is None:
        return None
    if not lp.accepts(p):
        raise AssertionError("simplex returned a point violating the constraints")
    table = lp.table_from_vector(p)
    if not table.is_valid():
        raise AssertionError("simplex returned an invalid probability table")
    return table


def numeric_solution(lp: ZFeasibilityLP) -> np.ndarray | None:
    """Floating-point feasible point from HiGHS, or None when reported infeasible."""
    from scipy.optimize import linprog

    A = np.array(lp.system.A, dtype=float)
    b = np.array(lp.system.b, dtype=float)
    res = linprog(np.zeros(A.shape[1]), A_eq=A, b_eq=b, bounds=(0, None), method="highs")
    return res.x if res.status == 0 else None


# ---------------------------------------------------------------------------
# reconstruction from floating-point solutions


class _ColumnBasis:
    """Greedy exact rank tracking for a growing set of column vectors."""

    def __init__(self) -> None:
        self._rows: list[tuple[int, list[Fraction]]] = []

    def try_add(self, v: Sequence) -> bool:
        v = [Fraction(a) for a in v]
        for piv, row in self._rows:
            if v[piv]:
                f = v[piv] / row[piv]
                v = [a - f * b for a, b in zip(v, row)]
        piv = next((k for k, a in enumerate(v) if a), None)
        if piv is None:
            return False
        self._rows.append((piv, v))
        return True

    def __len__(self) -> int:
        return len(self._rows)


def _rank(A: Sequence[Sequence[int]]) -> int:
    return len(independent_rows(A))


def exact_bfs_reconstruct(
    lp: ZFeasibilityLP, numeric: Sequence[float], denominator_bound: int | None = None
) -> ProbabilityTable:
    """Recover an exact vertex from a floating solution near a basic feasible point.

    Columns are taken greedily by decreasing positive value (ties by column
    index) while they increase the rank, until the rank of ``A_eq`` is reached.
    The restricted system is solved exactly; if the result violates ``A p = b``
    or ``p >= 0``, the projection route is used instead.
    """
    A, b = lp.system.A, lp.system.b
    N = lp.shape[1]
    numeric = [float(v) for v in numeric]
    if len(numeric) != N:
        raise ValueError(f"numeric solution has {len(numeric)} entries, expected {N}")
    target = _rank(A)
    order = sorted(range(N), key=lambda c: (-max(numeric[c], 0.0), c))
    tracker = _ColumnBasis()
    chosen: list[int] = []
    for c in order:
        if len(chosen) == target:
            break
        if tracker.try_add([row[c] for row in A]):
            chosen.append(c)
    if len(chosen) < target:
        raise ReconstructionError("no full-rank basis among the columns")
    chosen.sort()
    sub = LinearSystem(tuple(tuple(row[c] for c in chosen) for row in A), b)
    sol = solve_exact(sub)
    if sol.status == "unique":
        p = [Fraction(0)] * N
        for c, v in zip(chosen, sol.x):
            p[c] = v
        if lp.accepts(p):
            return lp.table_from_vector(p)
    log.debug("basis solve did not give a feasible vertex; projecting instead")
    return rationalize_by_projection(lp, numeric, denominator_bound or lp.denominator_bound)


def _project(
    A: Sequence[Sequence[int]], b: Sequence, p: list[Fraction], free: Sequence[int]
) -> list[Fraction]:
    """Orthogonal projection of ``p`` onto ``{A q = b}`` moving only ``free`` coordinates."""
    sub = [[row[c] for c in free] for row in A]
    residual = [Fraction(bi) - sum((a * v for a, v in zip(row, p) if a), Fraction(0))
                for row, bi in zip(A, b)]
    if all(r == 0 for r in residual):
        return list(p)
    keep = independent_rows(sub)
    if not keep:
        raise ReconstructionError("no free coordinates left to correct the residual")
    Ak = [sub[i] for i in keep]
    gram = [[sum(a * c for a, c in zip(ri, rj)) for rj in Ak] for ri in Ak]
    sol = solve_exact(LinearSystem(gram, [residual[i] for i in keep]))
    if not sol.consistent:
        raise ReconstructionError("projection system is inconsistent")
    y = sol.x
    out = list(p)
    for k, c in enumerate(free):
        out[c] = p[c] + sum((Ak[r][k] * y[r] for r in range(len(keep)) if Ak[r][k]), Fraction(0))
    if any(
        sum((a * v for a, v in zip(row, out) if a), Fraction(0)) != bi for row, bi in zip(A, b)
    ):
        raise ReconstructionError("projection cannot satisfy the constraints on this support")
    return out


MAX_CLIP_ROUNDS = 2


def rationalize_by_projection(
    lp: ZFeasibilityLP, numeric: Sequence[float], denominator_bound: int
) -> ProbabilityTable:
    """Round entrywise by continued fractions, then project exactly onto the constraints."""
    if denominator_bound < 1:
        raise ValueError("denominator bound must be >= 1")
    A, b = lp.system.A, lp.system.b
    N = lp.shape[1]
    if len(numeric) != N:
        raise ValueError(f"numeric solution has {len(numeric)} entries, expected {N}")
    p = [cf_round(float(v), denominator_bound) for v in numeric]
    free = list(range(N))
    p = _project(A, b, p, free)
    rounds = 0
    while any(v < 0 for v in p):
        if rounds == MAX_CLIP_ROUNDS:
            raise ReconstructionError("negative entries persist after clip-and-reproject")
        rounds += 1
        pinned = {c for c, v in enumerate(p) if v <= 0}
        p = [Fraction(0) if c in pinned else v for c, v in enumerate(p)]
        free = [c for c in range(N) if c not in pinned]
        p = _project(A, b, p, free)

    sums = [Fraction(0)] * lp.K
    for (j, _), v in zip(lp.column_index, p):
        sums[j] += v
    if any(s <= 0 for s in sums):
        raise ReconstructionError("a block has zero total mass")
    p = [v / sums[j] for (j, _), v in zip(lp.column_index, p)]
    if not lp.accepts(p):
        raise ReconstructionError("renormalized vector violates the constraints")
    return lp.table_from_vector(p)
