"""Canonical enumeration of ``(m, w, S)`` and the screen -> distance -> LP -> audit pipeline.

Candidates are processed in batches of weight vectors.  For each batch the
residues of all strings, class sizes, Hamming-1/Hamming-2 adjacency between
residue classes and class bitmasks are computed with numpy, so the distance gate
is a table lookup.  Z-feasibility and the KL audit depend only on the classes
(not on ``w``), so their results are memoised by class bitmask.  Every cached
value is a pure function of its key, so caching never changes output.
"""

from __future__ import annotations

import itertools
import logging
import math
import os
from collections import Counter
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .audit import AuditConfig, AuditReport, kl_check, transversal_check
from .bitspace import BitString, ResidueClass, SearchParams, all_bits, residue_classes, union_distance
from .codes import LogicalCode, assemble, logical_order
from .screens import shift_screen
from .zfeas import (
    ProbabilityTable,
    ReconstructionError,
    build_lp,
    exact_bfs_reconstruct,
    numeric_solution,
    solve_feasibility,
)

log = logging.getLogger(__name__)

BATCH = 2048


@dataclass(frozen=True)
class SweepConfig:
    n: int
    K: int
    m_min: int
    m_max: int
    coprime_filter: bool = False
    require_exact_distance_2: bool = True
    denominator_bound: int | None = None
    jobs: int = 1
    use_separators: bool = True
    solver: str = "exact"

    def __post_init__(self) -> None:
        if not 1 <= self.n <= 24:
            raise ValueError(f"n must lie in 1..24, got {self.n}")
        if self.K < 1:
            raise ValueError(f"K must be >= 1, got {self.K}")
        if self.m_min < 2 or self.m_max < self.m_min:
            raise ValueError(f"empty or invalid modulus range [{self.m_min}, {self.m_max}]")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.solver not in ("exact", "float"):
            raise ValueError(f"unknown solver {self.solver!r}")
        if self.denominator_bound is not None and self.denominator_bound < 1:
            raise ValueError("denominator bound must be positive")

    @property
    def m_range(self) -> range:
        return range(self.m_min, self.m_max + 1)


@dataclass(frozen=True)
class AuditSummary:
    verdict: str
    modes: tuple[str, ...]
    kl_checks: int
    transversal_checks: int

    @classmethod
    def from_report(cls, report: AuditReport) -> AuditSummary:
        return cls(report.verdict, tuple(sorted(report.modes)), len(report.kl), len(report.transversal))


@dataclass(frozen=True)
class HitRecord:
    params: SearchParams
    class_sizes: tuple[int, ...]
    probabilities: ProbabilityTable
    z_expectations: tuple[Fraction, ...]
    order: int
    audit: AuditSummary
    distance: int | float = 2
    scaling_representative: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    @property
    def dedup_key(self) -> tuple:
        p = self.params
        return (p.n, p.K, p.m, tuple(sorted(p.w)), tuple(sorted(p.S)))

    @property
    def sort_key(self) -> tuple:
        return (self.order, self.params.m, self.params.w, self.params.S)

    @property
    def code(self) -> LogicalCode:
        return assemble(self.params, self.probabilities)


@dataclass(frozen=True)
class FlaggedRecord:
    params: SearchParams
    stage: str
    reason: str

    @property
    def sort_key(self) -> tuple:
        return (self.params.m, self.params.w, self.params.S)


@dataclass
class SweepResult:
    hits: list[HitRecord] = field(default_factory=list)
    flagged: list[FlaggedRecord] = field(default_factory=list)
    stats: Counter = field(default_factory=Counter)


# ---------------------------------------------------------------------------
# enumeration


def _screen_ok(forbidden: set[int], S: Sequence[int], m: int) -> bool:
    return all((a - b) % m not in forbidden for a, b in itertools.combinations(S, 2))


def _residue_tuples(forbidden: set[int], m: int, K: int) -> Iterator[tuple[int, ...]]:
    allowed = [s for s in range(1, m) if s not in forbidden]
    for rest in itertools.combinations(allowed, K - 1):
        if _screen_ok(forbidden, rest, m):
            yield (0, *rest)


def _forbidden(w: Sequence[int], m: int) -> set[int]:
    return {v % m for wi in w for v in (wi, -wi)}


def enumerate_candidates(config: SweepConfig) -> Iterator[SearchParams]:
    """Canonical tuples passing the shift screen (and the coprime filter when on)."""
    n, K = config.n, config.K
    for m in config.m_range:
        for w in itertools.combinations_with_replacement(range(1, m), n):
            forb = _forbidden(w, m)
            for S in _residue_tuples(forb, m, K):
                if config.coprime_filter and math.gcd(m, *S) != 1:
                    continue
                yield SearchParams(n, K, m, w, S)


def scaling_representative(params: SearchParams) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lexicographically least ``(sorted(u w), sorted(u S))`` over units ``u`` mod ``m``."""
    m = params.m
    best = None
    for u in range(1, m):
        if math.gcd(u, m) != 1:
            continue
        cand = (
            tuple(sorted(u * v % m for v in params.w)),
            tuple(sorted(u * s % m for s in params.S)),
        )
        if best is None or cand < best:
            best = cand
    return best


# ---------------------------------------------------------------------------
# per-candidate pipeline (also the replay path)


@dataclass(frozen=True)
class Outcome:
    kind: str  # "hit", "flagged" or "rejected"
    record: HitRecord | FlaggedRecord | None = None
    reason: str = ""


def _solve(classes: Sequence[ResidueClass], m: int, config: SweepConfig):
    """ProbabilityTable, None for infeasible, or a ReconstructionError message."""
    lp = build_lp(classes, modulus=m)
    if config.solver == "exact":
        return solve_feasibility(lp)
    numeric = numeric_solution(lp)
    if numeric is None:
        return None
    bound = config.denominator_bound or lp.denominator_bound
    try:
        return exact_bfs_reconstruct(lp, numeric, bound)
    except ReconstructionError as exc:
        return f"reconstruction failed: {exc}"


def _kl_report(code: LogicalCode, tau: float) -> AuditReport:
    report = kl_check(code, AuditConfig(tau, "rational"))
    return report.merge(kl_check(code, AuditConfig(tau, "float")))


def _finish(
    params: SearchParams,
    classes: Sequence[ResidueClass],
    table: ProbabilityTable,
    kl: AuditReport,
    distance: int | float,
    z: tuple[Fraction, ...] | None = None,
) -> Outcome:
    code = assemble(params, table)
    report = kl.merge(transversal_check(code, AuditConfig(mode="rational")))
    report = report.merge(transversal_check(code, AuditConfig(mode="float")))
    if not report.passed:
        return Outcome("flagged", FlaggedRecord(params, "audit", report.summary()), "audit failed")
    if z is None:
        z = table.z_expectations()[0]
    return Outcome(
        "hit",
        HitRecord(
            params,
            tuple(len(c) for c in classes),
            table,
            z,
            logical_order(params.m, params.S),
            AuditSummary.from_report(report),
            distance,
            scaling_representative(params),
        ),
    )


def process_candidate(params: SearchParams, config: SweepConfig | None = None) -> Outcome:
    """Run one tuple through every stage without prefilters or caches."""
    config = config or SweepConfig(params.n, params.K, params.m, params.m)
    if not shift_screen(params):
        return Outcome("rejected", reason="screen")
    if config.coprime_filter and math.gcd(params.m, *params.S) != 1:
        return Outcome("rejected", reason="coprime")
    classes = residue_classes(params)
    if any(len(c) == 0 for c in classes):
        return Outcome("rejected", reason="empty_class")
    d = union_distance(classes)
    if d < 2:
        raise AssertionError(f"screen passed but d(C)={d} for {params}")
    if config.require_exact_distance_2 and d != 2:
        return Outcome("rejected", reason="distance")
    table = _solve(classes, params.m, config)
    if table is None:
        return Outcome("rejected", reason="infeasible")
    if isinstance(table, str):
        return Outcome("flagged", FlaggedRecord(params, "reconstruction", table), "reconstruction")
    code = assemble(params, table)
    return _finish(params, classes, table, _kl_report(code, 1e-10), d)


# ---------------------------------------------------------------------------
# batched sweep


@lru_cache(maxsize=None)
def _neighbour_pairs(n: int, dist: int) -> tuple[np.ndarray, np.ndarray]:
    """All ``(x, y)`` with ``x < y`` at Hamming distance ``dist``."""
    N = 1 << n
    xs, ys = [], []
    for flips in itertools.combinations(range(n), dist):
        mask = sum(1 << f for f in flips)
        x = np.arange(N)
        y = x ^ mask
        keep = x < y
        xs.append(x[keep])
        ys.append(y[keep])
    return np.concatenate(xs), np.concatenate(ys)


@lru_cache(maxsize=None)
def _projections(n: int) -> np.ndarray:
    """``alpha . v(x)`` for every string and every nonzero ``alpha in {-1,0,1}^n`` up to sign.

    For ``n > 8`` only ``e_i`` and all-ones are used.
    """
    signs = 1 - 2 * all_bits(n)
    if n <= 8:
        alphas = [a for a in itertools.product((-1, 0, 1), repeat=n) if any(a)]
        alphas = [a for a in alphas if next(v for v in a if v) > 0]
    else:
        alphas = [tuple(1 if t == i else 0 for t in range(n)) for i in range(n)] + [(1,) * n]
    return (signs @ np.array(alphas, dtype=np.int64).T).astype(np.int32)


def _separated(n: int, a: np.ndarray, b: np.ndarray) -> bool:
    """Exact strict separation of the sign-vector hulls of two string sets."""
    proj = _projections(n)
    pa, pb = proj[a], proj[b]
    return bool(np.any(pa.max(axis=0) < pb.min(axis=0)) or np.any(pb.max(axis=0) < pa.min(axis=0)))


class _Worker:
    """Per-process memo tables keyed by class bitmasks."""

    def __init__(self, config: SweepConfig) -> None:
        self.config = config
        self.lp: dict[tuple[bytes, ...], object] = {}
        self.pair: dict[tuple[bytes, bytes], str] = {}
        self.kl: dict[tuple[bytes, ...], tuple[AuditReport, tuple[Fraction, ...]]] = {}

    def run_batch(self, m: int, ws: np.ndarray) -> SweepResult:
        cfg = self.config
        n, K = cfg.n, cfg.K
        N = 1 << n
        B = len(ws)
        out = SweepResult()
        bits = all_bits(n)
        res = (ws @ bits.T) % m  # (B, N)
        rows = np.arange(B)[:, None]
        counts = np.bincount((res + m * rows).ravel(), minlength=B * m).reshape(B, m)

        adj = []
        for dist in (1, 2):
            xa, xb = _neighbour_pairs(n, dist)
            flat = np.zeros(B * m * m, dtype=bool)
            ra, rb = res[:, xa], res[:, xb]
            base = m * m * rows
            flat[(base + ra * m + rb).ravel()] = True
            flat[(base + rb * m + ra).ravel()] = True
            adj.append(flat.reshape(B, m, m))
        d1, d2 = adj

        words = max(1, N // 64)
        bitpos = np.arange(N)
        masks = np.zeros((B, m, words), dtype=np.uint64)
        np.bitwise_or.at(
            masks,
            (np.repeat(np.arange(B), N), res.ravel(), np.tile(bitpos // 64, B)),
            np.tile(np.left_shift(np.uint64(1), (bitpos % 64).astype(np.uint64)), B),
        )

        counts_l = counts.tolist()
        for b in range(B):
            w = tuple(int(v) for v in ws[b])
            forb = _forbidden(w, m)
            row = res[b]
            cnt = counts_l[b]
            keys_b: dict[int, bytes] = {}

            def key(s: int) -> bytes:
                k = keys_b.get(s)
                if k is None:
                    k = keys_b[s] = masks[b, s].tobytes()
                return k

            good0: dict[int, str] = {}
            for S in _residue_tuples(forb, m, K):
                if cfg.coprime_filter and math.gcd(m, *S) != 1:
                    continue
                out.stats["candidates"] += 1
                if any(cnt[s] == 0 for s in S):
                    out.stats["empty_class"] += 1
                    continue
                if K > 2:
                    # the (0, S_j) block of the program is the K = 2 program
                    bad = None
                    for s in S[1:]:
                        st = good0.get(s)
                        if st is None:
                            st = good0[s] = self._pair_status(m, row, 0, s, key(0), key(s))
                        if st != "feasible":
                            bad = st
                            break
                    if bad is not None:
                        out.stats["pair_" + bad] += 1
                        continue
                pairs = list(itertools.combinations_with_replacement(S, 2))
                if any(d1[b, s, t] for s, t in pairs):
                    raise AssertionError(f"screen passed but d(C)=1 for m={m} w={w} S={S}")
                exact2 = any(d2[b, s, t] for s, t in pairs)
                if cfg.require_exact_distance_2 and not exact2:
                    out.stats["distance"] += 1
                    continue
                keys = tuple(key(s) for s in S)
                bad = None
                for i, j in itertools.combinations(range(K), 2):
                    if K > 2 and i == 0:
                        continue
                    st = self._pair_status(m, row, S[i], S[j], keys[i], keys[j])
                    if st != "feasible":
                        bad = st
                        break
                if bad is not None:
                    out.stats[bad] += 1
                    continue
                self._solve_and_record(m, w, S, row, keys, exact2, out)
        return out

    def _classes(self, row: np.ndarray, S: Sequence[int]) -> list[ResidueClass]:
        n = self.config.n
        return [ResidueClass(s, tuple(BitString(n, int(v)) for v in np.flatnonzero(row == s))) for s in S]

    def _lp(self, keys: tuple[bytes, ...], m: int, row: np.ndarray, S: Sequence[int]):
        if keys not in self.lp:
            self.lp[keys] = _solve(self._classes(row, S), m, self.config)
        return self.lp[keys]

    def _pair_status(self, m: int, row: np.ndarray, s: int, t: int, ks: bytes, kt: bytes) -> str:
        """"separator", "infeasible" or "feasible" for the two-class program on ``(C_s, C_t)``."""
        key = (ks, kt)
        st = self.pair.get(key)
        if st is None:
            st = self.pair.get((kt, ks))
        if st is None:
            n = self.config.n
            if self.config.use_separators and _separated(
                n, np.flatnonzero(row == s), np.flatnonzero(row == t)
            ):
                st = "separator"
            else:
                st = "infeasible" if self._lp(key, m, row, (s, t)) is None else "feasible"
            self.pair[key] = st
        return st

    def _solve_and_record(self, m, w, S, row, keys, exact2, out: SweepResult) -> None:
        cfg = self.config
        params = SearchParams(cfg.n, cfg.K, m, w, S)
        classes = self._classes(row, S)
        table = self._lp(keys, m, row, S)
        if table is None:
            out.stats["infeasible"] += 1
            return
        if isinstance(table, str):
            out.stats["flagged"] += 1
            out.flagged.append(FlaggedRecord(params, "reconstruction", table))
            return
        if keys not in self.kl:
            self.kl[keys] = (_kl_report(assemble(params, table), 1e-10), table.z_expectations()[0])
        kl, z = self.kl[keys]
        distance = 2 if exact2 else union_distance(classes)
        outcome = _finish(params, classes, table, kl, distance, z)
        if outcome.kind == "hit":
            out.stats["hits"] += 1
            out.hits.append(outcome.record)
        else:
            out.stats["flagged"] += 1
            out.flagged.append(outcome.record)


_WORKER: _Worker | None = None


def _init_worker(config: SweepConfig) -> None:
    global _WORKER
    _WORKER = _Worker(config)


def _run_task(task: tuple[int, np.ndarray]) -> SweepResult:
    m, ws = task
    return _WORKER.run_batch(m, ws)


def _tasks(config: SweepConfig) -> Iterator[tuple[int, np.ndarray]]:
    for m in config.m_range:
        gen = itertools.combinations_with_replacement(range(1, m), config.n)
        while True:
            chunk = list(itertools.islice(gen, BATCH))
            if not chunk:
                break
            yield m, np.array(chunk, dtype=np.int64)


def sweep_with_flags(config: SweepConfig) -> SweepResult:
    """Full sweep returning hits, flagged records and per-stage counts."""
    total = SweepResult()
    if config.jobs == 1:
        _init_worker(config)
        parts = map(_run_task, _tasks(config))
        results = list(parts)
    else:
        with ProcessPoolExecutor(config.jobs, initializer=_init_worker, initargs=(config,)) as pool:
            results = list(pool.map(_run_task, _tasks(config), chunksize=1))
    for part in results:
        total.hits.extend(part.hits)
        total.flagged.extend(part.flagged)
        total.stats.update(part.stats)
    total.hits.sort(key=lambda h: h.sort_key)
    total.flagged.sort(key=lambda f: f.sort_key)
    for f in total.flagged:
        log.warning("flagged %s at %s: %s", f.params, f.stage, f.reason)
    return total


def run_sweep(config: SweepConfig) -> list[HitRecord]:
    """Accepted hits sorted by ``(order, m, w, S)``."""
    return sweep_with_flags(config).hits


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def max_order_summary(hits: Sequence[HitRecord]) -> dict[tuple[int, int], int]:
    """Largest logical order found for each ``(n, K)``."""
    best: dict[tuple[int, int], int] = {}
    for h in hits:
        key = (h.params.n, h.params.K)
        best[key] = max(best.get(key, 0), h.order)
    return dict(sorted(best.items()))


def order_counts(hits: Sequence[HitRecord]) -> dict[int, int]:
    return dict(sorted(Counter(h.order for h in hits).items()))
