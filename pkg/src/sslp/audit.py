"""Independent verification of logical codes.

Everything here works from the :class:`~sslp.codes.LogicalCode` alone: residues and
Hamming-1 neighbourhoods are recomputed from ``w`` and ``m``, and no code from the
feasibility solver is reused.  Rational mode evaluates every matrix element as
an exact element of ``Q(i, sqrt 2, sqrt 3, ...)``; float mode uses dense state
vectors and a tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Union

import numpy as np

from .bitspace import BitString
from .codes import Amplitude, LogicalCode
from .exactnum import RadicalSum, squarefree_split

Mode = Literal["float", "rational"]
PAULIS = ("I", "X", "Y", "Z")


class UnsupportedPhase(ValueError):
    """Rational mode handles amplitudes whose phase is a power of i."""


@dataclass(frozen=True)
class AuditConfig:
    tau_float: float = 1e-10
    mode: Mode = "rational"

    def __post_init__(self) -> None:
        if self.mode not in ("float", "rational"):
            raise ValueError(f"unknown audit mode {self.mode!r}")
        if self.tau_float < 0:
            raise ValueError("tolerance must be nonnegative")

    @property
    def tau(self) -> float:
        return 0.0 if self.mode == "rational" else self.tau_float


@dataclass(frozen=True)
class ExactComplex:
    """``re + i * im`` with both parts sums of square roots."""

    re: RadicalSum = field(default_factory=RadicalSum)
    im: RadicalSum = field(default_factory=RadicalSum)

    def __add__(self, other: ExactComplex) -> ExactComplex:
        return ExactComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other: ExactComplex) -> ExactComplex:
        return ExactComplex(self.re - other.re, self.im - other.im)

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        if self.im.is_zero():
            return repr(self.re)
        return f"({self.re!r} + i*{self.im!r})"


Value = Union[ExactComplex, complex]
_ZERO = ExactComplex()


@dataclass(frozen=True)
class KLCheck:
    """One matrix element ``<j|P_i|k>``; ``i = 0`` for the identity."""

    mode: Mode
    pauli: str
    site: int
    j: int
    k: int
    value: Value
    passed: bool
    terms: int


@dataclass(frozen=True)
class TransversalCheck:
    mode: Mode
    j: int
    residue: int
    passed: bool
    offending: BitString | None = None
    deviation: float = 0.0


@dataclass
class AuditReport:
    kl: list[KLCheck] = field(default_factory=list)
    transversal: list[TransversalCheck] = field(default_factory=list)
    lambdas: dict[tuple[str, int], Value] = field(default_factory=dict)
    modes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.kl) and all(t.passed for t in self.transversal)

    @property
    def verdict(self) -> str:
        return "accept" if self.passed else "flag"

    def failures(self) -> list[KLCheck | TransversalCheck]:
        return [c for c in self.kl if not c.passed] + [t for t in self.transversal if not t.passed]

    def passed_mode(self, mode: str) -> bool:
        return all(c.passed for c in self.kl if c.mode == mode) and all(
            t.passed for t in self.transversal if t.mode == mode
        )

    def xy_structurally_empty(self) -> bool:
        """True when no X/Y matrix element has any contributing neighbour pair."""
        return all(c.terms == 0 for c in self.kl if c.pauli in ("X", "Y"))

    def lambda_vector(self, pauli: str, n: int) -> tuple[Value, ...]:
        return tuple(self.lambdas[(pauli, i)] for i in range(1, n + 1))

    def merge(self, other: AuditReport) -> AuditReport:
        return AuditReport(
            self.kl + other.kl,
            self.transversal + other.transversal,
            {**other.lambdas, **self.lambdas},
            self.modes + tuple(m for m in other.modes if m not in self.modes),
        )

    def summary(self) -> str:
        bad = self.failures()
        lines = [f"verdict: {self.verdict} ({len(self.kl)} KL checks, modes {', '.join(self.modes)})"]
        for f in bad[:10]:
            lines.append(f"  failed: {f}")
        if len(bad) > 10:
            lines.append(f"  ... {len(bad) - 10} more failures")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# exact matrix elements


def _quarter_turns(a: Amplitude) -> int:
    q = a.phase * 4
    if q.denominator != 1:
        raise UnsupportedPhase(f"phase {a.phase} is not a multiple of 1/4")
    return int(q) % 4


def _exact_states(code: LogicalCode) -> tuple[list[dict[int, tuple[int, int]]], int]:
    """Per state: string value -> (quarter turns, radicand * L), with common denominator ``L``."""
    L = 1
    for st in code.states:
        for a in st.values():
            L = math.lcm(L, a.radicand.denominator)
    states = [
        {x.value: (_quarter_turns(a), int(a.radicand * L)) for x, a in st.items()}
        for st in code.states
    ]
    return states, L


def _accumulate(parts: list[dict[int, int]], k: int, sign: int, a: int, b: int) -> None:
    """Add ``sign * i^k * sqrt(a * b)`` (integers) into ``parts = [re, im]``."""
    if a == b:
        coef, rad = a, 1
    else:
        coef, rad = squarefree_split(a * b)
    if k >= 2:
        sign = -sign
    target = parts[k & 1]
    target[rad] = target.get(rad, 0) + sign * coef


def _to_exact(parts: list[dict[int, int]], L: int) -> ExactComplex:
    if not parts[0] and not parts[1]:
        return _ZERO
    re, im = ({s: Fraction(c, L) for s, c in p.items() if c} for p in parts)
    return ExactComplex(RadicalSum._trusted(re), RadicalSum._trusted(im))


def _exact_element(
    states: list[dict[int, tuple[int, int]]], L: int, n: int, pauli: str, i: int, j: int, k: int
) -> tuple[ExactComplex, int]:
    """``<j|P_i|k>`` exactly, and the number of contributing string pairs.

    Amplitudes are ``i^q sqrt(a / L)``, so every product is ``i^k sqrt(a b) / L``
    and all accumulation happens in integers.
    """
    bra, ket = states[j], states[k]
    parts: list[dict[int, int]] = [{}, {}]
    terms = 0
    shift = n - i
    mask = 1 << shift if i else 0
    if pauli in ("I", "Z"):
        for y in bra.keys() & ket.keys():
            qa, a = bra[y]
            qb, b = ket[y]
            sign = -1 if pauli == "Z" and (y >> shift) & 1 else 1
            _accumulate(parts, (qb - qa) % 4, sign, a, b)
            terms += 1
    else:
        for y, (qb, b) in ket.items():
            hit = bra.get(y ^ mask)
            if hit is None:
                continue
            qa, a = hit
            if pauli == "X":
                _accumulate(parts, (qb - qa) % 4, 1, a, b)
            else:
                # Y|y> = i (-1)^{y_i} |y + e_i>
                _accumulate(parts, (qb - qa + 1) % 4, -1 if (y >> shift) & 1 else 1, a, b)
            terms += 1
    return _to_exact(parts, L), terms


# ---------------------------------------------------------------------------
# floating matrix elements


def _float_elements(V: np.ndarray, n: int) -> dict[tuple[str, int], np.ndarray]:
    """``K x K`` matrices ``<j|P_i|k>`` for every Pauli and site, from dense states ``V``."""
    idx = np.arange(V.shape[1])
    shifts = n - np.arange(1, n + 1)
    sign = 1 - 2 * ((idx[None, :] >> shifts[:, None]) & 1)  # (n, N)
    flipped = idx[None, :] ^ (1 << shifts)[:, None]  # (n, N)
    Vc = V.conj()
    ZV = V[:, None, :] * sign[None, :, :]  # (K, n, N)
    XV = V[:, flipped]
    YV = 1j * np.take_along_axis(ZV, np.broadcast_to(flipped, ZV.shape), axis=2)
    out = {("I", 0): Vc @ V.T}
    for name, PV in (("X", XV), ("Y", YV), ("Z", ZV)):
        M = np.einsum("jx,kix->ijk", Vc, PV)
        for i in range(n):
            out[(name, i + 1)] = M[i]
    return out


def _neighbour_terms(sets: list[set[int]], n: int, pauli: str, i: int, j: int, k: int) -> int:
    if pauli in ("I", "Z"):
        return len(sets[j] & sets[k])
    mask = 1 << (n - i)
    return sum(1 for y in sets[k] if y ^ mask in sets[j])


def kl_check(code: LogicalCode, config: AuditConfig | None = None) -> AuditReport:
    """Weight-1 Knill-Laflamme conditions plus orthonormality.

    For every site ``i`` and ``P in {X, Y, Z}``: ``<j|P_i|k> = 0`` for ``j != k``
    and ``<j|P_i|j>`` equal to ``<0|P_i|0>``.  The identity rows check
    ``<j|k> = delta_jk``.
    """
    config = config or AuditConfig()
    _require_states(code)
    n, K = code.n, code.K
    report = AuditReport(modes=(config.mode,))
    exact = config.mode == "rational"
    states, L = _exact_states(code) if exact else (None, 1)
    dense = None if exact else _float_elements(np.array([code.vector(j) for j in range(K)]), n)
    sets = [set(x.value for x in st) for st in code.states]

    for pauli in PAULIS:
        sites = [0] if pauli == "I" else list(range(1, n + 1))
        for i in sites:
            diag: list[tuple[Value, int]] = []
            for j in range(K):
                for k in range(K):
                    if exact:
                        value, terms = _exact_element(states, L, n, pauli, i, j, k)
                    else:
                        value = complex(dense[(pauli, i)][j, k])
                        terms = _neighbour_terms(sets, n, pauli, i, j, k)
                    if j != k:
                        ok = _is_zero(value, config)
                        report.kl.append(KLCheck(config.mode, pauli, i, j, k, value, ok, terms))
                    else:
                        diag.append((value, terms))
            reference = _one(config) if pauli == "I" else diag[0][0]
            for j, (value, terms) in enumerate(diag):
                ok = _same(value, reference, config)
                report.kl.append(KLCheck(config.mode, pauli, i, j, j, value, ok, terms))
            site_ok = all(c.passed for c in report.kl[-K * K :])
            if pauli != "I" and site_ok:
                report.lambdas[(pauli, i)] = diag[0][0]
    return report


def _one(config: AuditConfig) -> Value:
    if config.mode == "rational":
        return ExactComplex(RadicalSum({1: 1}), RadicalSum())
    return 1.0 + 0j


def _same(a: Value, b: Value, config: AuditConfig) -> bool:
    if isinstance(a, ExactComplex):
        return a == b
    return abs(a - b) <= config.tau


def _is_zero(value: Value, config: AuditConfig) -> bool:
    if isinstance(value, ExactComplex):
        return value.is_zero()
    return abs(value) <= config.tau


def _require_states(code: LogicalCode) -> None:
    if code.K < 1 or not code.states:
        raise ValueError("malformed code: no logical states")


def transversal_check(code: LogicalCode, config: AuditConfig | None = None) -> AuditReport:
    """``U(w, m)|j> = omega_m^{S_j} |j>`` for every logical state."""
    config = config or AuditConfig()
    _require_states(code)
    p = code.params
    report = AuditReport(modes=(config.mode,))
    w = np.asarray(p.w, dtype=np.int64)
    shifts = np.arange(p.n - 1, -1, -1, dtype=np.int64)
    for j, state in enumerate(code.states):
        target = p.S[j] % p.m
        if config.mode == "rational":
            bad = next(
                (x for x in state if sum(wi for wi, b in zip(p.w, x.bits) if b) % p.m != target),
                None,
            )
            report.transversal.append(TransversalCheck("rational", j, target, bad is None, bad))
        else:
            v = code.vector(j)
            idx = np.arange(v.size, dtype=np.int64)
            res = (((idx[:, None] >> shifts[None, :]) & 1) @ w) % p.m
            uv = np.exp(2j * np.pi * res / p.m) * v
            dev = float(np.linalg.norm(uv - np.exp(2j * np.pi * target / p.m) * v))
            report.transversal.append(
                TransversalCheck("float", j, target, dev <= config.tau, None, dev)
            )
    return report


def full_audit(code: LogicalCode, config: AuditConfig | None = None) -> AuditReport:
    """Float KL, rational KL and transversal checks; accept only if all pass."""
    config = config or AuditConfig()
    _require_states(code)
    fcfg = AuditConfig(config.tau_float, "float")
    rcfg = AuditConfig(config.tau_float, "rational")
    report = kl_check(code, rcfg)
    report = report.merge(transversal_check(code, rcfg))
    report = report.merge(kl_check(code, fcfg))
    report = report.merge(transversal_check(code, fcfg))
    return report


def exact_lambda_z(report: AuditReport, n: int) -> tuple[Fraction, ...]:
    """Rational ``lambda_{Z_i}`` from a passing rational report."""
    out = []
    for i in range(1, n + 1):
        v = report.lambdas[("Z", i)]
        if not isinstance(v, ExactComplex) or not v.im.is_zero():
            raise ValueError("no exact real lambda recorded")
        out.append(v.re.rational_value())
    return tuple(out)
