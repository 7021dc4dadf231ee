"""Shared test utilities and independent oracles (no imports from the solver internals)."""

from __future__ import annotations

import itertools
from fractions import Fraction

from sslp.bitspace import BitString, SearchParams
from sslp.codes import Amplitude, LogicalCode

WORKED = SearchParams(5, 2, 7, (1, 1, 2, 2, 2), (0, 4))
WORKED_Z = tuple(Fraction(v, 7) for v in (3, 3, -1, -1, -1))
WORKED_STATES = (
    {"00000": "3/7", "01111": "2/7", "10111": "2/7"},
    {"00011": "1/7", "00101": "1/7", "00110": "3/7", "11001": "2/7"},
)


def code_from_probabilities(params: SearchParams, states) -> LogicalCode:
    """Positive real amplitudes ``sqrt(p)`` from ``{bit string: probability}`` maps."""
    return LogicalCode(
        params,
        tuple({BitString.parse(x): Amplitude(0, Fraction(p)) for x, p in st.items()} for st in states),
    )


def code_from_signed(params: SearchParams, listings, radicand: Fraction) -> LogicalCode:
    """States from ``"+0101 -1100 ..."`` listings with a common magnitude."""
    states = []
    for text in listings:
        st = {}
        for tok in text.split():
            st[BitString.parse(tok[1:])] = Amplitude.real(radicand, tok[0] == "-")
        states.append(st)
    return LogicalCode(params, tuple(states))


def reference_params(entry) -> SearchParams:
    return SearchParams(len(entry["w"]), entry["K"], entry["m"], entry["w"], entry["S"])


# ---------------------------------------------------------------------------
# brute-force oracles


def residue_oracle(w, x: str, m: int) -> int:
    return sum(int(b) * wi for b, wi in zip(x, w)) % m


def class_oracle(n: int, w, m: int, s: int) -> list[str]:
    return [
        "".join(bits)
        for bits in itertools.product("01", repeat=n)
        if residue_oracle(w, "".join(bits), m) == s
    ]


def min_distance_oracle(strings) -> float:
    strings = list(strings)
    best = float("inf")
    for a, b in itertools.combinations(strings, 2):
        best = min(best, sum(c != d for c, d in zip(a, b)))
    return best


def _gauss_solve(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Unique solution of a square-or-tall full-column-rank system, else None."""
    rows, cols = len(A), len(A[0]) if A else 0
    M = [list(r) + [v] for r, v in zip(A, b)]
    piv_row = 0
    pivots = []
    for c in range(cols):
        p = next((r for r in range(piv_row, rows) if M[r][c] != 0), None)
        if p is None:
            return None
        M[piv_row], M[p] = M[p], M[piv_row]
        inv = 1 / M[piv_row][c]
        M[piv_row] = [v * inv for v in M[piv_row]]
        for r in range(rows):
            if r != piv_row and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * bb for a, bb in zip(M[r], M[piv_row])]
        pivots.append(c)
        piv_row += 1
    if any(M[r][-1] != 0 for r in range(piv_row, rows)):
        return None
    return [M[i][-1] for i in range(cols)]


def hulls_intersect(blocks: list[list[str]]) -> bool:
    """Exact test for a common point of the sign-vector hulls of every block.

    Enumerates every subset of support strings, solves the matching and
    normalization equations restricted to it with plain Fraction elimination, and
    accepts a nonnegative unique solution.  By the fundamental theorem of linear
    programming a feasible system has such a basic solution.
    """
    n = len(blocks[0][0])
    cols = [(j, x) for j, blk in enumerate(blocks) for x in blk]
    K = len(blocks)

    def column(j, x):
        sgn = [1 - 2 * int(c) for c in x]
        out = []
        for jj in range(1, K):
            for i in range(n):
                out.append(Fraction(sgn[i] if j == 0 else (-sgn[i] if j == jj else 0)))
        out += [Fraction(1 if j == jj else 0) for jj in range(K)]
        return out

    colvec = {c: column(*c) for c in cols}
    b = [Fraction(0)] * ((K - 1) * n) + [Fraction(1)] * K
    for size in range(1, len(cols) + 1):
        for subset in itertools.combinations(cols, size):
            A = [[colvec[c][r] for c in subset] for r in range(len(b))]
            x = _gauss_solve(A, b)
            if x is not None and all(v >= 0 for v in x):
                return True
    return False
