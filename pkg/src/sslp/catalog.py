"""Line-oriented JSON catalog of hits, constructed codes and flagged candidates.

Each line is one JSON object whose keys always appear in the order
``schema_version, kind, n, K, m, w, S, classes, probabilities, z_expectations,
order, audit`` followed by kind-specific extras.  Rationals are ``"num/den"``
strings, bit strings are ASCII, amplitudes are ``{"phase": "a/b", "radicand":
"num/den"}``.  No floating-point value is ever written.
"""

from __future__ import annotations

import io
import json
import math
import os
import warnings
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Union

from .bitspace import BitString, SearchParams, residues
from .codes import Amplitude, LogicalCode, logical_order, z_expectations
from .exactnum import format_rational, parse_rational
from .sweep import AuditSummary, FlaggedRecord, HitRecord
from .zfeas import ProbabilityTable

SCHEMA_VERSION = 1
KINDS = ("hit", "code", "flagged")
COMMON_KEYS = (
    "schema_version",
    "kind",
    "n",
    "K",
    "m",
    "w",
    "S",
    "classes",
    "probabilities",
    "z_expectations",
    "order",
    "audit",
)
EXTRA_KEYS = {
    "hit": ("distance", "scaling_representative"),
    "code": ("label", "states"),
    "flagged": ("stage", "reason"),
}


class CatalogError(ValueError):
    """Malformed catalog content or a failed write; carries the line or record index."""

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class DuplicateRecordWarning(UserWarning):
    pass


@dataclass(frozen=True)
class CodeRecord:
    """A constructed (not searched) code with an optional audit verdict."""

    code: LogicalCode
    label: str = ""
    audit: AuditSummary | None = None

    @property
    def params(self) -> SearchParams:
        return self.code.params

    @property
    def order(self) -> int:
        return logical_order(self.params.m, self.params.S)

    @property
    def dedup_key(self) -> tuple:
        p = self.params
        return (p.n, p.K, p.m, tuple(sorted(p.w)), tuple(sorted(p.S)))


Record = Union[HitRecord, CodeRecord, FlaggedRecord]


# ---------------------------------------------------------------------------
# rendering


def _class_sizes(params: SearchParams) -> list[int]:
    res = residues(params.w, params.m)
    return [int((res == s).sum()) for s in params.S]


def _block(d: dict[BitString, Fraction]) -> list[list[str]]:
    return [[str(x), format_rational(p)] for x, p in d.items()]


def _audit(a: AuditSummary | None) -> dict | None:
    if a is None:
        return None
    return {
        "verdict": a.verdict,
        "modes": list(a.modes),
        "kl_checks": a.kl_checks,
        "transversal_checks": a.transversal_checks,
    }


def _header(kind: str, p: SearchParams) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "n": p.n,
        "K": p.K,
        "m": p.m,
        "w": list(p.w),
        "S": list(p.S),
    }


def to_dict(record: Record) -> dict:
    if isinstance(record, HitRecord):
        out = _header("hit", record.params)
        out["classes"] = list(record.class_sizes)
        out["probabilities"] = [_block(b) for b in record.probabilities.blocks]
        out["z_expectations"] = [format_rational(t) for t in record.z_expectations]
        out["order"] = record.order
        out["audit"] = _audit(record.audit)
        out["distance"] = "inf" if record.distance == math.inf else int(record.distance)
        rep = record.scaling_representative
        out["scaling_representative"] = None if rep is None else {"w": list(rep[0]), "S": list(rep[1])}
        return out
    if isinstance(record, CodeRecord):
        code = record.code
        out = _header("code", code.params)
        out["classes"] = _class_sizes(code.params)
        out["probabilities"] = [_block({x: a.radicand for x, a in st.items()}) for st in code.states]
        out["z_expectations"] = [[format_rational(t) for t in row] for row in z_expectations(code)]
        out["order"] = record.order
        out["audit"] = _audit(record.audit)
        out["label"] = record.label
        out["states"] = [
            [
                [str(x), {"phase": format_rational(a.phase), "radicand": format_rational(a.radicand)}]
                for x, a in st.items()
            ]
            for st in code.states
        ]
        return out
    if isinstance(record, FlaggedRecord):
        out = _header("flagged", record.params)
        out.update(
            classes=_class_sizes(record.params),
            probabilities=None,
            z_expectations=None,
            order=logical_order(record.params.m, record.params.S),
            audit=None,
            stage=record.stage,
            reason=record.reason,
        )
        return out
    raise TypeError(f"cannot serialize {type(record).__name__}")


def render(record: Record) -> str:
    return json.dumps(to_dict(record), ensure_ascii=True, separators=(", ", ": "))


def write_catalog(records: Iterable[Record], destination: str | os.PathLike | IO[str]) -> int:
    """Write one record per line; returns the number written."""
    if isinstance(destination, (str, os.PathLike)):
        try:
            with open(destination, "w", encoding="utf-8", newline="\n") as fh:
                return write_catalog(records, fh)
        except OSError as exc:
            raise CatalogError(f"cannot write {destination}: {exc}") from exc
    count = 0
    for i, record in enumerate(records):
        try:
            line = render(record)
        except (TypeError, ValueError) as exc:
            raise CatalogError(f"record {i}: {exc}") from exc
        try:
            destination.write(line + "\n")
        except OSError as exc:
            raise CatalogError(f"record {i}: write failed: {exc}") from exc
        count += 1
    return count


# ---------------------------------------------------------------------------
# parsing


def _expect(cond: bool, msg: str, line: int) -> None:
    if not cond:
        raise CatalogError(msg, line)


def _int_list(v, name: str, line: int) -> tuple[int, ...]:
    _expect(
        isinstance(v, list) and all(isinstance(a, int) and not isinstance(a, bool) for a in v),
        f"{name} must be a list of integers",
        line,
    )
    return tuple(v)


def _rational(text, line: int) -> Fraction:
    _expect(isinstance(text, str), f"expected a rational string, got {text!r}", line)
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise CatalogError(str(exc), line) from exc


def _bits(text, n: int, line: int) -> BitString:
    _expect(isinstance(text, str), f"expected a bit string, got {text!r}", line)
    try:
        x = BitString.parse(text)
    except ValueError as exc:
        raise CatalogError(str(exc), line) from exc
    _expect(x.n == n, f"bit string {text} does not have length {n}", line)
    return x


def _blocks(v, K: int, n: int, line: int) -> list[dict[BitString, Fraction]]:
    _expect(isinstance(v, list) and len(v) == K, f"expected {K} probability blocks", line)
    out = []
    for block in v:
        _expect(isinstance(block, list), "probability block must be a list", line)
        d: dict[BitString, Fraction] = {}
        for pair in block:
            _expect(isinstance(pair, list) and len(pair) == 2, "probability entry must be [bits, p]", line)
            x = _bits(pair[0], n, line)
            _expect(x not in d, f"string {x} repeated in a block", line)
            d[x] = _rational(pair[1], line)
            _expect(d[x] >= 0, f"negative probability {d[x]} for {x}", line)
        out.append(d)
    return out


def _audit_from(v, line: int) -> AuditSummary | None:
    if v is None:
        return None
    _expect(isinstance(v, dict) and list(v) == ["verdict", "modes", "kl_checks", "transversal_checks"],
            "malformed audit summary", line)
    _expect(v["verdict"] in ("accept", "flag"), f"unknown verdict {v['verdict']!r}", line)
    _expect(isinstance(v["modes"], list) and all(isinstance(s, str) for s in v["modes"]), "bad modes", line)
    _expect(isinstance(v["kl_checks"], int) and isinstance(v["transversal_checks"], int), "bad counts", line)
    return AuditSummary(v["verdict"], tuple(v["modes"]), v["kl_checks"], v["transversal_checks"])


def from_dict(obj: dict, line: int = 0) -> Record:
    _expect(isinstance(obj, dict), "record must be a JSON object", line)
    _expect(obj.get("schema_version") == SCHEMA_VERSION,
            f"schema version {obj.get('schema_version')!r} is not {SCHEMA_VERSION}", line)
    kind = obj.get("kind")
    _expect(kind in KINDS, f"unknown record kind {kind!r}", line)
    expected = list(COMMON_KEYS + EXTRA_KEYS[kind])
    _expect(list(obj) == expected, f"keys {list(obj)} do not match schema {expected}", line)
    for key in ("n", "K", "m", "order"):
        _expect(isinstance(obj[key], int) and not isinstance(obj[key], bool), f"{key} must be an integer", line)
    try:
        params = SearchParams(
            obj["n"], obj["K"], obj["m"], _int_list(obj["w"], "w", line), _int_list(obj["S"], "S", line)
        )
    except ValueError as exc:
        raise CatalogError(f"invalid parameters: {exc}", line) from exc
    n, K = params.n, params.K
    classes = _int_list(obj["classes"], "classes", line)
    _expect(len(classes) == K, f"expected {K} class sizes", line)

    if kind == "flagged":
        _expect(obj["probabilities"] is None and obj["z_expectations"] is None and obj["audit"] is None,
                "flagged records carry no solution", line)
        _expect(isinstance(obj["stage"], str) and isinstance(obj["reason"], str), "bad stage/reason", line)
        return FlaggedRecord(params, obj["stage"], obj["reason"])

    audit = _audit_from(obj["audit"], line)
    if kind == "hit":
        blocks = _blocks(obj["probabilities"], K, n, line)
        z = obj["z_expectations"]
        _expect(isinstance(z, list) and len(z) == n, f"expected {n} z-expectations", line)
        dist = obj["distance"]
        _expect(dist == "inf" or (isinstance(dist, int) and dist >= 0), "bad distance", line)
        rep = obj["scaling_representative"]
        if rep is not None:
            _expect(isinstance(rep, dict) and list(rep) == ["w", "S"], "bad scaling representative", line)
            rep = (_int_list(rep["w"], "w", line), _int_list(rep["S"], "S", line))
        _expect(audit is not None, "hit records must carry an audit summary", line)
        return HitRecord(
            params,
            classes,
            ProbabilityTable(tuple(blocks)),
            tuple(_rational(t, line) for t in z),
            obj["order"],
            audit,
            math.inf if dist == "inf" else dist,
            rep,
        )

    states_raw = obj["states"]
    _expect(isinstance(states_raw, list) and len(states_raw) == K, f"expected {K} states", line)
    states = []
    for st in states_raw:
        _expect(isinstance(st, list), "state must be a list", line)
        d: dict[BitString, Amplitude] = {}
        for pair in st:
            _expect(isinstance(pair, list) and len(pair) == 2 and isinstance(pair[1], dict)
                    and list(pair[1]) == ["phase", "radicand"], "amplitude entry must be [bits, {phase, radicand}]", line)
            x = _bits(pair[0], n, line)
            _expect(x not in d, f"string {x} repeated in a state", line)
            phase = _rational(pair[1]["phase"], line)
            _expect(0 <= phase < 1, f"phase {phase} outside [0, 1)", line)
            try:
                d[x] = Amplitude(phase, _rational(pair[1]["radicand"], line))
            except ValueError as exc:
                raise CatalogError(str(exc), line) from exc
        states.append(d)
    _expect(isinstance(obj["label"], str), "label must be a string", line)
    return CodeRecord(LogicalCode(params, tuple(states)), obj["label"], audit)


def parse(line_text: str, line: int = 0) -> Record:
    try:
        obj = json.loads(line_text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"invalid JSON: {exc.msg}", line) from exc
    return from_dict(obj, line)


def read_catalog(source: str | os.PathLike | IO[str]) -> list[Record]:
    """Strict parse; the first malformed line aborts with its line number."""
    if isinstance(source, (str, os.PathLike)):
        try:
            fh = open(source, encoding="utf-8")
        except OSError as exc:
            raise CatalogError(f"cannot read {source}: {exc}") from exc
        with fh:
            return read_catalog(fh)
    records: list[Record] = []
    seen: dict[tuple, int] = {}
    for lineno, text in enumerate(source, start=1):
        if not text.strip():
            continue
        record = parse(text, lineno)
        records.append(record)
        if isinstance(record, (HitRecord, CodeRecord)):
            key = (type(record).__name__, record.dedup_key)
            if key in seen:
                warnings.warn(
                    f"line {lineno}: duplicate record {record.dedup_key} (first at line {seen[key]})",
                    DuplicateRecordWarning,
                    stacklevel=2,
                )
            else:
                seen[key] = lineno
    return records


def dumps(records: Iterable[Record]) -> str:
    buf = io.StringIO()
    write_catalog(records, buf)
    return buf.getvalue()


def loads(text: str) -> list[Record]:
    return read_catalog(io.StringIO(text))
