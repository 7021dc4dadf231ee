"""``sslp`` command-line interface.

Exit status: 0 on success, 1 when a verification flags a record, 2 on usage
or input errors.  Human-readable text goes to stdout; machine records only go
to ``--out`` files.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from collections.abc import Sequence
from fractions import Fraction

from . import __version__
from .audit import AuditConfig, AuditReport, UnsupportedPhase, full_audit, kl_check, transversal_check
from .bitspace import SearchParams
from .catalog import CatalogError, CodeRecord, read_catalog, write_catalog
from .codes import EigenoperatorViolation, LogicalCode, assemble, logical_order, transversal_action, z_expectations
from .families import (
    EvenParityFamilySpec,
    ExtremaFamilySpec,
    FamilySpecError,
    build_642_code,
    build_even_parity_code,
    build_extrema_code,
)
from .sweep import (
    AuditSummary,
    FlaggedRecord,
    HitRecord,
    SweepConfig,
    default_jobs,
    max_order_summary,
    order_counts,
    sweep_with_flags,
)

OK, FLAGGED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse already exits 2; keep the message short
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _describe(p: SearchParams) -> str:
    return f"n={p.n} K={p.K} m={p.m} w={p.w} S={p.S}"


def _audit(code: LogicalCode, mode: str) -> AuditReport:
    if mode == "both":
        return full_audit(code)
    cfg = AuditConfig(mode=mode)
    return kl_check(code, cfg).merge(transversal_check(code, cfg))


def _gate(code: LogicalCode) -> str:
    try:
        return transversal_action(code).describe()
    except EigenoperatorViolation as exc:
        return f"none ({exc})"


# ---------------------------------------------------------------------------
# sweep


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        config = SweepConfig(
            n=args.n,
            K=args.k,
            m_min=args.m_min,
            m_max=args.m_max,
            coprime_filter=args.coprime,
            require_exact_distance_2=not args.allow_larger_distance,
            denominator_bound=args.denom_bound,
            solver=args.solver,
            jobs=args.jobs if args.jobs is not None else default_jobs(),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = sweep_with_flags(config)
    if args.out:
        write_catalog([*result.hits, *result.flagged], args.out)
    print(f"sweep n={config.n} K={config.K} m in [{config.m_min}, {config.m_max}] jobs={config.jobs}")
    print(f"candidates: {result.stats.get('candidates', 0)}  hits: {len(result.hits)}  flagged: {len(result.flagged)}")
    rejected = {k: v for k, v in sorted(result.stats.items()) if k not in ("candidates", "hits", "flagged")}
    if rejected:
        print("rejections: " + ", ".join(f"{k}={v}" for k, v in rejected.items()))
    print("hits per order:")
    for order, count in order_counts(result.hits).items():
        print(f"  order {order:3d}: {count}")
    for (n, K), best in max_order_summary(result.hits).items():
        print(f"max order (n={n}, K={K}): {best}")
    if args.out:
        print(f"catalog written to {args.out}")
    return OK


# ---------------------------------------------------------------------------
# verify


def _verify_record(record, mode: str) -> tuple[bool, str]:
    if isinstance(record, FlaggedRecord):
        return True, f"skipped (flagged at stage {record.stage}: {record.reason})"
    problems = []
    if isinstance(record, HitRecord):
        p = record.params
        try:
            code = assemble(p, record.probabilities)
        except ValueError as exc:
            return False, f"flag: cannot assemble ({exc})"
        zs = z_expectations(code)
        if any(z != tuple(record.z_expectations) for z in zs):
            problems.append("recorded z-expectations disagree with the probabilities")
    else:
        code = record.code
        p = code.params
    if record.order != logical_order(p.m, p.S):
        problems.append(f"recorded order {record.order} != {logical_order(p.m, p.S)}")
    try:
        report = _audit(code, mode)
    except UnsupportedPhase as exc:
        return False, f"flag: {exc}"
    if not report.passed:
        problems.append(f"{len(report.failures())} audit check(s) failed, first: {report.failures()[0]}")
    if problems:
        return False, "flag: " + "; ".join(problems)
    return True, f"accept  order {logical_order(p.m, p.S)}  gate {_gate(code)}"


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        records = read_catalog(args.input)
    except (OSError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    failures = 0
    for i, record in enumerate(records, start=1):
        ok, message = _verify_record(record, args.mode)
        failures += not ok
        print(f"[{i}] {type(record).__name__[:-6].lower()} {_describe(record.params)}: {message}")
    print(f"{len(records)} record(s), {failures} flagged (mode {args.mode})")
    return FLAGGED if failures else OK


# ---------------------------------------------------------------------------
# family


def _load_even_parity_spec(path: str) -> EvenParityFamilySpec:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg})") from exc
    if not isinstance(obj, dict) or not {"n", "m", "w", "S"} <= set(obj):
        raise UsageError(f"{path}: expected an object with keys n, m, w, S")
    return EvenParityFamilySpec(obj["n"], obj["m"], tuple(obj["w"]), tuple(obj["S"]))


def cmd_family(args: argparse.Namespace) -> int:
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            if args.family == "extrema":
                code = build_extrema_code(ExtremaFamilySpec(args.n, args.m, args.s))
                label = f"extrema n={args.n} m={args.m} s={args.s}"
            elif args.family == "even-parity":
                code = build_even_parity_code(_load_even_parity_spec(args.spec_file))
                label = "even-parity"
            else:
                code = build_642_code()
                label = "c642"
    except (FamilySpecError, TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    report = full_audit(code)
    p = code.params
    print(f"{label}: {_describe(p)}")
    print(f"class sizes: {[len(s) for s in code.states]}")
    zs = z_expectations(code)
    if all(z == zs[0] for z in zs):
        print("<Z_i>: " + ", ".join(str(t) for t in zs[0]))
    print(f"gate: {_gate(code)}  order {logical_order(p.m, p.S)}")
    print(report.summary())
    if args.out:
        write_catalog([CodeRecord(code, label, AuditSummary.from_report(report))], args.out)
        print(f"code record written to {args.out}")
    return OK if report.passed else FLAGGED


# ---------------------------------------------------------------------------
# show / summarize


def _show(record) -> list[str]:
    p = record.params
    head = f"{type(record).__name__}: {_describe(p)}"
    if isinstance(record, FlaggedRecord):
        return [head, f"  stage {record.stage}: {record.reason}"]
    lines = [head, f"  order {record.order}"]
    if isinstance(record, HitRecord):
        lines.append(f"  class sizes {list(record.class_sizes)}  distance {record.distance}")
        lines.append("  <Z_i> " + ", ".join(str(t) for t in record.z_expectations))
        for j, block in enumerate(record.probabilities.blocks):
            lines.append(f"  |{j}_L>: " + "  ".join(f"{x}:{str(v)}" for x, v in block.items()))
    else:
        if record.label:
            lines.append(f"  label {record.label}")
        for j, state in enumerate(record.code.states):
            terms = []
            for x, a in state.items():
                sign = {Fraction(0): "+", Fraction(1, 2): "-", Fraction(1, 4): "+i", Fraction(3, 4): "-i"}.get(
                    a.phase, f"e^(2pi i {a.phase})"
                )
                terms.append(f"{sign}sqrt({str(a.radicand)})|{x}>")
            lines.append(f"  |{j}_L> = " + " ".join(terms))
    if record.audit is not None:
        lines.append(f"  audit {record.audit.verdict} ({', '.join(record.audit.modes)})")
    return lines


def _read_many(paths: Sequence[str]) -> list:
    out = []
    for path in paths:
        out += read_catalog(path)
    return out


def cmd_show(args: argparse.Namespace) -> int:
    try:
        records = _read_many(args.input)
    except (OSError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    for i, record in enumerate(records, start=1):
        if args.index is not None and i != args.index:
            continue
        print(f"[{i}] " + "\n".join(_show(record)))
    if args.index is not None and not 1 <= args.index <= len(records):
        print(f"error: no record {args.index} (catalog has {len(records)})", file=sys.stderr)
        return USAGE
    return OK


def cmd_summarize(args: argparse.Namespace) -> int:
    try:
        records = _read_many(args.input)
    except (OSError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    hits = [r for r in records if isinstance(r, HitRecord)]
    codes = [r for r in records if isinstance(r, CodeRecord)]
    flagged = [r for r in records if isinstance(r, FlaggedRecord)]
    print(f"{len(hits)} hit(s), {len(codes)} code(s), {len(flagged)} flagged")
    for (n, K), best in max_order_summary(hits).items():
        group = [h for h in hits if (h.params.n, h.params.K) == (n, K)]
        counts = ", ".join(f"{o}:{c}" for o, c in order_counts(group).items())
        print(f"n={n} K={K}: max order {best}; per order {counts}")
    return OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sslp", description="Subset-sum LP search and exact audit of small quantum codes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sweep", help="enumerate (m, w, S), solve and audit")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--m-min", type=int, required=True)
    s.add_argument("--m-max", type=int, required=True)
    s.add_argument("--coprime", action="store_true", help="require gcd(m, S) = 1")
    s.add_argument("--allow-larger-distance", action="store_true", help="accept d(C) >= 2 instead of exactly 2")
    s.add_argument("--solver", choices=("exact", "float"), default="exact",
                   help="exact simplex, or float LP followed by exact vertex reconstruction")
    s.add_argument("--denom-bound", type=int, default=None, help="denominator bound for --solver float")
    s.add_argument("--jobs", type=int, default=None, help="worker processes (default: available CPUs)")
    s.add_argument("--out", help="catalog file to write")
    s.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify", help="re-audit every record of a catalog")
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("--mode", choices=("float", "rational", "both"), default="both")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("family", help="build a closed-form code")
    fam = f.add_subparsers(dest="family", required=True, parser_class=_Parser)
    e = fam.add_parser("extrema")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--s", type=int, required=True)
    ep = fam.add_parser("even-parity")
    ep.add_argument("--spec-file", required=True, help='JSON object {"n": .., "m": .., "w": [..], "S": [..]}')
    fam.add_parser("c642")
    for p in (e, ep, fam.choices["c642"]):
        p.add_argument("--out", help="write the code record here")
    f.set_defaults(func=cmd_family)

    sh = sub.add_parser("show", help="print catalog records")
    sh.add_argument("--in", dest="input", nargs="+", required=True)
    sh.add_argument("--index", type=int, default=None, help="1-based record to show")
    sh.set_defaults(func=cmd_show)

    su = sub.add_parser("summarize", help="order statistics of catalogs")
    su.add_argument("--in", dest="input", nargs="+", required=True)
    su.set_defaults(func=cmd_summarize)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sslp {args.command}: error: {exc}", file=sys.stderr)
        return USAGE
    except CatalogError as exc:
        print(f"sslp {args.command}: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
