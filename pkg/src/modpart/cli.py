"""``modpart`` command line.

Exit codes: 0 when every checked cell agrees, 1 on any mismatch, 2 on bad
usage (argparse errors and rejected parameters alike).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .cache import ScanCache, ScanRecord
from .closed_forms import Family, TermSpec, factorized_Q_generator, lemma_term, pure_type_generator
from .errors import ModpartError
from .partitions import (
    Constraint,
    alt_sum_type,
    is_mixed,
    length_type,
    partitions_up_to,
)
from .qdiff import (
    A_series_list,
    P_series,
    P_series_by_enumeration,
    check_limit_identity,
    count_by_enumeration,
    count_by_recurrence,
    table_to_series,
)
from .qseries import TruncatedSeries
from .report import CellResult, VerificationReport
from .verifier import FAMILIES, build_tables, verify_conjecture, verify_rr_companions, witnesses

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2



class UsageError(Exception):
    pass


def _modulus(text: str) -> int:
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if m < 2:
        raise argparse.ArgumentTypeError(f"modulus must be at least 2, got {m}")
    return m


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _write_json(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# verify


def _verify_one(m: int, n: int, family: str) -> list[CellResult]:
    return verify_conjecture(m, n, ns=[n], family=family).cells


def cmd_verify(args) -> int:
    m, max_n, family = args.modulus, args.max_n, args.types
    flags = {"types": family}
    cache = ScanCache() if args.resume or args.cache else None
    start = time.perf_counter()
    todo, cached = [], []
    for n in range(1, max_n + 1):
        if args.resume and cache.is_verified(m, n, flags, __version__):
            cached.append(n)
        else:
            todo.append(n)

    by_n: dict[int, list[CellResult]] = {}
    if args.jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = {n: pool.submit(_verify_one, m, n, family) for n in todo}
            for n, fut in futures.items():
                by_n[n] = fut.result()
    else:
        for n in todo:
            by_n[n] = _verify_one(m, n, family)

    cells = [c for n in sorted(by_n) for c in by_n[n]]
    if cache is not None:
        cache.append(ScanRecord.make(m, n, by_n[n], flags, __version__) for n in sorted(by_n))
    report = VerificationReport(
        name="conjecture",
        m=m,
        n_range=(1, max_n),
        cells=cells,
        flags=dict(flags, cached_n=cached, version=__version__),
        seconds=time.perf_counter() - start,
    )
    _write_json(report.to_dict(timing=not args.no_timing), args.out)
    print(report.summary() + (f" ({len(cached)} n skipped from cache)" if cached else ""),
          file=sys.stderr if not args.out else sys.stdout)
    return EXIT_OK if report.verified else EXIT_MISMATCH


# --------------------------------------------------------------------------
# table


def _type_str(t) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def cmd_table(args) -> int:
    m, n = args.modulus, args.n
    p, q = build_tables(m, n, [n])
    types = sorted(p.types_at(n) | q.types_at(n))
    if args.mixed_only:
        types = [t for t in types if is_mixed(t)]
    ok = True
    for t in types:
        a, b = p.get(t, n), q.get(t, n)
        ok &= a == b
        w = witnesses(m, t, n)
        mark = "" if a == b else "  MISMATCH"
        print(f"{_type_str(t)}  P:{a}  Q:{b}{mark}")
        print(f"    P-side: {', '.join(w['p_side']) or '-'}")
        print(f"    Q-side: {', '.join(w['q_side']) or '-'}")
    return EXIT_OK if ok else EXIT_MISMATCH


# --------------------------------------------------------------------------
# series


def _enumerated_series(m: int, trunc: int, side: str) -> TruncatedSeries:
    if side == "p":
        parts, key = partitions_up_to(trunc, Constraint.max_repeat(m - 1)), alt_sum_type
    else:
        parts, key = partitions_up_to(trunc, Constraint.no_parts_divisible_by(m)), length_type
    acc: dict = {}
    for lam in parts:
        k = (key(lam, m), lam.weight)
        acc[k] = acc.get(k, 0) + 1
    return TruncatedSeries(acc, m - 1, trunc)


def _parse_lemma(which: str) -> TermSpec:
    try:
        _, fam, n, idx = which.split(":")
        return TermSpec(Family[fam.upper()], int(n), int(idx))
    except (ValueError, KeyError):
        raise UsageError(
            f"bad lemma selector {which!r}; use lemma:FAMILY:n:index with FAMILY in "
            + ",".join(f.name for f in Family)
        ) from None


def cmd_series(args) -> int:
    m, trunc, which = args.modulus, args.trunc, args.which
    if which in ("p", "q"):
        s = _enumerated_series(m, trunc, which)
    elif which == "factorized":
        s = factorized_Q_generator(m, trunc)
    elif which == "pure":
        s = pure_type_generator(m, None, trunc)
    elif which.startswith("lemma:"):
        s = lemma_term(_parse_lemma(which), trunc)
    else:
        raise UsageError(f"unknown --which {which!r}")
    out = s.dump()
    if out:
        print(out)
    return EXIT_OK


# --------------------------------------------------------------------------
# qdiff


def cmd_qdiff(args) -> int:
    L, trunc = args.max_length, args.trunc
    checks: list[tuple[str, bool]] = []
    rec = count_by_recurrence(L, trunc)
    enum = count_by_enumeration(L, trunc)
    checks.append(("fixed-length counts: recurrence == enumeration", rec == enum))
    a_list = A_series_list(L, trunc)
    checks.append(("A_L series == fixed-length tables",
                   all(a_list[k] == table_to_series(enum, k) for k in range(L + 1))))
    checks.append(("P_N recurrences == enumeration", P_series(L, trunc).series == P_series_by_enumeration(L, trunc)))
    limit = check_limit_identity(trunc, max(L, trunc))
    checks.append(("limit of P_N == Q length-type series", limit.verified))
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    print(f"info  literal fixed-point form holds: {limit.flags['literal_fixed_point_holds']}")
    if args.cell:
        s1, s2, n = args.cell
        full = count_by_recurrence(max(n, L), max(n, trunc))
        print(f"cell (({s1},{s2}),{n}) = {full.total(s1, s2, n)}")
    if args.out:
        payload = limit.to_dict(timing=not args.no_timing)
        payload["checks"] = {name: ok for name, ok in checks}
        _write_json(payload, args.out)
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_MISMATCH


# --------------------------------------------------------------------------
# rrag


def cmd_rrag(args) -> int:
    d, i = args.d, args.i
    if d < 1:
        raise UsageError(f"--d must be at least 1, got {d}")
    if not 1 <= i <= 2 * d:
        raise UsageError(f"--i must lie in 1..{2 * d}, got {i}")
    rep = verify_rr_companions(d, i, args.max_n, args.ag_interpretation, args.witnesses)
    for c in rep.cells:
        print(f"n={c.n:<3} types={c.p_count:<5} gap={c.q_count:<5} {'PASS' if c.status == 'verified' else 'FAIL'}")
        if args.witnesses and c.witnesses:
            print(f"    types: {', '.join(c.witnesses['p_side']) or '-'}")
            print(f"    gap:   {', '.join(c.witnesses['q_side']) or '-'}")
    if args.out:
        _write_json(rep.to_dict(timing=not args.no_timing), args.out)
    return EXIT_OK if rep.verified else EXIT_MISMATCH


# --------------------------------------------------------------------------


def _cell(text: str) -> tuple[int, int, int]:
    try:
        a, b, c = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected s1,s2,n") from None
    return a, b, c


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="modpart", description="Partition type identities: enumeration and series checks.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="compare P and Q type tables cell by cell")
    v.add_argument("--modulus", type=_modulus, required=True)
    v.add_argument("--max-n", type=_nonneg, required=True)
    v.add_argument("--types", choices=sorted(FAMILIES), default="all")
    v.add_argument("--out")
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--resume", action="store_true", help="skip n already verified in the scan cache")
    v.add_argument("--cache", action="store_true", help="record results in the scan cache without skipping")
    v.add_argument("--no-timing", action="store_true", help="omit timing fields from the report")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="list partitions of n on both sides by type")
    t.add_argument("--modulus", type=_modulus, required=True)
    t.add_argument("--n", type=_nonneg, required=True)
    t.add_argument("--mixed-only", action="store_true")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("series", help="dump a truncated generating series")
    s.add_argument("--modulus", type=_modulus, default=3)
    s.add_argument("--trunc", type=_nonneg, required=True)
    s.add_argument("--which", required=True, help="p | q | factorized | pure | lemma:FAMILY:n:index")
    s.set_defaults(func=cmd_series)

    q = sub.add_parser("qdiff", help="modulus-3 recurrence and q-difference checks")
    q.add_argument("--max-length", type=_nonneg, required=True)
    q.add_argument("--trunc", type=_nonneg, required=True)
    q.add_argument("--cell", type=_cell, help="print a(s1,s2;n) summed over lengths")
    q.add_argument("--out")
    q.add_argument("--no-timing", action="store_true")
    q.set_defaults(func=cmd_qdiff)

    r = sub.add_parser("rrag", help="gap-condition companions for modulus 2d+1")
    r.add_argument("--d", type=_positive, required=True)
    r.add_argument("--i", type=_positive, required=True)
    r.add_argument("--max-n", type=_nonneg, required=True)
    r.add_argument("--ag-interpretation", choices=("standard", "literal"), default="standard")
    r.add_argument("--witnesses", action="store_true")
    r.add_argument("--out")
    r.add_argument("--no-timing", action="store_true")
    r.set_defaults(func=cmd_rrag)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ModpartError) as exc:
        ap.print_usage(sys.stderr)
        print(f"modpart: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
