"""``galcovers`` command line.

    galcovers verify-tables [--case C4] [--format pretty|json]
    galcovers family --case C2 --n 5 --count 10 [--format json|csv|pretty]
    galcovers classgroup --case D3 --y 199 --n 5 --expect-rank-ge 5
    galcovers classgroup --poly 1,3,24829767,49659529,24829767,3,1 --n 42 --expect-rank 5

Exit status: 0 pass, 1 a check failed, 2 configuration or environment error.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from . import fieldlab
from .cas import CasError, CasMissing, resolve_cas
from .catalog import CASE_IDS
from .cover import factored_layout
from .poly import Polynomial, format_poly
from .selmer import ConditionError, case_conditions
from .verify import run_table_checks

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(ValueError):
    pass


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        lo, sep, hi = text.partition("-")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise ConfigError(f"--range: expected LO:HI, got {text!r}") from None
    if lo_i < 1 or hi_i < lo_i:
        raise ConfigError(f"--range: empty or invalid range {text!r}")
    return lo_i, hi_i


def cmd_verify_tables(args) -> int:
    cases = [args.case] if args.case else None
    results = run_table_checks(cases)
    failed = [r for r in results if not r.passed]
    with _output(args.out) as fh:
        if args.format == "json":
            json.dump([r.to_dict() for r in results], fh, indent=1)
            fh.write("\n")
        elif args.format == "csv":
            fh.write("case,check,passed,detail\n")
            for r in results:
                fh.write(f"{r.case_id},{r.name},{str(r.passed).lower()},\"{r.detail}\"\n")
        else:
            for r in results:
                fh.write(r.line() + "\n")
    print(f"# {len(results) - len(failed)}/{len(results)} checks passed", file=sys.stderr)
    for r in failed:
        print(f"# FAILED: {r.case_id} {r.name}: {r.detail}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def _pretty(c: fieldlab.FieldCandidate) -> str:
    sig = "-" if c.signature is None else f"({c.signature.r1},{c.signature.r2})"
    bad = [k for k, v in c.checks.items() if v is False]
    unk = [k for k, v in c.checks.items() if v is None]
    status = "pass" if not bad else "FAIL " + ",".join(bad)
    if unk:
        status += f" (n/a: {','.join(unk)})"
    return (f"{c.case_id} y={c.y} n={c.n}\n"
            f"  {factored_layout(c.case_id, c.y ** c.n)}\n"
            f"  = {format_poly(c.poly)}\n"
            f"  signature {sig}  disc_bits {c.disc_bits}  {status}")


def cmd_family(args) -> int:
    cond = case_conditions(args.case)
    if not cond.n_ok(args.n):
        raise ConfigError(f"--n: n={args.n} must be coprime to {cond.n_coprime_to} for {args.case}")
    if args.parallel < 1:
        raise ConfigError("--parallel must be at least 1")
    start, stop, count = args.start_y, None, args.count
    if args.range:
        lo, hi = _parse_range(args.range)
        start, stop = max(lo, start), hi + 1
    elif count is None:
        count = 10
    if count is not None and count < 0:
        raise ConfigError("--count must be non-negative")
    cas = None
    if args.cas_path:
        cas = resolve_cas(args.cas_path, log_dir=args.log_dir)
    cands = fieldlab.family(args.case, args.n, count=count, start_y=start, stop_y=stop,
                            parallel=args.parallel, cas=cas)
    seen = []

    def tee(it):
        for c in it:
            seen.append(c)
            yield c

    with _output(args.out) as fh:
        if args.format == "json":
            fieldlab.write_jsonl(tee(cands), fh)
        elif args.format == "csv":
            fieldlab.write_csv(tee(cands), fh)
        else:
            for c in tee(cands):
                fh.write(_pretty(c) + "\n")
    npass = sum(c.all_checks_pass for c in seen)
    broken = [c for c in seen if not c.structural_ok]
    reducible = sum(c.checks.get("irreducible") is False for c in seen)
    print(f"# {args.case} n={args.n}: {len(seen)} candidates, {npass} pass all checks, "
          f"{reducible} reducible, {len(broken)} structural failures", file=sys.stderr)
    return EXIT_FAIL if broken else EXIT_OK


def _parse_poly(text: str) -> Polynomial:
    try:
        hi_first = [int(c) for c in text.replace(" ", "").split(",") if c]
    except ValueError:
        raise ConfigError(f"--poly: expected comma separated integers, got {text!r}") from None
    P = Polynomial(reversed(hi_first))
    if P.degree < 1:
        raise ConfigError("--poly: degree must be at least 1")
    return P


def cmd_classgroup(args) -> int:
    if args.poly:
        P = _parse_poly(args.poly)
        label = "polynomial"
    else:
        if not (args.case and args.y):
            raise ConfigError("give either --poly or --case with --y and --n")
        if args.subfield is not None:
            polys = fieldlab.subfield_polynomials(args.case, args.y, args.n)
            if not 1 <= args.subfield <= len(polys):
                raise ConfigError(f"--subfield: {args.case} has subfields 1..{len(polys)}")
            P = polys[args.subfield - 1]
            if not P.is_integral():
                raise ConfigError("subfield polynomial is not integral at this y")
            P = Polynomial(int(c) for c in P.coeffs)
            label = f"{args.case} subfield {args.subfield} at y={args.y}, n={args.n}"
        else:
            P = fieldlab.specialize(args.case, args.y, args.n, checks=False).poly
            label = f"{args.case} at y={args.y}, n={args.n}"
    cas = resolve_cas(args.cas_path, log_dir=args.log_dir, timeout=args.timeout)
    rep = fieldlab.cas_classgroup(P, cas, n=args.n, rigor=args.rigor)
    out = {
        "field": label,
        "poly": format_poly(P),
        "class_group_invariants": rep.class_group_invariants,
        "n": args.n,
        "computed_rank_n": rep.computed_rank_n,
        "certified": rep.certified,
        "tool_version": rep.tool_version,
        "cas": cas.source,
    }
    status = EXIT_OK
    if args.expect_rank is not None and rep.computed_rank_n != args.expect_rank:
        status = EXIT_FAIL
    if args.expect_rank_ge is not None and (rep.computed_rank_n or 0) < args.expect_rank_ge:
        status = EXIT_FAIL
    with _output(args.out) as fh:
        if args.format == "json":
            json.dump(out, fh)
            fh.write("\n")
        else:
            for k, v in out.items():
                fh.write(f"{k}: {v}\n")
    if rep.transcript:
        print(f"# transcript: {rep.transcript}", file=sys.stderr)
    verdict = "pass" if status == EXIT_OK else "FAIL"
    print(f"# {args.n}-rank {rep.computed_rank_n}: {verdict}", file=sys.stderr)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="galcovers", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify-tables", help="run every exact check of the published constructions")
    v.add_argument("--case", choices=CASE_IDS)
    v.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    v.add_argument("--out", metavar="FILE")
    v.set_defaults(func=cmd_verify_tables)

    f = sub.add_parser("family", help="scan admissible y for one case")
    f.add_argument("--case", choices=CASE_IDS, required=True)
    f.add_argument("--n", type=int, required=True)
    grp = f.add_mutually_exclusive_group()
    grp.add_argument("--count", type=int, help="number of admissible y (default 10)")
    grp.add_argument("--range", metavar="LO:HI", help="inclusive range of y")
    f.add_argument("--start-y", type=int, default=1)
    f.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    f.add_argument("--out", metavar="FILE")
    f.add_argument("--parallel", type=int, default=1)
    f.add_argument("--cas-path", help="use this CAS for inconclusive irreducibility tests")
    f.add_argument("--log-dir")
    f.set_defaults(func=cmd_family)

    c = sub.add_parser("classgroup", help="class group through the external CAS")
    c.add_argument("--poly", help="integer coefficients, highest degree first")
    c.add_argument("--case", choices=CASE_IDS)
    c.add_argument("--y", type=int)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--subfield", type=int, help="use the k-th tabulated subfield (D2, D3)")
    c.add_argument("--expect-rank", type=int)
    c.add_argument("--expect-rank-ge", type=int)
    c.add_argument("--rigor", action="store_true", help="certify the class group (slow)")
    c.add_argument("--cas-path")
    c.add_argument("--log-dir")
    c.add_argument("--timeout", type=float)
    c.add_argument("--format", choices=("json", "pretty"), default="pretty")
    c.add_argument("--out", metavar="FILE")
    c.set_defaults(func=cmd_classgroup)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ConditionError, ValueError) as e:
        print(f"galcovers: error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except CasMissing as e:
        print(f"galcovers: CAS unavailable: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except CasError as e:
        print(f"galcovers: CAS failure: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
