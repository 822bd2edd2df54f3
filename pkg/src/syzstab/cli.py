"""Command-line interface.

Exit codes: 0 Stable, 1 StrictlySemistable, 2 Unstable, 3 invalid input or
arguments, 4 refusal (no family exists / formulas excluded), 5 disagreement
(oracle mismatch, failed verification, sweep failures).
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .constructions import construct_family
from .criterion import Verdict, agree, classify, classify_bruteforce
from .errors import (
    BudgetExceeded,
    NoSemistableFamily,
    NotMPrimaryError,
    OracleLimitError,
    ParameterRangeError,
    ParseError,
    SubsetError,
    VerificationError,
)
from .formats import dump_json, family_dict, parse_family, to_json, to_text
from .harness import census, format_table, sweep
from .moduli import moduli_report

EXIT_STABLE, EXIT_SEMISTABLE, EXIT_UNSTABLE = 0, 1, 2
EXIT_INVALID, EXIT_REFUSED, EXIT_DISAGREE = 3, 4, 5

VERDICT_EXIT = {
    Verdict.STABLE: EXIT_STABLE,
    Verdict.STRICTLY_SEMISTABLE: EXIT_SEMISTABLE,
    Verdict.UNSTABLE: EXIT_UNSTABLE,
}


class ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def int_range(text):
    """Parse `a..b`, `a,b,c` or a single integer into a sorted list."""
    try:
        out = set()
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo, hi = int(lo), int(hi)
                if lo > hi:
                    raise ValueError
                out.update(range(lo, hi + 1))
            else:
                out.add(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}; use a..b, a,b,c or a single integer") from None
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError(f"range {text!r} must contain positive integers")
    return sorted(out)


def fail(message, code):
    print(f"error: {message}", file=sys.stderr)
    return code


def emit(text, out=None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args):
    try:
        res = construct_family(args.N, args.d, args.n, verify=not args.no_verify)
    except NoSemistableFamily as exc:
        return fail(str(exc), EXIT_REFUSED)
    except ParameterRangeError as exc:
        return fail(str(exc), EXIT_INVALID)
    except VerificationError as exc:
        return fail(str(exc), EXIT_DISAGREE)
    meta = {"N": args.N, "d": args.d, "n": args.n, "recipe": res.recipe, "expected": res.expected.value}
    if res.verification is not None:
        meta.update(verdict=res.verdict.value, min_margin=res.verification.min_margin, repaired=res.repaired)
    text = to_json(res.family, meta) if args.format == "json" else to_text(res.family, meta)
    emit(text, args.out)
    return VERDICT_EXIT[res.verdict if res.verification is not None else res.expected]


def _read_input(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_check(args):
    try:
        text = _read_input(args.input)
    except OSError as exc:
        return fail(f"cannot read {args.input}: {exc.strerror}", EXIT_INVALID)
    try:
        family, _ = parse_family(text)
        cls = classify(family, full_enumeration=args.all_divisors)
        oracle = classify_bruteforce(family, limit=args.oracle_limit) if args.oracle else None
    except (ParseError, NotMPrimaryError, SubsetError, OracleLimitError) as exc:
        return fail(str(exc), EXIT_INVALID)
    agrees = oracle is None or agree(cls, oracle)
    if args.format == "json":
        doc = {"family": family_dict(family), "classification": cls.to_dict(witnesses=args.witness)}
        if oracle is not None:
            doc["oracle"] = {"agrees": agrees, "classification": oracle.to_dict(witnesses=args.witness)}
        sys.stdout.write(dump_json(doc))
    else:
        lines = [f"family: {family}", f"verdict: {cls.verdict.value}",
                 f"min_margin: {'-' if cls.min_margin is None else cls.min_margin}"]
        if args.witness:
            w = cls.worst_witness
            lines.append(f"witness: {w.describe() if w else 'none (no proper subset with nontrivial gcd)'}")
            for z in cls.all_zero_margin_witnesses:
                lines.append(f"zero-margin: {z.describe()}")
        if oracle is not None:
            status = "agrees" if agrees else "DISAGREES"
            lines.append(
                f"oracle: {status} (brute force: {oracle.verdict.value}, "
                f"min_margin {'-' if oracle.min_margin is None else oracle.min_margin})"
            )
        sys.stdout.write("\n".join(lines) + "\n")
    if not agrees:
        return EXIT_DISAGREE
    return VERDICT_EXIT[cls.verdict]


def cmd_sweep(args):
    report = sweep(args.N, args.d, budget=args.budget, jobs=args.jobs)
    if args.out:
        emit(report.to_json(args.timings), args.out)
    if args.format == "json":
        sys.stdout.write(report.to_json(args.timings))
    else:
        sys.stdout.write(report.to_text(args.timings))
    return EXIT_DISAGREE if report.failures else 0


def cmd_census(args):
    try:
        report = census(args.N, args.d, args.n, up_to_symmetry=args.up_to_symmetry, limit=args.limit)
    except BudgetExceeded as exc:
        return fail(str(exc), EXIT_INVALID)
    if args.out:
        emit(report.to_json(), args.out)
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return 0


def cmd_moduli(args):
    try:
        report = moduli_report(args.N, args.d, args.n)
    except ParameterRangeError as exc:
        return fail(str(exc), EXIT_INVALID)
    doc = report.to_dict()
    if args.out:
        emit(dump_json(doc), args.out)
    if args.format == "json":
        sys.stdout.write(dump_json(doc))
    else:
        rows = []
        for key in ("N", "d", "n", "rank", "chern", "slope", "dim_stratum", "dim_component", "codim",
                    "h_E", "h_Ed", "ext1", "ext2"):
            if key in doc:
                value = doc[key]
                rows.append([key, " ".join(map(str, value)) if isinstance(value, list) else str(value)])
        sys.stdout.write("\n".join(format_table(["field", "value"], rows)) + "\n")
    if report.excluded:
        return fail("dimension and cohomology formulas exclude (N, d, n) = (2, 2, 5)", EXIT_REFUSED)
    return 0


def build_parser():
    p = ArgParser(prog="syzstab", description="Stability of syzygy bundles of monomial families.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=ArgParser)

    c = sub.add_parser("construct", help="build a family for (N, d, n)")
    c.add_argument("-N", type=int, required=True)
    c.add_argument("-d", type=int, required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--no-verify", action="store_true", help="skip self-verification")
    c.add_argument("--out", help="write the document to a file")
    c.set_defaults(func=cmd_construct)

    k = sub.add_parser("check", help="classify a family read from a file or stdin")
    k.add_argument("input", nargs="?", default="-", help="family document (text or JSON); - for stdin")
    k.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    k.add_argument("--oracle-limit", type=int, default=20, help="largest family the oracle accepts")
    k.add_argument("--witness", action="store_true", help="print the minimal-margin subset")
    k.add_argument("--all-divisors", action="store_true", help="use every dividing monomial as a candidate")
    k.add_argument("--format", choices=("text", "json"), default="text")
    k.set_defaults(func=cmd_check)

    s = sub.add_parser("sweep", help="construct and verify every admissible n")
    s.add_argument("-N", type=int_range, required=True, help="e.g. 2 or 2..4")
    s.add_argument("-d", type=int_range, required=True, help="e.g. 1..6")
    s.add_argument("--budget", type=int, help="maximum number of entries")
    s.add_argument("--jobs", type=int, help="worker processes (default: $SYZSTAB_JOBS or 1)")
    s.add_argument("--timings", action="store_true", help="include per-entry wall time (not reproducible)")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--out", help="write the JSON report to a file")
    s.set_defaults(func=cmd_sweep)

    e = sub.add_parser("census", help="classify every m-primary family of given shape")
    e.add_argument("-N", type=int, required=True)
    e.add_argument("-d", type=int, required=True)
    e.add_argument("-n", type=int, required=True)
    e.add_argument("--up-to-symmetry", action="store_true", help="group families into permutation orbits")
    e.add_argument("--limit", type=int, default=10**7, help="maximum number of n-subsets")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.add_argument("--out", help="write the JSON report to a file")
    e.set_defaults(func=cmd_census)

    m = sub.add_parser("moduli", help="rank, Chern classes and moduli dimensions")
    m.add_argument("-N", type=int, required=True)
    m.add_argument("-d", type=int, required=True)
    m.add_argument("-n", type=int, required=True)
    m.add_argument("--format", choices=("text", "json"), default="text")
    m.add_argument("--out", help="write the JSON report to a file")
    m.set_defaults(func=cmd_moduli)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command in ("construct", "census", "moduli") and min(args.N, args.d, args.n) < 1:
        return fail("N, d and n must be positive", EXIT_INVALID)
    return args.func(args)


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
