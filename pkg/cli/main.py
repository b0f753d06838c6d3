"""Command-line front end for the permutation-design toolkit.

Exit codes:
    0: success
    1: a verdict came out false and --strict was given
    2: usage, file or format error
"""

import argparse
import json
import logging
import os
import sys
from typing import Optional, Sequence

from dotenv import load_dotenv

from designs.analysis import (
    cor2_bound,
    design_bound,
    design_report,
    frequencies,
    sm_beats_cor2,
)
from designs.charlier import charlier, reversed_charlier, verify_orthogonality
from designs.constructions import (
    affine_group,
    cyclic_group,
    from_latin_square,
    paper_example_n5,
    pgl2,
    to_latin_square,
    twisted_affine_9,
)
from designs.errors import PermDesignError
from designs.exact import format_rational
from designs.report import DesignReport
from designs.search import exhaustive_min_design, hunt_non_transitive_design, search_sharp_set
from utils.output import emit, render
from utils.permset_store import (
    format_latin_square,
    format_permset,
    load_latin_square,
    load_permset,
)

load_dotenv()

logger = logging.getLogger(__name__)

FAMILIES = ("cyclic", "paper-n5", "affine", "twisted-affine-9", "pgl2")


def _send(text: str, args: argparse.Namespace):
    out = getattr(args, "out", None)
    emit(text, channels=("file",) if out else ("stdout",), path=out)


def _report_text(report: DesignReport) -> str:
    lines = [f"n={report.n}  |D|={report.size}  t={report.t}"]
    lines.append("frequencies: " + ", ".join(report.frequencies))
    for m in report.moments:
        mark = "=" if m.equal else "≠"
        lines.append(f"  moment {m.i}: {m.value} {mark} {m.space_value}")
    if report.dual_frequencies is not None:
        lines.append("dual frequencies: " + ", ".join(f"g{d.k}={d.value}" for d in report.dual_frequencies))
    c = report.criteria
    lines.append(f"criteria: moments={c.moments} dual={c.dual} tcrit={c.tcrit}")
    b = report.bounds
    lines.append(f"bounds: sm={b.sm} cor2_t2={b.cor2_t2} meets_sm_equality={b.meets_sm_equality}")
    tr = report.transitivity
    lines.append(f"transitivity: max_t={tr.max_t} sharp={tr.sharp} is_group={tr.is_group}")
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace) -> int:
    D = load_permset(args.path)
    report = design_report(D, args.t, args.workers)
    _send(render(report, "json") if args.format == "json" else _report_text(report), args)
    if args.strict and not report.is_design:
        return 1
    return 0


def cmd_freq(args: argparse.Namespace) -> int:
    D = load_permset(args.path)
    f = frequencies(D, args.workers)
    if args.format == "json":
        text = json.dumps({"n": D.n, "size": len(D), "frequencies": [format_rational(x) for x in f.f]}, indent=2)
    else:
        text = "\n".join(f"f_{i} = {format_rational(x)}" for i, x in enumerate(f.f))
    _send(text, args)
    return 0


def cmd_charlier(args: argparse.Namespace) -> int:
    if args.reversed and args.n is None:
        raise PermDesignError("--reversed needs --n")
    poly = reversed_charlier(args.k, args.n) if args.reversed else charlier(args.k)
    if args.format == "json":
        text = json.dumps({"k": args.k, "n": args.n, "reversed": args.reversed, "coefficients": poly.coefficients})
    else:
        text = str(poly)
    _send(text, args)
    return 0


def cmd_orthogonality(args: argparse.Namespace) -> int:
    report = verify_orthogonality(args.n)
    if args.format == "json":
        text = render(report, "json")
    else:
        text = "\n".join(
            f"<C{p.r}, C{p.s}> = {p.value}  expected {p.expected}  {'ok' if p.passed else 'FAIL'}"
            for p in report.pairs
        )
    _send(text, args)
    return 1 if args.strict and not report.all_passed else 0


def cmd_construct(args: argparse.Namespace) -> int:
    family = args.family
    if family == "cyclic" and args.n is None:
        raise PermDesignError("cyclic needs --n")
    if family in ("affine", "pgl2") and args.q is None:
        raise PermDesignError(f"{family} needs --q")
    builders = {
        "cyclic": lambda: cyclic_group(args.n),
        "paper-n5": paper_example_n5,
        "affine": lambda: affine_group(args.q),
        "twisted-affine-9": twisted_affine_9,
        "pgl2": lambda: pgl2(args.q),
    }
    D = builders[family]()
    _send(format_permset(D, comment=f"{family} ({len(D)} permutations)"), args)
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    if args.kind == "sharp":
        outcome = search_sharp_set(args.n, args.t, workers=args.workers, budget=args.budget)
    else:
        if args.max_size is None:
            raise PermDesignError(f"{args.kind} search needs --max-size")
        search = exhaustive_min_design if args.kind == "min-design" else hunt_non_transitive_design
        outcome = search(args.n, args.t, args.max_size, budget=args.budget)
    _send(render(outcome.certificate, "json"), args)
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    sm = design_bound(args.n, args.t)
    cor2 = cor2_bound(args.n)
    if args.format == "json":
        text = json.dumps({"n": args.n, "t": args.t, "sm": sm, "cor2_t2": cor2, "sm_beats_cor2": sm_beats_cor2(args.n)}, indent=2)
    else:
        text = f"sm bound: {sm}\ncor2 bound (t=2): {cor2}"
    _send(text, args)
    return 0


def cmd_convert(args: argparse.Namespace) -> int:
    if args.direction == "to-perms":
        D = from_latin_square(load_latin_square(args.path))
        _send(format_permset(D), args)
    else:
        _send(format_latin_square(to_latin_square(load_permset(args.path))), args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permdesign", description="t-designs in the symmetric group")
    parser.add_argument("--log-level", default=os.getenv("PERMDESIGN_LOG_LEVEL", "WARNING"))
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=["text", "json"], default="text")

    def out(p):
        p.add_argument("--out", help="write to this file instead of standard out")

    p = sub.add_parser("verify", help="full design report for a permutation-set file")
    p.add_argument("path")
    p.add_argument("--t", type=int, help="design strength to test (default: the strength of the set)")
    p.add_argument("--strict", action="store_true", help="exit 1 when the set is not a t-design")
    p.add_argument("--workers", type=int)
    fmt(p)
    out(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("freq", help="distance frequencies of a permutation-set file")
    p.add_argument("path")
    p.add_argument("--workers", type=int)
    fmt(p)
    out(p)
    p.set_defaults(func=cmd_freq)

    p = sub.add_parser("charlier", help="print C_k or its reversal C_k(n - x)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--reversed", action="store_true")
    fmt(p)
    out(p)
    p.set_defaults(func=cmd_charlier)

    p = sub.add_parser("orthogonality", help="check <Chat_r, Chat_s>_n = r! delta_rs for r, s <= n/2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strict", action="store_true")
    fmt(p)
    out(p)
    p.set_defaults(func=cmd_orthogonality)

    p = sub.add_parser("construct", help="build one of the example families")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    out(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exhaustive or backtracking searches (JSON certificate)")
    p.add_argument("kind", choices=["min-design", "sharp", "non-transitive"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--max-size", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--budget", type=int)
    out(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="the n(n-1)...(n-t+1) and (n-1)^2+1 bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    fmt(p)
    out(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("convert", help="Latin square <-> permutation set")
    p.add_argument("direction", choices=["to-perms", "to-latin"])
    p.add_argument("path")
    out(p)
    p.set_defaults(func=cmd_convert)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=args.log_level.upper())
    try:
        return args.func(args)
    except (PermDesignError, OSError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.error(f"❌ {args.command} failed: {e}", exc_info=True)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
