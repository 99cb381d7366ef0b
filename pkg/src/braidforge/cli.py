"""Command-line entry point: build, invariants, classify, equal, sweep."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .braid import BraidWord, format_braid
from .config import Caps
from .errors import (
    BraidForgeError,
    InvalidSpecError,
    NotAKnotError,
    ParseError,
    ResourceCapExceeded,
    StepBudgetExceeded,
    StrandMismatchError,
)
from .families import FactoredBraid, TLinkSpec, TwistedTorusSpec, factor_word, tlink_factored, twisted_torus_factored
from .parsing import parse_spec
from .report import braid_of, full_report, invariants_of
from .sweep import SweepRange, rows_to_csv, rows_to_json, run_sweep
from .wordproblem import equality_witness

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAP, EXIT_FAILURE = 0, 1, 2, 3, 4
INVARIANT_FLAGS = ("homfly", "alexander", "genus", "index")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _error(code: str, message: str, **extra) -> None:
    print(_dump({"error": {"code": code, "message": message, **extra}}), file=sys.stderr)


def factored_form(obj) -> FactoredBraid | None:
    if isinstance(obj, FactoredBraid):
        return obj
    if isinstance(obj, TLinkSpec):
        return tlink_factored(obj)
    if isinstance(obj, TwistedTorusSpec):
        return twisted_torus_factored(obj)
    if isinstance(obj, BraidWord):
        return factor_word(obj)
    return None


def cmd_build(args, caps: Caps) -> int:
    obj = parse_spec(args.spec)
    word = braid_of(obj)
    fb = factored_form(obj)
    if args.json:
        print(_dump({"braid": format_braid(word), "factored": None if fb is None else str(fb)}))
    else:
        print(format_braid(word))
        if fb is not None:
            print(str(fb))
    return EXIT_OK


def cmd_invariants(args, caps: Caps) -> int:
    word = braid_of(parse_spec(args.spec))
    chosen = [f for f in INVARIANT_FLAGS if getattr(args, f)] or list(INVARIANT_FLAGS)
    want = tuple("braid_index" if f == "index" else f for f in chosen)
    errors: list = []
    out = invariants_of(word, caps, errors, want=want)
    if errors:
        first = errors[0]
        _error(first["code"], first["message"], field=first["field"])
        return EXIT_CAP
    print(_dump(out))
    return EXIT_OK


def cmd_classify(args, caps: Caps) -> int:
    report = full_report(parse_spec(args.spec), caps)
    print(json.dumps(report, indent=None if args.compact else 2, separators=(",", ":") if args.compact else None))
    return EXIT_OK


def cmd_equal(args, caps: Caps) -> int:
    a = braid_of(parse_spec(args.a))
    b = braid_of(parse_spec(args.b))
    witness = equality_witness(a, b, caps)
    equal = len(witness) == 0
    print("equal" if equal else "not equal")
    print(f"witness: {format_braid(witness)}")
    return EXIT_OK if equal else EXIT_FALSE


def cmd_sweep(args, caps: Caps) -> int:
    rng = SweepRange(
        family=args.family,
        p=args.p,
        q=args.q,
        k=args.k,
        r=args.r,
        s=args.s,
        r1=args.r1,
        s1=args.s1,
        form=args.form,
        q_max=args.q_max,
    )
    rows = run_sweep(rng, jobs=args.jobs, caps=caps)
    text = rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="expand a spec string to a braid word")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("invariants", help="HOMFLY-PT, Alexander, genus and braid-index bounds")
    p.add_argument("spec")
    p.add_argument("--homfly", action="store_true")
    p.add_argument("--alexander", action="store_true")
    p.add_argument("--genus", action="store_true")
    p.add_argument("--index", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", help="full verdict report as JSON")
    p.add_argument("spec")
    p.add_argument("--compact", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("equal", help="decide equality of two braids")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("sweep", help="classify a family over a parameter range")
    p.add_argument("--family", choices=("ttk", "tlink", "torus"), required=True)
    p.add_argument("--p", required=True, help="e.g. 5, 3..6 or 2,3,5")
    p.add_argument("--q", default="coprime", help="'coprime' or a range; may use p")
    p.add_argument("--k", default="2", help="range of full-twist counts")
    p.add_argument("--r", default=None, help="twisted strands (ttk); default 2..q for s=1, 2..p-q for s=-1")
    p.add_argument("--s", type=int, default=1, choices=(1, -1))
    p.add_argument("--r1", default="2..q", help="first T-link pair width (tlink)")
    p.add_argument("--s1", default="1..3", help="first T-link pair exponent (tlink)")
    p.add_argument("--form", default="both", choices=("A", "B", "both"), help="tlink: (p,kp+q) last, (kp+q,p) last, or both")
    p.add_argument("--q-max", type=int, default=7, help="upper q for torus with --q coprime")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        caps = Caps.from_env()
    except ValueError as exc:
        _error("invalid_env", str(exc))
        return EXIT_USAGE
    try:
        return args.func(args, caps)
    except ParseError as exc:
        _error(exc.code, str(exc), position=exc.position, text=exc.text)
        return EXIT_USAGE
    except (InvalidSpecError, StrandMismatchError, NotAKnotError) as exc:
        _error(exc.code, str(exc))
        return EXIT_USAGE
    except (ResourceCapExceeded, StepBudgetExceeded) as exc:
        _error(exc.code, str(exc))
        return EXIT_CAP
    except BraidForgeError as exc:
        _error(exc.code, str(exc))
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
