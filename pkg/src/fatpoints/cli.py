"""Command-line front end.

Every command prints one JSON document on standard output (or a plain table
with ``--format table``).  Exit status: 0 on success, 1 when ``verify`` finds
a violation, 2 on bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import configfile
from .configfile import ConfigFileError
from .exactmath import is_prime
from .invariants import (
    PLUS,
    STAR,
    alpha_split,
    alpha_witness,
    grid_steps,
    jump_vector,
    waldschmidt_bounds,
)
from .linsys import BiDegree, conditions_matrix, h0
from .verifier import EnumSpec, run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _frac(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _prime(text: str) -> int:
    v = int(text)
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"{text} is not prime")
    return v


def _values(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(t) for t in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def cmd_h0(args) -> tuple[dict, int]:
    Z = configfile.load_config(args.config)
    d = BiDegree.of(args.d1, args.d2)
    C = conditions_matrix(Z, d).matrix
    return {"h0": h0(Z, d), "rows": C.nrows, "cols": C.ncols, "bidegree": list(d)}, EXIT_OK


def cmd_alpha(args) -> tuple[dict, int]:
    Z = configfile.load_config(args.config)
    out = {"variant": args.variant, "m": args.m}
    if args.witness:
        value, deg, form = alpha_witness(Z, args.variant, args.m, modp=args.modp)
        out.update(alpha=value, bidegree=list(deg), witness=form.grid_strings() if form else None)
    else:
        value, deg = alpha_split(Z, args.variant, args.m, modp=args.modp)
        out["alpha"] = value
        if args.verbose:
            out["bidegree"] = list(deg)
    return out, EXIT_OK


def cmd_jumps(args) -> tuple[dict, int]:
    Z = configfile.load_config(args.config)
    J = jump_vector(Z, args.max_m, args.variant, modp=args.modp)
    out = {"variant": J.variant, "values": list(J.values)}
    if J.variant == PLUS:
        out["note"] = "plus-variant jumps are an extension of the star jump function"
    return out, EXIT_OK


def cmd_wald(args) -> tuple[dict, int]:
    Z = configfile.load_config(args.config)
    if not Z.points:
        raise UsageError("Waldschmidt bounds need a nonempty configuration")
    W = waldschmidt_bounds(Z, args.variant, args.max_m, modp=args.modp)
    return {
        "variant": W.variant,
        "lower": _frac(W.lower),
        "upper": _frac(W.upper),
        "m_used": W.m_used,
    }, EXIT_OK


def cmd_gridseq(args) -> tuple[dict, int]:
    if args.a < 1 or args.b < 1:
        raise UsageError("grid sides must be positive")
    states = grid_steps(args.a, args.b, args.max_m)[1:]
    return {
        "a": args.a,
        "b": args.b,
        "rows": [[s.a_m, s.b_m] for s in states],
        "alpha": [s.alpha for s in states],
    }, EXIT_OK


def cmd_config(args) -> tuple[dict, int]:
    return configfile.config_to_dict(configfile.load_config(args.config)), EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    if args.box is None and args.s_min is None and args.s_max is None and args.sample is None:
        from .verifier import default_corpus

        corpus = default_corpus(args.seed)
    else:
        xs = args.box if args.box is not None else _values("0,1,2")
        ys = args.box_y if args.box_y is not None else xs
        lo = 1 if args.s_min is None else args.s_min
        hi = min(4, len(xs) * len(ys)) if args.s_max is None else args.s_max
        sample = None if args.sample is None else (args.sample, args.seed)
        try:
            corpus = EnumSpec((xs, ys), (lo, hi), sample=sample, symmetry=args.symmetry)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    reports = run_suite(
        corpus,
        args.max_m,
        jobs=args.jobs,
        grid_max=tuple(args.grid),
        regressions=not args.no_regressions,
        modp=args.modp,
    )
    passed = all(r.passed for r in reports)
    doc = {"passed": passed, "reports": [r.to_dict(timing=args.timing) for r in reports]}
    return doc, EXIT_OK if passed else EXIT_VIOLATION


def _table(doc: dict) -> str:
    if "reports" in doc:
        lines = [f"{'check':40} {'configs':>8} {'violations':>10}  result"]
        for r in doc["reports"]:
            lines.append(
                f"{r['check']:40} {r['configs_tested']:>8} {len(r['violations']):>10}  "
                + ("PASS" if r["passed"] else "FAIL")
            )
        return "\n".join(lines)
    if "rows" in doc and isinstance(doc["rows"], list):
        return "\n".join(
            f"m={m:<3} a_m={a:<4} b_m={b:<4} alpha*={al}"
            for m, ((a, b), al) in enumerate(zip(doc["rows"], doc["alpha"]), start=1)
        )
    return "\n".join(f"{k}: {v}" for k, v in doc.items())


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "table"), default="json")

    variant = argparse.ArgumentParser(add_help=False)
    variant.add_argument("--variant", choices=(STAR, PLUS), default=STAR)
    variant.add_argument("--modp", type=_prime, default=None, help="screen degrees over F_p, confirm over Q")

    p = argparse.ArgumentParser(prog="fatpoints", description="Initial degrees of fat points on P1 x P1.")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("h0", parents=[fmt], help="dimension of forms of a bi-degree through the scheme")
    h.add_argument("config")
    h.add_argument("d1", type=_nonneg)
    h.add_argument("d2", type=_nonneg)
    h.set_defaults(func=cmd_h0)

    a = sub.add_parser("alpha", parents=[fmt, variant], help="alpha* or alpha+ of a symbolic power")
    a.add_argument("config")
    a.add_argument("--m", type=_positive, default=1)
    a.add_argument("--witness", action="store_true", help="also print a form realising the value")
    a.add_argument("--verbose", action="store_true", help="also print the realising bi-degree")
    a.set_defaults(func=cmd_alpha)

    j = sub.add_parser("jumps", parents=[fmt, variant], help="jump vector for m = 1..max-m")
    j.add_argument("config")
    j.add_argument("--max-m", type=_positive, default=5)
    j.set_defaults(func=cmd_jumps)

    w = sub.add_parser("wald", parents=[fmt, variant], help="bounds on the Waldschmidt constant")
    w.add_argument("config")
    w.add_argument("--max-m", type=_positive, default=4)
    w.set_defaults(func=cmd_wald)

    g = sub.add_parser("gridseq", parents=[fmt], help="closed-form sequence for an (a,b)-grid")
    g.add_argument("a", type=int)
    g.add_argument("b", type=int)
    g.add_argument("--max-m", type=_nonneg, default=10)
    g.set_defaults(func=cmd_gridseq)

    c = sub.add_parser("config", parents=[fmt], help="print a configuration as a config file")
    c.add_argument("config")
    c.set_defaults(func=cmd_config)

    v = sub.add_parser("verify", parents=[fmt], help="run the verification suite")
    v.add_argument("--max-m", type=_positive, default=3)
    v.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--box", type=_values, default=None, help="x-values of the box, e.g. 0,1,2")
    v.add_argument("--box-y", type=_values, default=None, help="y-values (default: same as --box)")
    v.add_argument("--s-min", type=_nonneg, default=None)
    v.add_argument("--s-max", type=_nonneg, default=None)
    v.add_argument("--sample", type=_nonneg, default=None, help="keep this many seeded random configs")
    v.add_argument("--symmetry", action="store_true", help="one config per coordinate-permutation orbit")
    v.add_argument("--grid", type=_positive, nargs=3, default=(3, 3, 6), metavar=("A", "B", "M"))
    v.add_argument("--no-regressions", action="store_true")
    v.add_argument("--modp", type=_prime, default=1_000_003)
    v.add_argument("--timing", action="store_true", help="include elapsed seconds per check")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.func(args)
    except (ConfigFileError, UsageError) as exc:
        print(f"fatpoints: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "table":
        print(_table(doc))
    else:
        print(json.dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
