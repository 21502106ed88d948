"""Command-line interface.

Exit codes: 0 when everything requested passed (or a query was answered),
1 when a verification row failed, 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import LieCheckError, NoReversor, UsageError
from .harness import CLAIMS, SweepConfig, render_report, run_verification_suite
from .lattices import max_abs_root_pairing, resolve_cocharacter, semifree_transversal
from .linalg import fmt_q, vec_to_json
from .reversors import no_reversor_witness, reversor_witness, semifree_rep_analysis
from .roots import RootSystem, SimpleType, WeylWord, build_root_system, default_types, describe


def _system(text: str) -> RootSystem:
    return build_root_system(SimpleType.parse(text))


def parse_weights(rs: RootSystem, lines) -> list:
    """``mult * coords`` per line; ``#`` starts a comment; ``mult *`` may be omitted."""
    out = []
    for num, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        mult = 1
        if "*" in line:
            head, line = line.split("*", 1)
            try:
                mult = int(head.strip())
            except ValueError:
                raise UsageError(f"line {num}: bad multiplicity {head.strip()!r}") from None
            if mult < 1:
                raise UsageError(f"line {num}: multiplicity must be positive")
        out.append((rs.model.parse(line), mult))
    return out


def _emit(obj) -> None:
    print(json.dumps(obj, indent=1))


def cmd_describe(args) -> int:
    _emit(describe(_system(args.system)))
    return 0


def cmd_pi1(args) -> int:
    _emit(semifree_transversal(_system(args.system)).to_json(reps=args.reps))
    return 0


def cmd_semifree(args) -> int:
    rs = _system(args.system)
    lam = resolve_cocharacter(rs, args.lam)
    best, root = max_abs_root_pairing(rs, lam)
    _emit({"lambda": vec_to_json(lam), "semifree": best <= 1, "max_pairing": fmt_q(best),
           "maximizing_root": vec_to_json(root)})
    return 0


def cmd_reversor(args) -> int:
    rs = _system(args.system)
    lam = resolve_cocharacter(rs, args.lam)
    _emit(reversor_witness(rs, lam).to_json())
    return 0


def cmd_analyze_rep(args) -> int:
    rs = _system(args.system)
    lam = resolve_cocharacter(rs, args.lam)
    try:
        with open(args.weights, encoding="utf-8") as fh:
            wts = parse_weights(rs, fh)
    except OSError as exc:
        raise UsageError(f"cannot read weights: {exc}") from None
    try:
        got = semifree_rep_analysis(rs, lam, wts)
    except NoReversor as exc:
        _emit(no_reversor_witness(rs, lam, exc).to_json())
        return 0
    if isinstance(got, WeylWord):
        got = reversor_witness(rs, lam)
    _emit(got.to_json())
    return 0


def _claims(text: str) -> tuple:
    claims = tuple(c.strip() for c in text.split(",") if c.strip())
    bad = [c for c in claims if c not in CLAIMS]
    if bad:
        raise UsageError(f"unknown claims {', '.join(bad)}; choose from {', '.join(CLAIMS)}")
    return claims


def _write_report(report, fmt, out) -> int:
    data = render_report(report, fmt)
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
        print(render_report(report, "text").decode().splitlines()[-1])
    else:
        sys.stdout.write(data.decode())
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    cfg = SweepConfig(types=[SimpleType.parse(args.system)], claims=_claims(args.claims),
                      pairing_bound=args.bound, jobs=args.jobs)
    return _write_report(run_verification_suite(cfg), args.format, args.out)


def cmd_sweep(args) -> int:
    if args.types:
        types = [SimpleType.parse(t) for chunk in args.types for t in chunk.split(",") if t]
    else:
        types = default_types()
    claims = _claims(args.claims) if args.claims else CLAIMS
    cfg = SweepConfig(types=types, claims=claims, pairing_bound=args.bound, jobs=args.jobs)
    return _write_report(run_verification_suite(cfg), args.format, args.out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="liecheck", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def system(sp):
        sp.add_argument("system", help="type and rank, e.g. D5")

    def lam(sp):
        sp.add_argument("--lambda", dest="lam", required=True,
                        help="p/q,... (E6: n;x1,...,x6) or coset:<k>; write --lambda=-1,0,1 "
                             "when the first entry is negative")

    sp = sub.add_parser("describe", help="root system as JSON")
    system(sp)
    sp.set_defaults(func=cmd_describe)

    sp = sub.add_parser("pi1", help="fundamental group of the adjoint group")
    system(sp)
    sp.add_argument("--reps", action="store_true", help="include certified representatives")
    sp.set_defaults(func=cmd_pi1)

    sp = sub.add_parser("semifree", help="largest root pairing of a cocharacter")
    system(sp)
    lam(sp)
    sp.set_defaults(func=cmd_semifree)

    sp = sub.add_parser("reversor", help="Weyl word sending lambda to -lambda")
    system(sp)
    lam(sp)
    sp.set_defaults(func=cmd_reversor)

    sp = sub.add_parser("analyze-rep", help="semifree check on a weight multiset")
    system(sp)
    lam(sp)
    sp.add_argument("--weights", required=True, help="file with one 'mult * coords' per line")
    sp.set_defaults(func=cmd_analyze_rep)

    def report_opts(sp, bound_default=8):
        sp.add_argument("--bound", type=int, default=bound_default,
                        help="largest <lambda, delta> for claim (c) and reversor sweeps")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes")

    sp = sub.add_parser("verify", help="check claims for one type")
    system(sp)
    sp.add_argument("--claims", default=",".join(CLAIMS),
                    help=f"comma-separated subset of {','.join(CLAIMS)}")
    report_opts(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="check claims over many types")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="every type in scope (default)")
    group.add_argument("--types", nargs="+", help="e.g. A2 B3 or A2,B3")
    sp.add_argument("--claims", help=f"comma-separated subset of {','.join(CLAIMS)}")
    report_opts(sp)
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LieCheckError as exc:
        print(f"liecheck: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
