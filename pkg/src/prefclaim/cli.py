"""Command-line front end."""

from __future__ import annotations

import argparse
import random
import sys

from . import apx, hardgen
from .af import Semantics
from .classify import ImageClass, in_image
from .enumeration import credulous, enumerate_claim_extensions, skeptical
from .errors import PrefClaimError
from .pcaf import Reduction, reduce
from .propcheck import check_imaximality
from .realize import verify

TASKS = ("enum", "ver", "cred", "skep", "classify", "reduce", "imax", "gen")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="prefclaim",
        description="Reason about claim-augmented argumentation frameworks with preferences.",
    )
    p.add_argument("input", nargs="?", help="framework file ('-' for stdin); a DIMACS/QDIMACS file for gen")
    p.add_argument("--task", "-t", required=True, type=str.lower, choices=TASKS)
    p.add_argument("--semantics", "-s", type=str.lower, choices=[s.value for s in Semantics])
    p.add_argument("--reduction", "-r", type=int, choices=[1, 2, 3, 4])
    p.add_argument("--claims", help="comma-separated claim set for ver")
    p.add_argument("--claim", help="claim for cred/skep")
    p.add_argument("--require-transitive", action="store_true", help="reject non-transitive preferences")
    p.add_argument("--implicit-claims", action="store_true", help="arguments without claim() claim their name")
    p.add_argument("--seed", type=int, default=0, help="seed for gen without an input file")
    p.add_argument("--max-args", type=int, default=64)
    p.add_argument("--max-claims", type=int, default=20)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")
    p.add_argument("--fast-prf", action="store_true", help="R3 preferred enumeration by maximal admissible claim sets")
    p.add_argument("--status", action="store_true", help="exit with 1 when a decision task answers NO")
    return p


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _parse_claim_set(text):
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    return frozenset(c.strip() for c in text.split(",") if c.strip())


def _need(args, parser, *names):
    for n in names:
        if getattr(args, n) is None:
            parser.error(f"--task {args.task} requires --{n.replace('_', '-')}")


def _gen(args, parser, out):
    s = Semantics.parse(args.semantics) if args.semantics else None
    if s in (Semantics.PRF, Semantics.SEM, Semantics.STG):
        if args.input:
            phi = hardgen.parse_qdimacs(_read(args.input))
        else:
            phi = hardgen.random_qbf(random.Random(args.seed))
        inst = hardgen.gen_qbf(phi, s)
    else:
        phi = hardgen.parse_dimacs(_read(args.input)) if args.input else hardgen.random_cnf(random.Random(args.seed))
        if s is Semantics.COM and args.reduction in (2, 4):
            inst = hardgen.gen_com_pref(phi, args.reduction)
        elif s in (Semantics.CF, Semantics.NAIVE):
            inst = hardgen.gen_cf_naive(phi)
        elif s in (Semantics.STB, Semantics.ADM, Semantics.COM):
            inst = hardgen.gen_stb_adm_com(phi)
        else:
            parser.error("--task gen needs --semantics (and --reduction 2 or 4 for com with preferences)")
    out.write(f"# reduction: {inst.reduction.value}\n")
    out.write(f"# semantics: {','.join(s.value for s in inst.semantics)}\n")
    out.write(f"# target: {apx.format_claim_set(inst.target)}\n")
    out.write(f"# polarity: {inst.polarity}\n")
    out.write(apx.render_pcaf(inst.pcaf()))
    return 0


def run(args, parser, out=None) -> int:
    out = out or sys.stdout
    if args.task == "gen":
        return _gen(args, parser, out)
    text = _read(args.input)
    if args.task == "classify":
        cf = apx.parse_caf(text, args.implicit_claims)
        for k in ImageClass:
            out.write(f"{k.value} {'YES' if in_image(cf, k) else 'NO'}\n")
        return 0
    pf = apx.parse_pcaf(text, args.implicit_claims)
    if args.require_transitive:
        missing = sorted({(a, d) for a, b in pf.prefs for c, d in pf.prefs if b == c and (a, d) not in pf.prefs})
        if missing:
            a, d = missing[0]
            raise PrefClaimError(f"preferences are not transitive: missing pref({a}, {d})")
    _need(args, parser, "reduction")
    i = Reduction.parse(args.reduction)
    if args.task == "reduce":
        out.write(apx.render_caf(reduce(pf, i)))
        return 0
    _need(args, parser, "semantics")
    s = Semantics.parse(args.semantics)
    caps = dict(max_claims=args.max_claims, max_args=args.max_args)
    if args.task == "enum":
        for c in enumerate_claim_extensions(pf, i, s, jobs=args.jobs, fast_prf=args.fast_prf, **caps):
            out.write(apx.format_claim_set(c) + "\n")
        return 0
    if args.task == "ver":
        _need(args, parser, "claims")
        answer = verify(pf, i, _parse_claim_set(args.claims), s)
    elif args.task in ("cred", "skep"):
        _need(args, parser, "claim")
        fn = credulous if args.task == "cred" else skeptical
        answer = fn(pf, i, s, args.claim, **caps)
    else:
        family = enumerate_claim_extensions(pf, i, s, jobs=args.jobs, **caps)
        violation = check_imaximality(family)
        answer = violation is None
        if violation is not None:
            out.write("NO\n")
            out.write(f"{apx.format_claim_set(violation[0])} {apx.format_claim_set(violation[1])}\n")
            return 1 if args.status else 0
    out.write("YES\n" if answer else "NO\n")
    return 1 if args.status and not answer else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args, parser)
    except (PrefClaimError, OSError) as e:
        name = args.input or "<stdin>"
        print(f"prefclaim: {name}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
