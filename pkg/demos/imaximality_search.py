"""Random search for frameworks whose accepted claim sets are nested, per reduction and semantics."""

import argparse

from prefclaim import Reduction, Semantics, enumerate_claim_extensions, falsify_imaximality
from prefclaim.apx import format_claim_set, render_pcaf


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=300)
    ap.add_argument("--transitive", action="store_true", help="sample transitive preferences only")
    ap.add_argument("--show", action="store_true", help="print the first witness found for each cell")
    args = ap.parse_args()

    cols = [Semantics.NAIVE, Semantics.STB, Semantics.PRF, Semantics.SEM, Semantics.STG]
    print("     " + "".join(f"{s.value:>7}" for s in cols))
    witnesses = []
    for i in Reduction:
        row = []
        for s in cols:
            w = falsify_imaximality(i, s, trials=args.trials, transitive_only=args.transitive, seed=i.value)
            row.append("found" if w else "-")
            if w:
                witnesses.append((i, s, w))
        print(f"{i}: " + "".join(f"{x:>7}" for x in row))
    if args.show:
        for i, s, w in witnesses:
            fam = enumerate_claim_extensions(w, i, s)
            print(f"\n# {i} {s}: " + " ".join(format_claim_set(c) for c in fam))
            print(render_pcaf(w), end="")


if __name__ == "__main__":
    main()
