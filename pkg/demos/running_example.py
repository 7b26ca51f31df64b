"""Walk through one small framework: extensions, claims, and what each reduction does to them."""

import argparse

from prefclaim import (
    ClaimFramework,
    PrefFramework,
    Reduction,
    Semantics,
    check_imaximality,
    claim_extensions,
    enumerate_claim_extensions,
    extensions,
    realization,
    reduce,
)
from prefclaim.apx import format_claim_set


def show(title, family):
    print(f"  {title:<8} " + " ".join(format_claim_set(c) for c in family))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--semantics", "-s", default="stb", choices=[s.value for s in Semantics])
    args = ap.parse_args()
    s = Semantics.parse(args.semantics)

    cf = ClaimFramework.build(["a", "a'", "b"], [("a", "b"), ("a'", "b"), ("b", "a")],
                              {"a": "alpha", "a'": "alpha", "b": "beta"})
    pf = PrefFramework(cf, [("b", "a'")])  # b is preferred to a'

    print("argument-level extensions")
    for sem in Semantics:
        show(sem.value, extensions(cf.base, sem))
    print("claim-level extensions, no preferences")
    for sem in Semantics:
        show(sem.value, claim_extensions(cf, sem))

    for i in Reduction:
        red = reduce(pf, i)
        fam = enumerate_claim_extensions(pf, i, s)
        print(f"\n{i}: attacks {sorted(red.attacks)}")
        show(s.value, fam)
        bad = check_imaximality(fam)
        if bad:
            print(f"  not I-maximal: {format_claim_set(bad[0])} is inside {format_claim_set(bad[1])}")
        if i is not Reduction.R1:
            t = realization(pf, {"alpha"}, i)
            print(f"  largest admissible realization of [alpha]: {sorted(t.estar)}")


if __name__ == "__main__":
    main()
