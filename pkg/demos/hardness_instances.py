"""Build hardness instances from random formulas and compare verification with brute-force SAT/QBF."""

import argparse
import random
import time

from prefclaim import ImageClass, Semantics, in_image
from prefclaim import hardgen


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-vars", type=int, default=6)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    gens = {
        "cf/naive R1": hardgen.gen_cf_naive,
        "stb/adm/com R1": hardgen.gen_stb_adm_com,
        "com R2": lambda phi: hardgen.gen_com_pref(phi, 2),
        "com R4": lambda phi: hardgen.gen_com_pref(phi, 4),
    }
    for name, gen in gens.items():
        t0 = time.perf_counter()
        agree = sat = size = 0
        for _ in range(args.trials):
            phi = hardgen.random_cnf(rng, max_vars=args.max_vars)
            inst = gen(phi)
            truth = hardgen.sat_oracle(phi)
            sat += truth
            size += len(inst.framework.args)
            agree += all(inst.verify(s) == inst.expected_verify(truth) for s in inst.semantics)
        print(f"{name:<15} {agree}/{args.trials} agree  ({sat} satisfiable, "
              f"{size / args.trials:.1f} args on average, {time.perf_counter() - t0:.2f}s)")

    for s in (Semantics.PRF, Semantics.SEM, Semantics.STG):
        agree = valid = in_tr = 0
        for _ in range(args.trials):
            Phi = hardgen.random_qbf(rng)
            inst = hardgen.gen_qbf(Phi, s)
            truth = hardgen.qbf_oracle(Phi)
            valid += truth
            in_tr += in_image(inst.framework, ImageClass.IM1_TR)
            agree += inst.verify() == inst.expected_verify(truth)
        print(f"2QBF {s.value:<10} {agree}/{args.trials} agree  ({valid} valid, "
              f"{in_tr} in the transitive R1 image)")


if __name__ == "__main__":
    main()
