"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Reference answers come from the definitional brute force in ``oracle`` or
from the hand-checked worked examples; nothing here calls the fast paths
to produce its own expectations.
"""

import itertools
import random
import time

import oracle
import spaces
from prefclaim import (
    ArgFramework,
    ClaimFramework,
    ImageClass,
    PrefFramework,
    Reduction,
    Semantics,
    catalog,
    check_imaximality,
    claim_extensions,
    enumerate_claim_extensions,
    extensions,
    falsify_imaximality,
    in_image,
    preimage_search,
    random_pcaf,
    reduce,
    Verifier,
    validate,
)
from prefclaim import hardgen
from prefclaim.pcaf import transitive_closure

AL, BE, GA = "alpha", "beta", "gamma"
S = [s for s in Semantics]
R = [i for i in Reduction]


def sets(*xs):
    return {frozenset(x) for x in xs}


def example_af():
    return ArgFramework(["a", "a'", "b"], [("a", "b"), ("a'", "b"), ("b", "a")])


def example_caf():
    return ClaimFramework(example_af(), {"a": AL, "a'": AL, "b": BE})


def example_pcaf():
    return PrefFramework(example_caf(), [("b", "a'")])


def test_criterion_1_example_af_goldens(acceptance_report):
    t0 = time.perf_counter()
    f = example_af()
    expected = {
        Semantics.CF: sets((), ("a",), ("a'",), ("b",), ("a", "a'")),
        Semantics.ADM: sets((), ("a",), ("a'",), ("a", "a'")),
        Semantics.NAIVE: sets(("b",), ("a", "a'")),
    }
    for s in (Semantics.COM, Semantics.STB, Semantics.PRF, Semantics.SEM, Semantics.STG):
        expected[s] = sets(("a", "a'"))
    mismatches = [s.value for s in S if set(extensions(f, s)) != expected[s]]
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 1
    acceptance_report(1, "argument-level goldens", ok, f"8 families, mismatches={mismatches}", elapsed)
    assert ok


def test_criterion_2_example_caf_goldens(acceptance_report):
    t0 = time.perf_counter()
    cf = example_caf()
    expected = {
        Semantics.CF: sets((), (AL,), (BE,)),
        Semantics.ADM: sets((), (AL,)),
        Semantics.NAIVE: sets((AL,), (BE,)),
        Semantics.STB: sets((AL,)),
    }
    mismatches = [s.value for s, fam in expected.items() if set(claim_extensions(cf, s)) != fam]
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 1
    acceptance_report(2, "claim-level goldens", ok, f"4 families, mismatches={mismatches}", elapsed)
    assert ok


def test_criterion_3_example_pcaf_goldens(acceptance_report):
    t0 = time.perf_counter()
    pf = example_pcaf()
    checks = {
        "reduce R1": reduce(pf, 1).attacks == {("a", "b"), ("b", "a")},
        "reduce R2": reduce(pf, 2).attacks == {("a", "b"), ("b", "a"), ("b", "a'")},
        "adm R1": set(enumerate_claim_extensions(pf, 1, "adm")) == sets((), (AL,), (BE,), (AL, BE)),
        "stb R1": set(enumerate_claim_extensions(pf, 1, "stb")) == sets((AL,), (AL, BE)),
        "adm R2": set(enumerate_claim_extensions(pf, 2, "adm")) == sets((), (AL,), (BE,)),
        "stb R2": set(enumerate_claim_extensions(pf, 2, "stb")) == sets((AL,), (BE,)),
    }
    failed = [k for k, v in checks.items() if not v]
    elapsed = time.perf_counter() - t0
    ok = not failed and elapsed < 1
    acceptance_report(3, "preference goldens", ok, f"6 checks, failed={failed}", elapsed)
    assert ok


# Table of I-maximality: False marks cells where a violation must exist.
IMAX_HOLDS = {(i, s): i is Reduction.R3 and s in (Semantics.STB, Semantics.PRF, Semantics.SEM)
              for i in R for s in (Semantics.NAIVE, Semantics.STB, Semantics.PRF, Semantics.SEM, Semantics.STG)}


def test_criterion_4_imaximality_table(acceptance_report):
    t0 = time.perf_counter()
    problems = []
    entries = catalog()
    for e in entries:
        fam = enumerate_claim_extensions(e.framework, e.reduction, e.semantics)
        if tuple(fam) != e.expected or check_imaximality(fam) != e.violation:
            problems.append(f"catalog {e.name} not reproduced")
    # every failing cell needs a catalog framework with a non-antichain family
    for (i, s), holds in IMAX_HOLDS.items():
        if holds:
            continue
        witnessed = any(e.reduction is i and check_imaximality(enumerate_claim_extensions(e.framework, i, s))
                        for e in entries)
        if not witnessed:
            problems.append(f"no witness for {i}/{s}")
    held = [s for (i, s), h in IMAX_HOLDS.items() if h]
    exhaustive = 0
    for pf in spaces.small_pcafs(max_args=4, max_claims=2, max_pairs=2):
        exhaustive += 1
        for s in held:
            if check_imaximality(enumerate_claim_extensions(pf, Reduction.R3, s)) is not None:
                problems.append(f"R3/{s} violated by {pf}")
    for s in held:
        for transitive in (False, True):
            w = falsify_imaximality(Reduction.R3, s, trials=1000, max_args=7, transitive_only=transitive, seed=4)
            if w is not None:
                problems.append(f"R3/{s} random violation {w}")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 300
    detail = f"{len(entries)} catalog entries, {exhaustive} exhaustive frameworks, 6000 random trials, problems={problems[:3]}"
    acceptance_report(4, "I-maximality table", ok, detail, elapsed)
    assert ok


def test_criterion_5_conflicts_preserved(acceptance_report):
    t0 = time.perf_counter()
    rng = random.Random(5)
    mismatches = 0
    checked = 0
    for trial in range(500):
        pf = random_pcaf(rng, max_args=8, max_claims=4, transitive=trial % 2 == 1)
        args = list(pf.args)
        if len(args) <= 6:
            subsets = oracle.powerset(args)
        else:
            subsets = [frozenset(a for a in args if rng.random() < 0.5) for _ in range(200)]
        for i in (Reduction.R2, Reduction.R3, Reduction.R4):
            red = reduce(pf, i).attacks
            for e in subsets:
                checked += 1
                if oracle.cf(red, e) != oracle.cf(pf.attacks, e):
                    mismatches += 1
            for a, b in itertools.combinations(args, 2):
                before = (a, b) in pf.attacks or (b, a) in pf.attacks
                after = (a, b) in red or (b, a) in red
                if before != after:
                    mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 120
    acceptance_report(5, "conflict preservation under R2-R4", ok,
                      f"{checked} set checks on 500 frameworks, mismatches={mismatches}", elapsed)
    assert ok


def _oracle_families(pf, red):
    return {s: oracle.claim_family(pf.args, red, pf.claim_of, s.value) for s in S}


def _verify_against_oracle(pf, seen, bad):
    """Compare verify with brute force for every reduction, semantics and claim set of ``pf``.

    The package reduction must agree with the definitional one; once it
    does, verification only sees the claim framework and its reduced
    attacks, so frameworks sharing both with an earlier one are not
    re-verified.
    """
    claim_sets = oracle.powerset(sorted(pf.claims)) + [frozenset({"zz"})]
    for i in R:
        red = frozenset(oracle.reduce_attacks(pf.args, pf.attacks, pf.prefs, i.value))
        if reduce(pf, i).attacks != red:
            bad.append((pf, i, "reduce"))
            continue
        key = (pf.caf, i, red)
        if key in seen:
            continue
        seen.add(key)
        fams = _oracle_families(pf, red)
        v = Verifier(pf, i)
        for s in S:
            for c in claim_sets:
                if v.verify(c, s) != (c in fams[s]):
                    bad.append((pf, i, s, c))


def test_criterion_6_verify_matches_brute_force(acceptance_report):
    t0 = time.perf_counter()
    seen = set()
    bad = []
    exhaustive = 0
    for pf in spaces.small_pcafs(max_args=4, max_claims=2):
        exhaustive += 1
        _verify_against_oracle(pf, seen, bad)
    rng = random.Random(6)
    for trial in range(1000):
        pf = random_pcaf(rng, max_args=7, max_claims=4, transitive=trial % 2 == 1)
        _verify_against_oracle(pf, seen, bad)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 600
    acceptance_report(6, "verification against brute force", ok,
                      f"{exhaustive} exhaustive + 1000 random frameworks, {len(seen)} distinct reduced frameworks "
                      f"x 8 semantics x all claim sets, mismatches={len(bad)}", elapsed)
    assert ok, bad[:3]


def _single_claim_separators():
    claims = {"a": AL, "b": AL}
    left = ClaimFramework.build("ab", [("b", "b")], claims)
    middle = ClaimFramework.build("ab", [("b", "a"), ("b", "b")], claims)
    right = ClaimFramework.build("ab", [("a", "b"), ("b", "a"), ("b", "b")], claims)
    return left, middle, right


def _only_in_transitive_r3():
    claims = {"a": AL, "a'": AL, "b": BE, "b'": BE, "c": GA, "c'": GA}
    attacks = [("a", "c"), ("a'", "b"), ("a'", "c"), ("b", "a"), ("b'", "a"), ("b'", "c"), ("c", "b"), ("c'", "b")]
    return ClaimFramework.build(list(claims), attacks, claims)


def test_criterion_7_image_characterizations(acceptance_report):
    t0 = time.perf_counter()
    pairs = [(ImageClass.IM1, Reduction.R1, False), (ImageClass.IM2, Reduction.R2, False),
             (ImageClass.IM3, Reduction.R3, False), (ImageClass.IM4, Reduction.R4, False),
             (ImageClass.IM1_TR, Reduction.R1, True)]
    mismatches = []
    count = 0
    for n, lab, att in spaces.caf_classes(max_args=4, max_claims=2):
        cf = spaces.to_caf(n, lab, att)
        count += 1
        for k, i, tr in pairs:
            found = preimage_search(cf, i, require_transitive=tr)
            if found is not None and (reduce(found, i) != cf or validate(found, tr)):
                mismatches.append(("bad preimage", cf, k))
            if in_image(cf, k) != (found is not None):
                mismatches.append((cf, k))
    left, middle, right = _single_claim_separators()
    expected = {left: {ImageClass.IM1}, middle: {ImageClass.IM2}, right: {ImageClass.IM4}}
    for cf, classes in expected.items():
        got = {k for k in (ImageClass.IM1, ImageClass.IM2, ImageClass.IM3, ImageClass.IM4) if in_image(cf, k)}
        if got != classes:
            mismatches.append(("separator", cf, got))
    sep = _only_in_transitive_r3()
    tr_images = {i for i in R if preimage_search(sep, i, require_transitive=True, max_args=6) is not None}
    if tr_images != {Reduction.R3}:
        mismatches.append(("transitive R3 separator", tr_images))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 600
    acceptance_report(7, "image-class characterizations", ok,
                      f"{count} frameworks x 5 classes + 4 separators, mismatches={len(mismatches)}", elapsed)
    assert ok, mismatches[:3]


def _is_transitive(prefs):
    return set(prefs) == set(transitive_closure(prefs))


def test_criterion_8_hardness_constructions(acceptance_report):
    t0 = time.perf_counter()
    rng = random.Random(8)
    bad = []
    tally = {}
    cnf_generators = {
        "cf/naive": hardgen.gen_cf_naive,
        "stb/adm/com": hardgen.gen_stb_adm_com,
        "com R2": lambda p: hardgen.gen_com_pref(p, 2),
        "com R4": lambda p: hardgen.gen_com_pref(p, 4),
    }
    for name, gen in cnf_generators.items():
        for _ in range(200):
            phi = hardgen.random_cnf(rng, max_vars=6, max_clauses=8)
            inst = gen(phi)
            truth = hardgen.sat_oracle(phi)
            tally[name, truth] = tally.get((name, truth), 0) + 1
            if isinstance(inst.framework, ClaimFramework):
                if not in_image(inst.framework, ImageClass.IM1_TR):
                    bad.append((name, "not in transitive R1 image", phi))
            elif not _is_transitive(inst.framework.prefs) or validate(inst.framework):
                bad.append((name, "preferences not a transitive asymmetric relation", phi))
            for s in inst.semantics:
                if inst.verify(s) != inst.expected_verify(truth):
                    bad.append((name, s, phi))
    for s in (Semantics.PRF, Semantics.SEM, Semantics.STG):
        for _ in range(100):
            Phi = hardgen.random_qbf(rng, max_universal=3, max_existential=3)
            inst = hardgen.gen_qbf(Phi, s)
            truth = hardgen.qbf_oracle(Phi)
            tally[s.value, truth] = tally.get((s.value, truth), 0) + 1
            if not in_image(inst.framework, ImageClass.IM1_TR):
                bad.append((s, "not in transitive R1 image", Phi))
            if inst.verify() != inst.expected_verify(truth):
                bad.append((s, Phi))
    elapsed = time.perf_counter() - t0
    one_sided = [k for k in {n for n, _ in tally} if not (tally.get((k, True)) and tally.get((k, False)))]
    ok = not bad and not one_sided and elapsed < 900
    acceptance_report(8, "hardness constructions", ok,
                      f"800 CNF + 300 QBF instances, mismatches={len(bad)}, generators lacking a yes or no case={one_sided}",
                      elapsed)
    assert ok, bad[:3]


def test_criterion_9_claim_loop_matches_projection(acceptance_report):
    t0 = time.perf_counter()
    rng = random.Random(9)
    bad = []
    brute_checked = 0
    for trial in range(500):
        pf = random_pcaf(rng, max_args=10, max_claims=4, transitive=trial % 2 == 1)
        for i in R:
            red = reduce(pf, i)
            for s in S:
                got = enumerate_claim_extensions(pf, i, s)
                if got != claim_extensions(red, s):
                    bad.append((pf, i, s))
                if len(pf.args) <= 7:
                    brute_checked += 1
                    if set(got) != oracle.pref_family(pf.args, pf.attacks, pf.claim_of, pf.prefs, i.value, s.value):
                        bad.append((pf, i, s, "brute force"))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    acceptance_report(9, "claim-subset enumeration vs projection", ok,
                      f"500 frameworks x 4 reductions x 8 semantics, {brute_checked} also against brute force, "
                      f"mismatches={len(bad)}", elapsed)
    assert ok, bad[:3]
