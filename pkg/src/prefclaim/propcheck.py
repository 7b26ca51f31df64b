"""I-maximality checks, a random framework sampler and the counterexample catalog."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Optional

from .af import Semantics, sort_sets
from .caf import ClaimFramework
from .pcaf import PrefFramework, Reduction, transitive_closure


def check_imaximality(family: Iterable[Iterable[str]]) -> Optional[tuple[frozenset, frozenset]]:
    """First pair (S, T) with S a proper subset of T, or None for an antichain."""
    ordered = sort_sets(family)
    for s in ordered:
        for t in ordered:
            if s < t:
                return s, t
    return None


def random_pcaf(rng: random.Random, max_args=7, max_claims=4, attack_p=0.35, pref_p=0.3,
                transitive=False, min_args=1) -> PrefFramework:
    """Sample a valid preference framework.

    Claims are drawn first (every claim used at least once), then one
    target set per claim shared by all of its arguments, which makes the
    result well-formed without rejection. Preferences are asymmetric; in
    transitive mode they are the closure of edges consistent with a random
    linear order.
    """
    n = rng.randint(min_args, max_args)
    k = rng.randint(1, min(n, max_claims))
    args = [f"a{j}" for j in range(n)]
    labels = [f"c{j}" for j in range(k)] + [f"c{rng.randrange(k)}" for _ in range(n - k)]
    rng.shuffle(labels)
    claim_of = dict(zip(args, labels))
    targets = {c: [b for b in args if rng.random() < attack_p] for c in sorted(set(labels))}
    attacks = [(a, b) for a in args for b in targets[claim_of[a]]]
    prefs = set()
    if transitive:
        order = args[:]
        rng.shuffle(order)
        for x, y in itertools.combinations(order, 2):
            if rng.random() < pref_p:
                prefs.add((x, y))
        prefs = transitive_closure(prefs)
    else:
        for x, y in itertools.combinations(args, 2):
            if rng.random() < pref_p:
                prefs.add((x, y) if rng.random() < 0.5 else (y, x))
    return PrefFramework(ClaimFramework.build(args, attacks, claim_of), prefs)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    framework: PrefFramework
    reduction: Reduction
    semantics: Semantics
    expected: tuple  # claim sets, sorted
    violation: Optional[tuple] = None


def _entry(name, args, attacks, claims, prefs, i, s, expected, violation=None):
    pf = PrefFramework(ClaimFramework.build(args, attacks, claims), prefs)
    expected = tuple(sort_sets(expected))
    if violation is not None:
        violation = tuple(frozenset(x) for x in violation)
    return CatalogEntry(name, pf, Reduction.parse(i), Semantics.parse(s), expected, violation)


def catalog() -> list[CatalogEntry]:
    """Small frameworks whose accepted claim sets are known, most of them breaking I-maximality."""
    al, be, ga = "alpha", "beta", "gamma"
    ex4 = dict(args=["a", "a'", "b"], attacks=[("a", "b"), ("a'", "b"), ("b", "a")],
               claims={"a": al, "a'": al, "b": be}, prefs=[("b", "a'")])
    entries = [
        _entry("nested-stable-R1", i=1, s="stb", expected=[{al}, {al, be}], violation=({al}, {al, be}), **ex4),
        _entry("nested-stable-R4", ["a", "a'", "b"], [("b", "a")], {"a": al, "a'": al, "b": be},
               [("a", "b")], 4, "stb", [{al}, {al, be}], ({al}, {al, be})),
        _entry("nested-stable-R2", ["a", "a'", "a''", "b", "b'"],
               [("b", "a"), ("b", "a'"), ("b'", "a"), ("b'", "a'")],
               {"a": al, "a'": al, "a''": al, "b": be, "b'": be}, [("a", "b"), ("a'", "b'")],
               2, "stb", [{al}, {al, be}], ({al}, {al, be})),
        _entry("nested-stage-R3", ["a", "a'", "b", "c"],
               [("a", "b"), ("b", "c"), ("c", "a"), ("a'", "b"), ("b", "a'")],
               {"a": al, "a'": al, "b": be, "c": ga}, [("b", "a'")],
               3, "stg", [{al}, {al, ga}, {be}], ({al}, {al, ga})),
        _entry("running-example-R2-STB", i=2, s="stb", expected=[{al}, {be}], **ex4),
    ]
    wf = dict(args=["a", "a'", "b"], attacks=[("b", "a")], claims={"a": al, "a'": al, "b": be}, prefs=[])
    for i in Reduction:
        entries.append(_entry(f"wf-naive-R{i.value}", i=i, s="naive", expected=[{al}, {al, be}],
                              violation=({al}, {al, be}), **wf))
    return entries


def falsify_imaximality(i: Reduction, s: Semantics, trials=1000, max_args=7, max_claims=4,
                        transitive_only=False, seed=0) -> Optional[PrefFramework]:
    """Random search for a framework whose accepted claim sets are not an antichain."""
    from .enumeration import enumerate_claim_extensions

    rng = random.Random(seed)
    for _ in range(trials):
        pf = random_pcaf(rng, max_args=max_args, max_claims=max_claims, transitive=transitive_only)
        if check_imaximality(enumerate_claim_extensions(pf, i, s)) is not None:
            return pf
    return None
