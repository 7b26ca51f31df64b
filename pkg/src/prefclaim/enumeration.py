"""Claim-level enumeration and acceptance queries.

Under R2-R4 the claim sets are enumerated by looping over all subsets of the
claim alphabet and verifying each with the fixed-point machinery, so the cost
is exponential only in the number of distinct claims. R1, and complete
semantics under R2/R4, fall back to argument-level enumeration.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .af import Semantics, sort_sets
from .caf import claim_extensions
from .errors import ResourceLimitError
from .pcaf import PrefFramework, Reduction, reduce, require_valid
from .realize import Verifier

MAX_CLAIMS = 20
MAX_ARGS = 64

_DIRECT = (Semantics.CF, Semantics.ADM, Semantics.NAIVE, Semantics.STB)


@dataclass
class TaskResult:
    kind: str  # ENUM, CRED, SKEP or VER
    payload: object
    candidates: int = 0
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)


def _uses_claim_loop(i: Reduction, s: Semantics) -> bool:
    if i is Reduction.R1:
        return False
    return s is not Semantics.COM or i is Reduction.R3


def _check_caps(pf, max_claims, max_args):
    k, n = len(pf.caf.claims), pf.caf.base.n
    if k > max_claims:
        raise ResourceLimitError(f"{k} claims exceed the limit of {max_claims}")
    if n > max_args:
        raise ResourceLimitError(f"{n} arguments exceed the limit of {max_args}")


def _subset(claims, bitsel):
    return frozenset(c for j, c in enumerate(claims) if bitsel >> j & 1)


def _scan(pf, i, s, start, stop):
    """Per-subset data for claim-subset indices in ``[start, stop)``.

    Direct semantics yield the accepted subset indices. Maximality-based
    ones yield (index, witness mask, range mask) for every subset that is
    realizable at all.
    """
    v = Verifier(pf, i)
    claims = sorted(pf.caf.claims)
    out = []
    for sel in range(start, stop):
        c = _subset(claims, sel)
        if s in _DIRECT or s is Semantics.COM:
            if v.verify(c, s):
                out.append(sel)
            continue
        cmask = pf.caf.mask_of_claims(c)
        e = v.e1(cmask) if s is Semantics.STG else v.estar(cmask)
        if v.claims(e) == c:
            out.append((sel, e, v.red.range_of(e)))
    return out


def _run_scan(pf, i, s, jobs):
    total = 1 << len(pf.caf.claims)
    if jobs <= 1 or total < 64:
        return _scan(pf, i, s, 0, total)
    step = -(-total // jobs)
    bounds = [(a, min(a + step, total)) for a in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_scan, *zip(*[(pf, i, s, a, b) for a, b in bounds]))
        # chunks come back in submission order, so the merge is deterministic
        return [x for part in parts for x in part]


def _strictly_below(x, y):
    return x & y == x and x != y


def _fast_preferred(pf, i):
    """Preferred claim sets as the subset-maximal admissible ones (valid under R3)."""
    v = Verifier(pf, i)
    claims = sorted(pf.caf.claims)
    found = []
    examined = 0
    for sel in sorted(range(1 << len(claims)), key=lambda m: (-m.bit_count(), m)):
        if any(sel & f == sel for f in found):
            continue
        examined += 1
        if v.verify(_subset(claims, sel), Semantics.ADM):
            found.append(sel)
    return [_subset(claims, sel) for sel in found], examined


def enumerate_task(pf: PrefFramework, i: Reduction, s: Semantics, *, jobs=1, fast_prf=False,
                   max_claims=MAX_CLAIMS, max_args=MAX_ARGS) -> TaskResult:
    t0 = time.perf_counter()
    i, s = Reduction.parse(i), Semantics.parse(s)
    require_valid(pf)
    _check_caps(pf, max_claims, max_args)
    claims = sorted(pf.caf.claims)
    if not _uses_claim_loop(i, s):
        family = claim_extensions(reduce(pf, i), s)
        return TaskResult("ENUM", family, 0, time.perf_counter() - t0, {"method": "argument-level"})
    if fast_prf and s is Semantics.PRF and i is Reduction.R3:
        family, examined = _fast_preferred(pf, i)
        return TaskResult("ENUM", sort_sets(family), examined, time.perf_counter() - t0, {"method": "claim-loop"})
    rows = _run_scan(pf, i, s, jobs)
    if s in _DIRECT or s is Semantics.COM:
        family = [_subset(claims, sel) for sel in rows]
    else:
        # maximal among the realizations, by set for prf and by range otherwise
        key = 1 if s is Semantics.PRF else 2
        keys = [r[key] for r in rows]
        family = [_subset(claims, r[0]) for r in rows if not any(_strictly_below(r[key], q) for q in keys)]
    return TaskResult("ENUM", sort_sets(family), 1 << len(claims), time.perf_counter() - t0, {"method": "claim-loop"})


def enumerate_claim_extensions(pf: PrefFramework, i: Reduction, s: Semantics, **kw) -> list[frozenset]:
    """All claim sets accepted under reduction ``i`` and semantics ``s``, sorted."""
    return enumerate_task(pf, i, s, **kw).payload


def credulous(pf: PrefFramework, i: Reduction, s: Semantics, claim: str, **kw) -> bool:
    """Is ``claim`` contained in some accepted claim set?"""
    i, s = Reduction.parse(i), Semantics.parse(s)
    if claim not in pf.caf.claims:
        return False
    if _uses_claim_loop(i, s) and (s in _DIRECT or s is Semantics.COM):
        require_valid(pf)
        _check_caps(pf, kw.get("max_claims", MAX_CLAIMS), kw.get("max_args", MAX_ARGS))
        v = Verifier(pf, i)
        claims = sorted(pf.caf.claims)
        bit = 1 << claims.index(claim)
        return any(v.verify(_subset(claims, sel), s) for sel in range(1 << len(claims)) if sel & bit)
    return any(claim in c for c in enumerate_claim_extensions(pf, i, s, **kw))


def skeptical(pf: PrefFramework, i: Reduction, s: Semantics, claim: str, **kw) -> bool:
    """Is ``claim`` contained in every accepted claim set? Vacuously true if there are none."""
    return all(claim in c for c in enumerate_claim_extensions(pf, i, s, **kw))
