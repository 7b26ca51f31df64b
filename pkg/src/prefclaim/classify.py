"""Which claim frameworks can arise from applying a reduction to a preference framework."""

from __future__ import annotations

from enum import Enum
from itertools import product
from typing import Optional

from .af import bits
from .caf import ClaimFramework, wf_problematic
from .errors import PreconditionError, SearchBudgetExceeded
from .pcaf import PrefFramework, Reduction

DEFAULT_MAX_ARGS = 5


class ImageClass(str, Enum):
    IM1 = "IM1"
    IM2 = "IM2"
    IM3 = "IM3"
    IM4 = "IM4"
    IM1_TR = "IM1_TR"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        return cls(str(value).upper())

    def __str__(self):
        return self.value


def _wfp_reach(cf: ClaimFramework, wfp) -> list[int]:
    """reach[x]: arguments reachable from x by a non-empty path of missing attacks."""
    f = cf.base
    step = [0] * f.n
    for a, b in wfp:
        step[f.index(a)] |= 1 << f.index(b)
    reach = []
    for x in range(f.n):
        seen, frontier = 0, step[x]
        while frontier:
            seen |= frontier
            nxt = 0
            for y in bits(frontier):
                nxt |= step[y]
            frontier = nxt & ~seen
        reach.append(seen)
    return reach


def _four_argument_pattern(cf: ClaimFramework, wfp, answered: bool) -> bool:
    """Search a, a', b, b' forbidden by the R2 (answered=True) or R4 (False) condition."""
    f = cf.base
    R = f.attacks
    claim = cf.claim_of
    for a, b in wfp:
        if (b, a) in R:
            continue
        for a2 in f.args:
            if claim[a2] != claim[a] or (a2, b) not in R:
                continue
            if ((b, a2) in R) == answered:
                return True
            for b2 in f.args:
                if claim[b2] == claim[b] and (a2, b2) not in R and (b2, a2) not in R:
                    return True
    return False


def in_image(cf: ClaimFramework, k: ImageClass) -> bool:
    """Decide membership in an image class from the missing-attack structure alone."""
    k = ImageClass.parse(k)
    wfp = wf_problematic(cf)
    R = cf.base.attacks
    if k is ImageClass.IM1:
        return not any((b, a) in wfp for a, b in wfp)
    if k is ImageClass.IM3:
        return all((b, a) in R for a, b in wfp)
    if k is ImageClass.IM2:
        return not _four_argument_pattern(cf, wfp, answered=True)
    if k is ImageClass.IM4:
        return not _four_argument_pattern(cf, wfp, answered=False)
    f = cf.base
    reach = _wfp_reach(cf, wfp)
    if any(reach[x] >> x & 1 for x in range(f.n)):
        return False
    return not any(reach[f.index(a)] >> f.index(b) & 1 for a, b in R)


def transitive_preimage_r1(cf: ClaimFramework) -> PrefFramework:
    """A transitive-preference framework that R1 maps onto ``cf``.

    Every missing attack is added back, and b is preferred to a exactly when
    a reaches b through missing attacks.
    """
    if not in_image(cf, ImageClass.IM1_TR):
        raise PreconditionError("framework is not the R1 image of any transitive preference framework")
    wfp = wf_problematic(cf)
    f = cf.base
    reach = _wfp_reach(cf, wfp)
    prefs = [(f.args[b], f.args[a]) for a in range(f.n) for b in bits(reach[a])]
    return PrefFramework(cf.with_attacks(f.attacks | wfp), prefs)


# pair options: 0 = no preference, 1 = first preferred, 2 = second preferred
def _reduce_pair(i: Reduction, ab: bool, ba: bool, opt: int) -> tuple[bool, bool]:
    def one(xy, yx, x_over_y, y_over_x):
        keep = xy and not y_over_x
        if i in (Reduction.R2, Reduction.R4):
            keep = keep or (yx and not xy and x_over_y)
        if i in (Reduction.R3, Reduction.R4):
            keep = keep or (xy and not yx)
        return bool(keep)

    return one(ab, ba, opt == 1, opt == 2), one(ba, ab, opt == 2, opt == 1)


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise SearchBudgetExceeded(self.nodes)


def preimage_search(cf: ClaimFramework, i: Reduction, require_transitive: bool = False,
                    budget: Optional[int] = None, max_args: int = DEFAULT_MAX_ARGS) -> Optional[PrefFramework]:
    """Exhaustively look for a preference framework that reduction ``i`` maps onto ``cf``.

    Candidate attack relations are exactly the well-formed ones: one bit per
    (claim, target) telling whether that claim's arguments attack the target.
    Each unordered argument pair constrains its two bits through the three
    possible preference choices on it. Returns None when no preimage exists
    and raises SearchBudgetExceeded when ``budget`` nodes did not suffice.
    """
    i = Reduction.parse(i)
    f = cf.base
    n = f.n
    if n > max_args:
        raise PreconditionError(f"preimage search limited to {max_args} arguments, got {n}")
    claims = sorted(cf.claims)
    cid = {c: j for j, c in enumerate(claims)}
    cl = [cid[cf.claim_of[a]] for a in f.args]
    R = [[bool(f.out_mask(a) >> b & 1) for b in range(n)] for a in range(n)]
    budget_ = _Budget(budget)

    def var(a, b):  # the bit deciding whether a attacks b before reduction
        return cl[a] * n + b

    # allowed (bit(a,b), bit(b,a)) combinations and options per unordered pair
    pair_opts = {}
    for a in range(n):
        for b in range(a + 1, n):
            table = {}
            for ab, ba, opt in product((False, True), (False, True), (0, 1, 2)):
                if _reduce_pair(i, ab, ba, opt) == (R[a][b], R[b][a]):
                    table.setdefault((ab, ba), []).append(opt)
            pair_opts[a, b] = table

    nvars = len(claims) * n
    constraints = [[] for _ in range(nvars)]
    fixed = {}
    for a in range(n):
        v = var(a, a)
        if fixed.get(v, R[a][a]) != R[a][a]:
            return None
        fixed[v] = R[a][a]
    for (a, b) in pair_opts:
        u, w = var(a, b), var(b, a)
        later = max(u, w)
        constraints[later].append((a, b, u, w))
    preferred_first = [any(R[a][t] for a in range(n) if cl[a] == c) for c in range(len(claims)) for t in range(n)]
    value = [None] * nvars

    def consistent(v):
        for a, b, u, w in constraints[v]:
            if (value[u], value[w]) not in pair_opts[a, b]:
                return False
        return True

    def assignments(v):
        if v == nvars:
            yield list(value)
            return
        choices = (fixed[v],) if v in fixed else (preferred_first[v], not preferred_first[v])
        for x in choices:
            budget_.tick()
            value[v] = x
            if consistent(v):
                yield from assignments(v + 1)
        value[v] = None

    for assign in assignments(0):
        options = {p: t[assign[var(*p)], assign[var(p[1], p[0])]] for p, t in pair_opts.items()}
        prefs = _choose_prefs(options, n, require_transitive, budget_)
        if prefs is None:
            continue
        attacks = [(f.args[a], f.args[b]) for a in range(n) for b in range(n) if assign[var(a, b)]]
        pref_names = [(f.args[x], f.args[y]) for x, y in prefs]
        return PrefFramework(cf.with_attacks(attacks), pref_names)
    return None


def _choose_prefs(options, n, transitive, budget_):
    """Pick one option per pair; in transitive mode the closure must stay consistent."""
    if not transitive:
        out = []
        for (a, b), opts in options.items():
            o = 0 if 0 in opts else opts[0]
            if o == 1:
                out.append((a, b))
            elif o == 2:
                out.append((b, a))
        return out
    constrained = [(p, opts) for p, opts in options.items() if len(opts) < 3]
    forbidden_pairs = set()

    def closure_ok(edges):
        succ = [0] * n
        for x, y in edges:
            succ[x] |= 1 << y
        changed = True
        while changed:
            changed = False
            for x in range(n):
                acc = succ[x]
                for y in bits(succ[x]):
                    acc |= succ[y]
                if acc != succ[x]:
                    succ[x] = acc
                    changed = True
        for x in range(n):
            if succ[x] >> x & 1:
                return False
        for a, b in forbidden_pairs:
            if succ[a] >> b & 1 or succ[b] >> a & 1:
                return False
        return True

    edges = []

    def rec(j):
        if j == len(constrained):
            return True
        (a, b), opts = constrained[j]
        for o in opts:
            budget_.tick()
            if o == 0:
                forbidden_pairs.add((a, b))
            else:
                edges.append((a, b) if o == 1 else (b, a))
            if closure_ok(edges) and rec(j + 1):
                return True
            if o == 0:
                forbidden_pairs.discard((a, b))
            else:
                edges.pop()
        return False

    if not rec(0):
        return None
    succ_edges = set(edges)
    # close transitively so the returned relation is itself transitive
    changed = True
    while changed:
        changed = False
        for x, y in list(succ_edges):
            for y2, z in list(succ_edges):
                if y == y2 and (x, z) not in succ_edges:
                    succ_edges.add((x, z))
                    changed = True
    return sorted(succ_edges)
