"""Preferences over arguments and the four ways of folding them into attacks."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .af import Semantics
from .caf import ClaimFramework, claim_extensions, wf_problematic
from .errors import MalformedInputError, PreconditionError


class Reduction(int, Enum):
    """How an attack contradicting a preference is resolved.

    R1 deletes it, R2 reverts it, R3 deletes it only when the stronger side
    attacks back, R4 reverts unanswered ones and deletes answered ones.
    """

    R1 = 1
    R2 = 2
    R3 = 3
    R4 = 4

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        text = str(value).strip().upper().lstrip("R")
        try:
            return cls(int(text))
        except ValueError:
            raise ValueError(f"unknown reduction {value!r}") from None

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Violation:
    kind: str  # "well-formedness", "asymmetry" or "transitivity"
    pairs: tuple

    def __str__(self):
        shown = ", ".join(f"({a},{b})" for a, b in self.pairs)
        return f"{self.kind} violated: {shown}"


class PrefFramework:
    """A claim framework together with a strict preference ``a > b`` relation.

    Construction only checks that preference endpoints exist; the remaining
    invariants are reported by :func:`validate` and enforced by
    :func:`reduce`.
    """

    __slots__ = ("caf", "prefs")

    def __init__(self, caf: ClaimFramework, prefs: Iterable[tuple[str, str]] = ()):
        pairs = set()
        for a, b in prefs:
            for x in (a, b):
                if x not in caf.base:
                    raise MalformedInputError(f"preference {(a, b)!r} mentions unknown argument {x!r}")
            pairs.add((a, b))
        self.caf = caf
        self.prefs = frozenset(pairs)

    @classmethod
    def build(cls, args, attacks=(), claims=None, prefs=()):
        return cls(ClaimFramework.build(args, attacks, claims), prefs)

    def __eq__(self, other):
        return isinstance(other, PrefFramework) and self.caf == other.caf and self.prefs == other.prefs

    def __hash__(self):
        return hash((self.caf, self.prefs))

    def __repr__(self):
        return f"PrefFramework({self.caf!r}, prefs={sorted(self.prefs)!r})"

    @property
    def base(self):
        return self.caf.base

    @property
    def args(self):
        return self.caf.base.args

    @property
    def attacks(self):
        return self.caf.base.attacks

    @property
    def claim_of(self):
        return self.caf.claim_of

    @property
    def claims(self):
        return self.caf.claims

    def pref_masks(self) -> list[int]:
        """``masks[i]`` holds the arguments that argument ``i`` is preferred to."""
        f = self.caf.base
        masks = [0] * f.n
        for a, b in self.prefs:
            masks[f.index(a)] |= 1 << f.index(b)
        return masks


def _asymmetry_violations(prefs):
    return sorted((a, b) for a, b in prefs if (b, a) in prefs and a <= b)


def transitive_closure(prefs: Iterable[tuple[str, str]]) -> frozenset:
    """Smallest transitive superset of ``prefs``.

    Raises PreconditionError when the closure is no longer asymmetric, i.e.
    when the preferences contain a cycle.
    """
    succ: dict[str, set] = {}
    for a, b in prefs:
        succ.setdefault(a, set()).add(b)
    closure = set()
    for start in list(succ):
        stack = list(succ[start])
        seen = set()
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(succ.get(x, ()))
        closure.update((start, x) for x in seen)
    loops = sorted(a for a, b in closure if a == b)
    if loops:
        raise PreconditionError(f"preference cycle through {loops[0]!r}; closure is not asymmetric")
    return frozenset(closure)


def validate(pf: PrefFramework, require_transitive: bool = False) -> list[Violation]:
    """Report every violated framework invariant; an empty list means valid."""
    report = []
    wfp = wf_problematic(pf.caf)
    if wfp:
        report.append(Violation("well-formedness", tuple(sorted(wfp))))
    sym = _asymmetry_violations(pf.prefs)
    if sym:
        report.append(Violation("asymmetry", tuple(sym)))
    if require_transitive:
        p = pf.prefs
        missing = sorted({(a, d) for a, b in p for c, d in p if b == c and (a, d) not in p})
        if missing:
            report.append(Violation("transitivity", tuple(missing)))
    return report


def require_valid(pf: PrefFramework, require_transitive: bool = False) -> None:
    report = validate(pf, require_transitive)
    if report:
        raise PreconditionError("invalid preference framework: " + "; ".join(map(str, report)))


def reduced_out_masks(pf: PrefFramework, i: Reduction) -> list[int]:
    """Out-attack masks of the framework obtained with reduction ``i``."""
    i = Reduction.parse(i)
    f = pf.caf.base
    n = f.n
    pref = pf.pref_masks()
    out = [f.out_mask(a) for a in range(n)]
    new = [0] * n
    for a in range(n):
        for b in range(n):
            ab = out[a] >> b & 1
            ba = out[b] >> a & 1
            a_over_b = pref[a] >> b & 1
            b_over_a = pref[b] >> a & 1
            keep = ab and not b_over_a
            if not keep and i in (Reduction.R2, Reduction.R4):
                keep = ba and not ab and a_over_b
            if not keep and i in (Reduction.R3, Reduction.R4):
                keep = ab and not ba
            if keep:
                new[a] |= 1 << b
    return new


def reduce(pf: PrefFramework, i: Reduction) -> ClaimFramework:
    """The claim framework obtained by resolving preferences with reduction ``i``."""
    require_valid(pf)
    f = pf.caf.base
    masks = reduced_out_masks(pf, i)
    attacks = [(f.args[a], f.args[b]) for a in range(f.n) for b in range(f.n) if masks[a] >> b & 1]
    return pf.caf.with_attacks(attacks)


def pref_extensions(pf: PrefFramework, i: Reduction, s: Semantics) -> list[frozenset]:
    """Claim sets accepted under semantics ``s`` after reduction ``i``."""
    return claim_extensions(reduce(pf, i), s)
