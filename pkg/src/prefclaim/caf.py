"""Claim-augmented frameworks: arguments labelled with the claim they support."""

from __future__ import annotations

from typing import Iterable, Mapping

from .af import ArgFramework, Semantics, bits, sort_sets
from .errors import MalformedInputError


class ClaimFramework:
    """An argumentation framework with a total claim labelling."""

    __slots__ = ("base", "claim_of", "_claims", "_classes")

    def __init__(self, base: ArgFramework, claim_of: Mapping[str, str]):
        labels = {}
        for a in base.args:
            if a not in claim_of:
                raise MalformedInputError(f"argument {a!r} has no claim")
            c = claim_of[a]
            if not isinstance(c, str) or not c:
                raise MalformedInputError(f"claim of {a!r} must be a non-empty string, got {c!r}")
            labels[a] = c
        extra = set(claim_of) - set(labels)
        if extra:
            raise MalformedInputError(f"claim given for unknown argument {sorted(extra)[0]!r}")
        self.base = base
        self.claim_of = labels
        classes: dict[str, int] = {}
        for a, c in labels.items():
            classes[c] = classes.get(c, 0) | 1 << base.index(a)
        self._classes = classes
        self._claims = frozenset(classes)

    @classmethod
    def build(cls, args: Iterable[str], attacks: Iterable[tuple[str, str]] = (), claims: Mapping[str, str] | None = None):
        """Shortcut; arguments without an entry in ``claims`` claim their own name."""
        args = tuple(args)
        claims = dict(claims or {})
        full = {a: claims.get(a, a) for a in args}
        full.update({a: c for a, c in claims.items() if a not in full})
        return cls(ArgFramework(args, attacks), full)

    def __eq__(self, other):
        return isinstance(other, ClaimFramework) and self.base == other.base and self.claim_of == other.claim_of

    def __hash__(self):
        return hash((self.base, frozenset(self.claim_of.items())))

    def __repr__(self):
        return f"ClaimFramework(args={self.base.args!r}, attacks={sorted(self.base.attacks)!r}, claims={self.claim_of!r})"

    @property
    def args(self):
        return self.base.args

    @property
    def attacks(self):
        return self.base.attacks

    @property
    def claims(self) -> frozenset:
        return self._claims

    def claim_class(self, claim: str) -> int:
        """Bitmask of the arguments carrying ``claim`` (0 if unused)."""
        return self._classes.get(claim, 0)

    def claims_of_mask(self, mask: int) -> frozenset:
        args = self.base.args
        return frozenset(self.claim_of[args[i]] for i in bits(mask))

    def claims_of(self, e: Iterable[str]) -> frozenset:
        return frozenset(self.claim_of[a] for a in e)

    def mask_of_claims(self, c: Iterable[str]) -> int:
        m = 0
        for x in c:
            m |= self._classes.get(x, 0)
        return m

    def with_attacks(self, attacks) -> "ClaimFramework":
        return ClaimFramework(ArgFramework(self.base.args, attacks), self.claim_of)


def claim_extensions(cf: ClaimFramework, s: Semantics) -> list[frozenset]:
    """Claim projections of all ``s``-extensions of the underlying framework."""
    return sort_sets(cf.claims_of_mask(m) for m in cf.base.extension_masks(s))


def wf_problematic(cf: ClaimFramework) -> frozenset:
    """Attacks missing for the framework to be well-formed.

    (a, b) is reported when a does not attack b but some argument sharing
    a's claim does.
    """
    f = cf.base
    pairs = set()
    for a in f.args:
        i = f.index(a)
        sibling_targets = 0
        for j in bits(cf.claim_class(cf.claim_of[a])):
            sibling_targets |= f.out_mask(j)
        for j in bits(sibling_targets & ~f.out_mask(i)):
            pairs.add((a, f.args[j]))
    return frozenset(pairs)


def is_well_formed(cf: ClaimFramework) -> bool:
    f = cf.base
    for cls in cf._classes.values():
        outs = {f.out_mask(i) for i in bits(cls)}
        if len(outs) > 1:
            return False
    return True
