"""Maximal realizations of claim sets and claim-set verification.

For reductions R2-R4 every conflict-free (admissible) claim set has a unique
largest conflict-free (admissible) argument set realizing it. Both are
computed by a short fixed-point iteration, which turns most verification
questions into a polynomial check. Everything else falls back to search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .af import ArgFramework, Semantics, bits
from .errors import UnsupportedReductionError
from .pcaf import PrefFramework, Reduction, reduce


@dataclass(frozen=True)
class RealizationTrace:
    e0: frozenset
    e1: frozenset
    chain: tuple
    estar: frozenset


def _first_pruning(f: ArgFramework, e0: int) -> int:
    return e0 & ~f.attacked(e0)


def _defense_fixpoint(red: ArgFramework, e: int) -> list[int]:
    """Drop undefended arguments until nothing changes; returns E2, E3, ..."""
    chain = []
    while True:
        nxt = e & red.defended(e)
        chain.append(nxt)
        if nxt == e:
            return chain
        e = nxt


def _check_fixpoint_reduction(i: Reduction) -> Reduction:
    i = Reduction.parse(i)
    if i is Reduction.R1:
        raise UnsupportedReductionError(
            "maximal realizations are not unique under R1; use verify(), which searches instead"
        )
    return i


def realization(pf: PrefFramework, c: Iterable[str], i: Reduction) -> RealizationTrace:
    """Trace the fixed-point construction of the maximal admissible realization of ``c``."""
    i = _check_fixpoint_reduction(i)
    red = reduce(pf, i).base
    f = pf.caf.base
    e0 = pf.caf.mask_of_claims(c)
    e1 = _first_pruning(f, e0)
    chain = _defense_fixpoint(red, e1)
    return RealizationTrace(
        e0=f.names(e0),
        e1=f.names(e1),
        chain=tuple(f.names(m) for m in chain),
        estar=f.names(chain[-1]),
    )


class Verifier:
    """Verification state for one framework and reduction, reusable across claim sets and semantics."""

    def __init__(self, pf: PrefFramework, i: Reduction):
        self.pf = pf
        self.i = Reduction.parse(i)
        self.f = pf.caf.base
        self.red = reduce(pf, self.i).base

    def e1(self, cmask: int) -> int:
        return _first_pruning(self.f, cmask)

    def estar(self, cmask: int) -> int:
        return _defense_fixpoint(self.red, self.e1(cmask))[-1]

    def claims(self, mask: int) -> frozenset:
        return self.pf.caf.claims_of_mask(mask)

    def verify(self, c: Iterable[str], s: Semantics) -> bool:
        c, s = frozenset(c), Semantics.parse(s)
        if not c <= self.pf.caf.claims:
            return False
        cmask = self.pf.caf.mask_of_claims(c)
        i, red = self.i, self.red
        if i is Reduction.R1 or (s is Semantics.COM and i is not Reduction.R3):
            return self.search(c, cmask, s)
        if s in (Semantics.CF, Semantics.NAIVE, Semantics.STG):
            e = self.e1(cmask)
            if self.claims(e) != c:
                return False
            if s is Semantics.CF:
                return True
            return red.is_extension_mask(e, s)
        e = self.estar(cmask)
        if self.claims(e) != c:
            return False
        if s is Semantics.ADM:
            return True
        return red.is_extension_mask(e, s)

    def search(self, c: frozenset, cmask: int, s: Semantics) -> bool:
        """Look for an ``s``-extension of the reduced framework with claims exactly ``c``."""
        red = self.red
        hitting = tuple(self.pf.caf.claim_class(x) for x in sorted(c))
        admissible = s in (Semantics.ADM, Semantics.COM, Semantics.PRF, Semantics.SEM)
        cover = red.full if s is Semantics.STB else 0
        maximal = s in (Semantics.NAIVE, Semantics.STG)
        # isolated arguments can join any extension, so fixing them in loses nothing
        isolated = 0
        for x in bits(cmask):
            if not red.out_mask(x) and not red.in_mask(x):
                isolated |= 1 << x
        found = red.search(admissible=admissible, lo=isolated, hi=cmask, cover=cover, maximal=maximal,
                           hitting=hitting)
        for e in found:
            if s in (Semantics.CF, Semantics.ADM, Semantics.STB) or red.is_extension_mask(e, s):
                return True
        return False


def verify(pf: PrefFramework, i: Reduction, c: Iterable[str], s: Semantics) -> bool:
    """Decide whether claim set ``c`` is accepted under reduction ``i`` and semantics ``s``."""
    return Verifier(pf, i).verify(c, s)
