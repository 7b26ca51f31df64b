"""Abstract argumentation frameworks and the eight extension semantics.

Arguments are named by non-empty strings at the API boundary and mapped to
dense indices internally; sets of arguments are handled as integer bitmasks
by the search routines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from .errors import MalformedInputError

__all__ = [
    "Semantics",
    "ArgFramework",
    "attacked_set",
    "defends",
    "is_extension",
    "extensions",
    "sort_sets",
    "bits",
]


class Semantics(str, Enum):
    CF = "cf"
    ADM = "adm"
    COM = "com"
    NAIVE = "naive"
    STB = "stb"
    PRF = "prf"
    SEM = "sem"
    STG = "stg"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown semantics {value!r}") from None

    def __str__(self):
        return self.value


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def sort_sets(sets: Iterable[Iterable[str]]) -> list[frozenset]:
    """Deduplicate and order sets lexicographically by their sorted members."""
    unique = {frozenset(s) for s in sets}
    return sorted(unique, key=lambda s: tuple(sorted(s)))


@dataclass(frozen=True)
class ArgFramework:
    args: tuple
    attacks: frozenset
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _out: tuple = field(init=False, repr=False, compare=False, hash=False)
    _in: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, args: Iterable[str] = (), attacks: Iterable[tuple[str, str]] = ()):
        args = tuple(args)
        index = {}
        for a in args:
            if not isinstance(a, str) or not a:
                raise MalformedInputError(f"argument names must be non-empty strings, got {a!r}")
            if a in index:
                raise MalformedInputError(f"duplicate argument {a!r}")
            index[a] = len(index)
        out = [0] * len(args)
        inn = [0] * len(args)
        pairs = set()
        for pair in attacks:
            a, b = pair
            if a not in index or b not in index:
                missing = a if a not in index else b
                raise MalformedInputError(f"attack {(a, b)!r} mentions unknown argument {missing!r}")
            pairs.add((a, b))
            out[index[a]] |= 1 << index[b]
            inn[index[b]] |= 1 << index[a]
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "attacks", frozenset(pairs))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_out", tuple(out))
        object.__setattr__(self, "_in", tuple(inn))

    def __len__(self):
        return len(self.args)

    def __contains__(self, a):
        return a in self._index

    @property
    def n(self) -> int:
        return len(self.args)

    @property
    def full(self) -> int:
        return (1 << len(self.args)) - 1

    def index(self, a: str) -> int:
        try:
            return self._index[a]
        except KeyError:
            raise MalformedInputError(f"unknown argument {a!r}") from None

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for a in names:
            m |= 1 << self.index(a)
        return m

    def names(self, mask: int) -> frozenset:
        return frozenset(self.args[i] for i in bits(mask))

    def attacks_pair(self, a: str, b: str) -> bool:
        return bool(self._out[self.index(a)] >> self.index(b) & 1)

    def attackers(self, a: str) -> frozenset:
        return self.names(self._in[self.index(a)])

    def targets(self, a: str) -> frozenset:
        return self.names(self._out[self.index(a)])

    # ---- bitmask primitives -------------------------------------------

    def out_mask(self, i: int) -> int:
        return self._out[i]

    def in_mask(self, i: int) -> int:
        return self._in[i]

    def attacked(self, s: int) -> int:
        out = self._out
        m = 0
        for i in bits(s):
            m |= out[i]
        return m

    def attackers_of_set(self, s: int) -> int:
        inn = self._in
        m = 0
        for i in bits(s):
            m |= inn[i]
        return m

    def range_of(self, s: int) -> int:
        return s | self.attacked(s)

    def conflict_free(self, s: int) -> bool:
        out = self._out
        for i in bits(s):
            if out[i] & s:
                return False
        return True

    def defended(self, s: int) -> int:
        """Mask of all arguments defended by ``s``."""
        hit = self.attacked(s)
        inn = self._in
        m = 0
        for i in range(len(self.args)):
            if not inn[i] & ~hit:
                m |= 1 << i
        return m

    def admissible(self, s: int) -> bool:
        return self.conflict_free(s) and not self.attackers_of_set(s) & ~self.attacked(s)

    def complete(self, s: int) -> bool:
        return self.admissible(s) and not self.defended(s) & ~s

    def stable(self, s: int) -> bool:
        return self.conflict_free(s) and self.range_of(s) == self.full

    def naive(self, s: int) -> bool:
        if not self.conflict_free(s):
            return False
        for x in bits(self.full & ~s):
            if not self._conflicts_with(x, s):
                return False
        return True

    def _conflicts_with(self, x: int, s: int) -> bool:
        return bool(self._out[x] >> x & 1 or (self._out[x] | self._in[x]) & s)

    def search(self, *, admissible=False, lo=0, hi=None, cover=0, maximal=False, hitting=()) -> Iterator[int]:
        """Yield every conflict-free set ``s`` with ``lo <= s <= hi``.

        ``admissible`` restricts to admissible sets, ``cover`` demands
        ``cover`` be inside the range of ``s`` and ``maximal`` demands that no
        argument of ``hi`` outside ``s`` can be added without conflict.
        Every mask in ``hitting`` must intersect ``s``.
        Partial assignments are pruned against an over-approximation of what
        they can still reach.
        """
        if hi is None:
            hi = self.full
        hi |= lo
        if not self.conflict_free(lo):
            return
        out, inn = self._out, self._in
        loops = 0
        for i in range(len(self.args)):
            if out[i] >> i & 1:
                loops |= 1 << i
        nbr = [out[i] | inn[i] for i in range(len(self.args))]
        order = list(bits(hi & ~lo))

        def rec(pos, s, rejected):
            # arguments still able to join s
            addable = 0
            for x in order[pos:]:
                if not (loops >> x & 1) and not nbr[x] & s:
                    addable |= 1 << x
            pot = s | addable
            for h in hitting:
                if not h & pot:
                    return
            if admissible or cover:
                reach = self.attacked(pot)
                if admissible and self.attackers_of_set(s) & ~reach:
                    return
                if cover & ~(pot | reach):
                    return
            if maximal:
                for x in bits(rejected):
                    if not (loops >> x & 1) and not nbr[x] & pot:
                        return
            if pos == len(order):
                if admissible and self.attackers_of_set(s) & ~self.attacked(s):
                    return
                if cover & ~self.range_of(s):
                    return
                yield s
                return
            x = order[pos]
            bit = 1 << x
            if addable & bit:
                yield from rec(pos + 1, s | bit, rejected)
            yield from rec(pos + 1, s, rejected | bit)

        yield from rec(0, lo, self.full & ~hi)

    def extension_masks(self, sem: Semantics) -> list[int]:
        sem = Semantics.parse(sem)
        if sem is Semantics.CF:
            return list(self.search())
        if sem is Semantics.ADM:
            return list(self.search(admissible=True))
        if sem is Semantics.COM:
            return [s for s in self.search(admissible=True) if not self.defended(s) & ~s]
        if sem is Semantics.STB:
            return list(self.search(cover=self.full))
        if sem is Semantics.NAIVE:
            return list(self.search(maximal=True))
        if sem is Semantics.PRF:
            return _subset_maximal(list(self.search(admissible=True)))
        if sem is Semantics.SEM:
            return _range_maximal(self, self.extension_masks(Semantics.PRF))
        if sem is Semantics.STG:
            return _range_maximal(self, self.extension_masks(Semantics.NAIVE))
        raise AssertionError(sem)

    def is_extension_mask(self, s: int, sem: Semantics) -> bool:
        sem = Semantics.parse(sem)
        if sem is Semantics.CF:
            return self.conflict_free(s)
        if sem is Semantics.ADM:
            return self.admissible(s)
        if sem is Semantics.COM:
            return self.complete(s)
        if sem is Semantics.STB:
            return self.stable(s)
        if sem is Semantics.NAIVE:
            return self.naive(s)
        if sem is Semantics.PRF:
            return self.admissible(s) and not any(t != s for t in self.search(admissible=True, lo=s))
        if sem is Semantics.SEM:
            if not self.admissible(s):
                return False
            r = self.range_of(s)
            return not any(self.range_of(t) != r for t in self.search(admissible=True, cover=r))
        if sem is Semantics.STG:
            if not self.conflict_free(s):
                return False
            r = self.range_of(s)
            return not any(self.range_of(t) != r for t in self.search(cover=r))
        raise AssertionError(sem)


def _subset_maximal(masks: list[int]) -> list[int]:
    kept = []
    for s in sorted(set(masks), key=lambda m: -m.bit_count()):
        if not any(s & k == s for k in kept):
            kept.append(s)
    return kept


def _range_maximal(f: ArgFramework, masks: list[int]) -> list[int]:
    ranges = {s: f.range_of(s) for s in masks}
    kept = []
    for s, r in ranges.items():
        if not any(r & q == r and r != q for q in ranges.values()):
            kept.append(s)
    return kept


def _check_members(f: ArgFramework, e: Iterable[str]) -> int:
    return f.mask(e)


def attacked_set(f: ArgFramework, e: Iterable[str]) -> frozenset:
    """Arguments attacked by some member of ``e``."""
    return f.names(f.attacked(_check_members(f, e)))


def defends(f: ArgFramework, e: Iterable[str], x: str) -> bool:
    """True iff every attacker of ``x`` is attacked by ``e``."""
    s = _check_members(f, e)
    return not f.in_mask(f.index(x)) & ~f.attacked(s)


def is_extension(f: ArgFramework, e: Iterable[str], sem: Semantics) -> bool:
    return f.is_extension_mask(_check_members(f, e), sem)


def extensions(f: ArgFramework, sem: Semantics) -> list[frozenset]:
    """All ``sem``-extensions of ``f``, ordered by sorted member names."""
    return sort_sets(f.names(s) for s in f.extension_masks(sem))
