"""Reading and writing frameworks in a one-fact-per-line text format.

    arg(a).  claim(a, alpha).  att(a, b).  pref(a, b).   # a preferred to b

Everything after ``#`` is a comment.
"""

from __future__ import annotations

import re

from .caf import ClaimFramework, wf_problematic
from .errors import MalformedInputError, ParseError
from .pcaf import PrefFramework

_FACT = re.compile(r"\s*([A-Za-z_]+)\s*\(([^()]*)\)\s*\.\s*$")
_NAME = re.compile(r"[^\s,()#]+")
_ARITY = {"arg": 1, "claim": 2, "att": 2, "pref": 2}


class _Facts:
    def __init__(self):
        self.args = []
        self.arg_line = {}
        self.claims = {}
        self.attacks = []
        self.prefs = []


def _parse_facts(text: str) -> _Facts:
    facts = _Facts()
    claim_line = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        m = _FACT.match(line)
        if not m:
            raise ParseError("expected a fact such as 'att(a, b).'", lineno, col)
        pred = m.group(1)
        if pred not in _ARITY:
            raise ParseError(f"unknown predicate {pred!r}", lineno, col)
        parts = [p.strip() for p in m.group(2).split(",")]
        if len(parts) != _ARITY[pred]:
            raise ParseError(f"{pred} takes {_ARITY[pred]} argument(s), got {len(parts)}", lineno, col)
        for p in parts:
            if not _NAME.fullmatch(p):
                where = line.find(p) + 1 if p else m.start(2) + 1
                raise ParseError(f"invalid name {p!r}", lineno, where)
        if pred == "arg":
            (a,) = parts
            if a in facts.arg_line:
                raise ParseError(f"argument {a!r} declared twice (first on line {facts.arg_line[a]})", lineno, col)
            facts.args.append(a)
            facts.arg_line[a] = lineno
        elif pred == "claim":
            a, c = parts
            if a in facts.claims:
                raise ParseError(f"argument {a!r} already has a claim (line {claim_line[a]})", lineno, col)
            facts.claims[a] = c
            claim_line[a] = lineno
        else:
            (facts.attacks if pred == "att" else facts.prefs).append((parts[0], parts[1], lineno))
    for a, line in claim_line.items():
        if a not in facts.arg_line:
            raise ParseError(f"claim given for undeclared argument {a!r}", line)
    for kind, items in (("att", facts.attacks), ("pref", facts.prefs)):
        for a, b, line in items:
            for x in (a, b):
                if x not in facts.arg_line:
                    raise ParseError(f"{kind} mentions undeclared argument {x!r}", line)
    return facts


def _claims(facts: _Facts, implicit_claims: bool) -> dict:
    claims = dict(facts.claims)
    for a in facts.args:
        if a not in claims:
            if not implicit_claims:
                raise ParseError(f"argument {a!r} has no claim (use implicit claims to default it to its name)",
                                 facts.arg_line[a])
            claims[a] = a
    return claims


def parse_caf(text: str, implicit_claims: bool = False) -> ClaimFramework:
    """A claim framework; well-formedness is not required and preferences are rejected."""
    facts = _parse_facts(text)
    if facts.prefs:
        raise ParseError("preferences are not allowed in a claim framework", facts.prefs[0][2])
    try:
        return ClaimFramework.build(facts.args, [(a, b) for a, b, _ in facts.attacks], _claims(facts, implicit_claims))
    except MalformedInputError as e:  # pragma: no cover - parse checks come first
        raise ParseError(str(e)) from None


def parse_pcaf(text: str, implicit_claims: bool = False) -> PrefFramework:
    """A preference framework; asymmetry and well-formedness violations are parse errors."""
    facts = _parse_facts(text)
    seen = {}
    for a, b, line in facts.prefs:
        if (b, a) in seen or a == b:
            raise ParseError(f"preferences are not asymmetric: ({a},{b}) conflicts with ({b},{a})", line)
        seen[a, b] = line
    caf = ClaimFramework.build(facts.args, [(a, b) for a, b, _ in facts.attacks], _claims(facts, implicit_claims))
    wfp = sorted(wf_problematic(caf), key=lambda p: (caf.base.index(p[0]), caf.base.index(p[1])))
    if wfp:
        a, b = wfp[0]
        sib = next(x for x in caf.args if caf.claim_of[x] == caf.claim_of[a] and (x, b) in caf.attacks)
        line = facts.arg_line[a]
        raise ParseError(f"not well-formed: {sib!r} attacks {b!r} but {a!r} with the same claim "
                         f"{caf.claim_of[a]!r} does not", line)
    return PrefFramework(caf, [(a, b) for a, b, _ in facts.prefs])


def _ordered_pairs(f, pairs):
    return sorted(pairs, key=lambda p: (f.index(p[0]), f.index(p[1])))


def render_caf(cf: ClaimFramework) -> str:
    f = cf.base
    lines = [f"arg({a})." for a in f.args]
    lines += [f"claim({a}, {cf.claim_of[a]})." for a in f.args]
    lines += [f"att({a}, {b})." for a, b in _ordered_pairs(f, f.attacks)]
    return "\n".join(lines) + ("\n" if lines else "")


def render_pcaf(pf: PrefFramework) -> str:
    """Canonical text form; parsing it gives back an equal framework."""
    lines = [render_caf(pf.caf).rstrip("\n")] if pf.args else []
    lines += [f"pref({a}, {b})." for a, b in _ordered_pairs(pf.caf.base, pf.prefs)]
    return "\n".join(lines) + ("\n" if lines else "")


def format_claim_set(c) -> str:
    return "[" + ",".join(sorted(c)) + "]"
