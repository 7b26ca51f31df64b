"""Argumentation instances built from SAT and 2QBF formulas.

Each generator encodes a formula so that a single claim-set verification
query answers the satisfiability (or validity) question. Together with the
brute-force oracles below they give instances with a known answer.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Union

from .af import Semantics
from .caf import ClaimFramework
from .classify import transitive_preimage_r1
from .errors import ParseError, PreconditionError, ResourceLimitError
from .pcaf import PrefFramework, Reduction
from .realize import Verifier

ORACLE_MAX_VARS = 20

Literal = tuple  # (variable, positive)


@dataclass(frozen=True)
class CnfFormula:
    variables: tuple
    clauses: tuple  # of tuples of literals, duplicates removed, order kept

    def __init__(self, variables: Iterable[str], clauses: Iterable[Iterable[Literal]]):
        variables = tuple(dict.fromkeys(variables))
        known = set(variables)
        cleaned = []
        for clause in clauses:
            lits = tuple(dict.fromkeys((str(v), bool(p)) for v, p in clause))
            if not lits:
                raise PreconditionError("empty clause")
            if len(lits) > 3:
                raise PreconditionError(f"clause {len(cleaned) + 1} has {len(lits)} literals; at most 3 allowed")
            for v, _ in lits:
                if v not in known:
                    raise PreconditionError(f"clause {len(cleaned) + 1} uses undeclared variable {v!r}")
            cleaned.append(lits)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "clauses", tuple(cleaned))

    def satisfied_by(self, true_vars) -> bool:
        return all(any((v in true_vars) == p for v, p in c) for c in self.clauses)

    def __str__(self):
        return " & ".join("(" + " | ".join(("" if p else "-") + v for v, p in c) + ")" for c in self.clauses)


@dataclass(frozen=True)
class Qbf2Formula:
    """forall universals, exists existentials: matrix."""

    universals: tuple
    existentials: tuple
    matrix: CnfFormula

    def __init__(self, universals: Iterable[str], existentials: Iterable[str], matrix: CnfFormula):
        universals, existentials = tuple(universals), tuple(existentials)
        if set(universals) & set(existentials):
            raise PreconditionError("a variable cannot be both universal and existential")
        if set(matrix.variables) - set(universals) - set(existentials):
            raise PreconditionError("matrix variable left unquantified")
        object.__setattr__(self, "universals", universals)
        object.__setattr__(self, "existentials", existentials)
        object.__setattr__(self, "matrix", matrix)


@dataclass
class HardInstance:
    framework: Union[PrefFramework, ClaimFramework]
    target: frozenset
    reduction: Reduction
    semantics: tuple
    polarity: str  # "SAT": satisfiable iff verify holds; "VALID": valid iff verify fails
    metadata: dict = field(default_factory=dict)

    def pcaf(self) -> PrefFramework:
        """The framework as a preference framework; constructed CAFs get their R1 preimage."""
        if isinstance(self.framework, PrefFramework):
            return self.framework
        return transitive_preimage_r1(self.framework)

    def verify(self, s=None) -> bool:
        s = Semantics.parse(s or self.semantics[0])
        return Verifier(self.pcaf(), self.reduction).verify(self.target, s)

    def expected_verify(self, oracle_verdict: bool) -> bool:
        return oracle_verdict if self.polarity == "SAT" else not oracle_verdict


def _bar(v):
    return v + "bar"


def _lit(v, positive):
    return v if positive else _bar(v)


def _unique(names, what):
    seen = set()
    for n in names:
        if n in seen:
            raise PreconditionError(f"{what}: generated name {n!r} collides; rename variables")
        seen.add(n)


def _pad_both_polarities(phi: CnfFormula):
    pos = {v for c in phi.clauses for v, p in c if p}
    neg = {v for c in phi.clauses for v, p in c if not p}
    missing = [v for v in phi.variables if v not in pos or v not in neg]
    if not missing:
        return phi, []
    return CnfFormula(phi.variables, list(phi.clauses) + [((v, True), (v, False)) for v in missing]), missing


def gen_cf_naive(phi: CnfFormula) -> HardInstance:
    """Occurrence arguments per clause plus a true/false pair per variable (R1, cf and naive).

    Variables missing one polarity are first given a tautological clause so
    that every variable occurs both ways; satisfiability is unchanged.
    """
    phi, padded = _pad_both_polarities(phi)
    args, attacks, claims, prefs = [], [], {}, []
    for x in phi.variables:
        for h in (x + "_T", x + "_F"):
            args.append(h)
            claims[h] = x
    for i, clause in enumerate(phi.clauses, 1):
        for x, positive in clause:
            a = f"{_lit(x, positive)}_{i}"
            args.append(a)
            claims[a] = str(i)
            attacks += [(x + "_T", a), (x + "_F", a)]
            prefs.append((a, x + ("_T" if positive else "_F")))
    _unique(args, "cf/naive construction")
    _unique(list(phi.variables) + [str(i) for i in range(1, len(phi.clauses) + 1)], "cf/naive claims")
    pf = PrefFramework(ClaimFramework.build(args, attacks, claims), prefs)
    target = frozenset(str(i) for i in range(1, len(phi.clauses) + 1)) | frozenset(phi.variables)
    return HardInstance(pf, target, Reduction.R1, (Semantics.CF, Semantics.NAIVE), "SAT",
                        {"padded_variables": padded, "formula": phi})


def gen_stb_adm_com(phi: CnfFormula) -> HardInstance:
    """Six-cycles linking complementary occurrences, with isolated copies of the cycle helpers.

    Returns a claim framework in the transitive R1 image; the query is
    read under R1 for stable, admissible and complete semantics.
    """
    args, attacks, claims = [], [], {}
    occ = []
    for i, clause in enumerate(phi.clauses, 1):
        for x, positive in clause:
            a = f"{_lit(x, positive)}_{i}"
            args.append(a)
            claims[a] = str(i)
            occ.append((x, positive, i, a))
    helper_claims = set()
    for x in phi.variables:
        pos = [(i, a) for v, p, i, a in occ if v == x and p]
        neg = [(j, b) for v, p, j, b in occ if v == x and not p]
        for (i, xi), (j, xj) in itertools.product(pos, neg):
            h = [f"{x}{k}_{i}_{j}" for k in range(1, 5)]
            for name in h:
                args += [name, "hat_" + name]
                claims[name] = claims["hat_" + name] = name
                helper_claims.add(name)
            attacks += [(xi, h[0]), (h[0], h[1]), (h[1], xj), (xj, h[2]), (h[2], h[3]), (h[3], xi)]
    _unique(args, "stb/adm/com construction")
    clause_claims = {str(i) for i in range(1, len(phi.clauses) + 1)}
    if clause_claims & helper_claims:
        raise PreconditionError("helper claim collides with a clause index")
    cf = ClaimFramework.build(args, attacks, claims)
    return HardInstance(cf, frozenset(clause_claims | helper_claims), Reduction.R1,
                        (Semantics.STB, Semantics.ADM, Semantics.COM), "SAT", {"formula": phi})


def gen_qbf(Phi: Qbf2Formula, s) -> HardInstance:
    """2QBF encodings for preferred, semi-stable and stage semantics (R1, valid iff rejected)."""
    s = Semantics.parse(s)
    if s not in (Semantics.PRF, Semantics.SEM, Semantics.STG):
        raise PreconditionError(f"no 2QBF construction for {s}")
    phi = Phi.matrix
    Z = set(Phi.existentials)
    if s is Semantics.PRF:
        for n, clause in enumerate(phi.clauses, 1):
            if not any(v in Z for v, _ in clause):
                raise PreconditionError(f"clause {n} contains no existential literal")
    X = list(Phi.universals) + list(Phi.existentials)
    ylits = [_lit(y, p) for y in Phi.universals for p in (True, False)]
    args, attacks, claims = [], [], {}

    def add(name, claim=None):
        args.append(name)
        claims[name] = claim or name

    if s is not Semantics.STG:
        add("phi")
    add("phibar")
    cnames = [f"c_{n}" for n in range(1, len(phi.clauses) + 1)]
    for c in cnames:
        add(c)
    for x in X:
        add(x)
        add(_bar(x))
        attacks += [(x, _bar(x)), (_bar(x), x)]
    for v in ylits:
        add(v + "_star", v)
    for c, clause in zip(cnames, phi.clauses):
        attacks.append((c, c))
        for v, p in clause:
            attacks.append((_lit(v, p), c))
    if s is not Semantics.PRF:
        for v in ylits:
            add("d_" + v)
            attacks += [("d_" + v, "d_" + v), (v, "d_" + v)]
    if s is Semantics.STG:
        attacks += [("phibar", c) for c in cnames]
        for z in Phi.existentials:
            attacks += [(z, "phibar"), (_bar(z), "phibar")]
        target = frozenset(ylits) | {"phibar"}
    else:
        attacks += [(c, "phi") for c in cnames]
        attacks += [("phi", "phibar"), ("phibar", "phibar")]
        for z in Phi.existentials:
            attacks += [("phibar", z), ("phibar", _bar(z))]
        target = frozenset(ylits)
    _unique(args, f"{s} construction")
    cf = ClaimFramework.build(args, attacks, claims)
    return HardInstance(cf, target, Reduction.R1, (s,), "VALID", {"formula": Phi})


def gen_com_pref(phi: CnfFormula, i) -> HardInstance:
    """Complete-semantics encodings with preferences over helper arguments (R2 or R4)."""
    i = Reduction.parse(i)
    if i not in (Reduction.R2, Reduction.R4):
        raise PreconditionError(f"no complete-semantics construction for {i}")
    args, attacks, claims, prefs = [], [], {}, []

    def add(name, claim=None):
        args.append(name)
        claims[name] = claim or name

    add("phi")
    cnames = [f"c_{n}" for n in range(1, len(phi.clauses) + 1)]
    for c in cnames:
        add(c)
        attacks += [(c, "phi"), (c, c)]
    for c, clause in zip(cnames, phi.clauses):
        for v, p in clause:
            attacks.append((c, _lit(v, p)))
    for x in phi.variables:
        lits = (x, _bar(x))
        for lit in lits:
            add(lit, x)
        add("d_" + x)
        for lit in lits:
            d1 = "d1_" + lit
            add(d1)
            attacks.append((d1, lit))
            prefs += [(lit, c) for c in cnames] + [(lit, d1)]
            if i is Reduction.R4:
                attacks.append((d1, "d_" + x))
                continue
            d2, d3, d4 = "d2_" + lit, "d3_" + lit, "d4_" + lit
            add(d2, x)
            add(d3)
            add(d4)
            attacks += [(d1, d2), (d3, d2), (d3, lit), (d4, lit), (d4, "d_" + x)]
            prefs += [(lit, d4), (d2, d3)]
    _unique(args, f"complete/{i} construction")
    _unique(list(phi.variables) + ["phi"], "complete construction claims")
    pf = PrefFramework(ClaimFramework.build(args, attacks, claims), prefs)
    return HardInstance(pf, frozenset(phi.variables) | {"phi"}, i, (Semantics.COM,), "SAT", {"formula": phi})


def sat_oracle(phi: CnfFormula) -> bool:
    """Exhaustive satisfiability check."""
    n = len(phi.variables)
    if n > ORACLE_MAX_VARS:
        raise ResourceLimitError(f"{n} variables exceed the oracle limit of {ORACLE_MAX_VARS}")
    for values in itertools.product((False, True), repeat=n):
        if phi.satisfied_by({v for v, t in zip(phi.variables, values) if t}):
            return True
    return False


def qbf_oracle(Phi: Qbf2Formula) -> bool:
    """Exhaustive check that every universal assignment extends to a model."""
    Y, Z = Phi.universals, Phi.existentials
    if len(Y) + len(Z) > ORACLE_MAX_VARS:
        raise ResourceLimitError(f"{len(Y) + len(Z)} variables exceed the oracle limit of {ORACLE_MAX_VARS}")
    for yv in itertools.product((False, True), repeat=len(Y)):
        ytrue = {v for v, t in zip(Y, yv) if t}
        if not any(Phi.matrix.satisfied_by(ytrue | {v for v, t in zip(Z, zv) if t})
                   for zv in itertools.product((False, True), repeat=len(Z))):
            return False
    return True


def random_cnf(rng: random.Random, max_vars=6, max_clauses=8, max_len=3) -> CnfFormula:
    n = rng.randint(1, max_vars)
    variables = [f"x{j}" for j in range(1, n + 1)]
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        chosen = rng.sample(variables, rng.randint(1, min(max_len, n)))
        clauses.append([(v, rng.random() < 0.5) for v in chosen])
    return CnfFormula(variables, clauses)


def random_qbf(rng: random.Random, max_universal=3, max_existential=3, max_clauses=6) -> Qbf2Formula:
    """Random 2QBF in which every clause mentions an existential variable."""
    Y = [f"y{j}" for j in range(1, rng.randint(1, max_universal) + 1)]
    Z = [f"z{j}" for j in range(1, rng.randint(1, max_existential) + 1)]
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        z = rng.choice(Z)
        others = [v for v in Y + Z if v != z]
        chosen = [z] + rng.sample(others, rng.randint(0, min(2, len(others))))
        clauses.append([(v, rng.random() < 0.5) for v in chosen])
    return Qbf2Formula(Y, Z, CnfFormula(Y + Z, clauses))


def _dimacs_tokens(text):
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c") or stripped.startswith("%"):
            continue
        yield lineno, stripped


def _parse_clauses(lines, nvars, where):
    clauses, current = [], []
    last = 0
    for lineno, line in lines:
        last = lineno
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"expected an integer literal, got {tok!r}", lineno) from None
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", lineno)
                clauses.append(current)
                current = []
                continue
            if abs(lit) > nvars:
                raise ParseError(f"literal {lit} exceeds declared variable count {nvars}", lineno)
            current.append((f"x{abs(lit)}", lit > 0))
    if current:
        clauses.append(current)
    return clauses, last


def _header(lines, kind):
    if not lines:
        raise ParseError(f"missing 'p {kind}' header")
    lineno, line = lines[0]
    parts = line.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] != kind:
        raise ParseError(f"expected 'p {kind} <vars> <clauses>'", lineno)
    try:
        return int(parts[2]), int(parts[3]), lineno
    except ValueError:
        raise ParseError("variable and clause counts must be integers", lineno) from None


def _build_cnf(nvars, nclauses, clauses, lineno):
    if len(clauses) != nclauses:
        raise ParseError(f"header declares {nclauses} clauses, found {len(clauses)}", lineno)
    try:
        return CnfFormula([f"x{j}" for j in range(1, nvars + 1)], clauses)
    except PreconditionError as e:
        raise ParseError(str(e), lineno) from None


def parse_dimacs(text: str) -> CnfFormula:
    """DIMACS CNF; variable n becomes ``x<n>``."""
    lines = list(_dimacs_tokens(text))
    nvars, nclauses, hline = _header(lines, "cnf")
    clauses, last = _parse_clauses(lines[1:], nvars, "cnf")
    return _build_cnf(nvars, nclauses, clauses, last or hline)


def parse_qdimacs(text: str) -> Qbf2Formula:
    """QDIMACS with one ``a`` (universal) line followed by one ``e`` (existential) line."""
    lines = list(_dimacs_tokens(text))
    nvars, nclauses, hline = _header(lines, "cnf")
    quant = {}
    body = lines[1:]
    while body and body[0][1].split()[0] in ("a", "e"):
        lineno, line = body.pop(0)
        toks = line.split()
        if toks[0] in quant:
            raise ParseError(f"repeated '{toks[0]}' line", lineno)
        if toks[-1] != "0":
            raise ParseError("quantifier line must end with 0", lineno)
        try:
            vs = [int(t) for t in toks[1:-1]]
        except ValueError:
            raise ParseError("quantifier line must list integers", lineno) from None
        if any(v <= 0 or v > nvars for v in vs):
            raise ParseError("quantified variable out of range", lineno)
        quant[toks[0]] = [f"x{v}" for v in vs]
    if list(quant) not in (["a", "e"], ["a"], ["e"]):
        raise ParseError("expected an 'a' line followed by an 'e' line", hline)
    clauses, last = _parse_clauses(body, nvars, "qbf")
    matrix = _build_cnf(nvars, nclauses, clauses, last or hline)
    quantified = set(quant.get("a", [])) | set(quant.get("e", []))
    # free variables are treated as existential
    free = [v for v in matrix.variables if v not in quantified]
    try:
        return Qbf2Formula(quant.get("a", []), quant.get("e", []) + free, matrix)
    except PreconditionError as e:
        raise ParseError(str(e), hline) from None
