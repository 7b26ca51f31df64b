import pytest
from hypothesis import given, settings, strategies as st

import oracle
from prefclaim import (
    ClaimFramework,
    PrefFramework,
    Reduction,
    Semantics,
    UnsupportedReductionError,
    Verifier,
    realization,
    reduce,
    verify,
)
from strategies import pcafs

AL, BE = "alpha", "beta"


def running_example():
    cf = ClaimFramework.build(["a", "a'", "b"], [("a", "b"), ("a'", "b"), ("b", "a")], {"a": AL, "a'": AL, "b": BE})
    return PrefFramework(cf, [("b", "a'")])


def test_trace_on_running_example():
    t = realization(running_example(), {AL}, 2)
    assert t.e0 == t.e1 == t.estar == {"a", "a'"}
    assert t.chain == (frozenset({"a", "a'"}),)


def test_trace_prunes_undefended():
    # y beats x and nothing answers it
    pf = PrefFramework(ClaimFramework.build(["x", "y"], [("y", "x")], {"x": "p", "y": "q"}))
    t = realization(pf, {"p"}, 3)
    assert t.e1 == {"x"}
    assert t.estar == frozenset()
    assert t.chain[-1] == t.chain[-2] == frozenset()


def test_first_pruning_uses_the_original_attacks():
    # R2 reverses the attack on b, but E1 still drops b
    pf = PrefFramework(ClaimFramework.build(["a", "b"], [("a", "b")], {"a": AL, "b": BE}), [("b", "a")])
    assert reduce(pf, 2).attacks == {("b", "a")}
    t = realization(pf, {AL, BE}, 2)
    assert t.e0 == {"a", "b"}
    assert t.e1 == {"a"}


def test_r1_has_no_fixpoint_trace():
    with pytest.raises(UnsupportedReductionError):
        realization(running_example(), {AL}, 1)


@pytest.mark.parametrize("i,s,c,expected", [
    (2, "stb", {AL, BE}, False),
    (2, "stb", {AL}, True),
    (2, "stb", {BE}, True),
    (1, "stb", {AL, BE}, True),
    (1, "adm", {BE}, True),
    (3, "prf", {AL}, True),
    (2, "cf", {"zz"}, False),
    (4, "cf", set(), True),
])
def test_verify_examples(i, s, c, expected):
    assert verify(running_example(), i, c, s) is expected


@settings(max_examples=150, deadline=None)
@given(pcafs(max_args=6), st.sampled_from([Reduction.R2, Reduction.R3, Reduction.R4]), st.data())
def test_chain_is_monotone_and_terminates(pf, i, data):
    claims = sorted(pf.claims)
    c = data.draw(st.sets(st.sampled_from(claims)))
    t = realization(pf, c, i)
    assert t.e1 <= t.e0
    prev = t.e1
    for k, e in enumerate(t.chain):
        assert e <= prev
        if k < len(t.chain) - 1:
            assert e != prev or k == 0
        prev = e
    assert t.estar == t.chain[-1]
    assert len(t.chain) <= len(pf.args) + 1
    red = reduce(pf, i)
    # fixpoint of the defense-pruning step
    attacked = {b for a, b in red.attacks if a in t.estar}
    assert all(all(x in attacked for x, y in red.attacks if y == a) for a in t.estar)


@settings(max_examples=150, deadline=None)
@given(pcafs(max_args=6), st.sampled_from([Reduction.R2, Reduction.R3, Reduction.R4]), st.data())
def test_estar_is_the_largest_admissible_realization(pf, i, data):
    c = frozenset(data.draw(st.sets(st.sampled_from(sorted(pf.claims)))))
    red = oracle.reduce_attacks(pf.args, pf.attacks, pf.prefs, i.value)
    realizing = [e for e in oracle.extensions(pf.args, red, "adm") if {pf.claim_of[a] for a in e} == c]
    t = realization(pf, c, i)
    if realizing:
        assert t.estar == max(realizing, key=len)
        assert all(e <= t.estar for e in realizing)
    else:
        assert {pf.claim_of[a] for a in t.estar} != c


@settings(max_examples=100, deadline=None)
@given(pcafs(max_args=6), st.sampled_from(list(Reduction)), st.sampled_from(list(Semantics)))
def test_verify_matches_brute_force(pf, i, s):
    fam = oracle.pref_family(pf.args, pf.attacks, pf.claim_of, pf.prefs, i.value, s.value)
    v = Verifier(pf, i)
    for c in oracle.powerset(sorted(pf.claims)):
        assert v.verify(c, s) == (c in fam)
        assert verify(pf, i, c, s) == (c in fam)
