import pytest
from hypothesis import given, settings, strategies as st

import oracle
from prefclaim import ArgFramework, MalformedInputError, Semantics, attacked_set, defends, extensions, is_extension


@st.composite
def frameworks(draw, max_args=6):
    n = draw(st.integers(0, max_args))
    args = [f"x{j}" for j in range(n)]
    pairs = [(a, b) for a in args for b in args]
    att = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return args, att


def test_running_example():
    f = ArgFramework(["a", "a'", "b"], [("a", "b"), ("a'", "b"), ("b", "a")])
    assert attacked_set(f, {"a"}) == {"b"}
    assert defends(f, {"a'"}, "a")
    assert not defends(f, set(), "a")
    assert extensions(f, "naive") == [frozenset({"a", "a'"}), frozenset({"b"})]
    assert is_extension(f, {"a", "a'"}, Semantics.PRF)
    assert not is_extension(f, {"b"}, Semantics.ADM)


def test_empty_framework_has_empty_extension():
    f = ArgFramework()
    for s in Semantics:
        assert extensions(f, s) == [frozenset()]


def test_self_attacker_never_accepted():
    f = ArgFramework(["a"], [("a", "a")])
    assert extensions(f, "stb") == []
    assert extensions(f, "stg") == [frozenset()]


@pytest.mark.parametrize("args,att", [(["a", "a"], []), (["a"], [("a", "b")]), ([""], [])])
def test_malformed_rejected(args, att):
    with pytest.raises(MalformedInputError):
        ArgFramework(args, att)


def test_unknown_member_rejected():
    f = ArgFramework(["a"], [])
    with pytest.raises(MalformedInputError):
        is_extension(f, {"z"}, "cf")


@settings(max_examples=150, deadline=None)
@given(frameworks(), st.sampled_from(list(Semantics)))
def test_matches_definitions(fw, sem):
    args, att = fw
    f = ArgFramework(args, att)
    got = set(extensions(f, sem))
    assert got == {frozenset(e) for e in oracle.extensions(args, att, sem.value)}
    for e in oracle.powerset(args):
        assert is_extension(f, e, sem) == (e in got)


@settings(max_examples=100, deadline=None)
@given(frameworks())
def test_semantics_inclusions(fw):
    f = ArgFramework(*fw)
    ext = {s: set(extensions(f, s)) for s in Semantics}
    assert ext[Semantics.STB] <= ext[Semantics.SEM] <= ext[Semantics.PRF] <= ext[Semantics.COM] <= ext[Semantics.ADM]
    assert ext[Semantics.STB] <= ext[Semantics.STG] <= ext[Semantics.NAIVE] <= ext[Semantics.CF]
    assert extensions(f, "prf")  # preferred extensions always exist
