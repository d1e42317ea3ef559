from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobrel.relcore import (
    FiniteSet,
    NotBijectionError,
    Relation,
    RelationError,
    as_bijection,
    boolean,
    compose,
    converse,
    empty,
    from_flat,
    graph,
    identity,
    tensor,
    twist,
)

X = FiniteSet(["a", "b", "c"])


def relations(m: int, n: int):
    cells = [(a, b) for a in X.power(m) for b in X.power(n)]
    return st.sets(st.sampled_from(cells)).map(lambda ps: Relation(m, n, X, ps))


small = st.integers(0, 2)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_composition_is_associative(data):
    m, n, p, q = (data.draw(small) for _ in range(4))
    r, s, t = data.draw(relations(m, n)), data.draw(relations(n, p)), data.draw(relations(p, q))
    assert compose(compose(r, s), t) == compose(r, compose(s, t))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_identity_is_neutral(data):
    m, n = data.draw(small), data.draw(small)
    r = data.draw(relations(m, n))
    assert compose(identity(X, m), r) == r
    assert compose(r, identity(X, n)) == r


@settings(max_examples=40, deadline=None)
@given(relations(1, 1), relations(1, 2), relations(1, 2), relations(2, 1))
def test_tensor_interchange(r1, s1, r2, s2):
    lhs = compose(tensor(r1, r2), tensor(s1, s2))
    rhs = tensor(compose(r1, s1), compose(r2, s2))
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(relations(1, 2), relations(2, 1))
def test_converse_reverses_composition(r, s):
    assert converse(compose(r, s)) == compose(converse(s), converse(r))
    assert converse(converse(r)) == r


@given(relations(1, 1), relations(1, 1), relations(1, 1))
def test_tensor_is_associative(r, s, t):
    assert tensor(tensor(r, s), t) == tensor(r, tensor(s, t))


def test_twist_is_an_involution():
    assert compose(twist(X), twist(X)) == identity(X, 2)


def test_arity_zero_uses_the_empty_tuple():
    one = identity(X, 0)
    assert one.pairs == frozenset({((), ())})
    assert boolean(one)
    assert not boolean(empty(X, 0, 0))


def test_compose_rejects_mismatched_arity():
    with pytest.raises(RelationError):
        compose(identity(X, 1), identity(X, 2))


def test_relation_rejects_foreign_labels():
    with pytest.raises(RelationError):
        Relation(1, 1, X, [(("a",), ("z",))])


def test_from_flat_splits_tuples():
    r = from_flat(X, 2, 1, [("a", "b", "c")])
    assert r.pairs == frozenset({(("a", "b"), ("c",))})
    assert r.flat() == frozenset({("a", "b", "c")})


@pytest.mark.parametrize("pairs, reason", [
    ([("a", "a"), ("a", "b"), ("b", "b"), ("c", "c")], "not single-valued"),
    ([("a", "a"), ("b", "b")], "not total"),
    ([("a", "a"), ("b", "a"), ("c", "c")], "not injective"),
])
def test_as_bijection_reports_reason(pairs, reason):
    r = Relation(1, 1, X, [((x,), (y,)) for x, y in pairs])
    with pytest.raises(NotBijectionError) as exc:
        as_bijection(r)
    assert exc.value.reason == reason


def test_as_bijection_inverts_graph():
    f = {"a": "b", "b": "c", "c": "a"}
    assert as_bijection(graph(X, f)) == f
