from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import TERM_CORPUS, corpus
from frobrel.cobterm import (
    BUILTINS,
    ArityError,
    Gen,
    Seq,
    Ten,
    TermSyntaxError,
    builtin,
    evaluate,
    genus_invariant,
    genus_term,
    parse,
    resolve,
    to_circ,
    to_text,
)
from frobrel.frobenius import empty_object, is_commutative, is_special, pairing
from frobrel.groupoid import cyclic_group, hcc_frobenius, pair_groupoid
from frobrel.relcore import identity


@pytest.mark.parametrize("text", TERM_CORPUS)
def test_corpus_roundtrips(text):
    t = parse(text)
    assert parse(to_text(t)) == t
    assert to_text(parse(to_text(t))) == to_text(t)


def test_corpus_is_large_enough():
    assert len(set(TERM_CORPUS)) >= 20


def _well_typed(depth: int):
    gens = st.sampled_from(["unit", "counit", "mul", "comul", "id", "swap"]).map(Gen)
    if depth == 0:
        return gens

    def combine(pair):
        a, b = pair
        if a.arity[1] == b.arity[0]:
            return Seq(a, b)
        return Ten(a, b)

    sub = _well_typed(depth - 1)
    return st.one_of(gens, st.tuples(sub, sub).map(combine))


@settings(max_examples=200)
@given(_well_typed(3))
def test_random_terms_roundtrip(t):
    assert parse(to_text(t)) == t


def test_arities():
    assert parse("mul ; counit").arity == (2, 0)
    assert parse("unit ; comul").arity == (0, 2)
    assert parse("id * mul * swap").arity == (5, 4)


def test_tensor_binds_tighter():
    assert parse("mul * id ; mul") == Seq(Ten(Gen("mul"), Gen("id")), Gen("mul"))


def test_arity_error_names_both_sides():
    with pytest.raises(ArityError) as exc:
        parse("mul ; mul")
    assert "1 != 2" in str(exc.value)


@pytest.mark.parametrize("text, pos", [
    ("mul ;", 5),
    ("(mul", 4),
    ("mul )", 4),
    ("frob", 0),
    ("mul ; # counit", 6),
    ("", 0),
])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(TermSyntaxError) as exc:
        parse(text)
    assert exc.value.pos == pos


def test_circ_notation():
    assert to_circ(parse("mul ; counit")) == "ε ∘ μ"
    assert to_circ(parse("(comul * id) ; (id * mul)")) == "(1 × μ) ∘ (δ × 1)"


def test_builtins_parse():
    for name in BUILTINS:
        assert builtin(name) == parse(BUILTINS[name])
    assert resolve("snake_left") == builtin("snake_left")
    with pytest.raises(KeyError):
        builtin("nope")


def test_evaluate_generators(one_volume_obj):
    f = one_volume_obj
    assert evaluate("id", f) == identity(f.carrier)
    assert evaluate("mul", f) == f.mul
    assert evaluate("mul ; counit", f) == pairing(f)


def test_semantic_laws_on_corpus():
    for f in corpus():
        one = identity(f.carrier)
        ev = {name: evaluate(builtin(name), f) for name in BUILTINS}
        assert ev["snake_left"] == one and ev["snake_right"] == one
        assert ev["assoc_left"] == ev["assoc_right"]
        assert ev["coassoc_left"] == ev["coassoc_right"]
        assert ev["frob_left"] == ev["frob_mid"] == ev["frob_right"]
        assert ev["unit_left"] == one and ev["unit_right"] == one
        assert ev["counit_left"] == one and ev["counit_right"] == one
        assert ev["md_left"] == f.mul and ev["md_right"] == f.mul
        assert (ev["twisted_mul"] == f.mul) == is_commutative(f)
        assert (ev["handle"] == one) == is_special(f)


def test_handle_is_identity_for_groupoids():
    for g in (cyclic_group(3), pair_groupoid(2)):
        f = hcc_frobenius(g)
        assert evaluate("comul ; mul", f) == identity(f.carrier)


def test_genus_term_shape():
    assert to_text(genus_term(0)) == "unit ; counit"
    assert genus_term(2).arity == (0, 0)
    with pytest.raises(ValueError):
        genus_term(-1)


def test_genus_values():
    z2 = hcc_frobenius(cyclic_group(2))
    assert [genus_invariant(z2, g) for g in range(6)] == [True] * 6
    assert not any(genus_invariant(empty_object(), g) for g in range(4))


def test_genus_zero_is_unit_counit_overlap():
    for f in corpus():
        assert genus_invariant(f, 0) == bool(f.eta & f.epsilon)


def test_torus_genus_regression(torus_obj):
    assert [genus_invariant(torus_obj, g) for g in range(4)] == [False, True, False, False]
