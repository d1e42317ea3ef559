from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus, enumerated
from frobrel.exterior import build_frobenius, one_volume
from frobrel.frobenius import (
    FrobeniusError,
    FrobeniusObject,
    check_counit,
    check_frobenius,
    check_unit,
    dagger_dual,
    empty_object,
    extract_alpha,
    is_commutative,
    is_dagger,
    is_isomorphic,
    is_special,
    lemma_battery,
    opposite_dual,
    relabel,
    rotation_dual,
    verify,
)
from frobrel.groupoid import cyclic_group, hcc_frobenius

ONE_VOLUME_MU = {("1", "1", "1"), ("1", "e12", "e12"), ("e12", "1", "e12")}
ONE_VOLUME_DELTA = {("1", "e12", "1"), ("1", "1", "e12"), ("e12", "e12", "e12")}


def test_one_volume_tables(one_volume_obj):
    f = one_volume_obj
    assert f.eta == {"1"} and f.epsilon == {"e12"}
    assert f.mu == ONE_VOLUME_MU
    assert f.delta == ONE_VOLUME_DELTA
    assert verify(f).ok


def test_one_volume_flags(one_volume_obj):
    f = one_volume_obj
    assert is_commutative(f)
    assert not is_special(f)
    assert not is_dagger(f)
    assert extract_alpha(f).alpha_hat == {"1": "e12", "e12": "1"}


def test_singleton_object():
    f = FrobeniusObject(["x"], ["x"], ["x"], [("x", "x", "x")], [("x", "x", "x")])
    assert verify(f).ok
    assert is_commutative(f) and is_special(f) and is_dagger(f)


def test_empty_object_verifies():
    f = empty_object()
    assert verify(f).ok
    assert extract_alpha(f).alpha_hat == {}


def test_missing_unit_row_fails_unit_axiom():
    f = FrobeniusObject(["x"], ["x"], ["x"], [], [("x", "x", "x")])
    v = check_unit(f)
    assert not v.ok and v.counterexample is not None
    assert check_counit(f).ok


def test_missing_counit_fails_counit_axiom():
    f = FrobeniusObject(["x"], ["x"], [], [("x", "x", "x")], [("x", "x", "x")])
    assert not check_counit(f).ok


def test_broken_frobenius_axiom_is_caught(one_volume_obj):
    f = one_volume_obj
    g = FrobeniusObject(f.carrier, f.eta, f.epsilon, f.mu, f.delta - {("e12", "e12", "e12")})
    assert check_unit(g).ok
    counit = check_counit(g)
    assert not counit.ok
    assert counit.counterexample == (("e12",), ("e12",))
    assert not check_frobenius(g).ok


def test_extract_alpha_rejects_non_frobenius():
    f = FrobeniusObject(["x"], ["x"], [], [("x", "x", "x")], [])
    with pytest.raises(FrobeniusError):
        extract_alpha(f)


def test_labels_outside_carrier_rejected():
    with pytest.raises(ValueError):
        FrobeniusObject(["x"], ["y"], [], [], [])


def test_torus_flags(torus_obj):
    f = torus_obj
    assert verify(f).ok
    assert len(f.carrier) == 8
    assert not is_commutative(f) and not is_dagger(f) and not is_special(f)
    d = extract_alpha(f)
    assert not d.nakayama_trivial
    assert d.nakayama["e1"] == "-e1"


def test_hcc_z2_mul_table():
    f = hcc_frobenius(cyclic_group(2))
    assert f.mu == {("0", "0", "0"), ("0", "1", "1"), ("1", "0", "1"), ("1", "1", "0")}
    assert is_special(f) and is_dagger(f) and is_commutative(f)


@pytest.mark.parametrize("dual", [rotation_dual, dagger_dual, opposite_dual])
def test_duals_are_involutive_and_verified(dual):
    for f in corpus():
        g = dual(f)
        assert verify(g).ok
        assert dual(g) == f


def test_alpha_hat_maps_object_onto_its_rotation_dual():
    for f in corpus():
        d = extract_alpha(f)
        assert relabel(f, d.alpha_hat) == rotation_dual(f)


def test_lemma_battery_on_corpus():
    failures = [(f, v) for f in corpus() for v in lemma_battery(f) if not v.ok]
    assert failures == []


def test_commutative_consequences_on_corpus():
    for f in corpus():
        if is_commutative(f):
            d = extract_alpha(f)
            assert opposite_dual(f) == f
            assert all(d.nakayama[x] == x for x in f.carrier)
            assert d.source_map == d.target_map


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(enumerated(3)), st.permutations(["0", "1", "2"]))
def test_relabelling_is_detected_as_isomorphism(f, perm):
    g = relabel(f, dict(zip(["0", "1", "2"], perm)))
    phi = is_isomorphic(f, g)
    assert phi is not None
    assert relabel(f, phi) == g


def test_isomorphism_distinguishes_flags():
    objs = enumerated(2)
    for f, g in itertools.combinations(objs, 2):
        if is_special(f) != is_special(g) or is_dagger(f) != is_dagger(g):
            assert is_isomorphic(f, g) is None


def test_isomorphism_of_empty_objects_is_empty_map():
    assert is_isomorphic(empty_object(), empty_object()) == {}


def test_one_volume_is_its_own_opposite():
    f = build_frobenius(one_volume(2))
    assert opposite_dual(f) == f
    assert rotation_dual(f) != f
