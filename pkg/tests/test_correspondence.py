from __future__ import annotations

import dataclasses

import pytest

from conftest import catalog, corpus
from frobrel.correspondence import (
    PreconditionError,
    check_preconditions,
    frob_to_simplicial,
    roundtrip_frob,
    roundtrip_simp,
    simplicial_to_frob,
)
from frobrel.frobenius import extract_alpha
from frobrel.groupoid import cyclic_group, nerve
from frobrel.simplicial import AlphaSimplicial


def test_roundtrip_frob_on_corpus():
    assert [f for f in corpus() if not roundtrip_frob(f).ok] == []


def test_roundtrip_simp_on_nerves():
    for name, g in catalog():
        v, witnesses = roundtrip_simp(nerve(g))
        assert v.ok, name
        w0, w2 = witnesses
        assert set(w0) == set(g.g0)
        assert set(w2) == set(g.composable_pairs())


def test_roundtrip_simp_on_derived_sets():
    for f in corpus():
        v, _ = roundtrip_simp(frob_to_simplicial(f))
        assert v.ok


def test_one_volume_delta_survives_roundtrip(one_volume_obj):
    back = simplicial_to_frob(frob_to_simplicial(one_volume_obj))
    assert back.delta == {("1", "e12", "1"), ("1", "1", "e12"), ("e12", "e12", "e12")}


def test_face_maps_of_derived_set(torus_obj):
    f = torus_obj
    a = frob_to_simplicial(f)
    d = extract_alpha(f)
    assert a.base.x0 == f.eta
    assert a.base.face1 == (d.source_map, d.target_map)
    for m in f.mu:
        assert a.base.boundary(m) == (m[1], m[2], m[0])


def test_preconditions_reject_bad_rotation():
    a = nerve(cyclic_group(3))
    bad = AlphaSimplicial(a.base, {x: x for x in a.base.x1})
    assert not check_preconditions(bad).ok
    with pytest.raises(PreconditionError):
        simplicial_to_frob(bad)


def test_preconditions_reject_missing_simplex():
    a = nerve(cyclic_group(3))
    t = a.base
    z = ("1", "1")
    face2 = tuple({k: v for k, v in m.items() if k != z} for m in t.face2)
    bad = AlphaSimplicial(dataclasses.replace(t, x2=t.x2 - {z}, face2=face2), a.alpha_hat)
    with pytest.raises(PreconditionError):
        simplicial_to_frob(bad)
