from __future__ import annotations

import dataclasses

from conftest import corpus
from frobrel.correspondence import frob_to_simplicial
from frobrel.frobenius import opposite_dual
from frobrel.groupoid import cyclic_group, nerve, pair_groupoid
from frobrel.simplicial import (
    AlphaSimplicial,
    boundary2,
    check_all,
    check_delta2_invariance,
    check_P1,
    check_P2,
    check_P3,
    compatible_tuples,
    delta2_boundary_order,
    equivalent,
    iter_x3,
    opposite,
    opposite_alpha,
    validate,
)


def _drop_simplex(a: AlphaSimplicial, z) -> AlphaSimplicial:
    t = a.base
    face2 = tuple({k: v for k, v in m.items() if k != z} for m in t.face2)
    return AlphaSimplicial(dataclasses.replace(t, x2=t.x2 - {z}, face2=face2), a.alpha_hat)


def _add_copy(a: AlphaSimplicial, z, new) -> AlphaSimplicial:
    t = a.base
    face2 = tuple({**m, new: m[z]} for m in t.face2)
    return AlphaSimplicial(dataclasses.replace(t, x2=t.x2 | {new}, face2=face2), a.alpha_hat)


def test_nerve_of_z3_passes_everything():
    assert all(check_all(nerve(cyclic_group(3))))


def test_duplicate_boundary_breaks_P1():
    a = _add_copy(nerve(cyclic_group(2)), ("1", "1"), "twin")
    assert validate(a.base).ok
    v = check_P1(a.base)
    assert not v.ok
    assert set(v.counterexample) == {("1", "1"), "twin"}


def test_removed_simplex_breaks_P2():
    a = _drop_simplex(nerve(cyclic_group(3)), ("1", "1"))
    assert validate(a.base).ok
    assert check_P1(a.base).ok
    assert not check_P2(a.base).ok


def test_identity_rotation_breaks_P3():
    a = nerve(cyclic_group(3))
    bad = AlphaSimplicial(a.base, {x: x for x in a.base.x1})
    assert not check_P3(bad).ok


def test_non_bijective_rotation_breaks_P3():
    a = nerve(cyclic_group(3))
    bad = AlphaSimplicial(a.base, {x: "0" for x in a.base.x1})
    assert not check_P3(bad).ok


def test_degeneracy_must_be_a_section():
    t = nerve(pair_groupoid(2)).base
    swapped = dataclasses.replace(t, degen0={"0": "(1,1)", "1": "(0,0)"})
    v = validate(swapped)
    assert not v.ok


def test_validate_rejects_partial_maps():
    t = nerve(cyclic_group(2)).base
    broken = dataclasses.replace(t, face1=({}, t.face1[1]))
    assert not validate(broken).ok


def test_boundary2_reads_like_a_mu_triple():
    t = nerve(cyclic_group(3)).base
    assert boundary2(t, ("1", "2")) == ("1", "2", "0")


def test_delta2_contains_boundary_image():
    for f in corpus():
        a = frob_to_simplicial(f)
        image = {boundary2(a.base, z) for z in a.base.x2}
        assert image <= delta2_boundary_order(a.base)


def test_compatible_tuples_satisfy_face_identities():
    t = nerve(pair_groupoid(2)).base
    for q in (2, 3):
        for tup in compatible_tuples(t, q):
            for i in range(q + 1):
                for j in range(i + 1, q + 1):
                    assert t.d(q - 1, i)[tup[j]] == t.d(q - 1, j - 1)[tup[i]]


def test_x3_of_a_nerve_counts_composable_triples():
    g = pair_groupoid(2)
    triples = [(a, b, c) for a in g.g1 for b in g.g1 for c in g.g1
               if g.composable(a, b) and g.composable(b, c)]
    assert len(list(iter_x3(nerve(g).base))) == len(triples)


def test_nerves_pass_delta2_invariance():
    for g in (cyclic_group(4), pair_groupoid(3)):
        assert check_delta2_invariance(nerve(g)).ok


def test_opposite_is_an_involution():
    t = nerve(pair_groupoid(2)).base
    assert opposite(opposite(t)) == t
    assert validate(opposite(t)).ok


def test_opposite_object_gives_opposite_simplicial_set():
    for f in corpus():
        a = frob_to_simplicial(f)
        b = frob_to_simplicial(opposite_dual(f))
        assert equivalent(b, opposite_alpha(a)) is not None


def test_derived_simplicial_sets_pass_all_properties():
    failures = [(f, v) for f in corpus() for v in check_all(frob_to_simplicial(f)) if not v.ok]
    assert failures == []
