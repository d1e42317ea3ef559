from __future__ import annotations

import pytest

from conftest import catalog
from frobrel.correspondence import simplicial_to_frob
from frobrel.frobenius import (
    FrobeniusError,
    extract_alpha,
    is_commutative,
    is_dagger,
    is_isomorphic,
    is_special,
    verify,
)
from frobrel.groupoid import (
    GroupoidError,
    cyclic_group,
    disjoint_union,
    from_group_table,
    hcc_frobenius,
    klein_group,
    make_groupoid,
    nerve,
    pair_groupoid,
    symmetric_group,
    validate_groupoid,
)
from frobrel.simplicial import check_all


def test_trivial_group():
    g = from_group_table(["e"], [["e"]])
    assert len(g.g0) == 1 and len(g.g1) == 1
    assert validate_groupoid(g).ok


def test_pair_groupoid_one_is_trivial():
    g = pair_groupoid(1)
    assert len(g.g0) == 1 and len(g.g1) == 1


def test_pair_groupoid_three_validates():
    g = pair_groupoid(3)
    assert len(g.g1) == 9
    assert validate_groupoid(g).ok


def test_disjoint_union_counts_add():
    g = disjoint_union(cyclic_group(2), cyclic_group(3))
    assert (len(g.g0), len(g.g1)) == (2, 5)
    assert validate_groupoid(g).ok


def test_composition_convention():
    g = pair_groupoid(3)
    # (i,j) runs from j to i, so (0,1).(1,2) = (0,2)
    assert g.composable("(0,1)", "(1,2)")
    assert g.mul("(0,1)", "(1,2)") == "(0,2)"
    assert not g.composable("(1,2)", "(0,1)")


def test_broken_inverse_table_fails():
    # "a" has no inverse: a.a = a in a two-element monoid
    g = make_groupoid(["*"], {"e": ("*", "*"), "a": ("*", "*")},
                      [("e", "e", "e"), ("e", "a", "a"), ("a", "e", "a"), ("a", "a", "a")])
    v = validate_groupoid(g)
    assert not v.ok
    assert (v.counterexample, v.detail) == ("a", "no inverse")


def test_declared_inverse_is_cross_checked():
    with pytest.raises(GroupoidError):
        make_groupoid(["*"], {"0": ("*", "*"), "1": ("*", "*")},
                      [("0", "0", "0"), ("0", "1", "1"), ("1", "0", "1"), ("1", "1", "0")],
                      inverses={"0": "0", "1": "0"})


def test_nerve_sizes():
    assert len(nerve(cyclic_group(2)).base.x2) == 4
    assert len(nerve(pair_groupoid(2)).base.x2) == 8


def test_nerve_middle_face_is_composite():
    g = symmetric_group(3)
    t = nerve(g).base
    for pair in t.x2:
        assert t.face2[1][pair] == g.mul(*pair)


def test_hcc_z2_table():
    f = hcc_frobenius(cyclic_group(2))
    assert f.mu == {("0", "0", "0"), ("0", "1", "1"), ("1", "0", "1"), ("1", "1", "0")}
    assert f.delta == {(c, a, b) for a, b, c in f.mu}


def test_catalog_is_closed_and_distinct():
    objs = [hcc_frobenius(g) for _, g in catalog()]
    assert len({name for name, _ in catalog()}) == len(catalog())
    for i, f in enumerate(objs):
        for h in objs[i + 1:]:
            if len(f.carrier) == len(h.carrier):
                assert is_isomorphic(f, h) is None


def test_catalog_correspondence():
    for name, g in catalog():
        assert validate_groupoid(g).ok, name
        f = hcc_frobenius(g)
        assert verify(f).ok, name
        assert f == simplicial_to_frob(nerve(g)), name
        assert is_special(f) and is_dagger(f), name
        assert all(check_all(nerve(g))), name
        d = extract_alpha(f)
        assert d.alpha_hat == g.inv, name
        assert d.source_map == {a: g.ident[g.src[a]] for a in g.g1}, name
        assert d.target_map == {a: g.ident[g.tgt[a]] for a in g.g1}, name


@pytest.mark.parametrize("g, expected", [
    (cyclic_group(4), True),
    (klein_group(), True),
    (disjoint_union(cyclic_group(2), cyclic_group(3)), True),
    (symmetric_group(3), False),
    (pair_groupoid(2), False),
    (pair_groupoid(3), False),
])
def test_commutativity_matches_abelian_components(g, expected):
    assert is_commutative(hcc_frobenius(g)) is expected


def test_hcc_rejects_invalid_groupoid():
    g = cyclic_group(2)
    bad = type(g)(g.g0, g.g1, g.src, g.tgt, {**g.comp, ("1", "1"): "1"}, g.ident, g.inv)
    assert not validate_groupoid(bad).ok
    with pytest.raises(FrobeniusError):
        hcc_frobenius(bad)
