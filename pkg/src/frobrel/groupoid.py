"""Finite groupoids, their nerves, and the groupoid Frobenius object.

Composition convention: ``g . h`` is defined when ``src(g) == tgt(h)``; it has
source ``src(h)`` and target ``tgt(g)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .frobenius import FrobeniusError, FrobeniusObject, Verdict
from .relcore import FiniteSet
from .simplicial import AlphaSimplicial, TruncSimplicialSet2


class GroupoidError(ValueError):
    pass


@dataclass(frozen=True)
class Groupoid:
    g0: FiniteSet
    g1: FiniteSet
    src: dict[str, str]
    tgt: dict[str, str]
    comp: dict[tuple[str, str], str]
    ident: dict[str, str]
    inv: dict[str, str]

    __hash__ = None  # type: ignore[assignment]

    def composable(self, g: str, h: str) -> bool:
        return self.src[g] == self.tgt[h]

    def mul(self, g: str, h: str) -> str:
        try:
            return self.comp[(g, h)]
        except KeyError:
            raise GroupoidError(f"{g} . {h} is undefined") from None

    def composable_pairs(self) -> list[tuple[str, str]]:
        return [(g, h) for g in self.g1 for h in self.g1 if self.composable(g, h)]


def _derive_identities(objects, arrows, src, tgt, comp) -> dict[str, str]:
    ident = {}
    for o in objects:
        for e in arrows:
            if src[e] != o or tgt[e] != o:
                continue
            if all(comp.get((g, e)) == g for g in arrows if src[g] == o) and \
               all(comp.get((e, g)) == g for g in arrows if tgt[g] == o):
                ident[o] = e
                break
    return ident


def _derive_inverses(arrows, src, tgt, comp, ident) -> dict[str, str]:
    inv = {}
    for g in arrows:
        for h in arrows:
            if src[h] == tgt[g] and tgt[h] == src[g] \
               and comp.get((g, h)) == ident.get(tgt[g]) \
               and comp.get((h, g)) == ident.get(src[g]):
                inv[g] = h
                break
    return inv


def make_groupoid(objects: Iterable[str], arrows: Mapping[str, tuple[str, str]],
                  compose: Iterable[Sequence[str]],
                  identities: Mapping[str, str] | None = None,
                  inverses: Mapping[str, str] | None = None) -> Groupoid:
    """Build a groupoid from arrows ``name -> (src, tgt)`` and rows ``(g, h, g.h)``.

    Identities and inverses are derived from the composition table; when given
    explicitly they must agree with the derived ones.
    """
    objs = FiniteSet(objects)
    arr = FiniteSet(arrows)
    src = {a: arrows[a][0] for a in arr}
    tgt = {a: arrows[a][1] for a in arr}
    for a in arr:
        if src[a] not in objs or tgt[a] not in objs:
            raise GroupoidError(f"arrow {a} has an endpoint outside the objects")
    comp: dict[tuple[str, str], str] = {}
    for g, h, gh in compose:
        if (g, h) in comp and comp[(g, h)] != gh:
            raise GroupoidError(f"{g} . {h} given twice")
        for a in (g, h, gh):
            if a not in arr:
                raise GroupoidError(f"unknown arrow {a!r} in composition table")
        if src[g] != tgt[h]:
            raise GroupoidError(f"{g} . {h} listed but src({g}) != tgt({h})")
        comp[(g, h)] = gh
    ident = _derive_identities(objs, arr, src, tgt, comp)
    inv = _derive_inverses(arr, src, tgt, comp, ident)
    if identities is not None and dict(identities) != ident:
        raise GroupoidError(f"declared identities {dict(identities)} disagree with derived {ident}")
    if inverses is not None and dict(inverses) != inv:
        raise GroupoidError(f"declared inverses {dict(inverses)} disagree with derived {inv}")
    return Groupoid(objs, arr, src, tgt, comp, ident, inv)


def validate_groupoid(g: Groupoid) -> Verdict:
    name = "groupoid axioms"
    for a, b in g.composable_pairs():
        if (a, b) not in g.comp:
            return Verdict(name, False, (a, b), "composable pair without a product")
        ab = g.comp[(a, b)]
        if g.src[ab] != g.src[b] or g.tgt[ab] != g.tgt[a]:
            return Verdict(name, False, (a, b), "endpoints of product")
    for a, b, c in itertools.product(g.g1, repeat=3):
        if g.composable(a, b) and g.composable(b, c):
            if g.comp[(g.comp[(a, b)], c)] != g.comp[(a, g.comp[(b, c)])]:
                return Verdict(name, False, (a, b, c), "associativity")
    for o in g.g0:
        if o not in g.ident:
            return Verdict(name, False, o, "no identity arrow")
        e = g.ident[o]
        if g.src[e] != o or g.tgt[e] != o:
            return Verdict(name, False, o, "identity endpoints")
    for a in g.g1:
        if g.comp[(a, g.ident[g.src[a]])] != a or g.comp[(g.ident[g.tgt[a]], a)] != a:
            return Verdict(name, False, a, "identity law")
        if a not in g.inv:
            return Verdict(name, False, a, "no inverse")
        b = g.inv[a]
        if g.src[b] != g.tgt[a] or g.tgt[b] != g.src[a]:
            return Verdict(name, False, a, "inverse endpoints")
        if g.comp[(a, b)] != g.ident[g.tgt[a]] or g.comp[(b, a)] != g.ident[g.src[a]]:
            return Verdict(name, False, a, "inverse law")
    return Verdict(name, True)


def require_valid(g: Groupoid) -> None:
    v = validate_groupoid(g)
    if not v.ok:
        raise GroupoidError(str(v))


# Constructors -----------------------------------------------------------------

def from_group_table(elements: Sequence[str], table: Mapping[tuple[str, str], str] | Sequence[Sequence[str]],
                     obj: str = "*") -> Groupoid:
    """One-object groupoid from a multiplication table.

    ``table`` is either a mapping ``(a, b) -> a.b`` or a square list of rows
    indexed like ``elements``.
    """
    if not isinstance(table, Mapping):
        table = {(a, b): table[i][j] for i, a in enumerate(elements) for j, b in enumerate(elements)}
    arrows = {a: (obj, obj) for a in elements}
    return make_groupoid([obj], arrows, ((a, b, table[(a, b)]) for a in elements for b in elements))


def cyclic_group(n: int) -> Groupoid:
    els = [str(i) for i in range(n)]
    return from_group_table(els, {(a, b): str((int(a) + int(b)) % n) for a in els for b in els})


def klein_group() -> Groupoid:
    els = ["00", "01", "10", "11"]

    def add(a, b):
        return "".join(str((int(x) + int(y)) % 2) for x, y in zip(a, b))

    return from_group_table(els, {(a, b): add(a, b) for a in els for b in els})


def symmetric_group(n: int) -> Groupoid:
    perms = list(itertools.permutations(range(n)))

    def name(p):
        return "".join(map(str, p))

    # (p . q)(i) = p(q(i))
    table = {(name(p), name(q)): name(tuple(p[q[i]] for i in range(n))) for p in perms for q in perms}
    return from_group_table([name(p) for p in perms], table)


def pair_groupoid(k: int) -> Groupoid:
    """Objects 0..k-1, one arrow (i,j) from j to i; (i,j).(j,l) = (i,l)."""
    objs = [str(i) for i in range(k)]

    def arrow(i, j):
        return f"({i},{j})"

    arrows = {arrow(i, j): (str(j), str(i)) for i in range(k) for j in range(k)}
    rows = [(arrow(i, j), arrow(j, l), arrow(i, l))
            for i in range(k) for j in range(k) for l in range(k)]
    return make_groupoid(objs, arrows, rows)


def disjoint_union(g: Groupoid, h: Groupoid) -> Groupoid:
    """Componentwise union; labels are prefixed with ``0.`` and ``1.``."""
    objects = [f"0.{o}" for o in g.g0] + [f"1.{o}" for o in h.g0]
    arrows = {}
    rows = []
    for tag, gg in (("0", g), ("1", h)):
        for a in gg.g1:
            arrows[f"{tag}.{a}"] = (f"{tag}.{gg.src[a]}", f"{tag}.{gg.tgt[a]}")
        for (a, b), ab in gg.comp.items():
            rows.append((f"{tag}.{a}", f"{tag}.{b}", f"{tag}.{ab}"))
    return make_groupoid(objects, arrows, rows)


def disjoint_union_all(parts: Sequence[Groupoid]) -> Groupoid:
    objects, arrows, rows = [], {}, []
    for k, gg in enumerate(parts):
        objects += [f"{k}.{o}" for o in gg.g0]
        for a in gg.g1:
            arrows[f"{k}.{a}"] = (f"{k}.{gg.src[a]}", f"{k}.{gg.tgt[a]}")
        for (a, b), ab in gg.comp.items():
            rows.append((f"{k}.{a}", f"{k}.{b}", f"{k}.{ab}"))
    return make_groupoid(objects, arrows, rows)


# Nerve and Frobenius object --------------------------------------------------------

def nerve(g: Groupoid) -> AlphaSimplicial:
    require_valid(g)
    pairs = g.composable_pairs()
    base = TruncSimplicialSet2(
        x0=frozenset(g.g0),
        x1=frozenset(g.g1),
        x2=frozenset(pairs),
        face1=(dict(g.src), dict(g.tgt)),
        face2=({p: p[1] for p in pairs}, {p: g.comp[p] for p in pairs}, {p: p[0] for p in pairs}),
        degen0=dict(g.ident),
        degen1=({a: (g.ident[g.tgt[a]], a) for a in g.g1},
                {a: (a, g.ident[g.src[a]]) for a in g.g1}),
    )
    return AlphaSimplicial(base, dict(g.inv))


def hcc_frobenius(g: Groupoid) -> FrobeniusObject:
    try:
        require_valid(g)
    except GroupoidError as exc:
        raise FrobeniusError(str(exc)) from exc
    pairs = g.composable_pairs()
    units = set(g.ident.values())
    return FrobeniusObject(
        g.g1, eta=units, epsilon=units,
        mu={(a, b, g.comp[(a, b)]) for a, b in pairs},
        delta={(g.comp[(a, b)], a, b) for a, b in pairs},
    )


# Catalog ----------------------------------------------------------------------

def _connected_catalog(max_arrows: int) -> list[tuple[str, int, Groupoid]]:
    """Connected groupoids up to iso with at most ``max_arrows`` arrows.

    A connected groupoid is k^2 copies of its vertex group; groups are listed
    up to order 6.
    """
    if max_arrows > 6:
        raise ValueError("the group list only covers orders up to 6")
    groups = [
        ("Z1", cyclic_group(1)), ("Z2", cyclic_group(2)), ("Z3", cyclic_group(3)),
        ("Z4", cyclic_group(4)), ("Z2xZ2", klein_group()), ("Z5", cyclic_group(5)),
        ("Z6", cyclic_group(6)), ("S3", symmetric_group(3)),
    ]
    out = []
    for name, grp in groups:
        if len(grp.g1) <= max_arrows:
            out.append((name, len(grp.g1), grp))
    for k in range(2, 4):
        if k * k <= max_arrows:
            out.append((f"Pair{k}", k * k, pair_groupoid(k)))
    return out


def groupoid_catalog(max_arrows: int = 6) -> list[tuple[str, Groupoid]]:
    """Every groupoid with at most ``max_arrows`` arrows, once per iso class.

    Built as multisets of connected components; the empty multiset gives the
    empty groupoid.
    """
    comps = _connected_catalog(max_arrows)
    out: list[tuple[str, Groupoid]] = []

    def rec(start: int, budget: int, chosen: list[int]):
        if not chosen:
            out.append(("empty", make_groupoid([], {}, [])))
        else:
            parts = [comps[i] for i in chosen]
            name = "+".join(p[0] for p in parts)
            g = parts[0][2] if len(parts) == 1 else disjoint_union_all([p[2] for p in parts])
            out.append((name, g))
        for i in range(start, len(comps)):
            if comps[i][1] <= budget:
                rec(i, budget - comps[i][1], chosen + [i])

    rec(0, max_arrows, [])
    return sorted(out, key=lambda item: (len(item[1].g1), item[0]))
