"""2-truncated simplicial sets, their 2-coskeletal extension, and the lifting
and rotation properties that characterize the ones coming from Frobenius objects.

Face maps are indexed ``d(q, i): X_q -> X_{q-1}`` and degeneracies
``s(q, i): X_q -> X_{q+1}``; all maps are explicit lookup tables.  1-simplex
labels are strings; 2-simplex identifiers are arbitrary hashables (tuples for
the objects built in this package).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Hashable, Iterator, Mapping

from .frobenius import Verdict, all_of

Simplex = Hashable


@dataclass(frozen=True)
class TruncSimplicialSet2:
    x0: frozenset[str]
    x1: frozenset[str]
    x2: frozenset[Simplex]
    face1: tuple[dict, dict]
    face2: tuple[dict, dict, dict]
    degen0: dict
    degen1: tuple[dict, dict]

    __hash__ = None  # type: ignore[assignment]

    def d(self, q: int, i: int) -> dict:
        return (self.face1 if q == 1 else self.face2)[i]

    def s(self, q: int, i: int) -> dict:
        if q == 0:
            if i != 0:
                raise IndexError(i)
            return self.degen0
        return self.degen1[i]

    def boundary(self, zeta: Simplex) -> tuple[str, str, str]:
        """Standard boundary (d0, d1, d2) of a 2-simplex."""
        return tuple(self.face2[i][zeta] for i in range(3))


@dataclass(frozen=True)
class AlphaSimplicial:
    base: TruncSimplicialSet2
    alpha_hat: dict

    __hash__ = None  # type: ignore[assignment]


def make(x0, x1, x2, d10, d11, d20, d21, d22, s00, s10, s11) -> TruncSimplicialSet2:
    return TruncSimplicialSet2(
        frozenset(x0), frozenset(x1), frozenset(x2),
        (dict(d10), dict(d11)), (dict(d20), dict(d21), dict(d22)),
        dict(s00), (dict(s10), dict(s11)),
    )


def _key(x: Any):
    return (str(type(x)), x) if not isinstance(x, tuple) else ("tuple", tuple(map(str, x)))


def sort_simplices(xs):
    return sorted(xs, key=_key)


# Validation ------------------------------------------------------------------

def _check_maps(t: TruncSimplicialSet2) -> Verdict:
    specs = [
        ("d^1_0", t.face1[0], t.x1, t.x0), ("d^1_1", t.face1[1], t.x1, t.x0),
        ("d^2_0", t.face2[0], t.x2, t.x1), ("d^2_1", t.face2[1], t.x2, t.x1),
        ("d^2_2", t.face2[2], t.x2, t.x1),
        ("s^0_0", t.degen0, t.x0, t.x1),
        ("s^1_0", t.degen1[0], t.x1, t.x2), ("s^1_1", t.degen1[1], t.x1, t.x2),
    ]
    for name, m, dom, cod in specs:
        if set(m) != set(dom):
            missing = sort_simplices(set(dom) - set(m)) or sort_simplices(set(m) - set(dom))
            return Verdict("maps total", False, missing[0], f"{name} domain mismatch")
        for k in sort_simplices(m):
            if m[k] not in cod:
                return Verdict("maps total", False, k, f"{name} lands outside its codomain")
    return Verdict("maps total", True)


def validate(t: TruncSimplicialSet2) -> Verdict:
    """Every simplicial identity that makes sense at truncation level 2."""
    maps = _check_maps(t)
    if not maps.ok:
        return maps
    d, s = t.d, t.s
    checks = []
    # d_i^1 d_j^2 = d_{j-1}^1 d_i^2 for i < j
    for i, j in ((0, 1), (0, 2), (1, 2)):
        for z in sort_simplices(t.x2):
            if d(1, i)[d(2, j)[z]] != d(1, j - 1)[d(2, i)[z]]:
                checks.append(Verdict("face-face identity", False, z, f"i={i}, j={j}"))
                break
    # s_0^1 s_0^0 = s_1^1 s_0^0
    for u in sort_simplices(t.x0):
        if s(1, 0)[s(0, 0)[u]] != s(1, 1)[s(0, 0)[u]]:
            checks.append(Verdict("degeneracy-degeneracy identity", False, u))
            break
    # d_i^1 s_0^0 = id
    for i in (0, 1):
        for u in sort_simplices(t.x0):
            if d(1, i)[s(0, 0)[u]] != u:
                checks.append(Verdict("face-degeneracy identity", False, u, f"d^1_{i} s^0_0 != id"))
                break
    # d_i^2 s_j^1
    for j in (0, 1):
        for i in (0, 1, 2):
            for x in sort_simplices(t.x1):
                lhs = d(2, i)[s(1, j)[x]]
                if i < j:
                    rhs = s(0, j - 1)[d(1, i)[x]]
                elif i in (j, j + 1):
                    rhs = x
                else:
                    rhs = s(0, j)[d(1, i - 1)[x]]
                if lhs != rhs:
                    checks.append(Verdict("face-degeneracy identity", False, x,
                                          f"d^2_{i} s^1_{j}"))
                    break
    return all_of("simplicial identities", checks)


# Boundaries and compatible tuples ---------------------------------------------

def boundary2(t: TruncSimplicialSet2, zeta: Simplex) -> tuple[str, str, str]:
    """Reordered boundary (d2, d0, d1) so a 2-simplex reads like a mu-triple."""
    return (t.face2[2][zeta], t.face2[0][zeta], t.face2[1][zeta])


def boundary2_image(t: TruncSimplicialSet2) -> frozenset[tuple[str, str, str]]:
    return frozenset(boundary2(t, z) for z in t.x2)


def _level(t: TruncSimplicialSet2, q: int):
    """(elements of X_{q-1}, face maps at level q-1) for building Delta_q."""
    if q == 2:
        return t.x1, t.face1
    if q == 3:
        return t.x2, t.face2
    raise ValueError(f"compatible tuples only defined here for q in (2, 3), got {q}")


def _search(t: TruncSimplicialSet2, q: int, fixed: Mapping[int, Simplex]) -> Iterator[tuple]:
    elems, faces = _level(t, q)
    by_d0 = defaultdict(list)
    for e in sort_simplices(elems):
        by_d0[faces[0][e]].append(e)
    ordered = sort_simplices(elems)

    def consistent(partial, zj, j):
        return all(faces[i][zj] == faces[j - 1][partial[i]] for i in range(j))

    def extend(partial):
        j = len(partial)
        if j == q + 1:
            yield tuple(partial)
            return
        if j in fixed:
            cands = [fixed[j]]
        elif j == 0:
            cands = ordered
        else:
            cands = by_d0.get(faces[j - 1][partial[0]], [])
        for zj in cands:
            if consistent(partial, zj, j):
                partial.append(zj)
                yield from extend(partial)
                partial.pop()

    yield from extend([])


def compatible_tuples(t: TruncSimplicialSet2, q: int) -> set[tuple]:
    """Delta_q: (q+1)-tuples of (q-1)-simplices with d_i z_j = d_{j-1} z_i for i < j.

    Tuples are in the standard order (z_0, ..., z_q).  For q = 3 this is X_3 of
    the 2-coskeletal extension.
    """
    return set(_search(t, q, {}))


def delta2_boundary_order(t: TruncSimplicialSet2) -> set[tuple[str, str, str]]:
    """Delta_2 written in the boundary2 ordering (z_2, z_0, z_1)."""
    return {(z2, z0, z1) for z0, z1, z2 in compatible_tuples(t, 2)}


# Characterizing properties --------------------------------------------------

def check_P1(t: TruncSimplicialSet2) -> Verdict:
    seen: dict[tuple, Simplex] = {}
    for z in sort_simplices(t.x2):
        b = boundary2(t, z)
        if b in seen:
            return Verdict("P1 boundary injective", False, (seen[b], z), "same boundary")
        seen[b] = z
    degenerate = {t.degen0[u] for u in t.x0}
    for z in sort_simplices(t.x2):
        d0, d1, d2 = t.boundary(z)
        if d0 in degenerate and d2 != d1:
            return Verdict("P1 degenerate faces", False, z, "d0 degenerate but d2 != d1")
        if d2 in degenerate and d0 != d1:
            return Verdict("P1 degenerate faces", False, z, "d2 degenerate but d0 != d1")
    return Verdict("P1", True)


def _has_lift(t, fixed) -> bool:
    return next(_search(t, 3, fixed), None) is not None


def check_P2(t: TruncSimplicialSet2) -> Verdict:
    x2 = sort_simplices(t.x2)
    d0, d1, d2 = t.face2
    by_d1 = defaultdict(list)
    by_d2 = defaultdict(list)
    for z in x2:
        by_d1[d1[z]].append(z)
        by_d2[d2[z]].append(z)
    for z2 in x2:
        for z0 in by_d1.get(d0[z2], []):
            if not _has_lift(t, {0: z0, 2: z2}):
                return Verdict("P2 lifting", False, (z0, z2), "no 3-simplex with faces 0 and 2")
    for z1 in x2:
        for z3 in x2:
            if d1[z3] == d2[z1] and not _has_lift(t, {1: z1, 3: z3}):
                return Verdict("P2 lifting", False, (z1, z3), "no 3-simplex with faces 1 and 3")
    return Verdict("P2", True)


def rotate(triple, ahat):
    x, y, z = triple
    return (y, ahat[z], ahat[x])


def _check_alpha(a: AlphaSimplicial) -> Verdict:
    x1 = a.base.x1
    if set(a.alpha_hat) != set(x1) or set(a.alpha_hat.values()) != set(x1):
        return Verdict("alpha_hat is a bijection of X_1", False)
    return Verdict("alpha_hat is a bijection of X_1", True)


def _rotation_invariant(name: str, triples, ahat) -> Verdict:
    for b in sorted(triples):
        r = rotate(b, ahat)
        if r not in triples:
            return Verdict(name, False, b, f"rotated to {r}")
    return Verdict(name, True)


def check_P3(a: AlphaSimplicial) -> Verdict:
    ok = _check_alpha(a)
    if not ok.ok:
        return ok
    return _rotation_invariant("P3 rotation invariance of X_2", boundary2_image(a.base), a.alpha_hat)


def check_delta2_invariance(a: AlphaSimplicial) -> Verdict:
    ok = _check_alpha(a)
    if not ok.ok:
        return ok
    return _rotation_invariant("rotation invariance of Delta_2", delta2_boundary_order(a.base),
                               a.alpha_hat)


def check_all(a: AlphaSimplicial) -> list[Verdict]:
    v = validate(a.base)
    if not v.ok:
        return [v]
    return [v, check_P1(a.base), check_P2(a.base), check_P3(a), check_delta2_invariance(a)]


# Opposites and identification -----------------------------------------------

def opposite(t: TruncSimplicialSet2) -> TruncSimplicialSet2:
    return TruncSimplicialSet2(
        t.x0, t.x1, t.x2,
        (t.face1[1], t.face1[0]),
        (t.face2[2], t.face2[1], t.face2[0]),
        t.degen0,
        (t.degen1[1], t.degen1[0]),
    )


def opposite_alpha(a: AlphaSimplicial) -> AlphaSimplicial:
    """Opposite simplicial set with the inverse rotation bijection.

    This is what the opposite Frobenius object produces: epsilon o mu^op is the
    converse of epsilon o mu.
    """
    inv = {y: x for x, y in a.alpha_hat.items()}
    return AlphaSimplicial(opposite(a.base), inv)


def normalize(a: AlphaSimplicial) -> tuple[AlphaSimplicial, dict, dict]:
    """Replace X_0 by s^0_0(X_0) and X_2 by its boundary2 image.

    Returns the normalized object and the witness bijections for X_0 and X_2.
    Requires P1 (injective boundary) and injective s^0_0.
    """
    t = a.base
    w0 = dict(t.degen0)
    w2 = {z: boundary2(t, z) for z in t.x2}
    if len(set(w0.values())) != len(w0):
        raise ValueError("s^0_0 is not injective")
    if len(set(w2.values())) != len(w2):
        raise ValueError("boundary2 is not injective")
    base = TruncSimplicialSet2(
        frozenset(w0.values()), t.x1, frozenset(w2.values()),
        tuple({x: w0[m[x]] for x in t.x1} for m in t.face1),
        tuple({w2[z]: m[z] for z in t.x2} for m in t.face2),
        {w0[u]: t.degen0[u] for u in t.x0},
        tuple({x: w2[m[x]] for x in t.x1} for m in t.degen1),
    )
    return AlphaSimplicial(base, dict(a.alpha_hat)), w0, w2


def equivalent(a: AlphaSimplicial, b: AlphaSimplicial) -> tuple[dict, dict] | None:
    """Equality up to the canonical identifications of X_0 and X_2.

    Returns (X_0 witness, X_2 witness) as maps from a's simplices to b's, or None.
    """
    try:
        na, a0, a2 = normalize(a)
        nb, b0, b2 = normalize(b)
    except ValueError:
        return None
    if na != nb:
        return None
    inv_b0 = {v: k for k, v in b0.items()}
    inv_b2 = {v: k for k, v in b2.items()}
    return ({u: inv_b0[a0[u]] for u in a0}, {z: inv_b2[a2[z]] for z in a2})


def iter_x3(t: TruncSimplicialSet2) -> Iterator[tuple]:
    return _search(t, 3, {})
