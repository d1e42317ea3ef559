"""Exhaustive search for Frobenius objects on small carriers.

Two independent routes:

* :func:`brute_force` filters every (eta, mu) by the unit axiom and every
  (epsilon, delta) by the counit axiom, then every surviving combination by
  the Frobenius axiom.  Nothing beyond the axioms is assumed.
* :func:`smart_enumerate` guesses (eta, alpha_hat, mu) only, with mu a union
  of rotation orbits, and derives epsilon and delta from them before a full
  verify.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from .frobenius import (
    FrobeniusObject,
    check_counit,
    check_frobenius,
    check_unit,
    extract_alpha,
    is_commutative,
    is_dagger,
    is_special,
    relabel,
    rotation_orbit,
    verify,
)
from .relcore import FiniteSet

BRUTE_MAX = 2
SMART_MAX = 3


class SearchTooLarge(ValueError):
    pass


def carrier(n: int) -> FiniteSet:
    return FiniteSet(str(i) for i in range(n))


def _subsets(items: Sequence) -> Iterable[tuple]:
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)


def _canonical_sort(objs: Iterable[FrobeniusObject]) -> list[FrobeniusObject]:
    return sorted(set(objs), key=FrobeniusObject.sort_key)


def brute_force(n: int) -> list[FrobeniusObject]:
    if n > BRUTE_MAX:
        raise SearchTooLarge(f"raw search only supported for n <= {BRUTE_MAX}")
    X = carrier(n)
    triples = list(X.power(3))
    elems = list(X)
    units, counits = [], []
    for eta in _subsets(elems):
        for mu in _subsets(triples):
            probe = FrobeniusObject(X, eta, (), mu, ())
            if check_unit(probe).ok:
                units.append((eta, mu))
    for eps in _subsets(elems):
        for delta in _subsets(triples):
            probe = FrobeniusObject(X, (), eps, (), delta)
            if check_counit(probe).ok:
                counits.append((eps, delta))
    found = []
    for (eta, mu), (eps, delta) in itertools.product(units, counits):
        f = FrobeniusObject(X, eta, eps, mu, delta)
        if check_frobenius(f).ok:
            found.append(f)
    return _canonical_sort(found)


def _allowed_orbits(X: FiniteSet, eta: frozenset, ahat: dict) -> list[list[tuple]]:
    seen: set[tuple] = set()
    orbits = []
    for t in X.power(3):
        if t in seen:
            continue
        orb = rotation_orbit(t, ahat)
        seen.update(orb)
        # unit axiom: (u, x, z) and (x, u, z) with u a unit force z = x
        if any((x in eta and y != z) or (y in eta and x != z) for x, y, z in orb):
            continue
        orbits.append(orb)
    return orbits


def _partition(n: int, eta: tuple, perm: tuple) -> list[FrobeniusObject]:
    X = carrier(n)
    elems = list(X)
    ahat = dict(zip(elems, perm))
    eta_set = frozenset(eta)
    eps = {ahat[u] for u in eta_set}
    found = []
    for chosen in _subsets(_allowed_orbits(X, eta_set, ahat)):
        mu = [t for orb in chosen for t in orb]
        probe = FrobeniusObject(X, eta_set, (), mu, ())
        if not check_unit(probe).ok:
            continue
        delta = {(y, ahat[x], z) for x, y, z in mu}
        f = FrobeniusObject(X, eta_set, eps, mu, delta)
        if verify(f).ok:
            found.append(f)
    return found


def partitions(n: int) -> list[tuple[tuple, tuple]]:
    elems = list(carrier(n))
    etas = [e for e in _subsets(elems) if e or n == 0]
    return [(eta, perm) for eta in etas for perm in itertools.permutations(elems)]


def smart_enumerate(n: int, jobs: int = 1) -> list[FrobeniusObject]:
    if n > SMART_MAX:
        raise SearchTooLarge(f"pruned search only supported for n <= {SMART_MAX}")
    parts = partitions(n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_partition, [n] * len(parts), *zip(*parts)))
    else:
        chunks = [_partition(n, eta, perm) for eta, perm in parts]
    return _canonical_sort(f for chunk in chunks for f in chunk)


# Isomorphism classes ------------------------------------------------------------

def canonical_form(f: FrobeniusObject) -> FrobeniusObject:
    """Lexicographically least relabeling of ``f`` onto its own carrier labels."""
    elems = list(f.carrier)
    best = None
    for perm in itertools.permutations(elems):
        g = relabel(f, dict(zip(elems, perm)))
        if best is None or g.sort_key() < best.sort_key():
            best = g
    return best if best is not None else f


def up_to_iso(objects: Iterable[FrobeniusObject]) -> list[FrobeniusObject]:
    return _canonical_sort(canonical_form(f) for f in objects)


def classify(objects: Iterable[FrobeniusObject]) -> dict[str, int]:
    counts = {"total": 0, "commutative": 0, "special": 0, "dagger": 0,
              "special_and_dagger": 0, "nontrivial_nakayama": 0}
    for f in objects:
        d = extract_alpha(f, check=False)
        sp, dg = is_special(f), is_dagger(f)
        counts["total"] += 1
        counts["commutative"] += is_commutative(f)
        counts["special"] += sp
        counts["dagger"] += dg
        counts["special_and_dagger"] += sp and dg
        counts["nontrivial_nakayama"] += not d.nakayama_trivial
    return counts


def summary(n: int, objects: list[FrobeniusObject]) -> dict:
    reps = up_to_iso(objects)
    return {
        "n": n,
        "labelled": classify(objects),
        "up_to_iso": classify(reps),
        "representatives": reps,
    }
