"""Frobenius objects in Rel: axiom checks, derived structure, duals.

Orientation of the structure relations, used everywhere in this package:

* ``mu`` is a set of triples ``(x, y, z)`` read as ``((x, y), z)``: inputs x, y, output z.
* ``delta`` is a set of triples ``(x, y, z)`` read as ``(x, (y, z))``.
* ``eta`` and ``epsilon`` are plain subsets of the carrier.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .relcore import (
    FiniteSet,
    NotBijectionError,
    Relation,
    as_bijection,
    compose,
    identity,
    tensor,
    twist,
)

Triple = tuple[str, str, str]


class FrobeniusError(ValueError):
    """A derived operation was given an object that is not a Frobenius object."""


@dataclass(frozen=True)
class Verdict:
    name: str
    ok: bool
    counterexample: Any = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        mark = "PASS" if self.ok else "FAIL"
        extra = ""
        if not self.ok:
            extra = f": {self.detail}" if self.detail else ""
            if self.counterexample is not None:
                extra += f" [{self.counterexample!r}]"
        return f"{mark} {self.name}{extra}"


def all_of(name: str, verdicts: Iterable[Verdict]) -> Verdict:
    for v in verdicts:
        if not v.ok:
            return Verdict(name, False, v.counterexample, f"{v.name}: {v.detail}".rstrip(": "))
    return Verdict(name, True)


@dataclass(frozen=True)
class FrobeniusObject:
    carrier: FiniteSet
    eta: frozenset[str]
    epsilon: frozenset[str]
    mu: frozenset[Triple]
    delta: frozenset[Triple]

    def __init__(self, carrier: FiniteSet | Iterable[str], eta: Iterable[str],
                 epsilon: Iterable[str], mu: Iterable[Iterable[str]],
                 delta: Iterable[Iterable[str]]):
        if not isinstance(carrier, FiniteSet):
            carrier = FiniteSet(carrier)
        members = set(carrier.elements)
        eta = frozenset(eta)
        epsilon = frozenset(epsilon)
        mu = frozenset(tuple(t) for t in mu)
        delta = frozenset(tuple(t) for t in delta)
        for name, subset in (("eta", eta), ("epsilon", epsilon)):
            bad = sorted(subset - members)
            if bad:
                raise ValueError(f"{name} mentions labels outside the carrier: {bad}")
        for name, triples in (("mu", mu), ("delta", delta)):
            for t in triples:
                if len(t) != 3:
                    raise ValueError(f"{name} row {t!r} is not a triple")
                if not members.issuperset(t):
                    raise ValueError(f"{name} row {t!r} mentions labels outside the carrier")
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "epsilon", epsilon)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "delta", delta)

    # Relation views -------------------------------------------------------

    @property
    def unit(self) -> Relation:
        return Relation._unchecked(0, 1, self.carrier, frozenset(((), (x,)) for x in self.eta))

    @property
    def counit(self) -> Relation:
        return Relation._unchecked(1, 0, self.carrier, frozenset(((x,), ()) for x in self.epsilon))

    @property
    def mul(self) -> Relation:
        return Relation._unchecked(2, 1, self.carrier,
                                   frozenset(((x, y), (z,)) for x, y, z in self.mu))

    @property
    def comul(self) -> Relation:
        return Relation._unchecked(1, 2, self.carrier,
                                   frozenset(((x,), (y, z)) for x, y, z in self.delta))

    @property
    def one(self) -> Relation:
        return identity(self.carrier, 1)

    def __len__(self):
        return len(self.carrier)

    def sort_key(self):
        return (self.carrier.elements, tuple(sorted(self.eta)), tuple(sorted(self.epsilon)),
                tuple(sorted(self.mu)), tuple(sorted(self.delta)))

    def __repr__(self):
        return (f"FrobeniusObject(X={list(self.carrier)}, eta={sorted(self.eta)}, "
                f"epsilon={sorted(self.epsilon)}, mu={sorted(self.mu)}, delta={sorted(self.delta)})")


def empty_object() -> FrobeniusObject:
    return FrobeniusObject(FiniteSet(), (), (), (), ())


def relabel(f: FrobeniusObject, phi: Mapping[str, str]) -> FrobeniusObject:
    """Transport the structure along the bijection ``phi`` (old label -> new label)."""
    return FrobeniusObject(
        FiniteSet(phi[x] for x in f.carrier),
        (phi[x] for x in f.eta),
        (phi[x] for x in f.epsilon),
        ((phi[x], phi[y], phi[z]) for x, y, z in f.mu),
        ((phi[x], phi[y], phi[z]) for x, y, z in f.delta),
    )


# Axioms ------------------------------------------------------------------

def _compare(name: str, side: str, got: Relation, want: Relation) -> Verdict:
    diff = got.symmetric_difference(want)
    if not diff:
        return Verdict(name, True)
    first = diff[0]
    where = "extra" if first in got.pairs else "missing"
    return Verdict(name, False, first, f"{side}: {where} pair")


def _first_failure(name: str, checks: list[tuple[str, Relation, Relation]]) -> Verdict:
    failures = [v for v in (_compare(name, side, got, want) for side, got, want in checks)
                if not v.ok]
    if not failures:
        return Verdict(name, True)
    return min(failures, key=lambda v: v.counterexample)


def check_unit(f: FrobeniusObject) -> Verdict:
    one = f.one
    return _first_failure("unit axiom", [
        ("(eta x 1) ; mu", compose(tensor(f.unit, one), f.mul), one),
        ("(1 x eta) ; mu", compose(tensor(one, f.unit), f.mul), one),
    ])


def check_counit(f: FrobeniusObject) -> Verdict:
    one = f.one
    return _first_failure("counit axiom", [
        ("delta ; (eps x 1)", compose(f.comul, tensor(f.counit, one)), one),
        ("delta ; (1 x eps)", compose(f.comul, tensor(one, f.counit)), one),
    ])


def check_frobenius(f: FrobeniusObject) -> Verdict:
    one = f.one
    left = compose(tensor(f.comul, one), tensor(one, f.mul))
    mid = compose(f.mul, f.comul)
    right = compose(tensor(one, f.comul), tensor(f.mul, one))
    return _first_failure("Frobenius axiom", [
        ("(delta x 1) ; (1 x mu) vs mu ; delta", left, mid),
        ("(1 x delta) ; (mu x 1) vs mu ; delta", right, mid),
    ])


def verify(f: FrobeniusObject) -> Verdict:
    return all_of("Frobenius object", [check_unit(f), check_counit(f), check_frobenius(f)])


def require_verified(f: FrobeniusObject) -> None:
    v = verify(f)
    if not v.ok:
        raise FrobeniusError(str(v))


# Derived structure ---------------------------------------------------------

@dataclass(frozen=True)
class DerivedStructure:
    alpha_hat: dict[str, str]
    beta: frozenset[tuple[str, str]]
    source_map: dict[str, str]
    target_map: dict[str, str]
    nakayama: dict[str, str] = field(default_factory=dict)

    @property
    def alpha_inverse(self) -> dict[str, str]:
        return {y: x for x, y in self.alpha_hat.items()}

    @property
    def nakayama_trivial(self) -> bool:
        return all(k == v for k, v in self.nakayama.items())


def pairing(f: FrobeniusObject) -> Relation:
    """alpha = epsilon o mu, a relation X^2 -/-> {*}."""
    return compose(f.mul, f.counit)


def copairing(f: FrobeniusObject) -> Relation:
    """beta = delta o eta, a relation {*} -/-> X^2."""
    return compose(f.unit, f.comul)


def check_snake(f: FrobeniusObject) -> Verdict:
    one = f.one
    alpha, beta = pairing(f), copairing(f)
    return _first_failure("snake identity", [
        ("(1 x beta) ; (alpha x 1)", compose(tensor(one, beta), tensor(alpha, one)), one),
        ("(beta x 1) ; (1 x alpha)", compose(tensor(beta, one), tensor(one, alpha)), one),
    ])


def _unique_unit(f: FrobeniusObject, x: str, side: str) -> str:
    if side == "source":
        cands = sorted(u for u in f.eta if (x, u, x) in f.mu)
    else:
        cands = sorted(u for u in f.eta if (u, x, x) in f.mu)
    if len(cands) != 1:
        raise FrobeniusError(f"{side}({x}) has {len(cands)} candidates {cands}")
    return cands[0]


def source(f: FrobeniusObject, x: str) -> str:
    """The unique u in eta with (x, u, x) in mu."""
    return _unique_unit(f, x, "source")


def target(f: FrobeniusObject, x: str) -> str:
    """The unique u in eta with (u, x, x) in mu."""
    return _unique_unit(f, x, "target")


def extract_alpha(f: FrobeniusObject, check: bool = True) -> DerivedStructure:
    if check:
        require_verified(f)
    snake = check_snake(f)
    if not snake.ok:
        raise FrobeniusError(str(snake))
    alpha = pairing(f)
    as_endo = Relation._unchecked(1, 1, f.carrier,
                                  frozenset(((x,), (y,)) for (x, y), _ in alpha.pairs))
    try:
        ahat = as_bijection(as_endo)
    except NotBijectionError as exc:
        raise FrobeniusError(f"epsilon o mu is not the graph of a bijection: {exc}") from exc
    beta = frozenset(b for _, b in copairing(f).pairs)
    expected_beta = frozenset((ahat[x], x) for x in f.carrier)
    if beta != expected_beta:
        raise FrobeniusError("delta o eta is not {(alpha_hat(x), x)}")
    src = {x: source(f, x) for x in f.carrier}
    tgt = {x: target(f, x) for x in f.carrier}
    nak = {x: ahat[ahat[x]] for x in f.carrier}
    return DerivedStructure(ahat, beta, src, tgt, nak)


# Duals ---------------------------------------------------------------------

def rotation_dual(f: FrobeniusObject) -> FrobeniusObject:
    return FrobeniusObject(
        f.carrier, eta=f.epsilon, epsilon=f.eta,
        mu=((z, y, x) for x, y, z in f.delta),
        delta=((z, y, x) for x, y, z in f.mu),
    )


def dagger_dual(f: FrobeniusObject) -> FrobeniusObject:
    # (x,y,z) in delta' iff (y,z,x) in mu;  (x,y,z) in mu' iff (z,x,y) in delta
    return FrobeniusObject(
        f.carrier, eta=f.epsilon, epsilon=f.eta,
        mu=((b, c, a) for a, b, c in f.delta),
        delta=((c, a, b) for a, b, c in f.mu),
    )


def opposite_dual(f: FrobeniusObject) -> FrobeniusObject:
    return FrobeniusObject(
        f.carrier, eta=f.eta, epsilon=f.epsilon,
        mu=((y, x, z) for x, y, z in f.mu),
        delta=((x, z, y) for x, y, z in f.delta),
    )


def is_commutative(f: FrobeniusObject) -> bool:
    return compose(twist(f.carrier), f.mul) == f.mul


def is_special(f: FrobeniusObject) -> bool:
    return compose(f.comul, f.mul) == f.one


def is_dagger(f: FrobeniusObject) -> bool:
    return dagger_dual(f) == f


# Lemma checks ----------------------------------------------------------------

def rotate(triple: Triple, ahat: Mapping[str, str]) -> Triple:
    x, y, z = triple
    return (y, ahat[z], ahat[x])


def check_md_identities(f: FrobeniusObject, d: DerivedStructure | None = None) -> Verdict:
    d = d or extract_alpha(f)
    one = f.one
    alpha = pairing(f)
    eqs = _first_failure("mu from delta and alpha", [
        ("(delta x 1) ; (1 x alpha)", compose(tensor(f.comul, one), tensor(one, alpha)), f.mul),
        ("(1 x delta) ; (alpha x 1)", compose(tensor(one, f.comul), tensor(alpha, one)), f.mul),
    ])
    if not eqs.ok:
        return eqs
    ahat, ainv = d.alpha_hat, d.alpha_inverse
    for x, y, z in itertools.product(f.carrier, repeat=3):
        a = (x, y, z) in f.mu
        b = (y, ahat[x], z) in f.delta
        c = (x, z, ainv[y]) in f.delta
        if not a == b == c:
            return Verdict("mu/delta membership equivalence", False, (x, y, z),
                           f"mu:{a} delta(y,a(x),z):{b} delta(x,z,a^-1(y)):{c}")
    return Verdict("mu/delta identities", True)


def check_rotation_property(f: FrobeniusObject, d: DerivedStructure | None = None) -> Verdict:
    d = d or extract_alpha(f)
    for t in sorted(f.mu):
        r = rotate(t, d.alpha_hat)
        if r not in f.mu:
            return Verdict("rotation invariance of mu", False, t, f"image {r} not in mu")
    return Verdict("rotation invariance of mu", True)


def rotation_orbit(triple: Triple, ahat: Mapping[str, str]) -> list[Triple]:
    orbit = [triple]
    cur = rotate(triple, ahat)
    while cur != triple:
        orbit.append(cur)
        cur = rotate(cur, ahat)
    return orbit


def check_associativity(f: FrobeniusObject) -> Verdict:
    one = f.one
    return _first_failure("associativity", [
        ("(1 x mu) ; mu vs (mu x 1) ; mu",
         compose(tensor(one, f.mul), f.mul), compose(tensor(f.mul, one), f.mul)),
    ])


def check_coassociativity(f: FrobeniusObject) -> Verdict:
    one = f.one
    return _first_failure("coassociativity", [
        ("delta ; (delta x 1) vs delta ; (1 x delta)",
         compose(f.comul, tensor(f.comul, one)), compose(f.comul, tensor(one, f.comul))),
    ])


def check_alpha_unit(f: FrobeniusObject, d: DerivedStructure | None = None) -> Verdict:
    d = d or extract_alpha(f)
    for x in f.carrier:
        if (x in f.eta) != (d.alpha_hat[x] in f.epsilon):
            return Verdict("alpha_hat swaps units and counits", False, x, "x in eta vs a(x) in eps")
        if (x in f.epsilon) != (d.alpha_hat[x] in f.eta):
            return Verdict("alpha_hat swaps units and counits", False, x, "x in eps vs a(x) in eta")
    return Verdict("alpha_hat swaps units and counits", True)


def check_source_target(f: FrobeniusObject, d: DerivedStructure | None = None) -> Verdict:
    """s = t o alpha_hat, and s(x)=t(y), s(y)=s(z), t(x)=t(z) for every (x,y,z) in mu."""
    d = d or extract_alpha(f)
    s, t = d.source_map, d.target_map
    for x in f.carrier:
        if s[x] != t[d.alpha_hat[x]]:
            return Verdict("source/target maps", False, x, "s(x) != t(alpha_hat(x))")
    for x, y, z in sorted(f.mu):
        if s[x] != t[y]:
            return Verdict("source/target maps", False, (x, y, z), "s(x) != t(y)")
        if s[y] != s[z]:
            return Verdict("source/target maps", False, (x, y, z), "s(y) != s(z)")
        if t[x] != t[z]:
            return Verdict("source/target maps", False, (x, y, z), "t(x) != t(z)")
    return Verdict("source/target maps", True)


def check_nakayama(f: FrobeniusObject, d: DerivedStructure | None = None) -> Verdict:
    """alpha_hat carries f onto its rotation dual, so alpha_hat^2 is an automorphism."""
    d = d or extract_alpha(f)
    if relabel(f, d.alpha_hat) != rotation_dual(f):
        return Verdict("alpha_hat is an isomorphism onto the rotation dual", False)
    if relabel(f, d.nakayama) != f:
        return Verdict("alpha_hat^2 is an automorphism", False)
    return Verdict("alpha_hat^2 is an automorphism", True)


def check_commutative_consequences(f: FrobeniusObject,
                                   d: DerivedStructure | None = None) -> Verdict:
    """For commutative f: f equals its opposite, alpha_hat is an involution, s = t."""
    name = "commutative consequences"
    if not is_commutative(f):
        return Verdict(name, True, detail="not commutative; vacuous")
    d = d or extract_alpha(f)
    if opposite_dual(f) != f:
        return Verdict(name, False, detail="opposite dual differs")
    for x in f.carrier:
        if d.nakayama[x] != x:
            return Verdict(name, False, x, "alpha_hat is not an involution")
        if d.source_map[x] != d.target_map[x]:
            return Verdict(name, False, x, "s(x) != t(x)")
    return Verdict(name, True)


def lemma_battery(f: FrobeniusObject) -> list[Verdict]:
    """Every structural consequence of the axioms, evaluated exactly."""
    d = extract_alpha(f)
    return [
        check_snake(f),
        check_associativity(f),
        check_coassociativity(f),
        check_md_identities(f, d),
        check_alpha_unit(f, d),
        check_source_target(f, d),
        check_rotation_property(f, d),
        check_nakayama(f, d),
        check_commutative_consequences(f, d),
    ]


# Isomorphism -----------------------------------------------------------------

def _signature(f: FrobeniusObject) -> dict[str, tuple]:
    counts: dict[str, Counter] = defaultdict(Counter)
    for rel, triples in (("m", f.mu), ("d", f.delta)):
        for t in triples:
            for i, x in enumerate(t):
                counts[x][(rel, i)] += 1
    return {x: (x in f.eta, x in f.epsilon, tuple(sorted(counts[x].items())))
            for x in f.carrier}


def is_isomorphic(f: FrobeniusObject, g: FrobeniusObject) -> dict[str, str] | None:
    """A bijection carrier(f) -> carrier(g) carrying f's structure onto g's, or None."""
    if len(f.carrier) != len(g.carrier) or len(f.mu) != len(g.mu) or len(f.delta) != len(g.delta):
        return None
    sf, sg = _signature(f), _signature(g)
    blocks_f: dict[tuple, list[str]] = defaultdict(list)
    blocks_g: dict[tuple, list[str]] = defaultdict(list)
    for x in f.carrier:
        blocks_f[sf[x]].append(x)
    for y in g.carrier:
        blocks_g[sg[y]].append(y)
    if {k: len(v) for k, v in blocks_f.items()} != {k: len(v) for k, v in blocks_g.items()}:
        return None
    keys = sorted(blocks_f)
    choices = [itertools.permutations(blocks_g[k]) for k in keys]
    for combo in itertools.product(*(list(c) for c in choices)):
        phi = {}
        for k, image in zip(keys, combo):
            phi.update(zip(blocks_f[k], image))
        if relabel(f, phi) == g:
            return phi
    return None
