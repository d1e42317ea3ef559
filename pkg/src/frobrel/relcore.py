"""Finite relations between powers of a single carrier set.

A relation ``X^m -/-> X^n`` is stored extensionally as a frozenset of pairs
``(a, b)`` with ``len(a) == m`` and ``len(b) == n``.  Arity-0 tuples are the
empty tuple, so a relation ``{*} -/-> X`` is just a subset of ``X`` and a
relation ``{*} -/-> {*}`` is a boolean (``{((), ())}`` or empty).
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

Tuple = tuple[str, ...]
Pair = tuple[Tuple, Tuple]


class RelationError(ValueError):
    """Raised on arity or carrier mismatches."""


class NotBijectionError(ValueError):
    """Raised by :func:`as_bijection`; ``reason`` says which property failed."""

    def __init__(self, reason: str, witness=None):
        self.reason = reason
        self.witness = witness
        msg = reason if witness is None else f"{reason} (at {witness!r})"
        super().__init__(msg)


@dataclass(frozen=True)
class FiniteSet:
    elements: tuple[str, ...]

    def __init__(self, elements: Iterable[str] = ()):
        elems = list(elements)
        if len(set(elems)) != len(elems):
            raise ValueError(f"duplicate labels in {elems!r}")
        for e in elems:
            if not isinstance(e, str):
                raise TypeError(f"labels must be strings, got {e!r}")
        object.__setattr__(self, "elements", tuple(sorted(elems)))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, item):
        return item in self.elements

    def power(self, k: int) -> Iterable[Tuple]:
        return itertools.product(self.elements, repeat=k)

    def __repr__(self):
        return "FiniteSet({" + ", ".join(self.elements) + "})"


@dataclass(frozen=True)
class Relation:
    source_arity: int
    target_arity: int
    carrier: FiniteSet
    pairs: frozenset[Pair]

    def __init__(self, source_arity: int, target_arity: int, carrier: FiniteSet,
                 pairs: Iterable[Pair] = ()):
        ps = frozenset((tuple(a), tuple(b)) for a, b in pairs)
        members = set(carrier.elements)
        for a, b in ps:
            if len(a) != source_arity or len(b) != target_arity:
                raise RelationError(f"pair {(a, b)!r} does not have arity {source_arity}->{target_arity}")
            for label in a + b:
                if label not in members:
                    raise RelationError(f"label {label!r} not in carrier")
        object.__setattr__(self, "source_arity", source_arity)
        object.__setattr__(self, "target_arity", target_arity)
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "pairs", ps)

    @classmethod
    def _unchecked(cls, source_arity: int, target_arity: int, carrier: FiniteSet,
                   pairs: frozenset[Pair]) -> Relation:
        # internal fast path: inputs already known to be well-formed
        obj = object.__new__(cls)
        object.__setattr__(obj, "source_arity", source_arity)
        object.__setattr__(obj, "target_arity", target_arity)
        object.__setattr__(obj, "carrier", carrier)
        object.__setattr__(obj, "pairs", frozenset(pairs))
        return obj

    def __iter__(self):
        return iter(self.sorted_pairs())

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        return pair in self.pairs

    def __bool__(self):
        return bool(self.pairs)

    def sorted_pairs(self) -> list[Pair]:
        return sorted(self.pairs)

    @property
    def arity(self) -> tuple[int, int]:
        return self.source_arity, self.target_arity

    def flat(self) -> frozenset[Tuple]:
        """Pairs concatenated into single tuples, e.g. mu as a set of triples."""
        return frozenset(a + b for a, b in self.pairs)

    def symmetric_difference(self, other: Relation) -> list[Pair]:
        return sorted(self.pairs ^ other.pairs)

    def __repr__(self):
        body = ", ".join(_fmt_pair(p) for p in self.sorted_pairs())
        return f"Relation({self.source_arity}->{self.target_arity}, {{{body}}})"


def _fmt_pair(p: Pair) -> str:
    a, b = p
    return "(" + ",".join(a) + " | " + ",".join(b) + ")"


def from_flat(carrier: FiniteSet, source_arity: int, target_arity: int,
              tuples: Iterable[Iterable[str]]) -> Relation:
    """Build a relation from flat tuples of length ``source_arity + target_arity``."""
    pairs = []
    for t in tuples:
        t = tuple(t)
        if len(t) != source_arity + target_arity:
            raise RelationError(f"tuple {t!r} has wrong length")
        pairs.append((t[:source_arity], t[source_arity:]))
    return Relation(source_arity, target_arity, carrier, pairs)


def empty(carrier: FiniteSet, source_arity: int, target_arity: int) -> Relation:
    return Relation(source_arity, target_arity, carrier)


def _same_carrier(r: Relation, s: Relation) -> None:
    if r.carrier != s.carrier:
        raise RelationError("carrier mismatch")


def compose(r: Relation, s: Relation) -> Relation:
    """Diagrammatic composite: first ``r``, then ``s`` (``s o r`` in the usual notation)."""
    _same_carrier(r, s)
    if r.target_arity != s.source_arity:
        raise RelationError(f"cannot compose {r.arity} with {s.arity}")
    by_source: dict[Tuple, list[Tuple]] = defaultdict(list)
    for b, c in s.pairs:
        by_source[b].append(c)
    out = set()
    for a, b in r.pairs:
        for c in by_source.get(b, ()):
            out.add((a, c))
    return Relation._unchecked(r.source_arity, s.target_arity, r.carrier, out)


def tensor(r: Relation, s: Relation) -> Relation:
    _same_carrier(r, s)
    pairs = {(a + c, b + d) for a, b in r.pairs for c, d in s.pairs}
    return Relation._unchecked(r.source_arity + s.source_arity,
                               r.target_arity + s.target_arity, r.carrier, pairs)


def identity(carrier: FiniteSet, arity: int = 1) -> Relation:
    return Relation._unchecked(arity, arity, carrier,
                               frozenset((t, t) for t in carrier.power(arity)))


def converse(r: Relation) -> Relation:
    return Relation._unchecked(r.target_arity, r.source_arity, r.carrier,
                               frozenset((b, a) for a, b in r.pairs))


def twist(carrier: FiniteSet) -> Relation:
    return Relation._unchecked(2, 2, carrier,
                               frozenset(((x, y), (y, x)) for x, y in carrier.power(2)))


def as_bijection(r: Relation) -> dict[str, str]:
    """Return the bijection whose graph is ``r``, or raise NotBijectionError.

    Checks run in the order single-valued, total, injective, surjective, and the
    least offending element is reported.
    """
    if r.arity != (1, 1):
        raise RelationError(f"as_bijection needs a 1->1 relation, got {r.arity}")
    image: dict[str, list[str]] = defaultdict(list)
    for (x,), (y,) in r.sorted_pairs():
        image[x].append(y)
    for x in r.carrier:
        if len(image.get(x, ())) > 1:
            raise NotBijectionError("not single-valued", x)
    for x in r.carrier:
        if x not in image:
            raise NotBijectionError("not total", x)
    f = {x: ys[0] for x, ys in image.items()}
    seen: dict[str, str] = {}
    for x in r.carrier:
        y = f[x]
        if y in seen:
            raise NotBijectionError("not injective", y)
        seen[y] = x
    for y in r.carrier:
        if y not in seen:
            raise NotBijectionError("not surjective", y)
    return f


def graph(carrier: FiniteSet, f: Mapping[str, str]) -> Relation:
    """The 1->1 relation ``{(x, f(x))}``."""
    return Relation(1, 1, carrier, (((x,), (f[x],)) for x in carrier))


def boolean(r: Relation) -> bool:
    if r.arity != (0, 0):
        raise RelationError(f"not a 0->0 relation: {r.arity}")
    return bool(r.pairs)
