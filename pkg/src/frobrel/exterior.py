"""Signed basis monomials of an exterior algebra, the Hodge star, and the
finite Frobenius objects built from subsets closed under star and unit wedges.

Everything is exact: a monomial is a sign and a sorted subset of {1..n}, and
the wedge of two monomials is either zero or another signed monomial.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .correspondence import simplicial_to_frob
from .frobenius import FrobeniusObject, Verdict
from .simplicial import AlphaSimplicial, TruncSimplicialSet2


class SubsetSpecError(ValueError):
    """A candidate subset violates one of the sub-object conditions."""

    def __init__(self, condition: int, message: str):
        self.condition = condition
        super().__init__(f"condition ({condition}): {message}")


@dataclass(frozen=True, order=True)
class SignedMonomial:
    n: int
    subset: tuple[int, ...]
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        sub = tuple(self.subset)
        if list(sub) != sorted(set(sub)):
            raise ValueError(f"subset must be strictly increasing: {sub}")
        if sub and (sub[0] < 1 or sub[-1] > self.n):
            raise ValueError(f"subset {sub} not inside 1..{self.n}")
        object.__setattr__(self, "subset", sub)

    @property
    def degree(self) -> int:
        return len(self.subset)

    def __neg__(self) -> SignedMonomial:
        return SignedMonomial(self.n, self.subset, -self.sign)

    @property
    def label(self) -> str:
        if not self.subset:
            body = "1"
        elif self.n < 10:
            body = "e" + "".join(map(str, self.subset))
        else:
            body = "e" + "_".join(map(str, self.subset))
        return body if self.sign == 1 else "-" + body

    def __str__(self):
        return self.label


def one(n: int) -> SignedMonomial:
    return SignedMonomial(n, ())


def volume(n: int) -> SignedMonomial:
    return SignedMonomial(n, tuple(range(1, n + 1)))


def basis(n: int, i: int) -> SignedMonomial:
    return SignedMonomial(n, (i,))


def parse_label(n: int, label: str) -> SignedMonomial:
    sign = 1
    if label.startswith("-"):
        sign, label = -1, label[1:]
    if label == "1":
        return SignedMonomial(n, (), sign)
    if not label.startswith("e"):
        raise ValueError(f"bad monomial label {label!r}")
    body = label[1:]
    idx = tuple(int(p) for p in body.split("_")) if "_" in body or n >= 10 else tuple(map(int, body))
    return SignedMonomial(n, idx, sign)


def shuffle_sign(first: Iterable[int], second: Iterable[int]) -> int:
    """Sign of the permutation sorting the concatenation first + second (disjoint)."""
    first, second = list(first), list(second)
    inversions = sum(1 for a in first for b in second if a > b)
    return -1 if inversions % 2 else 1


def wedge(a: SignedMonomial, b: SignedMonomial) -> SignedMonomial | None:
    """a ^ b, or None when the product is zero."""
    if a.n != b.n:
        raise ValueError("monomials live in different dimensions")
    if set(a.subset) & set(b.subset):
        return None
    sign = a.sign * b.sign * shuffle_sign(a.subset, b.subset)
    return SignedMonomial(a.n, tuple(sorted(a.subset + b.subset)), sign)


def wedge_all(*ms: SignedMonomial) -> SignedMonomial | None:
    acc = ms[0]
    for m in ms[1:]:
        acc = wedge(acc, m)
        if acc is None:
            return None
    return acc


def hodge(a: SignedMonomial) -> SignedMonomial:
    comp = tuple(i for i in range(1, a.n + 1) if i not in a.subset)
    return SignedMonomial(a.n, comp, a.sign * shuffle_sign(a.subset, comp))


def hodge_inverse(a: SignedMonomial) -> SignedMonomial:
    # star^2 = (-1)^{k(n-k)} on degree k
    k = a.degree
    s = hodge(a)
    return s if (k * (a.n - k)) % 2 == 0 else -s


# Sub-objects ---------------------------------------------------------------------

@dataclass(frozen=True)
class SubsetSpec:
    n: int
    members: frozenset[SignedMonomial]

    def __init__(self, n: int, members: Iterable[SignedMonomial]):
        ms = frozenset(members)
        for m in ms:
            if m.n != n:
                raise ValueError(f"{m} is not in dimension {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", ms)

    def by_label(self) -> dict[str, SignedMonomial]:
        return {m.label: m for m in self.members}


def one_volume(n: int = 2) -> SubsetSpec:
    return SubsetSpec(n, [one(n), volume(n)])


def torus() -> SubsetSpec:
    n = 2
    base = [one(n), basis(n, 1), basis(n, 2), volume(n)]
    return SubsetSpec(n, base + [-m for m in base])


def check_conditions(spec: SubsetSpec) -> None:
    """Raise SubsetSpecError naming the first violated condition."""
    ms = spec.members
    if one(spec.n) not in ms:
        raise SubsetSpecError(1, "1 is not a member")
    for m in sorted(ms):
        if hodge(m) not in ms:
            raise SubsetSpecError(2, f"not closed under star: *{m} = {hodge(m)} missing")
    for a, b in itertools.product(sorted(ms), repeat=2):
        w = wedge(a, b)
        if w is not None and w not in ms:
            raise SubsetSpecError(3, f"{a} ^ {b} = {w} missing")


def mu_triples(spec: SubsetSpec) -> set[tuple[SignedMonomial, SignedMonomial, SignedMonomial]]:
    """(l, t, p) with l ^ t ^ *p equal to the volume form."""
    nu = volume(spec.n)
    ms = sorted(spec.members)
    return {(l, t, p) for l, t, p in itertools.product(ms, repeat=3)
            if wedge_all(l, t, hodge(p)) == nu}


def simplicial_set(spec: SubsetSpec) -> AlphaSimplicial:
    """X_0 = {1}, X_1 = Y, X_2 = mu-triples, with alpha_hat = star (labels as strings)."""
    check_conditions(spec)
    u = one(spec.n).label
    labels = {m.label for m in spec.members}
    mu = sorted(tuple(m.label for m in t) for t in mu_triples(spec))
    base = TruncSimplicialSet2(
        x0=frozenset([u]),
        x1=frozenset(labels),
        x2=frozenset(mu),
        face1=({x: u for x in labels}, {x: u for x in labels}),
        face2=({m: m[1] for m in mu}, {m: m[2] for m in mu}, {m: m[0] for m in mu}),
        degen0={u: u},
        degen1=({x: (u, x, x) for x in labels}, {x: (x, u, x) for x in labels}),
    )
    return AlphaSimplicial(base, {m.label: hodge(m).label for m in spec.members})


def build_frobenius(spec: SubsetSpec) -> FrobeniusObject:
    return simplicial_to_frob(simplicial_set(spec))


def check_lemma_ext(spec: SubsetSpec) -> Verdict:
    for l, t, p in sorted(mu_triples(spec)):
        w = wedge(l, t)
        if w is None or w != p:
            return Verdict("wedge of the inputs is the output", False, (l.label, t.label, p.label))
    return Verdict("wedge of the inputs is the output", True)
