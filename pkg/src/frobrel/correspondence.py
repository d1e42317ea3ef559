"""Frobenius objects <-> 2-truncated simplicial sets with a rotation bijection."""

from __future__ import annotations

from .frobenius import (
    FrobeniusError,
    FrobeniusObject,
    Verdict,
    extract_alpha,
    verify,
)
from .relcore import FiniteSet
from .simplicial import (
    AlphaSimplicial,
    TruncSimplicialSet2,
    boundary2,
    check_P1,
    check_P2,
    check_P3,
    equivalent,
    validate,
)


class PreconditionError(FrobeniusError):
    """simplicial_to_frob input fails one of the characterizing properties."""

    def __init__(self, verdict: Verdict):
        self.verdict = verdict
        super().__init__(str(verdict))


class ConstructionError(RuntimeError):
    """The constructed object failed re-verification; this is a bug, not bad input."""


def frob_to_simplicial(f: FrobeniusObject) -> AlphaSimplicial:
    d = extract_alpha(f)
    s, t = d.source_map, d.target_map
    mu = sorted(f.mu)
    base = TruncSimplicialSet2(
        x0=frozenset(f.eta),
        x1=frozenset(f.carrier),
        x2=frozenset(mu),
        face1=(dict(s), dict(t)),
        face2=({m: m[1] for m in mu}, {m: m[2] for m in mu}, {m: m[0] for m in mu}),
        degen0={u: u for u in f.eta},
        degen1=({x: (t[x], x, x) for x in f.carrier}, {x: (x, s[x], x) for x in f.carrier}),
    )
    return AlphaSimplicial(base, dict(d.alpha_hat))


def check_preconditions(a: AlphaSimplicial) -> Verdict:
    for check in (lambda: validate(a.base), lambda: check_P1(a.base),
                  lambda: check_P2(a.base), lambda: check_P3(a)):
        v = check()
        if not v.ok:
            return v
    return Verdict("simplicial preconditions", True)


def simplicial_to_frob(a: AlphaSimplicial, check: bool = True) -> FrobeniusObject:
    if check:
        pre = check_preconditions(a)
        if not pre.ok:
            raise PreconditionError(pre)
    t, ahat = a.base, a.alpha_hat
    mu = {boundary2(t, z) for z in t.x2}
    eta = {t.degen0[u] for u in t.x0}
    f = FrobeniusObject(
        FiniteSet(t.x1),
        eta=eta,
        epsilon={ahat[u] for u in eta},
        mu=mu,
        delta={(y, ahat[x], z) for x, y, z in mu},
    )
    if check:
        v = verify(f)
        if not v.ok:
            raise ConstructionError(f"constructed object is not Frobenius: {v}")
    return f


def roundtrip_frob(f: FrobeniusObject) -> Verdict:
    back = simplicial_to_frob(frob_to_simplicial(f))
    if back != f:
        return Verdict("Frobenius roundtrip", False, detail=f"got {back!r}")
    return Verdict("Frobenius roundtrip", True)


def roundtrip_simp(a: AlphaSimplicial) -> tuple[Verdict, tuple[dict, dict] | None]:
    """Compare a with frob_to_simplicial(simplicial_to_frob(a)).

    The witnesses map X_0 and X_2 of ``a`` to those of the rebuilt object.
    """
    back = frob_to_simplicial(simplicial_to_frob(a))
    w = equivalent(a, back)
    if w is None:
        return Verdict("simplicial roundtrip", False), None
    return Verdict("simplicial roundtrip", True), w
