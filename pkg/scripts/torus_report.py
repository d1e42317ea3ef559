"""Report on the exterior-algebra examples: tables, rotation bijection,
Nakayama automorphism, duals, and closed-surface values."""

from __future__ import annotations

import argparse

from frobrel.cobterm import genus_invariant
from frobrel.correspondence import roundtrip_frob
from frobrel.exterior import build_frobenius, check_lemma_ext, one_volume, torus
from frobrel.frobenius import (
    dagger_dual,
    extract_alpha,
    is_commutative,
    is_dagger,
    is_isomorphic,
    is_special,
    lemma_battery,
    opposite_dual,
    rotation_dual,
)


def report(name: str, spec, gmax: int) -> None:
    f = build_frobenius(spec)
    d = extract_alpha(f)
    print(f"== {name}: {len(f.carrier)} elements, {len(f.mu)} mu rows")
    print("eta:", sorted(f.eta), " epsilon:", sorted(f.epsilon))
    if len(f.mu) <= 12:
        print("mu:", sorted(f.mu))
        print("delta:", sorted(f.delta))
    print("alpha_hat:", ", ".join(f"{x}->{y}" for x, y in sorted(d.alpha_hat.items())))
    moved = {x: y for x, y in d.nakayama.items() if x != y}
    print("alpha_hat^2 moves:", moved or "nothing")
    print(f"commutative={is_commutative(f)} special={is_special(f)} dagger={is_dagger(f)}")
    print("wedge lemma:", check_lemma_ext(spec))
    print("battery:", "all pass" if all(lemma_battery(f)) else "FAILURES")
    print("roundtrip:", roundtrip_frob(f))
    for dual_name, dual in (("rotation", rotation_dual), ("dagger", dagger_dual),
                            ("opposite", opposite_dual)):
        g = dual(f)
        rel = "equal" if g == f else ("isomorphic" if is_isomorphic(f, g) is not None else "distinct")
        print(f"{dual_name} dual: {rel}")
    print("genus:", [genus_invariant(f, g) for g in range(gmax + 1)])


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--gmax", type=int, default=3)
    args = p.parse_args()
    report("one-volume (n=2)", one_volume(2), args.gmax)
    report("torus", torus(), args.gmax)


if __name__ == "__main__":
    main()
