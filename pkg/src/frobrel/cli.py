"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 unreadable or malformed input.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .cobterm import ArityError, TermSyntaxError, describe, evaluate, genus_invariant, resolve
from .correspondence import (
    PreconditionError,
    check_preconditions,
    frob_to_simplicial,
    roundtrip_frob,
    simplicial_to_frob,
)
from .enumerate import SearchTooLarge, brute_force, smart_enumerate, summary
from .exterior import SubsetSpecError, build_frobenius, one_volume, torus
from .frobenius import (
    FrobeniusError,
    dagger_dual,
    extract_alpha,
    is_commutative,
    is_dagger,
    is_isomorphic,
    is_special,
    lemma_battery,
    opposite_dual,
    rotation_dual,
    verify,
)
from .groupoid import groupoid_catalog, hcc_frobenius, nerve, validate_groupoid
from .simplicial import check_all

OK, FAIL, BAD_INPUT = 0, 1, 2


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_check(args) -> int:
    f = io.read_frobenius(args.path)
    v = verify(f)
    print(v)
    if not v.ok:
        return FAIL
    d = extract_alpha(f)
    results = lemma_battery(f) + check_all(frob_to_simplicial(f)) + [roundtrip_frob(f)]
    for r in results:
        print(r)
    print("alpha_hat: " + ", ".join(f"{x}->{y}" for x, y in sorted(d.alpha_hat.items())))
    print(f"commutative: {_yn(is_commutative(f))}")
    print(f"special: {_yn(is_special(f))}")
    print(f"dagger: {_yn(is_dagger(f))}")
    print(f"Nakayama nontrivial: {_yn(not d.nakayama_trivial)}")
    return OK if all(results) else FAIL


def cmd_convert(args) -> int:
    kind, obj = io.read_any(args.path)
    direction = args.direction or {"frobenius": "to-simplicial",
                                   "simplicial": "to-frobenius"}.get(kind)
    if direction == "to-simplicial":
        if kind != "frobenius":
            _err(f"expected a Frobenius object file, got {kind}")
            return BAD_INPUT
        v = verify(obj)
        if not v.ok:
            _err(str(v))
            return FAIL
        io.write(args.output, io.simplicial_to_dict(frob_to_simplicial(obj)))
    elif direction == "to-frobenius":
        if kind != "simplicial":
            _err(f"expected a simplicial file, got {kind}")
            return BAD_INPUT
        pre = check_preconditions(obj)
        if not pre.ok:
            _err(str(pre))
            return FAIL
        io.write_frobenius(args.output, simplicial_to_frob(obj))
    else:
        _err(f"cannot convert a {kind} file")
        return BAD_INPUT
    print(f"wrote {args.output}")
    return OK


def cmd_nerve(args) -> int:
    g = io.read_groupoid(args.path)
    v = validate_groupoid(g)
    if not v.ok:
        _err(str(v))
        return FAIL
    if not args.simplicial and not args.frobenius:
        _err("nothing to do: pass --simplicial and/or --frobenius")
        return BAD_INPUT
    if args.simplicial:
        io.write(args.simplicial, io.simplicial_to_dict(nerve(g)))
        print(f"wrote {args.simplicial}")
    if args.frobenius:
        io.write_frobenius(args.frobenius, hcc_frobenius(g))
        print(f"wrote {args.frobenius}")
    return OK


def cmd_exterior(args) -> int:
    if args.spec == "one-volume":
        spec = one_volume(args.n)
    elif args.spec == "torus":
        spec = torus()
    else:
        spec = io.read_subset(args.spec)
    try:
        f = build_frobenius(spec)
    except SubsetSpecError as exc:
        _err(str(exc))
        return FAIL
    io.write_frobenius(args.output, f)
    print(f"wrote {args.output} ({len(f.carrier)} elements, {len(f.mu)} mu rows)")
    return OK


def cmd_eval(args) -> int:
    try:
        term = resolve(args.term)
    except (TermSyntaxError, ArityError) as exc:
        _err(f"bad term: {exc}")
        return BAD_INPUT
    f = io.read_frobenius(args.path)
    v = verify(f)
    if not v.ok:
        _err(str(v))
        return FAIL
    rel = evaluate(term, f)
    print(f"# {describe(term)}")
    for a, b in rel.sorted_pairs():
        print(f"({','.join(a)}) -> ({','.join(b)})")
    print(f"# {len(rel)} pairs")
    return OK


def cmd_genus(args) -> int:
    f = io.read_frobenius(args.path)
    v = verify(f)
    if not v.ok:
        _err(str(v))
        return FAIL
    for g in range(args.gmax + 1):
        print(f"genus {g}: {str(genus_invariant(f, g)).lower()}")
    return OK


def _counts_line(label: str, counts: dict) -> str:
    return label + ": " + ", ".join(f"{k}={v}" for k, v in counts.items())


def cmd_enumerate(args) -> int:
    n = args.n
    try:
        objs = smart_enumerate(n, jobs=args.jobs)
    except SearchTooLarge as exc:
        _err(str(exc))
        return BAD_INPUT
    status = OK
    print(f"n={n}: {len(objs)} Frobenius objects on a fixed {n}-element carrier")
    summ = summary(n, objs)
    if args.up_to_iso or args.classify:
        print(f"up to isomorphism: {len(summ['representatives'])}")
    if args.classify:
        print(_counts_line("labelled", summ["labelled"]))
        print(_counts_line("up to iso", summ["up_to_iso"]))
    if args.oracle_check:
        if n <= 2:
            raw = brute_force(n)
            same = raw == objs
            print(f"oracle: brute force found {len(raw)}; pruned search found {len(objs)}; "
                  f"{'match' if same else 'MISMATCH'}")
            status |= OK if same else FAIL
        sd = [f for f in summ["representatives"] if is_special(f) and is_dagger(f)]
        groupoids = [(name, hcc_frobenius(g)) for name, g in groupoid_catalog(min(n, 6))
                     if len(g.g1) == n]
        matched = all(any(is_isomorphic(h, f) is not None for f in sd) for _, h in groupoids)
        ok = matched and len(sd) == len(groupoids)
        print(f"groupoids with {n} arrows: {len(groupoids)}; special dagger classes: {len(sd)}; "
              f"{'match' if ok else 'MISMATCH'}")
        status |= OK if ok else FAIL
    results = Path(args.results or f"results/enumeration_n{n}.json")
    fresh = io.results_to_dict(summ)
    if results.exists() and not args.overwrite:
        frozen = io.read_results(results)
        same = io.dumps(frozen) == io.dumps(fresh)
        print(f"results file {results}: {'matches' if same else 'DIFFERS'}")
        status |= OK if same else FAIL
    else:
        results.parent.mkdir(parents=True, exist_ok=True)
        io.write(results, fresh)
        print(f"wrote {results}")
    return status


def cmd_duals(args) -> int:
    f = io.read_frobenius(args.path)
    out_dir = Path(args.out_dir or Path(args.path).parent)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = Path(args.path).name.removesuffix(".json")
    for name, fn in (("rotation", rotation_dual), ("dagger", dagger_dual), ("opposite", opposite_dual)):
        g = fn(f)
        target = out_dir / f"{stem}.{name}.json"
        io.write_frobenius(target, g)
        print(f"{name}: {'equal to original' if g == f else 'differs'} ({target})")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="frobrel", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="verify an object and report derived properties")
    s.add_argument("path")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("convert", help="Frobenius object <-> simplicial set")
    s.add_argument("path")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--direction", choices=["to-simplicial", "to-frobenius"])
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("nerve", help="groupoid file -> nerve and/or Frobenius object")
    s.add_argument("path")
    s.add_argument("--simplicial", metavar="OUT")
    s.add_argument("--frobenius", metavar="OUT")
    s.set_defaults(func=cmd_nerve)

    s = sub.add_parser("exterior", help="build an exterior-algebra object")
    s.add_argument("spec", help="'one-volume', 'torus', or a subset spec file")
    s.add_argument("-n", type=int, default=2, help="dimension for one-volume (default 2)")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_exterior)

    s = sub.add_parser("eval", help="evaluate a term against an object")
    s.add_argument("term", help="term text or a builtin name such as snake_left")
    s.add_argument("path")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("genus", help="closed-surface invariants for genus 0..gmax")
    s.add_argument("path")
    s.add_argument("gmax", type=int)
    s.set_defaults(func=cmd_genus)

    s = sub.add_parser("enumerate", help="all Frobenius objects on n elements")
    s.add_argument("n", type=int)
    s.add_argument("--up-to-iso", action="store_true")
    s.add_argument("--classify", action="store_true")
    s.add_argument("--oracle-check", action="store_true")
    s.add_argument("--results", metavar="PATH")
    s.add_argument("--overwrite", action="store_true", help="rewrite the results file")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("duals", help="write rotation, dagger and opposite duals")
    s.add_argument("path")
    s.add_argument("--out-dir")
    s.set_defaults(func=cmd_duals)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except io.FormatError as exc:
        _err(f"format error: {exc}")
        return BAD_INPUT
    except (FrobeniusError, PreconditionError) as exc:
        _err(f"check failed: {exc}")
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
