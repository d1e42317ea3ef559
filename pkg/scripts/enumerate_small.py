"""Enumerate Frobenius objects on 0..3 elements, cross-check both search
routes, and print a classification table.

Writes or compares the frozen results files under results/.
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from frobrel import io
from frobrel.enumerate import BRUTE_MAX, SMART_MAX, brute_force, smart_enumerate, summary
from frobrel.frobenius import is_dagger, is_isomorphic, is_special
from frobrel.groupoid import groupoid_catalog, hcc_frobenius

ROOT = Path(__file__).resolve().parents[1]
COLUMNS = ["total", "commutative", "special", "dagger", "special_and_dagger", "nontrivial_nakayama"]


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=SMART_MAX)
    p.add_argument("--results-dir", type=Path, default=ROOT / "results")
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()

    catalog = groupoid_catalog(max(args.max_n, 0))
    print(f"{'n':>2} {'kind':<10}" + "".join(f"{c:>20}" for c in COLUMNS) + f"{'secs':>8}")
    for n in range(args.max_n + 1):
        t0 = time.perf_counter()
        objs = smart_enumerate(n, jobs=args.jobs)
        secs = time.perf_counter() - t0
        summ = summary(n, objs)
        for kind in ("labelled", "up_to_iso"):
            row = "".join(f"{summ[kind][c]:>20}" for c in COLUMNS)
            print(f"{n:>2} {kind:<10}{row}{secs:>8.2f}")
        if n <= BRUTE_MAX:
            same = brute_force(n) == objs
            print(f"   raw search agrees: {same}")
        sd = [f for f in summ["representatives"] if is_special(f) and is_dagger(f)]
        gs = [hcc_frobenius(g) for _, g in catalog if len(g.g1) == n]
        matched = all(sum(is_isomorphic(h, f) is not None for f in sd) == 1 for h in gs)
        print(f"   groupoids with {n} arrows: {len(gs)}, special dagger classes: {len(sd)}, "
              f"bijection: {matched and len(gs) == len(sd)}")

        path = args.results_dir / f"enumeration_n{n}.json"
        fresh = io.results_to_dict(summ)
        if path.exists():
            print(f"   {path.name}: {'matches' if io.read_results(path) == fresh else 'DIFFERS'}")
        else:
            args.results_dir.mkdir(parents=True, exist_ok=True)
            io.write(path, fresh)
            print(f"   wrote {path.name}")


if __name__ == "__main__":
    main()
