"""Regenerate the example files shipped in src/frobrel/data/."""

from __future__ import annotations

import argparse
from pathlib import Path

from frobrel import io
from frobrel.exterior import build_frobenius, one_volume, torus
from frobrel.groupoid import cyclic_group, pair_groupoid, symmetric_group

DATA = Path(__file__).resolve().parents[1] / "src" / "frobrel" / "data"


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", type=Path, default=DATA)
    args = p.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    io.write_frobenius(args.out / "one_volume.json", build_frobenius(one_volume(2)))
    io.write_frobenius(args.out / "torus.json", build_frobenius(torus()))
    io.write(args.out / "torus.subset.json", io.subset_to_dict(torus()))
    groupoids = {
        "z2": cyclic_group(2),
        "z3": cyclic_group(3),
        "pair2": pair_groupoid(2),
        "s3": symmetric_group(3),
    }
    for name, g in groupoids.items():
        io.write(args.out / f"{name}.groupoid.json", io.groupoid_to_dict(g))
    for path in sorted(args.out.glob("*.json")):
        print(path)


if __name__ == "__main__":
    main()
