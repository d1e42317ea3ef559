"""JSON file formats for objects, groupoids, simplicial sets, subset specs, and
enumeration results.

Every writer is deterministic (sorted keys and rows), so ``dumps(read(text))``
reproduces any file this module wrote.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

from .exterior import SignedMonomial, SubsetSpec
from .frobenius import FrobeniusObject
from .groupoid import Groupoid, GroupoidError, make_groupoid
from .relcore import FiniteSet
from .simplicial import AlphaSimplicial, TruncSimplicialSet2, sort_simplices


class FormatError(ValueError):
    """A file does not match the expected schema."""


# Generic helpers ---------------------------------------------------------------

def dumps(data: dict) -> str:
    """JSON with one top-level key per line and one row per line for tables."""
    lines = ["{"]
    items = list(data.items())
    for k, (key, value) in enumerate(items):
        comma = "," if k < len(items) - 1 else ""
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            rows = [json.dumps(v, ensure_ascii=False) for v in value]
            body = ",\n    ".join(rows)
            lines.append(f"  {json.dumps(key)}: [\n    {body}\n  ]{comma}")
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value, ensure_ascii=False)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _load_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON: {exc}") from exc


def _require(data: Any, keys: set[str], optional: set[str] = frozenset(), what: str = "file"):
    if not isinstance(data, dict):
        raise FormatError(f"{what}: expected a JSON object")
    missing = keys - set(data)
    if missing:
        raise FormatError(f"{what}: missing keys {sorted(missing)}")
    extra = set(data) - keys - set(optional)
    if extra:
        raise FormatError(f"{what}: unexpected keys {sorted(extra)}")


def _strings(value, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise FormatError(f"{what}: expected a list of strings")
    return value


def _triples(value, what: str) -> list[tuple[str, str, str]]:
    if not isinstance(value, list):
        raise FormatError(f"{what}: expected a list of rows")
    out = []
    for row in value:
        if not (isinstance(row, list) and len(row) == 3 and all(isinstance(v, str) for v in row)):
            raise FormatError(f"{what}: bad row {row!r}")
        out.append(tuple(row))
    return out


def detect_kind(data: Any) -> str:
    if isinstance(data, dict):
        if "mu" in data:
            return "frobenius"
        if "x2" in data:
            return "simplicial"
        if "arrows" in data:
            return "groupoid"
        if "members" in data:
            return "subset"
        if data.get("format") == "frobrel-enumeration":
            return "results"
    raise FormatError("cannot tell what kind of file this is")


def read_any(path: str | Path):
    data = _load_json(path)
    kind = detect_kind(data)
    reader = {"frobenius": frobenius_from_dict, "simplicial": simplicial_from_dict,
              "groupoid": groupoid_from_dict, "subset": subset_from_dict,
              "results": lambda d: d}[kind]
    return kind, reader(data)


def data_path(name: str) -> Path:
    """Path of a file shipped in the package's data directory."""
    return Path(str(resources.files("frobrel") / "data" / name))


def write(path: str | Path, data: dict) -> None:
    Path(path).write_text(dumps(data), encoding="utf-8")


# Frobenius objects ---------------------------------------------------------------

def frobenius_to_dict(f: FrobeniusObject) -> dict:
    return {
        "elements": list(f.carrier),
        "eta": sorted(f.eta),
        "epsilon": sorted(f.epsilon),
        "mu": [list(t) for t in sorted(f.mu)],
        "delta": [list(t) for t in sorted(f.delta)],
    }


def frobenius_from_dict(data: Any) -> FrobeniusObject:
    _require(data, {"elements", "eta", "epsilon", "mu", "delta"}, what="Frobenius object")
    try:
        return FrobeniusObject(
            FiniteSet(_strings(data["elements"], "elements")),
            _strings(data["eta"], "eta"),
            _strings(data["epsilon"], "epsilon"),
            _triples(data["mu"], "mu"),
            _triples(data["delta"], "delta"),
        )
    except (ValueError, TypeError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"Frobenius object: {exc}") from exc


def read_frobenius(path: str | Path) -> FrobeniusObject:
    return frobenius_from_dict(_load_json(path))


def write_frobenius(path: str | Path, f: FrobeniusObject) -> None:
    write(path, frobenius_to_dict(f))


# Groupoids -----------------------------------------------------------------------

def groupoid_to_dict(g: Groupoid) -> dict:
    return {
        "objects": list(g.g0),
        "arrows": [{"name": a, "src": g.src[a], "tgt": g.tgt[a]} for a in g.g1],
        "compose": [[a, b, g.comp[(a, b)]] for a, b in sorted(g.comp)],
        "identities": {o: g.ident[o] for o in g.g0 if o in g.ident},
        "inverses": {a: g.inv[a] for a in g.g1 if a in g.inv},
    }


def groupoid_from_dict(data: Any) -> Groupoid:
    _require(data, {"objects", "arrows", "compose"}, {"identities", "inverses"}, what="groupoid")
    arrows = {}
    for entry in data["arrows"]:
        if not (isinstance(entry, dict) and set(entry) == {"name", "src", "tgt"}):
            raise FormatError(f"groupoid: bad arrow entry {entry!r}")
        arrows[entry["name"]] = (entry["src"], entry["tgt"])
    try:
        return make_groupoid(_strings(data["objects"], "objects"), arrows,
                             _triples(data["compose"], "compose"),
                             data.get("identities"), data.get("inverses"))
    except (GroupoidError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"groupoid: {exc}") from exc


def read_groupoid(path: str | Path) -> Groupoid:
    return groupoid_from_dict(_load_json(path))


# Simplicial sets -----------------------------------------------------------------

_MAPS = ["d1_0", "d1_1", "d2_0", "d2_1", "d2_2", "s0_0", "s1_0", "s1_1"]


def _enc(x):
    return list(x) if isinstance(x, tuple) else x


def _dec(x):
    if isinstance(x, list):
        if not all(isinstance(v, str) for v in x):
            raise FormatError(f"simplex identifier {x!r} must contain strings")
        return tuple(x)
    if not isinstance(x, str):
        raise FormatError(f"simplex identifier {x!r} must be a string or list of strings")
    return x


def simplicial_to_dict(a: AlphaSimplicial) -> dict:
    t = a.base
    tables = dict(zip(_MAPS, [*t.face1, *t.face2, t.degen0, *t.degen1]))
    out = {"x0": sorted(t.x0), "x1": sorted(t.x1), "x2": [_enc(z) for z in sort_simplices(t.x2)]}
    for name in _MAPS:
        m = tables[name]
        out[name] = [[_enc(k), _enc(m[k])] for k in sort_simplices(m)]
    out["alpha_hat"] = [[k, a.alpha_hat[k]] for k in sorted(a.alpha_hat)]
    return out


def simplicial_from_dict(data: Any) -> AlphaSimplicial:
    _require(data, {"x0", "x1", "x2", "alpha_hat", *_MAPS}, what="simplicial set")
    tables = {}
    for name in _MAPS + ["alpha_hat"]:
        rows = data[name]
        if not isinstance(rows, list) or not all(isinstance(r, list) and len(r) == 2 for r in rows):
            raise FormatError(f"simplicial set: {name} must be a list of [key, value] rows")
        tables[name] = {_dec(k): _dec(v) for k, v in rows}
    base = TruncSimplicialSet2(
        frozenset(_strings(data["x0"], "x0")),
        frozenset(_strings(data["x1"], "x1")),
        frozenset(_dec(z) for z in data["x2"]),
        (tables["d1_0"], tables["d1_1"]),
        (tables["d2_0"], tables["d2_1"], tables["d2_2"]),
        tables["s0_0"],
        (tables["s1_0"], tables["s1_1"]),
    )
    return AlphaSimplicial(base, tables["alpha_hat"])


def read_simplicial(path: str | Path) -> AlphaSimplicial:
    return simplicial_from_dict(_load_json(path))


# Subset specs ------------------------------------------------------------------

def subset_to_dict(spec: SubsetSpec) -> dict:
    return {
        "n": spec.n,
        "members": [{"sign": m.sign, "subset": list(m.subset)}
                    for m in sorted(spec.members, key=lambda m: (m.degree, m.subset, -m.sign))],
    }


def subset_from_dict(data: Any) -> SubsetSpec:
    _require(data, {"n", "members"}, what="subset spec")
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise FormatError("subset spec: n must be a positive integer")
    members = []
    for entry in data["members"]:
        if not (isinstance(entry, dict) and set(entry) == {"sign", "subset"}):
            raise FormatError(f"subset spec: bad member {entry!r}")
        try:
            members.append(SignedMonomial(n, tuple(entry["subset"]), entry["sign"]))
        except (ValueError, TypeError) as exc:
            raise FormatError(f"subset spec: {exc}") from exc
    return SubsetSpec(n, members)


def read_subset(path: str | Path) -> SubsetSpec:
    return subset_from_dict(_load_json(path))


# Enumeration results ---------------------------------------------------------------

RESULTS_VERSION = 1


def results_to_dict(summary: dict) -> dict:
    return {
        "format": "frobrel-enumeration",
        "version": RESULTS_VERSION,
        "n": summary["n"],
        "labelled": summary["labelled"],
        "up_to_iso": summary["up_to_iso"],
        "representatives": [frobenius_to_dict(f) for f in summary["representatives"]],
    }


def read_results(path: str | Path) -> dict:
    data = _load_json(path)
    _require(data, {"format", "version", "n", "labelled", "up_to_iso", "representatives"},
             what="results file")
    if data["version"] != RESULTS_VERSION:
        raise FormatError(f"results file version {data['version']} != {RESULTS_VERSION}")
    return data
