from __future__ import annotations

import functools

import pytest

from frobrel import io
from frobrel.enumerate import smart_enumerate
from frobrel.exterior import build_frobenius, one_volume, torus
from frobrel.frobenius import (
    FrobeniusObject,
    dagger_dual,
    opposite_dual,
    rotation_dual,
    verify,
)
from frobrel.groupoid import groupoid_catalog, hcc_frobenius


@functools.lru_cache(maxsize=None)
def enumerated(n: int) -> tuple[FrobeniusObject, ...]:
    return tuple(smart_enumerate(n))


@functools.lru_cache(maxsize=None)
def catalog() -> tuple:
    return tuple(groupoid_catalog(6))


@functools.lru_cache(maxsize=None)
def catalog_objects() -> tuple[FrobeniusObject, ...]:
    return tuple(hcc_frobenius(g) for _, g in catalog())


@functools.lru_cache(maxsize=None)
def exterior_objects() -> tuple[FrobeniusObject, ...]:
    return (build_frobenius(one_volume(2)), build_frobenius(torus()))


@functools.lru_cache(maxsize=None)
def corpus() -> tuple[FrobeniusObject, ...]:
    """Every verified object the suite constructs, plus all three duals of each."""
    base = [f for n in range(4) for f in enumerated(n)]
    base += catalog_objects()
    base += exterior_objects()
    base += [io.read_frobenius(io.data_path(name)) for name in ("one_volume.json", "torus.json")]
    out = set()
    for f in base:
        for g in (f, rotation_dual(f), dagger_dual(f), opposite_dual(f)):
            out.add(g)
    objs = sorted(out, key=FrobeniusObject.sort_key)
    assert all(verify(f).ok for f in objs)
    return tuple(objs)


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def torus_obj() -> FrobeniusObject:
    return build_frobenius(torus())


@pytest.fixture(scope="session")
def one_volume_obj() -> FrobeniusObject:
    return build_frobenius(one_volume(2))


TERM_CORPUS = (
    "id",
    "unit",
    "counit",
    "mul",
    "comul",
    "swap",
    "mul ; counit",
    "unit ; comul",
    "mul ; comul",
    "comul ; mul",
    "id * id",
    "unit * unit",
    "swap ; mul",
    "comul ; swap",
    "(id * mul) ; mul",
    "(mul * id) ; mul",
    "comul ; (comul * id)",
    "comul ; (id * comul)",
    "(comul * id) ; (id * mul)",
    "(id * comul) ; (mul * id)",
    "(id * (unit ; comul)) ; ((mul ; counit) * id)",
    "((unit ; comul) * id) ; (id * (mul ; counit))",
    "unit ; comul ; mul ; counit",
    "unit ; (comul ; mul) ; counit",
    "id * (id * id)",
    "(id * id) * id",
    "(swap * id) ; (id * swap) ; (swap * id)",
    "((unit * id) ; mul) * counit",
)
