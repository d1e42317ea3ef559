"""A small term language for composites of the Frobenius generators.

Grammar (``*`` binds tighter than ``;``; both associate to the left)::

    term   := factor (';' factor)*
    factor := atom ('*' atom)*
    atom   := generator | '(' term ')'

``a ; b`` means "first a, then b" (top to bottom in a string diagram), which
is ``b o a`` in the usual right-to-left notation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .frobenius import FrobeniusObject
from .relcore import Relation, boolean, compose, identity, tensor, twist

GENERATORS: dict[str, tuple[int, int]] = {
    "unit": (0, 1),
    "counit": (1, 0),
    "mul": (2, 1),
    "comul": (1, 2),
    "id": (1, 1),
    "swap": (2, 2),
}

_CIRC_NAMES = {"unit": "η", "counit": "ε", "mul": "μ", "comul": "δ", "id": "1", "swap": "τ"}


class TermSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


class ArityError(ValueError):
    def __init__(self, message: str, node: CobTerm | None = None):
        self.node = node
        super().__init__(message)


@dataclass(frozen=True)
class Gen:
    name: str
    arity: tuple[int, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.name not in GENERATORS:
            raise ValueError(f"unknown generator {self.name!r}")
        object.__setattr__(self, "arity", GENERATORS[self.name])


@dataclass(frozen=True)
class Seq:
    first: CobTerm
    then: CobTerm
    arity: tuple[int, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        (a, b), (c, d) = self.first.arity, self.then.arity
        if b != c:
            raise ArityError(
                f"cannot compose {to_text(self.first)} ({a}->{b}) with "
                f"{to_text(self.then)} ({c}->{d}): {b} != {c}", self)
        object.__setattr__(self, "arity", (a, d))


@dataclass(frozen=True)
class Ten:
    left: CobTerm
    right: CobTerm
    arity: tuple[int, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        (a, b), (c, d) = self.left.arity, self.right.arity
        object.__setattr__(self, "arity", (a + c, b + d))


CobTerm = Gen | Seq | Ten


# Parsing --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            toks.append(("name", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            ch = m.group(2)
            if ch not in "();*":
                raise TermSyntaxError(f"unexpected character {ch!r}", m.start(2), text)
            toks.append((ch, ch, m.start(2)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise TermSyntaxError(f"expected {want}, got {got}", tok[2], self.text)
        self.i += 1
        return tok

    def term(self):
        node = self.factor()
        while self.peek()[0] == ";":
            self.take(";")
            node = Seq(node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        while self.peek()[0] == "*":
            self.take("*")
            node = Ten(node, self.atom())
        return node

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "(":
            self.take("(")
            node = self.term()
            self.take(")")
            return node
        if kind == "name":
            if value not in GENERATORS:
                raise TermSyntaxError(f"unknown generator {value!r}", pos, self.text)
            self.take("name")
            return Gen(value)
        got = "end of input" if kind == "end" else repr(value)
        raise TermSyntaxError(f"expected a generator or '(', got {got}", pos, self.text)


def parse(text: str) -> CobTerm:
    p = _Parser(text)
    node = p.term()
    p.take("end")
    return node


# Printing ----------------------------------------------------------------------

def to_text(t: CobTerm) -> str:
    """Concrete syntax with the minimal parentheses needed to reparse to ``t``."""
    if isinstance(t, Gen):
        return t.name
    if isinstance(t, Ten):
        left = to_text(t.left) if not isinstance(t.left, Seq) else f"({to_text(t.left)})"
        right = to_text(t.right) if isinstance(t.right, Gen) else f"({to_text(t.right)})"
        return f"{left} * {right}"
    right = to_text(t.then) if not isinstance(t.then, Seq) else f"({to_text(t.then)})"
    return f"{to_text(t.first)} ; {right}"


def to_circ(t: CobTerm) -> str:
    """Right-to-left composition notation, e.g. ``mul ; counit`` -> ``ε ∘ μ``."""
    if isinstance(t, Gen):
        return _CIRC_NAMES[t.name]
    if isinstance(t, Ten):
        parts = []
        for side in (t.left, t.right):
            s = to_circ(side)
            parts.append(s if isinstance(side, Gen) else f"({s})")
        return " × ".join(parts)
    parts = []
    for side in (t.then, t.first):
        s = to_circ(side)
        parts.append(f"({s})" if isinstance(side, Ten) else s)
    return " ∘ ".join(parts)


def describe(t: CobTerm) -> str:
    a, b = t.arity
    return f"{to_text(t)}   [{a}->{b}]   = {to_circ(t)}"


# Evaluation ----------------------------------------------------------------------

def _generator(f: FrobeniusObject, name: str) -> Relation:
    if name == "unit":
        return f.unit
    if name == "counit":
        return f.counit
    if name == "mul":
        return f.mul
    if name == "comul":
        return f.comul
    if name == "id":
        return identity(f.carrier, 1)
    return twist(f.carrier)


def evaluate(term: CobTerm | str, f: FrobeniusObject) -> Relation:
    if isinstance(term, str):
        term = parse(term)
    cache: dict[str, Relation] = {}

    def ev(t):
        if isinstance(t, Gen):
            if t.name not in cache:
                cache[t.name] = _generator(f, t.name)
            return cache[t.name]
        if isinstance(t, Seq):
            return compose(ev(t.first), ev(t.then))
        return tensor(ev(t.left), ev(t.right))

    return ev(term)


def genus_term(g: int) -> CobTerm:
    if g < 0:
        raise ValueError("genus must be non-negative")
    node: CobTerm = Gen("unit")
    for _ in range(g):
        node = Seq(node, Seq(Gen("comul"), Gen("mul")))
    return Seq(node, Gen("counit"))


def genus_invariant(f: FrobeniusObject, g: int) -> bool:
    return boolean(evaluate(genus_term(g), f))


# Named terms -----------------------------------------------------------------

BUILTINS: dict[str, str] = {
    "alpha": "mul ; counit",
    "beta": "unit ; comul",
    "snake_left": "(id * (unit ; comul)) ; ((mul ; counit) * id)",
    "snake_right": "((unit ; comul) * id) ; (id * (mul ; counit))",
    "handle": "comul ; mul",
    "assoc_left": "(id * mul) ; mul",
    "assoc_right": "(mul * id) ; mul",
    "coassoc_left": "comul ; (comul * id)",
    "coassoc_right": "comul ; (id * comul)",
    "frob_left": "(comul * id) ; (id * mul)",
    "frob_mid": "mul ; comul",
    "frob_right": "(id * comul) ; (mul * id)",
    "unit_left": "(unit * id) ; mul",
    "unit_right": "(id * unit) ; mul",
    "counit_left": "comul ; (counit * id)",
    "counit_right": "comul ; (id * counit)",
    "md_left": "(comul * id) ; (id * (mul ; counit))",
    "md_right": "(id * comul) ; ((mul ; counit) * id)",
    "twisted_mul": "swap ; mul",
    "sphere": "unit ; counit",
    "torus_surface": "unit ; comul ; mul ; counit",
}


def builtin(name: str) -> CobTerm:
    try:
        return parse(BUILTINS[name])
    except KeyError:
        raise KeyError(f"unknown builtin term {name!r}; known: {sorted(BUILTINS)}") from None


def resolve(text: str) -> CobTerm:
    """A builtin name or term text."""
    text = text.strip()
    if text in BUILTINS:
        return builtin(text)
    return parse(text)
