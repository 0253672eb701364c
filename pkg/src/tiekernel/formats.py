"""Line-oriented text formats for instances and SMTI graphs.

Instance document::

    # comment
    GROUND 4
    MATROID1 partition
    1: 0 1
    1: 2 3
    MATROID2 uniform 2
    P1 0 1 3/2 2
    P2 1 1 1 1
    DELTA 1

A header line starts with an upper-case section name; body lines follow until
the next header. Matroid kinds and their bodies:

* ``uniform <rank>``: no body,
* ``partition`` / ``laminar``: one ``<capacity>: <ids...>`` line per class/set,
* ``graphic``: one ``<u> <v>`` line per element, in element order,
* ``explicit``: one line per independent set, ``{}`` for the empty set.

``P1``/``P2`` values may continue on body lines. Optional ``ORDER1``/``ORDER2``
(element ids, best first) and ``ORIGIN`` (origin id per element) appear in
dumps of extended instances. Numbers are exact rationals (``3/2``, ``0.5``).

SMTI document::

    MEN 2
    WOMEN 2
    EDGES
    0 0 1 1     # man woman man_value woman_value
    DELTA 1     # optional, defaults to 1
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .extend import ExtendedInstance, Instance
from .matroid import Explicit, Graphic, InputError, Laminar, Partition, Uniform
from .ordered import StrictOrder
from .smti import SmtiInstance

INSTANCE_SECTIONS = ("GROUND", "MATROID1", "MATROID2", "P1", "P2", "DELTA", "ORDER1", "ORDER2", "ORIGIN")
REQUIRED_SECTIONS = ("GROUND", "MATROID1", "MATROID2", "P1", "P2", "DELTA")
SMTI_SECTIONS = ("MEN", "WOMEN", "EDGES", "DELTA")
_HEADER = re.compile(r"[A-Z][A-Z0-9]*")


class ParseError(InputError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class _Token:
    text: str
    line: int
    column: int


@dataclass
class _Section:
    name: _Token
    args: list[_Token]
    body: list[list[_Token]]


@dataclass(frozen=True)
class Document:
    instance: Instance
    order1: StrictOrder | None = None
    order2: StrictOrder | None = None
    origins: tuple[int, ...] | None = None


def _tokenize(text: str) -> list[list[_Token]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = []
        col = 0
        for piece in content.split():
            col = content.index(piece, col)
            tokens.append(_Token(piece, lineno, col + 1))
            col += len(piece)
        if tokens:
            lines.append(tokens)
    return lines


def _sections(text: str, known: tuple[str, ...]) -> dict[str, _Section]:
    out: dict[str, _Section] = {}
    current = None
    for tokens in _tokenize(text):
        head = tokens[0]
        if _HEADER.fullmatch(head.text):
            if head.text not in known:
                raise ParseError(head.line, head.column, f"unknown section {head.text!r}")
            if head.text in out:
                raise ParseError(head.line, head.column, f"duplicate section {head.text!r}")
            current = out[head.text] = _Section(head, tokens[1:], [])
        elif current is None:
            raise ParseError(head.line, head.column, "content before the first section header")
        else:
            current.body.append(tokens)
    return out


def _int(tok: _Token, minimum: int = 0) -> int:
    try:
        value = int(tok.text)
    except ValueError:
        raise ParseError(tok.line, tok.column, f"expected an integer, got {tok.text!r}") from None
    if value < minimum:
        raise ParseError(tok.line, tok.column, f"value {value} is below {minimum}")
    return value


def _rational(tok: _Token) -> Fraction:
    try:
        value = Fraction(tok.text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(tok.line, tok.column, f"expected a rational number, got {tok.text!r}") from None
    if value < 0:
        raise ParseError(tok.line, tok.column, f"negative value {tok.text!r}")
    return value


def _single(section: _Section) -> _Token:
    if len(section.args) != 1 or section.body:
        raise ParseError(section.name.line, section.name.column,
                         f"section {section.name.text} takes exactly one value")
    return section.args[0]


def _flat(section: _Section) -> list[_Token]:
    return section.args + [tok for line in section.body for tok in line]


def _capacity_sets(section: _Section) -> tuple[list[frozenset[int]], list[int]]:
    sets, caps = [], []
    for line in section.body:
        head = line[0]
        if not head.text.endswith(":"):
            raise ParseError(head.line, head.column, "expected '<capacity>:' at start of line")
        caps.append(_int(_Token(head.text[:-1], head.line, head.column)))
        ids = [_int(t) for t in line[1:]]
        if len(set(ids)) != len(ids):
            raise ParseError(head.line, head.column, "duplicate element id in set")
        sets.append(frozenset(ids))
    return sets, caps


def _matroid(section: _Section, n: int):
    where = section.name
    if not section.args:
        raise ParseError(where.line, where.column, f"{where.text} needs a matroid kind")
    kind = section.args[0].text
    extra = section.args[1:]
    try:
        if kind == "uniform":
            if len(extra) != 1 or section.body:
                raise ParseError(where.line, where.column, "uniform takes exactly one rank and no body")
            return Uniform(n, _int(extra[0]))
        if extra:
            raise ParseError(extra[0].line, extra[0].column, f"unexpected argument for {kind}")
        if kind == "partition":
            classes, caps = _capacity_sets(section)
            m = Partition(tuple(classes), tuple(caps))
            if m.n != n:
                raise ParseError(where.line, where.column, f"partition covers {m.n} elements, GROUND is {n}")
            return m
        if kind == "laminar":
            family, caps = _capacity_sets(section)
            return Laminar(n, tuple(family), tuple(caps))
        if kind == "graphic":
            edges = []
            for line in section.body:
                if len(line) != 2:
                    raise ParseError(line[0].line, line[0].column, "graphic edge lines hold two vertices")
                edges.append((_int(line[0]), _int(line[1])))
            if len(edges) != n:
                raise ParseError(where.line, where.column, f"graphic lists {len(edges)} edges, GROUND is {n}")
            return Graphic(tuple(edges))
        if kind == "explicit":
            sets = []
            for line in section.body:
                if len(line) == 1 and line[0].text == "{}":
                    sets.append(frozenset())
                    continue
                ids = [_int(t) for t in line]
                if len(set(ids)) != len(ids):
                    raise ParseError(line[0].line, line[0].column, "duplicate element id in set")
                sets.append(frozenset(ids))
            if len(set(sets)) != len(sets):
                raise ParseError(where.line, where.column, "duplicate independent set")
            return Explicit(n, frozenset(sets))
    except ParseError:
        raise
    except InputError as exc:
        raise ParseError(where.line, where.column, str(exc)) from None
    tok = section.args[0]
    raise ParseError(tok.line, tok.column, f"unknown matroid kind {kind!r}")


def _order(section: _Section, n: int) -> StrictOrder:
    ids = [_int(t) for t in _flat(section)]
    if sorted(ids) != list(range(n)):
        raise ParseError(section.name.line, section.name.column, "order must list every element exactly once")
    return StrictOrder.from_sequence(ids)


def parse_document(text: str) -> Document:
    sections = _sections(text, INSTANCE_SECTIONS)
    for name in REQUIRED_SECTIONS:
        if name not in sections:
            raise ParseError(0, 0, f"missing section {name}")
    n = _int(_single(sections["GROUND"]))
    m1 = _matroid(sections["MATROID1"], n)
    m2 = _matroid(sections["MATROID2"], n)
    values = {}
    for name in ("P1", "P2"):
        toks = _flat(sections[name])
        if len(toks) != n:
            s = sections[name].name
            raise ParseError(s.line, s.column, f"{name} has {len(toks)} values, GROUND is {n}")
        values[name] = tuple(_rational(t) for t in toks)
    delta_tok = _single(sections["DELTA"])
    delta = _rational(delta_tok)
    if delta <= 0:
        raise ParseError(delta_tok.line, delta_tok.column, "DELTA must be positive")
    inst = Instance(n, m1, m2, values["P1"], values["P2"], delta)
    order1 = _order(sections["ORDER1"], n) if "ORDER1" in sections else None
    order2 = _order(sections["ORDER2"], n) if "ORDER2" in sections else None
    origins = None
    if "ORIGIN" in sections:
        toks = _flat(sections["ORIGIN"])
        if len(toks) != n:
            s = sections["ORIGIN"].name
            raise ParseError(s.line, s.column, f"ORIGIN has {len(toks)} entries, GROUND is {n}")
        origins = tuple(_int(t) for t in toks)
    return Document(inst, order1, order2, origins)


def parse_instance(text: str) -> Instance:
    return parse_document(text).instance


def _ids(s) -> str:
    return " ".join(map(str, sorted(s)))


def _emit_matroid(tag: str, m) -> list[str]:
    if isinstance(m, Uniform):
        return [f"{tag} uniform {m.rank}"]
    if isinstance(m, (Partition, Laminar)):
        kind = "partition" if isinstance(m, Partition) else "laminar"
        sets = m.classes if isinstance(m, Partition) else m.family
        return [f"{tag} {kind}"] + [f"{c}: {_ids(s)}".rstrip() for s, c in zip(sets, m.capacities)]
    if isinstance(m, Graphic):
        return [f"{tag} graphic"] + [f"{a} {b}" for a, b in m.edges]
    if isinstance(m, Explicit):
        ordered = sorted(m.independent_sets, key=lambda s: (len(s), sorted(s)))
        return [f"{tag} explicit"] + [_ids(s) if s else "{}" for s in ordered]
    if hasattr(m, "to_spec"):
        return _emit_matroid(tag, m.to_spec())
    raise InputError(f"cannot serialise matroid of type {type(m).__name__}")


def _values(values) -> str:
    return " ".join(str(v) for v in values)


def emit_instance(inst: Instance) -> str:
    lines = [f"GROUND {inst.n}"]
    lines += _emit_matroid("MATROID1", inst.m1)
    lines += _emit_matroid("MATROID2", inst.m2)
    lines += [f"P1 {_values(inst.p1)}".rstrip(), f"P2 {_values(inst.p2)}".rstrip(), f"DELTA {inst.delta}"]
    return "\n".join(lines) + "\n"


def emit_extended(ext: ExtendedInstance) -> str:
    """Extended instance as a document: extended values as P1/P2, plus the strict orders."""
    head = [
        f"# extended instance, notion={ext.notion}, copies={ext.copies}, K={ext.K}",
        f"# d_levels: {_values(ext.d_levels) or '-'}",
        f"# labels: {' '.join(ext.label(e) for e in range(ext.n))}",
    ]
    as_instance = Instance(ext.n, ext.pair.m1.to_spec(), ext.pair.m2.to_spec(),
                           ext.values1, ext.values2, ext.base.delta)
    body = emit_instance(as_instance).splitlines()
    body += [
        f"ORDER1 {_ids_in_order(ext.pair.order1)}",
        f"ORDER2 {_ids_in_order(ext.pair.order2)}",
        f"ORIGIN {' '.join(str(el.origin) for el in ext.elements)}",
    ]
    return "\n".join(head + body) + "\n"


def _ids_in_order(order: StrictOrder) -> str:
    return " ".join(map(str, order.sequence()))


def parse_smti(text: str) -> tuple[SmtiInstance, Fraction]:
    sections = _sections(text, SMTI_SECTIONS)
    for name in ("MEN", "WOMEN", "EDGES"):
        if name not in sections:
            raise ParseError(0, 0, f"missing section {name}")
    men = _int(_single(sections["MEN"]))
    women = _int(_single(sections["WOMEN"]))
    edges, mv, wv = [], [], []
    if sections["EDGES"].args:
        tok = sections["EDGES"].args[0]
        raise ParseError(tok.line, tok.column, "EDGES takes no inline values")
    for line in sections["EDGES"].body:
        if len(line) != 4:
            raise ParseError(line[0].line, line[0].column, "edge lines are: man woman man_value woman_value")
        edges.append((_int(line[0]), _int(line[1])))
        mv.append(_rational(line[2]))
        wv.append(_rational(line[3]))
    delta = Fraction(1)
    if "DELTA" in sections:
        tok = _single(sections["DELTA"])
        delta = _rational(tok)
        if delta <= 0:
            raise ParseError(tok.line, tok.column, "DELTA must be positive")
    try:
        smti = SmtiInstance(men, women, tuple(edges), tuple(mv), tuple(wv))
    except InputError as exc:
        where = sections["EDGES"].name
        raise ParseError(where.line, where.column, str(exc)) from None
    return smti, delta


def emit_smti(smti: SmtiInstance, delta: Fraction | int = 1) -> str:
    lines = [f"MEN {smti.men}", f"WOMEN {smti.women}", "EDGES"]
    lines += [f"{m} {w} {a} {b}" for (m, w), a, b in zip(smti.edges, smti.man_values, smti.woman_values)]
    lines.append(f"DELTA {Fraction(delta)}")
    return "\n".join(lines) + "\n"
