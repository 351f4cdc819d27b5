"""Line-oriented text format for magmas and multi-structures."""
from __future__ import annotations

import re

from .errors import InvariantViolation, ParseError
from .magma import Magma
from .nstruct import Component, MultiStructure, make_multi

_HEADER = re.compile(r"^magma (\S+) kind=(\S+) order=(\d+)$")
_MULTI = re.compile(r"^multi (\S+) N=(\d+)$")
_COMPONENT = re.compile(r"^component (\d+) kind=(\S+)$")


def _check_name(name: str) -> None:
    if not name or any(ch.isspace() for ch in name):
        raise InvariantViolation(f"name {name!r} cannot be serialized")


def dump_magma(m: Magma) -> str:
    _check_name(m.name)
    lines = [f"magma {m.name} kind={m.kind} order={m.order}", " ".join(m.labels)]
    lab = m.labels
    for row in m.rows:
        lines.append(" ".join(lab[v] for v in row))
    if m.zero is not None:
        lines.append(f"zero={lab[m.zero]}")
    return "\n".join(lines) + "\n"


def _read_magma(lines: list[str], pos: int) -> tuple[Magma, int]:
    if pos >= len(lines):
        raise ParseError("expected a magma header", pos + 1)
    h = _HEADER.match(lines[pos])
    if not h:
        raise ParseError(f"bad magma header {lines[pos]!r}", pos + 1)
    name, kind, k = h.group(1), h.group(2), int(h.group(3))
    if pos + 1 >= len(lines):
        raise ParseError("missing label line", pos + 2)
    labels = lines[pos + 1].split()
    if len(labels) != k:
        raise ParseError(f"expected {k} labels, found {len(labels)}", pos + 2)
    idx = {lab: i for i, lab in enumerate(labels)}
    table = []
    for r in range(k):
        ln = pos + 2 + r
        if ln >= len(lines):
            raise ParseError("table truncated", ln + 1)
        toks = lines[ln].split()
        if len(toks) != k:
            raise ParseError(f"row {r} has {len(toks)} entries, expected {k}", ln + 1)
        try:
            table.append([idx[t] for t in toks])
        except KeyError as exc:
            raise ParseError(f"unknown label {exc.args[0]!r} in row {r}", ln + 1) from None
    nxt = pos + 2 + k
    zero = None
    if nxt < len(lines) and lines[nxt].startswith("zero="):
        zero = lines[nxt][5:]
        if zero not in idx:
            raise ParseError(f"zero {zero!r} is not a label", nxt + 1)
        nxt += 1
    try:
        m = Magma(labels, table, kind=kind, name=name, zero=zero)
    except InvariantViolation as exc:
        raise ParseError(str(exc), pos + 1) from None
    return m, nxt


def _lines(text: str) -> list[str]:
    return text.rstrip("\n").split("\n") if text.strip() else []


def load_magma(text: str) -> Magma:
    lines = _lines(text)
    m, end = _read_magma(lines, 0)
    if end != len(lines):
        raise ParseError("trailing content after magma block", end + 1)
    return m


def dump_multi(ms: MultiStructure) -> str:
    _check_name(ms.name)
    out = [f"multi {ms.name} N={ms.N}\n"]
    for i, c in enumerate(ms):
        out.append(f"component {i} kind={c.kind}\n")
        out.append(dump_magma(c.magma))
    return "".join(out)


def load_multi(text: str) -> MultiStructure:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input", 1)
    h = _MULTI.match(lines[0])
    if not h:
        raise ParseError(f"bad multi header {lines[0]!r}", 1)
    name, n = h.group(1), int(h.group(2))
    pos = 1
    comps = []
    for i in range(n):
        if pos >= len(lines):
            raise ParseError(f"missing component {i}", pos + 1)
        c = _COMPONENT.match(lines[pos])
        if not c or int(c.group(1)) != i:
            raise ParseError(f"expected 'component {i} kind=<tag>'", pos + 1)
        m, pos = _read_magma(lines, pos + 1)
        comps.append(Component(m, c.group(2)))
    if pos != len(lines):
        raise ParseError("trailing content after last component", pos + 1)
    return make_multi(comps, name=name)


def load_any(text: str) -> Magma | MultiStructure:
    return load_multi(text) if text.startswith("multi ") else load_magma(text)


__all__ = ["dump_magma", "load_magma", "dump_multi", "load_multi", "load_any"]
