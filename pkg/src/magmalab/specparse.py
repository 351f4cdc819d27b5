"""Constructor expressions such as ``N(Ln(5,3))`` or ``U(N(Zmul(5;1,2,3,4)),C(9))``."""
from __future__ import annotations

import re
from typing import Union

from . import constructors as C
from .errors import MagmaError, ParseError
from .magma import Magma, direct_product
from .neutro import NeutroMagma, extend_loop, extend_modular, full_ring
from .nstruct import MultiStructure, make_multi

Built = Union[Magma, NeutroMagma, MultiStructure]

_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9]*)|(-?\d+)|(\S))")

_SIMPLE = {
    "Sn": C.symmetric_group,
    "An": C.alternating_group,
    "D2n": C.dihedral_2n,
    "Zadd": C.zn_add,
    "Ssym": C.symmetric_semigroup,
    "C": C.cyclic_group,
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                break
            start = m.start(m.lastindex) if m.lastindex else pos
            if m.group(1):
                self.toks.append(("name", m.group(1), start))
            elif m.group(2):
                self.toks.append(("int", m.group(2), start))
            elif m.group(3):
                self.toks.append(("sym", m.group(3), start))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i] if self.i < len(self.toks) else ("end", "", len(self.text))

    def take(self, kind: str, value: str | None = None) -> str:
        k, v, p = self.peek()
        if k != kind or (value is not None and v != value):
            want = value or kind
            got = v or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", p)
        self.i += 1
        return v

    def number(self) -> int:
        return int(self.take("int"))

    def ints(self, stop: str) -> list[int]:
        out = [self.number()]
        while self.peek()[1] == ",":
            self.take("sym", ",")
            out.append(self.number())
        return out

    def expr(self) -> Built:
        k, name, pos = self.peek()
        if k != "name":
            raise ParseError(f"expected a constructor name, found {name or 'end of input'!r}", pos)
        self.take("name")
        self.take("sym", "(")
        try:
            out = self._call(name, pos)
        except ParseError:
            raise
        except MagmaError as exc:
            raise ParseError(f"{name}: {exc}", pos) from None
        except ValueError as exc:
            raise ParseError(f"{name}: {exc}", pos) from None
        self.take("sym", ")")
        return out

    def _call(self, name: str, pos: int) -> Built:
        if name == "N":
            inner = self.expr()
            if isinstance(inner, Magma) and inner.family and inner.family[0] == "Ln":
                return extend_loop(inner)
            if isinstance(inner, Magma):
                return extend_modular(inner)
            raise ParseError("N(...) needs a single modular structure or an Ln loop", pos)
        if name in ("U", "X"):
            parts = [self.expr()]
            while self.peek()[1] == ",":
                self.take("sym", ",")
                parts.append(self.expr())
            if name == "U":
                if any(isinstance(p, MultiStructure) for p in parts):
                    raise ParseError("U(...) components must be single structures", pos)
                return make_multi(parts, name="U(" + ",".join(x.name for x in parts) + ")")
            mags = [p.extended if isinstance(p, NeutroMagma) else p for p in parts]
            if any(isinstance(p, MultiStructure) for p in mags):
                raise ParseError("X(...) factors must be single structures", pos)
            return direct_product(mags)
        if name == "Ln":
            n, m = self._pair()
            return C.build_loop_Ln(n, m)
        if name == "Zn":
            t, u = self._pair()
            self.take("sym", ";")
            n = self.number()
            family = "Zfull"
            if self.peek()[1] == ";":
                self.take("sym", ";")
                family = self.take("name")
            return C.build_groupoid_Zn(n, t, u, family)
        if name == "Zmul":
            n = self.number()
            if self.peek()[1] == ";":
                self.take("sym", ";")
                return C.zn_mul(n, self.ints(")"))
            return C.zn_mul(n)
        if name == "ZI":
            n = self.number()
            op = "mul"
            if self.peek()[1] == ";":
                self.take("sym", ";")
                op = self.take("name")
                if op not in ("add", "mul"):
                    raise ParseError(f"ZI operation must be add or mul, not {op!r}", self.toks[self.i - 1][2])
            return full_ring(n, op)
        if name in _SIMPLE:
            return _SIMPLE[name](self.number())
        raise ParseError(f"unknown constructor {name!r}", pos)

    def _pair(self) -> tuple[int, int]:
        a = self.number()
        self.take("sym", ",")
        return a, self.number()


def parse_spec(text: str) -> Built:
    p = _Parser(text)
    out = p.expr()
    k, v, pos = p.peek()
    if k != "end":
        raise ParseError(f"unexpected trailing {v!r}", pos)
    return out


def as_magma(x: Built) -> Magma:
    if isinstance(x, NeutroMagma):
        return x.extended
    if isinstance(x, MultiStructure):
        raise ParseError("expected a single structure, got a multi-structure", 0)
    return x


__all__ = ["parse_spec", "as_magma", "Built"]
