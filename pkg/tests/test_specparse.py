from __future__ import annotations

import pytest

from magmalab.errors import ParseError
from magmalab.magma import Magma
from magmalab.neutro import NeutroMagma
from magmalab.nstruct import MultiStructure
from magmalab.specparse import as_magma, parse_spec


@pytest.mark.parametrize(
    "spec,order,kind",
    [
        ("Ln(5,2)", 6, "loop"),
        ("Zn(1,2;3)", 3, "groupoid"),
        ("Zn(2,3;6;Z)", 6, "groupoid"),
        ("Zmul(6)", 6, "monoid"),
        ("Zmul(5;1,2,3,4)", 4, "group"),
        ("ZI(3)", 9, "monoid"),
        ("ZI(4;add)", 16, "group"),
        ("Sn(3)", 6, "group"),
        ("An(4)", 12, "group"),
        ("D2n(4)", 8, "group"),
        ("Zadd(5)", 5, "group"),
        ("C(7)", 7, "group"),
        ("Ssym(2)", 4, "monoid"),
        ("X(Zadd(2),Zadd(3))", 6, "group"),
        (" Ln ( 7 , 3 ) ", 8, "loop"),
    ],
)
def test_single_structures(spec, order, kind):
    x = as_magma(parse_spec(spec))
    assert x.order == order and x.kind == kind


def test_extensions():
    loop = parse_spec("N(Ln(5,2))")
    assert isinstance(loop, NeutroMagma) and loop.construction == "loop-doubling" and loop.order == 12
    ring = parse_spec("N(Zmul(5;1,2,3,4))")
    assert ring.order == 8
    assert parse_spec("N(Zn(2,1;4))").order == 16


def test_unions():
    ms = parse_spec("U(N(Zmul(5;1,2,3,4)),C(9))")
    assert isinstance(ms, MultiStructure)
    assert ms.order == 17 and ms.N == 2
    assert ms.name.startswith("U(")
    with pytest.raises(ParseError):
        as_magma(ms)


@pytest.mark.parametrize(
    "spec,pos",
    [
        ("Ln(5,2", 6),
        ("Qq(3)", 0),
        ("Ln(9,3)", 0),
        ("Ln(5,2) x", 8),
        ("ZI(3;sub)", 5),
        ("", 0),
        ("U(U(C(2),C(3)),C(4))", 0),
    ],
)
def test_errors_report_position(spec, pos):
    with pytest.raises(ParseError) as info:
        parse_spec(spec)
    assert info.value.position == pos
