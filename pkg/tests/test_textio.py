from __future__ import annotations

import pytest

from magmalab import constructors as C
from magmalab.errors import ParseError
from magmalab.magma import Magma
from magmalab.neutro import extend_loop, extend_modular
from magmalab.nstruct import MultiStructure, make_multi
from magmalab.textio import dump_magma, dump_multi, load_any, load_magma, load_multi


@pytest.mark.parametrize(
    "m",
    [
        C.build_loop_Ln(5, 2),
        C.build_groupoid_Zn(6, 2, 5),
        C.zn_mul(8),
        C.symmetric_group(3),
        extend_loop(C.build_loop_Ln(7, 3)).extended,
        extend_modular(C.zn_mul(5)).extended,
    ],
)
def test_magma_round_trip(m):
    back = load_magma(dump_magma(m))
    assert back.labels == m.labels
    assert back.kind == m.kind
    assert back.zero == m.zero
    assert (back.table == m.table).all()
    assert dump_magma(back) == dump_magma(m)


def test_multi_round_trip():
    ms = make_multi([extend_modular(C.zn_mul(5, [1, 2, 3, 4])), C.cyclic_group(9)])
    text = dump_multi(ms)
    back = load_multi(text)
    assert back.N == 2 and back.order == 17
    assert back.kinds == ms.kinds
    assert dump_multi(back) == text
    assert isinstance(load_any(text), MultiStructure)
    assert isinstance(load_any(dump_magma(C.zn_add(3))), Magma)


def test_trailing_newline_optional():
    text = dump_magma(C.zn_add(3)).rstrip("\n")
    assert load_magma(text).order == 3


@pytest.mark.parametrize(
    "text,line",
    [
        ("magma X kind=group\n", 1),
        ("magma X kind=group order=2\na b\na b\n", 4),
        ("magma X kind=group order=2\na b\na b\nb q\n", 4),
        ("magma X kind=group order=2\na b\na b\nb a\nzero=z\n", 5),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        load_magma(text)
    assert info.value.position == line
