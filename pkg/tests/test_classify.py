from __future__ import annotations

import pytest

from magmalab.classify import (
    BadFactorization,
    NotADivisor,
    canonical_subloops,
    cauchy_report,
    cauchy_tag,
    CauchyRecord,
    conjugate_substructures,
    lagrange_from_orders,
    lagrange_verdict,
    normalizer,
    substructure_pool,
    subloop_order_characterization,
    sylow_2pk_exists,
    sylow_2pk_search,
    sylow_from_orders,
    sylow_report,
)
from magmalab.constructors import build_loop_Ln, divisors, enumerate_Ln, symmetric_group, zn_add, zn_mul
from magmalab.errors import InadmissibleSpec, NotClosed
from magmalab.neutro import extend_loop, extend_modular
from magmalab.specparse import parse_spec


def test_lagrange_from_orders():
    v = lagrange_from_orders(12, [[0, 1], [0, 1, 2]])
    assert v.tag == "lagrange"
    v = lagrange_from_orders(12, [[0, 1], list(range(5))])
    assert v.tag == "weakly" and len(v.counterexamples) == 1
    assert lagrange_from_orders(12, [list(range(5))]).tag == "free"
    assert lagrange_from_orders(12, []).tag == "free"


def test_sylow_from_orders():
    rep = sylow_from_orders(12, [list(range(4)), list(range(3))])
    assert rep.tag == "sylow"
    assert rep.record(2).alpha == 2
    assert sylow_from_orders(12, [list(range(4))]).tag == "weakly"
    with pytest.raises(KeyError):
        rep.record(5)


@pytest.mark.parametrize("n", [5, 7, 9, 11])
def test_lagrange_iff_prime(n):
    prime = n in (5, 7, 11)
    for m in enumerate_Ln(n):
        tag = lagrange_verdict(extend_loop(build_loop_Ln(n, m))).tag
        assert (tag == "lagrange") == prime


def test_sylow_five_subloops():
    rep = sylow_report(extend_loop(build_loop_Ln(5, 3)))
    found = rep.record(2).found
    assert len(found) == 5
    assert all(len(s) == 4 and "e" in s and "eI" in s for s in found)
    assert rep.record(3).found == ()


def test_sylow_closed_form_against_search():
    for n in (5, 7, 11, 15):
        m = enumerate_Ln(n)[0]
        nm = extend_loop(build_loop_Ln(n, m))
        for p in (2, 3, 5, 7):
            k = 0
            while (n + 1) % p ** (k + 1) == 0:
                k += 1
            if k:
                assert sylow_2pk_exists(n, p, k) == sylow_2pk_search(nm, p, k)
    with pytest.raises(BadFactorization):
        sylow_2pk_exists(15, 5, 1)


def test_subloop_orders_are_divisors():
    for n in (5, 9, 15):
        claim = subloop_order_characterization(n, enumerate_Ln(n)[0])
        assert claim.holds
        assert list(claim.ks) == divisors(n)


def test_canonical_family():
    fam = canonical_subloops(15, 2, 3)
    assert len(fam.members) == 3
    assert all(fam.checks().values())
    with pytest.raises(NotADivisor):
        canonical_subloops(15, 2, 4)
    with pytest.raises(InadmissibleSpec):
        canonical_subloops(9, 3, 3)


def test_pool_excludes_trivial_sets():
    nm = extend_loop(build_loop_Ln(5, 2))
    m = nm.extended
    masks = {s.mask for s in substructure_pool(nm)}
    assert m.full().mask not in masks
    assert m.subset(["e", "eI"]).mask not in masks
    assert all(len(s) > 1 for s in substructure_pool(zn_add(6)))


def test_cauchy_reports():
    assert cauchy_report(zn_add(6)).tag == "cauchy"
    rep = cauchy_report(extend_modular(zn_mul(5, [1, 2, 3, 4])))
    assert rep.record("4I").neutro_exponent == 2
    assert rep.record("4I").neutro_divides
    assert cauchy_report(extend_modular(zn_mul(5))).tag == "free"
    with pytest.raises(KeyError):
        rep.record("zz")


def test_cauchy_tag_rules():
    ok = CauchyRecord("a", 2, None, True, None)
    bad = CauchyRecord("b", 3, None, False, None)
    neut_ok = CauchyRecord("c", None, 2, None, True)
    assert cauchy_tag([ok, neut_ok], set()) == "cauchy"
    assert cauchy_tag([ok, bad, neut_ok], set()) == "semi"
    assert cauchy_tag([ok, bad], set()) == "weakly"
    assert cauchy_tag([bad], set()) == "free"


def test_conjugacy_by_multiples():
    m = parse_spec("N(Zadd(6))").extended
    p, k = m.subset(["0", "3"]), m.subset(["0", "2", "4"])
    ok, wit = conjugate_substructures(m, p, k, "power")
    assert ok and wit == (2, 3)
    assert conjugate_substructures(m, p, k, "translate") == (False, None)
    with pytest.raises(NotClosed):
        conjugate_substructures(m, m.subset(["1"]), k)
    with pytest.raises(ValueError):
        conjugate_substructures(m, p, k, "other")


def test_conjugacy_by_translation_in_group():
    g = symmetric_group(3)
    e = g.labels[g.identity]
    a, b = g.subset([e, "[213]"]), g.subset([e, "[321]"])
    ok, _ = conjugate_substructures(g, a, b, "translate")
    assert ok


def test_normalizer_of_transposition():
    s, closed = normalizer(symmetric_group(3), "[213]")
    assert len(s) == 2 and closed
