"""One test per acceptance criterion; each prints a PASS/FAIL line and checks its time budget."""
from __future__ import annotations

from itertools import product

from magmalab import constructors as C
from magmalab.classify import (
    canonical_subloops,
    lagrange_verdict,
    sylow_2pk_exists,
    sylow_2pk_search,
    sylow_report,
)
from magmalab.harness import ERRATA, FIXTURES, REGISTRY, regenerate_and_diff, render_report, run_check
from magmalab.magma import (
    IdentityName,
    SubSet,
    check_identity,
    cosets,
    evaluate_identity,
    is_closed,
    is_ideal,
    is_simple,
    partition_check,
    restrict,
    all_closed_subsets,
)
from magmalab.neutro import extend_loop, extend_modular, flavored_subsets, full_ring, neutrosophic_subloops
from magmalab.nstruct import (
    hk_product_check,
    identity_class_multi,
    is_nary_idempotent,
    make_multi,
    n_classify,
    nary_flagged,
    sub_multi,
    sub_multi_family,
)
from magmalab.magma import direct_product

import oracles


def _pairs(ns):
    return [(n, m) for n in ns if n > 3 and n % 2 for m in C.enumerate_Ln(n)]


_EXT: dict[tuple[int, int], object] = {}


def _ext(n, m):
    if (n, m) not in _EXT:
        _EXT[(n, m)] = extend_loop(C.build_loop_Ln(n, m))
    return _EXT[(n, m)]


def test_01_loop_count(criterion):
    with criterion(1, "loop-count formula matches gcd enumeration, n odd in 5..45", 1):
        assert C.enumerate_Ln(5) == [2, 3, 4] and C.count_Ln(5) == 3
        for n in range(5, 46, 2):
            assert C.count_Ln(n) == len(oracles.ln_members(n)), n


def test_02_unique_commutative(criterion):
    with criterion(2, "exactly one commutative L_n(m), m = (n+1)/2, n odd in 5..45", 5):
        for n in range(5, 46, 2):
            comm = [m for m in C.enumerate_Ln(n) if check_identity(C.build_loop_Ln(n, m), IdentityName.Commutativity).holds]
            assert comm == [(n + 1) // 2], n


def test_03_alternativity(criterion):
    with criterion(3, "L_n(2) unique right alternative, L_n(n-1) unique left, none alternative", 10):
        for n in range(5, 26, 2):
            right, left = [], []
            for m in C.enumerate_Ln(n):
                loop = C.build_loop_Ln(n, m)
                if check_identity(loop, IdentityName.RightAlternative).holds:
                    right.append(m)
                if check_identity(loop, IdentityName.LeftAlternative).holds:
                    left.append(m)
            assert right == [2] and left == [n - 1], n
            assert not set(right) & set(left)


def test_04_wip(criterion):
    with criterion(4, "WIP iff m^2 - m + 1 = 0 mod n, n <= 45; L_7(3) is WIP", 30):
        assert check_identity(C.build_loop_Ln(7, 3), IdentityName.WIP).holds
        for n, m in _pairs(range(5, 46)):
            got = check_identity(C.build_loop_Ln(n, m), IdentityName.WIP).holds
            assert got == ((m * m - m + 1) % n == 0), (n, m)


def test_05_no_moufang(criterion):
    names = [IdentityName.Moufang1, IdentityName.Moufang2, IdentityName.Moufang3, IdentityName.Bol, IdentityName.BruckA]
    with criterion(5, "no Moufang, Bol or Bruck member for n <= 19", 30):
        for n, m in _pairs(range(5, 20)):
            loop = C.build_loop_Ln(n, m)
            for name in names:
                v = check_identity(loop, name)
                assert not v.holds, (n, m, name)
                lhs, rhs = evaluate_identity(loop, name, v.witness)
                assert lhs != rhs


def test_06_golden_tables(criterion):
    with criterion(6, "golden tables match; doubled L_5(2) differs only by documented errata", 1):
        for tid in ("L5_2", "L5_3", "L5_4", "L7_4", "L7_3"):
            assert tid in FIXTURES
            assert regenerate_and_diff(tid).empty, tid
        d = regenerate_and_diff("NL5_2")
        assert d.unexpected == ()
        assert {(c.row, c.col) for c in d.cells} == {(e.row, e.col) for e in ERRATA}


def test_07_subloop_orders(criterion):
    with criterion(7, "order 2(n+1) and subloop orders 2(k+1) exactly for k | n, n <= 25", 120):
        for n, m in _pairs(range(5, 26)):
            nm = _ext(n, m)
            assert nm.order == 2 * (n + 1)
            ks = sorted({len(s) // 2 - 1 for s in neutrosophic_subloops(nm)})
            assert ks == C.divisors(n), (n, m, ks)


def test_08_canonical_family(criterion):
    with criterion(8, "canonical subloop families closed, sized, meeting in {e,eI}, covering, isomorphic", 120):
        for n, m in _pairs(range(5, 26)):
            for t in C.divisors(n):
                fam = canonical_subloops(n, m, t)
                assert len(fam.members) == t
                assert all(fam.checks().values()), (n, m, t, fam.checks())


def test_09_lagrange(criterion):
    with criterion(9, "<L_n(m) u I> Lagrange iff n prime, n in {5,...,15}", 120):
        for n, m in _pairs([5, 7, 9, 11, 13, 15]):
            tag = lagrange_verdict(_ext(n, m)).tag
            assert (tag == "lagrange") == C.is_prime(n), (n, m, tag)


def test_10_sylow(criterion):
    with criterion(10, "five 2-Sylow subloops in <L_5(3) u I>; no odd-p Sylow; closed form agrees", 120):
        nm = _ext(5, 3)
        ext = nm.extended
        found = sylow_report(nm).record(2).found
        want = {SubSet.of(ext, ["e", "eI", str(i), f"{i}I"]).mask for i in range(1, 6)}
        assert len(found) == 5 and {s.mask for s in found} == want
        for n, m in _pairs(range(5, 16)):
            rep = sylow_report(_ext(n, m))
            assert all(not r.found for r in rep.records if r.p != 2), (n, m)
            for p, k in C.factorize(n + 1).items():
                assert sylow_2pk_exists(n, p, k) == sylow_2pk_search(_ext(n, m), p, k), (n, m, p)


def test_11_simplicity(criterion):
    with criterion(11, "<L_n(m) u I> is simple for all admissible n <= 15", 120):
        for n, m in _pairs(range(5, 16)):
            nm = _ext(n, m)
            assert is_simple(nm.extended, flavored_subsets(nm, "neutrosophic")), (n, m)


def test_12_neutro_group(criterion):
    with criterion(12, "N({1,2,3,4} mod 5): order 8, not a group, order-6 substructure, cosets fail", 1):
        m = extend_modular(C.zn_mul(5, [1, 2, 3, 4])).extended
        assert m.order == 8 and m.kind != "group"
        g = m.subset(["1", "2", "3", "4"])
        assert is_closed(m, g) and restrict(m, g).kind == "group"
        p = m.subset(["1", "4", "I", "2I", "3I", "4I"])
        assert is_closed(m, p) and len(p) == 6 and 8 % 6 != 0
        h = m.subset(["1", "4", "I", "4I"])
        assert is_closed(m, h)
        assert not partition_check(m, cosets(m, h))


def test_13_groupoids(criterion):
    with criterion(13, "Z_n(t,u) associativity, idempotence, |Z*(n)|, ideal duality, {0} not an ideal", 60):
        for n in range(3, 13):
            for t, u in product(range(n), repeat=2):
                g = C.build_groupoid_Zn(n, t, u)
                assoc = check_identity(g, IdentityName.Associativity).holds
                assert assoc == (t * t % n == t and u * u % n == u), (n, t, u)
                idem = check_identity(g, IdentityName.IdempotentLaw).holds
                assert idem == ((t + u) % n == 1), (n, t, u)
            assert C.count_groupoid_family(n, "Zstar") == (n - 1) * (n - 2)
            for t, u in C.groupoid_family_members(n, "Z"):
                g = C.build_groupoid_Zn(n, t, u, "Z")
                assert not is_ideal(g, g.subset(["0"]), "left") and not is_ideal(g, g.subset(["0"]), "right")
        for n in range(3, 11):
            for t, u in product(range(n), repeat=2):
                a, b = C.build_groupoid_Zn(n, t, u), C.build_groupoid_Zn(n, u, t)
                for s in all_closed_subsets(a):
                    sb = SubSet(b, s.mask)
                    assert is_ideal(a, s, "left") == is_ideal(b, sb, "right")
                    assert is_ideal(a, s, "right") == is_ideal(b, sb, "left")


def test_14_multi_structures(criterion):
    with criterion(14, "multi-structure orders, Lagrange verdicts, 4-ary idempotent, HK criterion", 60):
        a = make_multi([extend_modular(C.zn_mul(5, [1, 2, 3, 4])), C.cyclic_group(9)], "neutrosophic-bigroup")
        assert a.order == 17
        assert n_classify(a, "neutrosophic").lagrange.tag == "free"
        b = make_multi([C.zn_mul(12), extend_modular(C.zn_mul(5))], "neutrosophic-bisemigroup")
        assert b.order == 21
        vb = n_classify(b, "neutrosophic")
        p7 = sub_multi(b, [["0", "6"], ["0", "1", "4", "I", "4I"]])
        t11 = sub_multi(b, [["0", "2", "4", "6", "8", "10"], ["0", "1", "4", "I", "4I"]])
        assert p7.order == 7 and p7 in vb.lagrange.witnesses
        assert t11.order == 11 and t11 in vb.lagrange.counterexamples
        z = full_ring(2).extended
        s = make_multi([extend_modular(C.zn_mul(4)), C.zn_mul(12), full_ring(3), direct_product([z, z])])
        x = ["I", "4", "1+2I", "(1+I,1+I)"]
        assert is_nary_idempotent(s, x) and nary_flagged(s, x)
        corpus = [
            [C.symmetric_group(3), C.cyclic_group(4)],
            [C.symmetric_group(3), C.dihedral_2n(5)],
            [C.dihedral_2n(4), C.alternating_group(4)],
            [C.dihedral_2n(6), C.cyclic_group(6)],
            [C.symmetric_group(3), C.dihedral_2n(3), C.cyclic_group(2)],
        ]
        pairs = 0
        for comps in corpus:
            ms = make_multi(comps)
            assert ms.order <= 24
            subs = [h for h in sub_multi_family(ms) if all(restrict(c.magma, q).kind == "group" for c, q in zip(ms, h.parts))]
            for h, k in product(subs, repeat=2):
                assert hk_product_check(h, k).agrees, (h, k)
                pairs += 1
        assert pairs > 1000


def test_15_biloops(criterion):
    names = ["Moufang1", "Moufang2", "Moufang3", "Bol", "LeftAlternative", "RightAlternative"]
    with criterion(15, "prime-n biloops are Moufang/Bol/alternative; n = 15 fails with witness (8,14,2)", 120):
        a4 = C.alternating_group(4)
        for n, m in _pairs([5, 7, 11, 13]):
            bl = make_multi([_ext(n, m), a4], "neutrosophic-biloop")
            for name in names:
                assert identity_class_multi(bl, name).holds, (n, m, name)
        ext15 = _ext(15, 2)
        bl = make_multi([ext15, a4], "neutrosophic-biloop")
        assert not identity_class_multi(bl, "Moufang1").holds
        e = ext15.extended
        sub = e.subset(["e", "2", "5", "8", "11", "14", "eI", "2I", "5I", "8I", "11I", "14I"])
        assert is_closed(e, sub) and len(sub) == 12
        lhs, rhs = evaluate_identity(e, "Moufang1", ["8", "14", "2"])
        assert lhs != rhs
        assert not check_identity(e, "Moufang1", within=sub).holds


def test_16_property_suites(criterion):
    with criterion(16, "property suite and byte-identical reports across repeated runs", 180):
        assert run_check("T-properties").passed
        first = [run_check(cid) for cid in REGISTRY]
        assert all(r.passed for r in first), [r.id for r in first if not r.passed]
        second = [run_check(cid) for cid in REGISTRY]
        assert render_report(first) == render_report(second)
