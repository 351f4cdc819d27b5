from __future__ import annotations

import numpy as np
import pytest

from magmalab.constructors import (
    alternating_group,
    build_groupoid_Zn,
    build_loop_Ln,
    cyclic_group,
    symmetric_group,
    zn_add,
    zn_mul,
)
from magmalab.errors import IndexOutOfRange, InvariantViolation, NotALoop, NotClosed
from magmalab.magma import (
    IdentityName,
    Magma,
    SubSet,
    all_closed_subsets,
    apply,
    are_isomorphic,
    check_identity,
    closure,
    commutant,
    commutator_associator,
    cosets,
    direct_product,
    evaluate_identity,
    ideals,
    is_closed,
    is_homomorphism,
    is_normal_by_conjugation,
    is_normal_sub,
    is_simple,
    left_identities,
    left_power,
    order_to,
    partition_check,
    principal_isotope,
    restrict,
    right_identities,
    right_translation,
    units,
    zero_divisors,
)
from magmalab.neutro import extend_modular, full_ring
from magmalab.specparse import parse_spec

import oracles


def test_table_is_read_only():
    m = build_loop_Ln(5, 2)
    with pytest.raises(ValueError):
        m.table[0, 0] = 1


def test_constructor_validation():
    with pytest.raises(InvariantViolation):
        Magma(["a", "a"], [[0, 0], [0, 0]])
    with pytest.raises(InvariantViolation):
        Magma(["a", "b"], [[0, 2], [0, 0]])
    with pytest.raises(InvariantViolation):
        Magma(["a b"], [[0]])
    with pytest.raises(InvariantViolation):
        Magma(["a", "b"], [[0, 1], [1, 1]], kind="group")


def test_kind_detection():
    assert cyclic_group(4).kind == "group"
    assert build_loop_Ln(5, 2).kind == "loop"
    assert zn_mul(6).kind == "monoid"
    assert build_groupoid_Zn(3, 1, 2).kind == "groupoid"


def test_products_in_small_examples():
    assert apply(build_loop_Ln(5, 2), "1", "2").label == "3"
    assert apply(build_groupoid_Zn(3, 1, 2), "1", "2").label == "2"
    assert build_loop_Ln(7, 4).labels[build_loop_Ln(7, 4).identity] == "e"


def test_ln_matches_formula_oracle():
    for n, m in [(5, 2), (7, 3), (9, 5), (11, 4)]:
        loop = build_loop_Ln(n, m)
        for i in range(n + 1):
            for j in range(n + 1):
                assert loop.op(i, j) == oracles.ln_product(n, m, i, j)


def test_left_and_right_identities():
    z = build_groupoid_Zn(4, 2, 1)
    assert "0" in left_identities(z)
    assert len(right_identities(build_loop_Ln(5, 2))) == 1


def test_index_errors():
    m = build_loop_Ln(5, 2)
    with pytest.raises(IndexOutOfRange):
        m.index(6)
    with pytest.raises(IndexOutOfRange):
        m.index("7")
    with pytest.raises(IndexOutOfRange):
        SubSet(m, 1 << 6)


def test_closure_examples():
    m = build_loop_Ln(5, 3)
    assert closure(m, ["2"]).labels == ("e", "2")
    assert len(all_closed_subsets(m)) == 7
    nm = extend_modular(zn_mul(5, [1, 2, 3, 4]))
    assert len(closure(nm.extended, ["2", "I"])) == 8


@pytest.mark.parametrize("spec", ["Ln(5,2)", "Ln(7,3)", "Zn(1,2;5)", "Zmul(8)", "Sn(3)", "N(Zmul(4))"])
def test_closed_subsets_match_power_set(spec):
    m = parse_spec(spec)
    m = getattr(m, "extended", m)
    assert sorted(s.mask for s in all_closed_subsets(m)) == oracles.closed_masks(m.rows)


def test_closure_matches_oracle():
    m = build_loop_Ln(9, 2)
    for seed in [{1}, {2, 3}, {0, 4}, {5, 7, 9}]:
        assert set(closure(m, seed).members) == oracles.closure(m.rows, seed)


def test_restrict_requires_closed():
    m = build_loop_Ln(5, 3)
    assert restrict(m, m.subset(["e", "2"])).order == 2
    with pytest.raises(NotClosed):
        restrict(m, m.subset(["1", "2"]))


def test_identity_checker_agrees_with_oracle():
    m = build_loop_Ln(7, 3)
    cases = {
        IdentityName.Associativity: (lambda f, x, y, z: f(f(x, y), z), lambda f, x, y, z: f(x, f(y, z)), 3),
        IdentityName.Commutativity: (lambda f, x, y: f(x, y), lambda f, x, y: f(y, x), 2),
        IdentityName.RightAlternative: (lambda f, x, y: f(f(x, y), y), lambda f, x, y: f(x, f(y, y)), 2),
        IdentityName.LeftAlternative: (lambda f, x, y: f(f(x, x), y), lambda f, x, y: f(x, f(x, y)), 2),
        IdentityName.Moufang1: (lambda f, x, y, z: f(f(f(x, y), z), y), lambda f, x, y, z: f(x, f(y, f(z, y))), 3),
    }
    for name, (lhs, rhs, arity) in cases.items():
        assert check_identity(m, name).holds == oracles.identity_holds(m.rows, lhs, rhs, arity)
    for n, mm in [(5, 2), (7, 6)]:
        loop = build_loop_Ln(n, mm)
        lhs, rhs, arity = cases[IdentityName.RightAlternative]
        assert check_identity(loop, "RightAlternative").holds == oracles.identity_holds(loop.rows, lhs, rhs, arity)


def test_identity_violation_witness_is_real():
    m = build_loop_Ln(5, 2)
    v = check_identity(m, IdentityName.Associativity)
    assert not v.holds
    a, b = evaluate_identity(m, IdentityName.Associativity, v.witness)
    assert a != b


def test_wip_example():
    assert check_identity(build_loop_Ln(7, 3), IdentityName.WIP).holds


def test_normality_and_simplicity():
    s3 = symmetric_group(3)
    a3_labels = alternating_group(3).labels
    a3 = s3.subset(a3_labels)
    assert is_normal_sub(s3, a3)
    assert is_normal_by_conjugation(s3, a3)
    t = s3.subset([s3.labels[s3.identity], "[213]"])
    assert not is_normal_sub(s3, t)
    assert not is_simple(zn_add(6))
    for p in (2, 3, 5, 7):
        assert is_simple(zn_add(p))


def test_cosets_partition_in_group():
    g = zn_add(6)
    h = g.subset(["0", "3"])
    assert partition_check(g, cosets(g, h))
    assert partition_check(g, cosets(g, h, side="left"))


def test_zero_divisors_and_units():
    r = full_ring(3).extended
    zd = zero_divisors(r)
    assert "2+I" in zd and "I" in zd
    assert "1+I" in units(r)


def test_commutant_and_associator():
    m = build_loop_Ln(5, 2)
    assert commutant(m).labels == ("e",)
    ca = commutator_associator(m)
    assert ca.associator_subloop == m.full()
    with pytest.raises(NotALoop):
        commutator_associator(zn_mul(4))


def test_principal_isotope_is_loop():
    m = build_loop_Ln(7, 3)
    iso = principal_isotope(m, "2", "5")
    assert iso.kind in ("loop", "group")


def test_direct_product_order():
    assert parse_spec("X(ZI(2;add),C(3))").order == 12
    p = direct_product([zn_add(2), zn_add(3)])
    assert p.kind == "group"
    assert are_isomorphic(p, zn_add(6)) is not None


def test_isomorphism_search():
    z4 = zn_add(4)
    klein = direct_product([zn_add(2), zn_add(2)])
    assert are_isomorphic(z4, klein) is None
    assert not oracles.isomorphic(z4.rows, klein.rows)
    rng = np.random.default_rng(1)
    base = build_loop_Ln(5, 2)
    perm = rng.permutation(6)
    inv = np.argsort(perm)
    tab = perm[base.table[inv[:, None], inv[None, :]]]
    other = Magma([f"x{i}" for i in range(6)], tab)
    f = are_isomorphic(base, other)
    assert f is not None
    assert is_homomorphism(base, other, [f[i] for i in range(6)])


def test_right_translation():
    m = build_loop_Ln(5, 2)
    assert [m.labels[i] for i in right_translation(m, "1")] == ["1", "e", "5", "4", "3", "2"]


def test_power_orders():
    q = extend_modular(zn_mul(3, [1, 2])).extended
    assert order_to(q, "2I", "I") == 2
    assert left_power(zn_add(5), "1", 5).label == "0"
    with pytest.raises(ValueError):
        left_power(zn_add(5), "1", 0)


def test_ideal_report():
    m = zn_mul(6)
    rep = ideals(m, m.subset(["0", "3"]))
    assert rep.left and rep.right
    assert is_closed(m, m.subset(["0", "3"]))
