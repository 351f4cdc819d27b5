"""Bi- and N-structures: tagged disjoint unions of component magmas."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod
from typing import Callable, Iterator, Sequence, Union

from .classify import (
    CauchyRecord,
    CauchyReport,
    LagrangeVerdict,
    SylowReport,
    cauchy_report,
    cauchy_tag,
    lagrange_from_orders,
    sylow_from_orders,
)
from .constructors import factorize
from .errors import (
    CapExceeded,
    InvariantViolation,
    KindMismatch,
    MagmaError,
    MissingIdentity,
    NoZeroDesignated,
    NotClosed,
    TaxonViolation,
)
from .magma import (
    IdentityName,
    IdentityVerdict,
    Magma,
    SubSet,
    all_closed_subsets,
    check_identity,
    closure,
    ideal_family,
    idempotents,
    inverse_of,
    is_closed,
    is_homomorphism,
    is_ideal,
)
from .neutro import NeutroMagma, substructure_flavor

STRICT_KINDS = ("group", "loop", "semigroup", "groupoid")
_STRICT = {"group": "group", "loop": "loop", "monoid": "semigroup", "semigroup": "semigroup", "groupoid": "groupoid"}
TUPLE_CAP = 10**6
FAMILY_CAP = 200_000


class NoLoopComponent(MagmaError):
    pass


class MembershipSpecInvalid(MagmaError):
    pass


def strict_kind(kind: str) -> str:
    return _STRICT[kind]


@dataclass(frozen=True)
class Component:
    """One component: its table, the kind tag it carries in the union, and its extension data if any."""

    magma: Magma
    kind: str
    ext: NeutroMagma | None = None

    @classmethod
    def wrap(cls, x: Union[Magma, NeutroMagma, "Component"]) -> "Component":
        if isinstance(x, Component):
            return x
        if isinstance(x, NeutroMagma):
            return cls(x.extended, strict_kind(x.base.kind), x)
        return cls(x, strict_kind(x.kind))

    @property
    def order(self) -> int:
        return self.magma.order

    @property
    def neutro(self) -> bool:
        return any(self.magma.neutro)

    @property
    def loop_like(self) -> bool:
        return self.kind in ("group", "loop")

    @property
    def associative(self) -> bool:
        return self.kind in ("group", "semigroup")

    def flavor(self, s: SubSet) -> str:
        if self.ext is not None:
            return substructure_flavor(self.ext, s)
        flags = self.magma.neutro
        flagged = sum(1 for i in s.members if flags[i])
        if not flagged:
            return "plain"
        return "pseudo-neutrosophic" if len(s) - flagged <= 1 else "neutrosophic"

    def trivial(self, s: SubSet) -> bool:
        if len(s) == 1:
            return True
        m = self.magma
        if self.ext is not None and m.identity is not None:
            return s.mask == closure(m, [m.identity, self.ext.i_target]).mask
        return False


@dataclass(frozen=True)
class MultiStructure:
    components: tuple[Component, ...]
    name: str = "B"

    @property
    def N(self) -> int:
        return len(self.components)

    @property
    def order(self) -> int:
        return sum(c.order for c in self.components)

    @property
    def kinds(self) -> tuple[str, ...]:
        return tuple(c.kind for c in self.components)

    def __getitem__(self, i: int) -> Component:
        return self.components[i]

    def __iter__(self) -> Iterator[Component]:
        return iter(self.components)


# ---------------------------------------------------------------------------
# taxa

Clause = tuple[str, Callable[[MultiStructure], bool]]


def _n_eq(k: int) -> Clause:
    return (f"N = {k}", lambda ms: ms.N == k)


_N2: Clause = ("N >= 2", lambda ms: ms.N >= 2)
_N5: Clause = ("N >= 5", lambda ms: ms.N >= 5)
_ANY_NEUTRO: Clause = ("at least one neutrosophic component", lambda ms: any(c.neutro for c in ms))
_ALL_NEUTRO: Clause = ("every component neutrosophic", lambda ms: all(c.neutro for c in ms))


def _all(desc: str, pred) -> Clause:
    return (f"every component {desc}", lambda ms: all(pred(c) for c in ms))


def _some(desc: str, pred) -> Clause:
    return (f"at least one component {desc}", lambda ms: any(pred(c) for c in ms))


def _kinds(flag: bool | None, ms: MultiStructure) -> set[str]:
    return {c.kind for c in ms if flag is None or c.neutro == flag}


_GROUPS = _all("a group", lambda c: c.kind == "group")
_ASSOC = _all("a semigroup or group", lambda c: c.associative)
_LOOPS = _all("a loop or group", lambda c: c.loop_like)
_SOME_LOOP = _some("a loop that is not a group", lambda c: c.kind == "loop")
_SOME_GROUPOID = _some("a groupoid only", lambda c: c.kind == "groupoid")


def _family(x: str, n_clause: Clause, body: list[Clause]) -> dict[str, list[Clause]]:
    return {
        x[0]: [n_clause, *body],
        x[1]: [n_clause, *body, _ANY_NEUTRO],
        x[2]: [n_clause, *body, _ALL_NEUTRO],
    }


TAXA: dict[str, list[Clause]] = {}
TAXA.update(_family(("bigroup", "neutrosophic-bigroup", "strong-neutrosophic-bigroup"), _n_eq(2), [_GROUPS]))
TAXA.update(
    _family(("bisemigroup", "neutrosophic-bisemigroup", "strong-neutrosophic-bisemigroup"), _n_eq(2), [_ASSOC])
)
TAXA["biloop-I"] = [
    _n_eq(2),
    _SOME_LOOP,
    _some("a group", lambda c: c.kind == "group"),
]
TAXA["biloop-II"] = [_n_eq(2), _all("a loop that is not a group", lambda c: c.kind == "loop")]
TAXA["neutrosophic-biloop"] = [_n_eq(2), _LOOPS, _SOME_LOOP, _ANY_NEUTRO]
TAXA["strong-neutrosophic-biloop"] = [_n_eq(2), _LOOPS, _SOME_LOOP, _ALL_NEUTRO]
TAXA.update(_family(("N-group", "neutrosophic-N-group", "strong-neutrosophic-N-group"), _N2, [_GROUPS]))
TAXA.update(_family(("N-semigroup", "neutrosophic-N-semigroup", "strong"), _N2, [_ASSOC]))
TAXA.update(_family(("N-loop", "neutrosophic-N-loop", "strong-neutrosophic-N-loop"), _N2, [_LOOPS, _SOME_LOOP]))
TAXA["N-groupoid"] = [_N2, _SOME_GROUPOID]
TAXA["neutrosophic-N-groupoid"] = [_N2, _SOME_GROUPOID, _ANY_NEUTRO]
TAXA["bigroupoid"] = [_n_eq(2), _SOME_GROUPOID]
TAXA["neutrosophic-bigroupoid"] = [_n_eq(2), _SOME_GROUPOID, _ANY_NEUTRO]
TAXA["N-group-semigroup"] = [
    _N2,
    _ASSOC,
    _some("a group", lambda c: c.kind == "group"),
    _some("a semigroup that is not a group", lambda c: c.kind == "semigroup"),
]
TAXA["N-loop-groupoid"] = [_N2, _SOME_LOOP, _some("neither loop nor group", lambda c: not c.loop_like)]
TAXA["N-glsg"] = [_N2, ("groups, loops, semigroups and groupoids all present", lambda ms: _kinds(None, ms) == set(STRICT_KINDS))]
TAXA["N-quasi-loop"] = [_N2, _some("a neutrosophic loop", lambda c: c.neutro and c.kind == "loop")]
TAXA["N-quasi-semigroup"] = [
    _N2,
    _ALL_NEUTRO,
    _some("a loop or group", lambda c: c.loop_like),
    _some("a semigroup", lambda c: c.kind == "semigroup"),
]
TAXA["mixed-neutrosophic"] = [
    _N5,
    ("neutrosophic groups, loops, semigroups and groupoids all present", lambda ms: _kinds(True, ms) == set(STRICT_KINDS)),
]
TAXA["mixed-dual-neutrosophic"] = [
    _N5,
    ("plain groups, loops, semigroups and groupoids all present", lambda ms: _kinds(False, ms) == set(STRICT_KINDS)),
    _ANY_NEUTRO,
]
TAXA["weak-mixed-neutrosophic"] = [
    _N2,
    ("a neutrosophic group or loop", lambda ms: bool(_kinds(True, ms) & {"group", "loop"})),
    ("a neutrosophic groupoid or semigroup", lambda ms: bool(_kinds(True, ms) & {"groupoid", "semigroup"})),
    ("two or three distinct neutrosophic kinds", lambda ms: 2 <= len(_kinds(True, ms)) <= 3),
]
TAXA["weak-mixed-dual-neutrosophic"] = [
    _N2,
    ("a plain group or loop", lambda ms: bool(_kinds(False, ms) & {"group", "loop"})),
    ("a plain groupoid or semigroup", lambda ms: bool(_kinds(False, ms) & {"groupoid", "semigroup"})),
    _ANY_NEUTRO,
]


def failed_clauses(ms: MultiStructure, taxon: str) -> list[str]:
    if taxon not in TAXA:
        raise TaxonViolation(f"unknown taxon {taxon!r}")
    return [desc for desc, pred in TAXA[taxon] if not pred(ms)]


def classify_taxon(ms: MultiStructure) -> list[str]:
    return [t for t in TAXA if not failed_clauses(ms, t)]


def make_multi(components: Sequence, declared: str | None = None, name: str = "B") -> MultiStructure:
    comps = tuple(Component.wrap(c) for c in components)
    for i, a in enumerate(comps):
        if a.kind not in STRICT_KINDS:
            raise InvariantViolation(f"component {i} has unknown kind {a.kind!r}")
        for j in range(i):
            if comps[j].magma == a.magma:
                raise TaxonViolation(f"components {j} and {i} are identical")
    ms = MultiStructure(comps, name)
    if declared is not None:
        bad = failed_clauses(ms, declared)
        if bad:
            raise TaxonViolation(f"{declared}: clause failed: " + "; ".join(bad))
    return ms


# ---------------------------------------------------------------------------
# sub-structures


@dataclass(frozen=True)
class SubMulti:
    owner: MultiStructure
    parts: tuple[SubSet | None, ...]

    @property
    def deficit(self) -> int:
        return sum(p is None for p in self.parts)

    @property
    def order(self) -> int:
        return sum(len(p) for p in self.parts if p is not None)

    def __len__(self) -> int:
        return self.order

    @property
    def live(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.parts) if p is not None)

    @property
    def live_order(self) -> int:
        return sum(self.owner[i].order for i in self.live)

    @property
    def flavor(self) -> str:
        fl = {self.owner[i].flavor(self.parts[i]) for i in self.live}
        for f in ("degenerate", "pseudo-neutrosophic", "neutrosophic"):
            if f in fl:
                return f
        return "plain"

    @property
    def is_full(self) -> bool:
        return all(p is not None and p.mask == (1 << p.owner.order) - 1 for p in self.parts)

    @property
    def trivial(self) -> bool:
        return all(self.owner[i].trivial(self.parts[i]) for i in self.live)

    def render(self) -> str:
        return " | ".join("-" if p is None else p.render() for p in self.parts)

    def __repr__(self) -> str:
        return "[" + self.render() + "]"


def sub_multi(ms: MultiStructure, parts: Sequence) -> SubMulti:
    """Build a SubMulti from per-component label lists (None for an omitted component)."""
    if len(parts) != ms.N:
        raise InvariantViolation(f"expected {ms.N} parts, got {len(parts)}")
    out = []
    for c, p in zip(ms, parts):
        if p is None:
            out.append(None)
            continue
        s = p if isinstance(p, SubSet) else SubSet.of(c.magma, p)
        if not s.mask:
            raise InvariantViolation("parts must be nonempty; use None for an omitted component")
        if not is_closed(c.magma, s):
            raise NotClosed(f"{s!r} is not closed in {c.magma.name}")
        out.append(SubSet(c.magma, s.mask))
    if all(p is None for p in out):
        raise InvariantViolation("at least one component must be present")
    return SubMulti(ms, tuple(out))


@dataclass
class SubMultiFamily:
    members: list[SubMulti] = field(default_factory=list)
    truncated: bool = False

    def __iter__(self) -> Iterator[SubMulti]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def sub_multi_family(
    ms: MultiStructure, allow_deficit: bool = False, flavor: str | None = None, cap: int = FAMILY_CAP
) -> SubMultiFamily:
    """Combinations of per-component closed subsets; omitted components appear as None when allowed."""
    pools: list[list[SubSet | None]] = []
    for c in ms:
        pool: list[SubSet | None] = list(all_closed_subsets(c.magma))
        if allow_deficit:
            pool.append(None)
        pools.append(pool)
    fam = SubMultiFamily()
    for combo in itertools.product(*pools):
        if all(p is None for p in combo):
            continue
        s = SubMulti(ms, combo)
        if flavor is not None and s.flavor != flavor:
            continue
        if len(fam.members) >= cap:
            fam.truncated = True
            break
        fam.members.append(s)
    return fam


def _pool(ms: MultiStructure, flavor: str | None, deficit: bool) -> list[SubMulti]:
    fam = sub_multi_family(ms, allow_deficit=deficit, flavor=flavor)
    if fam.truncated:
        raise CapExceeded(f"sub-structure family of {ms.name} exceeds {FAMILY_CAP}")
    return [s for s in fam if not s.is_full and not s.trivial and (s.deficit > 0) == deficit]


# ---------------------------------------------------------------------------
# N-level classification


@dataclass(frozen=True)
class TupleSylow:
    primes: tuple[int, ...]
    holds: bool
    parts: tuple[SubSet | None, ...]
    biorder: int


@dataclass(frozen=True)
class NClassification:
    lagrange: LagrangeVerdict
    sylow: SylowReport
    cauchy: CauchyReport
    tuple_sylow: TupleSylow | None = None


def n_cauchy(ms: MultiStructure) -> CauchyReport:
    """Element exponents inside each component, tested against the order of the whole union."""
    total = ms.order
    recs = []
    trivial = set()
    for i, c in enumerate(ms):
        rep = cauchy_report(c.ext if c.ext is not None else c.magma)
        m = c.magma
        for v in (m.identity, c.ext.i_target if c.ext is not None else None):
            if v is not None:
                trivial.add(f"{i}:{m.labels[v]}")
        for r in rep.records:
            recs.append(
                CauchyRecord(
                    f"{i}:{r.label}",
                    r.exponent,
                    r.neutro_exponent,
                    None if r.exponent is None else total % r.exponent == 0,
                    None if r.neutro_exponent is None else total % r.neutro_exponent == 0,
                )
            )
    return CauchyReport(total, tuple(recs), cauchy_tag(recs, trivial))


def tuple_sylow(ms: MultiStructure, primes: Sequence[int], flavor: str | None = None) -> TupleSylow:
    """Each component i must hold a p_i-Sylow part (full p_i-power of its own order)."""
    if len(primes) != ms.N:
        raise InvariantViolation(f"need {ms.N} primes")
    parts: list[SubSet | None] = []
    biorder = 0
    for c, p in zip(ms, primes):
        a = factorize(c.order).get(p, 0)
        target = p**a
        biorder += target
        hit = None
        if a:
            for s in all_closed_subsets(c.magma):
                if len(s) == target and (flavor is None or c.flavor(s) in (flavor, "plain")):
                    hit = s
                    break
        parts.append(hit)
    return TupleSylow(tuple(primes), all(p is not None for p in parts), tuple(parts), biorder)


def n_classify(ms: MultiStructure, flavor: str | None = None, primes: Sequence[int] | None = None) -> NClassification:
    subs = _pool(ms, flavor, deficit=False)
    return NClassification(
        lagrange_from_orders(ms.order, subs),
        sylow_from_orders(ms.order, subs),
        n_cauchy(ms),
        tuple_sylow(ms, primes, flavor) if primes is not None else None,
    )


@dataclass(frozen=True)
class DeficitVerdict:
    live: tuple[int, ...]
    live_order: int
    lagrange: LagrangeVerdict
    sylow: SylowReport


def deficit_classify(ms: MultiStructure, flavor: str | None = None) -> list[DeficitVerdict]:
    """Lagrange and Sylow for deficit sub-structures, measured against their live components."""
    groups: dict[tuple[int, ...], list[SubMulti]] = {}
    for s in _pool(ms, flavor, deficit=True):
        groups.setdefault(s.live, []).append(s)
    out = []
    for live in sorted(groups):
        subs = groups[live]
        lo = subs[0].live_order
        out.append(DeficitVerdict(live, lo, lagrange_from_orders(lo, subs), sylow_from_orders(lo, subs)))
    return out


# ---------------------------------------------------------------------------
# identity classes


@dataclass(frozen=True)
class MultiIdentityVerdict:
    name: str
    mode: str
    holds: bool
    component: int | None = None
    subset: SubSet | None = None
    verdict: IdentityVerdict | None = None


def identity_class_multi(ms: MultiStructure, ident: IdentityName | str, mode: str = "subloop-quantified") -> MultiIdentityVerdict:
    """subloop-quantified: every proper nontrivial neutrosophic subloop of each loop component satisfies
    the identity; whole-structure: every loop component satisfies it globally."""
    name = IdentityName(ident)
    loops = [i for i, c in enumerate(ms) if c.loop_like]
    if not loops:
        raise NoLoopComponent(f"{ms.name} has no loop component")
    if mode not in ("subloop-quantified", "whole-structure"):
        raise ValueError(f"unknown mode {mode!r}")
    for i in loops:
        c = ms[i]
        m = c.magma
        if mode == "whole-structure":
            v = check_identity(m, name)
            if not v.holds:
                return MultiIdentityVerdict(name.value, mode, False, i, m.full(), v)
            continue
        full = (1 << m.order) - 1
        for s in all_closed_subsets(m):
            if s.mask == full or c.trivial(s):
                continue
            if c.neutro and c.flavor(s) != "neutrosophic":
                continue
            v = check_identity(m, name, within=s)
            if not v.holds:
                return MultiIdentityVerdict(name.value, mode, False, i, s, v)
    return MultiIdentityVerdict(name.value, mode, True)


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class NIdealVerdict:
    n_ideal: bool
    maximal: bool
    minimal: bool
    quasi_maximal: bool
    quasi_minimal: bool
    per_component: tuple[tuple[bool, bool, bool], ...]


def n_ideals(ms: MultiStructure, s: SubMulti) -> NIdealVerdict:
    """Componentwise two-sided ideal tests; quasi variants when only some parts are maximal/minimal."""
    if s.deficit:
        raise InvariantViolation("ideal tests need every component present")
    per = []
    for i, (c, p) in enumerate(zip(ms, s.parts)):
        if not c.associative:
            raise KindMismatch(f"component {i} is a {c.kind}, ideals need a semigroup")
        m = c.magma
        ok = is_ideal(m, p)
        mx = mn = False
        if ok:
            full = (1 << m.order) - 1
            fam = [q.mask for q in ideal_family(m)]
            mx = p.mask != full and not any(q != full and q != p.mask and p.mask & ~q == 0 for q in fam)
            mn = not any(q != p.mask and q & ~p.mask == 0 for q in fam)
        per.append((ok, mx, mn))
    n_ideal = all(x[0] for x in per)
    mxs = [x[1] for x in per]
    mns = [x[2] for x in per]
    return NIdealVerdict(
        n_ideal,
        n_ideal and all(mxs),
        n_ideal and all(mns),
        n_ideal and any(mxs) and not all(mxs),
        n_ideal and any(mns) and not all(mns),
        tuple(per),
    )


# ---------------------------------------------------------------------------
# N-ary special elements


@dataclass(frozen=True)
class NarySpecials:
    idempotents: tuple[SubSet, ...]
    units: tuple[SubSet, ...] | None
    zero_partners: tuple[SubSet, ...] | None
    idempotent_count: int
    unit_count: int | None
    zero_divisor_count: int | None
    sample: tuple[tuple[str, ...], ...]
    partial: bool


def _coords(ms: MultiStructure, x: Sequence) -> tuple[int, ...]:
    if len(x) != ms.N:
        raise InvariantViolation(f"tuple needs {ms.N} coordinates")
    return tuple(c.magma.index(v) for c, v in zip(ms, x))


def is_nary_idempotent(ms: MultiStructure, x: Sequence) -> bool:
    xs = _coords(ms, x)
    return all(c.magma.op(v, v) == v for c, v in zip(ms, xs))


def is_nary_unit(ms: MultiStructure, x: Sequence) -> bool:
    xs = _coords(ms, x)
    for c, v in zip(ms, xs):
        if c.magma.identity is None:
            raise MissingIdentity(f"{c.magma.name} has no identity")
        if inverse_of(c.magma, v) is None:
            return False
    return True


def _require_zeros(ms: MultiStructure) -> None:
    for c in ms:
        if c.magma.zero is None:
            raise NoZeroDesignated(f"{c.magma.name} has no designated zero")


def is_nary_zero_product(ms: MultiStructure, x: Sequence, y: Sequence) -> bool:
    """XY = YX = 0 with X, Y both nonzero tuples."""
    _require_zeros(ms)
    xs, ys = _coords(ms, x), _coords(ms, y)
    zero = tuple(c.magma.zero for c in ms)
    if xs == zero or ys == zero:
        return False
    return all(
        c.magma.op(a, b) == c.magma.zero and c.magma.op(b, a) == c.magma.zero for c, a, b in zip(ms, xs, ys)
    )


def _annihilated(c: Component) -> SubSet:
    """Elements a admitting a nonzero b with ab = ba = 0 in this component."""
    m = c.magma
    z = m.zero
    return SubSet.of(
        m, [a for a in range(m.order) if any(b != z and m.op(a, b) == z and m.op(b, a) == z for b in range(m.order))]
    )


def is_nary_zero_divisor(ms: MultiStructure, x: Sequence) -> bool:
    _require_zeros(ms)
    xs = _coords(ms, x)
    if all(v == c.magma.zero for c, v in zip(ms, xs)):
        return False
    return any(v in _annihilated(c) for c, v in zip(ms, xs))


def n_ary_special(ms: MultiStructure, cap: int = TUPLE_CAP) -> NarySpecials:
    idem = tuple(idempotents(c.magma) for c in ms)
    idem_count = prod(len(s) for s in idem)
    units = None
    unit_count = None
    if all(c.magma.identity is not None for c in ms):
        units = tuple(SubSet.of(c.magma, [v for v in range(c.order) if inverse_of(c.magma, v) is not None]) for c in ms)
        unit_count = prod(len(s) for s in units)
    zp = None
    zd_count = None
    if all(c.magma.zero is not None for c in ms):
        zp = tuple(_annihilated(c) for c in ms)
        # complement: tuples with no annihilated coordinate, plus the zero tuple
        zd_count = prod(c.order for c in ms) - prod(c.order - len(s) for c, s in zip(ms, zp)) - 1
    total = prod(c.order for c in ms)
    partial = total > cap
    sample = []
    for combo in itertools.product(*(s.members for s in idem)):
        if len(sample) >= min(cap, 1000):
            break
        sample.append(tuple(c.magma.labels[v] for c, v in zip(ms, combo)))
    return NarySpecials(idem, units, zp, idem_count, unit_count, zd_count, tuple(sample), partial)


def nary_flagged(ms: MultiStructure, x: Sequence) -> bool:
    xs = _coords(ms, x)
    return any(c.magma.neutro[v] for c, v in zip(ms, xs))


# ---------------------------------------------------------------------------
# homomorphisms, bicosets, HK products


@dataclass(frozen=True)
class NHomVerdict:
    holds: bool
    kernel: SubMulti | None
    reasons: tuple[str, ...] = ()


def verify_n_homomorphism(src: MultiStructure, dst: MultiStructure, maps: Sequence[Sequence]) -> NHomVerdict:
    if src.N != dst.N or len(maps) != src.N:
        raise KindMismatch("source, target and maps must have the same number of components")
    reasons = []
    kernel = []
    for i, (a, b, f) in enumerate(zip(src, dst, maps)):
        if a.kind != b.kind:
            raise KindMismatch(f"component {i}: {a.kind} cannot map to {b.kind}")
        if len(f) != a.order:
            raise KindMismatch(f"component {i}: map is not total")
        fi = [b.magma.index(v) for v in f]
        if not is_homomorphism(a.magma, b.magma, fi):
            reasons.append(f"component {i}: products not preserved")
        if a.ext is not None:
            if b.ext is None or fi[a.ext.i_target] != b.ext.i_target:
                reasons.append(f"component {i}: I is not sent to I")
        for v in range(a.order):
            if a.magma.neutro[v] and not b.magma.neutro[fi[v]]:
                reasons.append(f"component {i}: flagged {a.magma.labels[v]} lands on a determinate element")
                break
        e = b.magma.identity
        kernel.append(SubSet.of(a.magma, [v for v in range(a.order) if e is not None and fi[v] == e]))
    ker = SubMulti(src, tuple(k if k.mask else None for k in kernel)) if any(k.mask for k in kernel) else None
    return NHomVerdict(not reasons, ker, tuple(reasons))


def bicoset(ms: MultiStructure, h: SubMulti, component: int, a, side: str = "right") -> SubMulti:
    """Translate the part in the component holding a; the other parts pass through."""
    if not 0 <= component < ms.N:
        raise MembershipSpecInvalid(f"component {component} out of range")
    m = ms[component].magma
    try:
        ai = m.index(a)
    except MagmaError as exc:
        raise MembershipSpecInvalid(str(exc)) from exc
    part = h.parts[component]
    if part is None:
        raise MembershipSpecInvalid(f"component {component} is omitted from the sub-structure")
    if side == "right":
        moved = SubSet.of(m, [m.op(x, ai) for x in part.members])
    else:
        moved = SubSet.of(m, [m.op(ai, x) for x in part.members])
    parts = list(h.parts)
    parts[component] = moved
    return SubMulti(ms, tuple(parts))


def _product(m: Magma, h: SubSet, k: SubSet) -> int:
    mask = 0
    for x in h.members:
        for y in k.members:
            mask |= 1 << m.op(x, y)
    return mask


@dataclass(frozen=True)
class HKVerdict:
    closed: bool
    commuting: bool

    @property
    def agrees(self) -> bool:
        return self.closed == self.commuting


def hk_product_check(h: SubMulti, k: SubMulti) -> HKVerdict:
    """Is HK (componentwise products) closed, and do the parts commute setwise?"""
    if h.owner is not k.owner or h.deficit or k.deficit:
        raise InvariantViolation("H and K must be full-width sub-structures of the same union")
    closed = commuting = True
    for c, a, b in zip(h.owner, h.parts, k.parts):
        hk = _product(c.magma, a, b)
        kh = _product(c.magma, b, a)
        closed &= is_closed(c.magma, SubSet(c.magma, hk))
        commuting &= hk == kh
    return HKVerdict(closed, commuting)


__all__ = [
    "Component",
    "MultiStructure",
    "SubMulti",
    "SubMultiFamily",
    "TAXA",
    "make_multi",
    "classify_taxon",
    "failed_clauses",
    "sub_multi",
    "sub_multi_family",
    "n_classify",
    "n_cauchy",
    "tuple_sylow",
    "deficit_classify",
    "identity_class_multi",
    "n_ideals",
    "n_ary_special",
    "is_nary_idempotent",
    "is_nary_unit",
    "is_nary_zero_divisor",
    "is_nary_zero_product",
    "nary_flagged",
    "verify_n_homomorphism",
    "bicoset",
    "hk_product_check",
]
