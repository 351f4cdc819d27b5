"""Lagrange, Sylow and Cauchy verdicts, canonical subloops and conjugacy."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Union

from .constructors import LoopFamilySpec, build_loop_Ln, divisors, factorize
from .errors import InadmissibleSpec, MagmaError, NotClosed
from .magma import Magma, SubSet, all_closed_subsets, are_isomorphic, closure, is_closed, restrict
from .neutro import NeutroMagma, extend_loop, neutrosophic_subloops, substructure_flavor

Structure = Union[Magma, NeutroMagma]


class BadFactorization(MagmaError):
    pass


class NotADivisor(MagmaError):
    pass


def _magma(x: Structure) -> Magma:
    return x.extended if isinstance(x, NeutroMagma) else x


def substructure_pool(x: Structure, flavor: str = "neutrosophic", proper: bool = True) -> list[SubSet]:
    """Nontrivial closed subsets of the requested flavour.

    Singletons, {identity, I-target} closures and (when proper) the whole set are dropped.
    Plain magmas only have the plain flavour; every closed subset qualifies there.
    """
    m = _magma(x)
    full = (1 << m.order) - 1
    if isinstance(x, NeutroMagma):
        triv = x.trivial_masks() - ({full} if not proper else set())
    else:
        triv = {full} if proper else set()
        if m.identity is not None:
            triv.add(1 << m.identity)
    out = []
    for s in all_closed_subsets(m):
        if s.mask in triv or len(s) == 1:
            continue
        if isinstance(x, NeutroMagma) and substructure_flavor(x, s) != flavor:
            continue
        out.append(s)
    return out


# ---------------------------------------------------------------------------
# Lagrange


@dataclass(frozen=True)
class LagrangeVerdict:
    tag: str
    order: int
    witnesses: tuple[SubSet, ...] = ()
    counterexamples: tuple[SubSet, ...] = ()


def lagrange_from_orders(order: int, subs: list) -> LagrangeVerdict:
    wit = tuple(s for s in subs if order % len(s) == 0)
    bad = tuple(s for s in subs if order % len(s) != 0)
    if subs and not bad:
        tag = "lagrange"
    elif wit:
        tag = "weakly"
    else:
        tag = "free"
    return LagrangeVerdict(tag, order, wit, bad)


def lagrange_verdict(x: Structure, flavor: str = "neutrosophic") -> LagrangeVerdict:
    m = _magma(x)
    return lagrange_from_orders(m.order, substructure_pool(x, flavor))


# ---------------------------------------------------------------------------
# Sylow


@dataclass(frozen=True)
class SylowRecord:
    p: int
    alpha: int
    found: tuple = ()
    super: tuple = ()


@dataclass(frozen=True)
class SylowReport:
    order: int
    records: tuple[SylowRecord, ...]
    tag: str

    def record(self, p: int) -> SylowRecord:
        for r in self.records:
            if r.p == p:
                return r
        raise KeyError(p)


def sylow_from_orders(order: int, subs: list) -> SylowReport:
    recs = []
    for p, a in sorted(factorize(order).items()):
        pa = p**a
        found = tuple(s for s in subs if len(s) == pa)
        sup = tuple(s for s in subs if len(s) > pa and _is_power_of(len(s), p))
        recs.append(SylowRecord(p, a, found, sup))
    hits = [bool(r.found) for r in recs]
    if recs and all(hits):
        tag = "super" if all(r.super for r in recs) else "sylow"
    elif any(hits):
        tag = "weakly"
    else:
        tag = "free"
    return SylowReport(order, tuple(recs), tag)


def _is_power_of(v: int, p: int) -> bool:
    while v % p == 0:
        v //= p
    return v == 1


def sylow_report(x: Structure, flavor: str = "neutrosophic") -> SylowReport:
    m = _magma(x)
    return sylow_from_orders(m.order, substructure_pool(x, flavor))


def sylow_2pk_exists(n: int, p: int, k: int) -> bool:
    """Closed form for <L_n(m) u I>: write n+1 = p^k r with gcd(p, r) = 1; test (p^k - 1) | (r - 1)."""
    if k < 1 or (n + 1) % p**k or ((n + 1) // p**k) % p == 0:
        raise BadFactorization(f"p^k = {p}^{k} is not the exact power of {p} in n+1 = {n + 1}")
    r = (n + 1) // p**k
    return (r - 1) % (p**k - 1) == 0


def sylow_2pk_search(nm: NeutroMagma, p: int, k: int) -> bool:
    """Exhaustive: is there a neutrosophic subloop (the whole extension allowed) of order 2 p^k?"""
    return any(len(s) == 2 * p**k for s in neutrosophic_subloops(nm))


# ---------------------------------------------------------------------------
# Cauchy


@dataclass(frozen=True)
class CauchyRecord:
    label: str
    exponent: int | None
    neutro_exponent: int | None
    divides: bool | None
    neutro_divides: bool | None


@dataclass(frozen=True)
class CauchyReport:
    order: int
    records: tuple[CauchyRecord, ...]
    tag: str

    def record(self, label: str) -> CauchyRecord:
        for r in self.records:
            if r.label == label:
                return r
        raise KeyError(label)


def _orbit_hit(m: Magma, x: int, target: int | None) -> int | None:
    if target is None:
        return None
    r = x
    for k in range(1, m.order + 1):
        if r == target:
            return k
        r = m.op(r, x)
    return None


def cauchy_tag(records: list[CauchyRecord], trivial: set[str]) -> str:
    cls_e = [r.divides for r in records if r.exponent is not None and r.label not in trivial]
    cls_i = [r.neutro_divides for r in records if r.neutro_exponent is not None and r.label not in trivial]
    clean_e = bool(cls_e) and all(cls_e)
    clean_i = bool(cls_i) and all(cls_i)
    if (clean_e or not cls_e) and (clean_i or not cls_i) and (cls_e or cls_i):
        return "cauchy"
    if clean_e != clean_i and (clean_e or clean_i):
        return "semi"
    if any(cls_e) or any(cls_i):
        return "weakly"
    return "free"


def cauchy_report(x: Structure) -> CauchyReport:
    """Exponents to the identity (Cauchy) and to the I-target (Cauchy-neutrosophic)."""
    m = _magma(x)
    target = x.i_target if isinstance(x, NeutroMagma) else None
    e = m.identity
    recs = []
    for i in range(m.order):
        ke = _orbit_hit(m, i, e)
        ki = _orbit_hit(m, i, target)
        recs.append(
            CauchyRecord(
                m.labels[i],
                ke,
                ki,
                None if ke is None else m.order % ke == 0,
                None if ki is None else m.order % ki == 0,
            )
        )
    trivial = {m.labels[v] for v in (e, target) if v is not None}
    return CauchyReport(m.order, tuple(recs), cauchy_tag(recs, trivial))


# ---------------------------------------------------------------------------
# canonical subloops of <L_n(m) u I>


@dataclass
class CanonicalSubloopFamily:
    n: int
    m: int
    t: int
    extension: NeutroMagma
    members: list[SubSet] = field(default_factory=list)

    def checks(self) -> dict[str, bool]:
        ext = self.extension.extended
        e, ei = ext.index("e"), ext.index("eI")
        core = (1 << e) | (1 << ei)
        k = self.n // self.t
        out = {
            "closed": all(is_closed(ext, s) for s in self.members),
            "orders": all(len(s) == 2 * (k + 1) for s in self.members),
            "intersections": all(
                (a.mask & b.mask) == core for i, a in enumerate(self.members) for b in self.members[i + 1 :]
            ),
            "covers": _union(self.members) == (1 << ext.order) - 1,
        }
        if out["closed"]:
            subs = [restrict(ext, s) for s in self.members]
            out["isomorphic"] = all(are_isomorphic(subs[0], s) is not None for s in subs[1:])
        else:
            out["isomorphic"] = False
        return out


def _union(sets: list[SubSet]) -> int:
    u = 0
    for s in sets:
        u |= s.mask
    return u


def canonical_subloops(n: int, m: int, t: int) -> CanonicalSubloopFamily:
    """<H_i(t) u I> = {e, i, i+t, ...} with flags, for i = 1..t."""
    if not LoopFamilySpec(n, m).admissible:
        raise InadmissibleSpec(f"L_{n}({m}) is inadmissible")
    if t < 1 or n % t:
        raise NotADivisor(f"t={t} does not divide n={n}")
    nm = extend_loop(build_loop_Ln(n, m))
    ext = nm.extended
    members = []
    for i in range(1, t + 1):
        labs = ["e", "eI"]
        for j in range(i, n + 1, t):
            labs += [str(j), f"{j}I"]
        members.append(SubSet.of(ext, labs))
    return CanonicalSubloopFamily(n, m, t, nm, members)


@dataclass(frozen=True)
class SubloopOrderClaim:
    n: int
    m: int
    ks: tuple[int, ...]
    divisors: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return self.ks == self.divisors


def subloop_order_characterization(n: int, m: int) -> SubloopOrderClaim:
    """K = {k : some neutrosophic subloop has order 2(k+1)} from the exhaustive lattice."""
    nm = extend_loop(build_loop_Ln(n, m))
    ks = sorted({len(s) // 2 - 1 for s in neutrosophic_subloops(nm)})
    return SubloopOrderClaim(n, m, tuple(ks), tuple(divisors(n)))


# ---------------------------------------------------------------------------
# conjugacy and normalizers


def _image(m: Magma, mem, f) -> int:
    mask = 0
    for v in mem:
        mask |= 1 << f(v)
    return mask


def conjugate_substructures(m: Structure, h: SubSet, k: SubSet, mode: str = "translate") -> tuple[bool, tuple | None]:
    """Search for a witness of conjugacy.

    translate: xH = Ky; groupoid: H = xK or H = Kx (witness (x, side));
    power: {h^a} = {k^b} for exponents a, b (witness (a, b)).
    """
    mm = _magma(m)
    for s in (h, k):
        if not is_closed(mm, SubSet(mm, s.mask)):
            raise NotClosed(f"{s!r} is not closed")
    hm, km = h.members, k.members
    r = mm.rows
    if mode == "translate":
        left = {}
        for x in range(mm.order):
            left.setdefault(_image(mm, hm, lambda v: r[x][v]), x)
        for y in range(mm.order):
            img = _image(mm, km, lambda v: r[v][y])
            if img in left:
                return True, (mm.labels[left[img]], mm.labels[y])
        return False, None
    if mode == "groupoid":
        for x in range(mm.order):
            if _image(mm, km, lambda v: r[x][v]) == h.mask:
                return True, (mm.labels[x], "left")
            if _image(mm, km, lambda v: r[v][x]) == h.mask:
                return True, (mm.labels[x], "right")
        return False, None
    if mode == "power":
        def powers(mem, a):
            def pw(v):
                p = v
                for _ in range(a - 1):
                    p = r[p][v]
                return p
            return _image(mm, mem, pw)

        hp = {}
        for a in range(1, mm.order + 1):
            hp.setdefault(powers(hm, a), a)
        for b in range(1, mm.order + 1):
            img = powers(km, b)
            if img in hp:
                return True, (hp[img], b)
        return False, None
    raise ValueError(f"unknown conjugacy mode {mode!r}")


def normalizer(m: Structure, a) -> tuple[SubSet, bool]:
    """Elements commuting with a, and whether that set is closed."""
    mm = _magma(m)
    ai = mm.index(a)
    s = SubSet.of(mm, [x for x in range(mm.order) if mm.op(x, ai) == mm.op(ai, x)])
    return s, is_closed(mm, s)


__all__ = [
    "BadFactorization",
    "NotADivisor",
    "LagrangeVerdict",
    "SylowRecord",
    "SylowReport",
    "CauchyRecord",
    "CauchyReport",
    "CanonicalSubloopFamily",
    "SubloopOrderClaim",
    "substructure_pool",
    "lagrange_verdict",
    "lagrange_from_orders",
    "sylow_report",
    "sylow_from_orders",
    "sylow_2pk_exists",
    "sylow_2pk_search",
    "cauchy_report",
    "cauchy_tag",
    "canonical_subloops",
    "subloop_order_characterization",
    "conjugate_substructures",
    "normalizer",
    "closure",
    "gcd",
]
