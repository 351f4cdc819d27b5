"""Neutrosophic extensions <G u I> of finite magmas and the element/substructure classifiers."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import CapExceeded, NonModularCarrier, NotClosed, ParseError
from .magma import Magma, ModularCarrier, SubSet, all_closed_subsets, closure, is_closed, order_cap
from .constructors import build_loop_Ln, zn_add, zn_mul

CONSTRUCTIONS = ("ring-closure", "loop-doubling", "groupoid-lift")
FLAVORS = ("plain", "neutrosophic", "pseudo-neutrosophic", "degenerate")

_SCALAR = re.compile(r"^(?:(\d+)(?:\+(\d*)I)?|(\d*)I)$")


@dataclass(frozen=True, order=True)
class NeutroScalar:
    """a + bI in Z_n[I] with I*I = I."""

    a: int
    b: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.n)
        object.__setattr__(self, "b", self.b % self.n)

    def __add__(self, other: "NeutroScalar") -> "NeutroScalar":
        self._same(other)
        return NeutroScalar(self.a + other.a, self.b + other.b, self.n)

    def __mul__(self, other: "NeutroScalar") -> "NeutroScalar":
        self._same(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return NeutroScalar(a * c, a * d + b * c + b * d, self.n)

    def scale(self, k: int) -> "NeutroScalar":
        return NeutroScalar(k * self.a, k * self.b, self.n)

    def _same(self, other: "NeutroScalar") -> None:
        if self.n != other.n:
            raise ValueError(f"moduli differ: {self.n} vs {other.n}")

    @property
    def neutro(self) -> bool:
        return self.b != 0

    @property
    def label(self) -> str:
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        ib = "I" if b == 1 else f"{b}I"
        return ib if a == 0 else f"{a}+{ib}"

    def __str__(self) -> str:
        return self.label

    @classmethod
    def parse(cls, text: str, n: int) -> "NeutroScalar":
        m = _SCALAR.match(text.strip())
        if not m:
            raise ParseError(f"cannot read {text!r} as a+bI")
        if m.group(3) is not None:
            b = int(m.group(3)) if m.group(3) else 1
            return cls(0, b, n)
        a = int(m.group(1))
        if m.group(2) is None:
            return cls(a, 0, n)
        b = int(m.group(2)) if m.group(2) else 1
        return cls(a, b, n)


def canonical_label(text: str, n: int) -> str:
    return NeutroScalar.parse(text, n).label


def lifted_op(carrier: ModularCarrier):
    n = carrier.n
    if carrier.op == "add":
        return lambda x, y: x + y
    if carrier.op == "mul":
        return lambda x, y: x * y
    if carrier.op == "lin":
        t, u = carrier.t, carrier.u
        return lambda x, y: x.scale(t) + y.scale(u)
    raise NonModularCarrier(f"unknown modular operation {carrier.op!r} (mod {n})")


@dataclass(frozen=True)
class NeutroMagma:
    base: Magma
    extended: Magma
    construction: str
    i_target: int
    embedding: tuple[int, ...]

    @property
    def name(self) -> str:
        return self.extended.name

    @property
    def order(self) -> int:
        return self.extended.order

    @cached_property
    def base_kind(self) -> str:
        return self.base.kind

    def trivial_masks(self) -> set[int]:
        """{identity}, {I-target}, their closure and the whole set."""
        m = self.extended
        out = {(1 << m.order) - 1, 1 << self.i_target}
        if m.identity is not None:
            out.add(1 << m.identity)
            out.add(closure(m, [m.identity, self.i_target]).mask)
        return out


def _table_from_scalars(scalars: list[NeutroScalar], op) -> np.ndarray:
    pos = {s: i for i, s in enumerate(scalars)}
    k = len(scalars)
    tab = np.zeros((k, k), dtype=np.int64)
    for i, x in enumerate(scalars):
        for j, y in enumerate(scalars):
            tab[i, j] = pos[op(x, y)]
    return tab


def extend_modular(m: Magma, cap: int | None = None) -> NeutroMagma:
    """Closure of m's residues together with I under the lifted operation.

    Lifted groupoids (a*b = ta + ub) take the whole grid Z_n[I] instead.
    """
    if m.carrier is None:
        raise NonModularCarrier(f"{m.name} is not built on residues mod n")
    cap = order_cap() if cap is None else cap
    c = m.carrier
    op = lifted_op(c)
    base = [NeutroScalar.parse(lab, c.n) for lab in m.labels]
    known = set(base)
    queue = list(base)
    i_el = NeutroScalar(0, 1, c.n)
    if i_el not in known:
        known.add(i_el)
        queue.append(i_el)
    if c.op == "lin":
        # a lifted groupoid lives on all of Z_n[I]
        if c.n * c.n > cap:
            raise CapExceeded(f"extension of {m.name} exceeds order cap {cap}")
        known = {NeutroScalar(a, b, c.n) for a in range(c.n) for b in range(c.n)}
        queue = []
    done: list[NeutroScalar] = []
    while queue:
        y = queue.pop(0)
        done.append(y)
        for x in done:
            for v in (op(x, y), op(y, x)):
                if v not in known:
                    known.add(v)
                    queue.append(v)
        if len(known) > cap:
            raise CapExceeded(f"extension of {m.name} exceeds order cap {cap}")
    extra = sorted(known - set(base), key=lambda s: (s.b, s.a))
    scalars = base + extra
    tab = _table_from_scalars(scalars, op)
    zero = "0" if c.op in ("mul", "lin") and NeutroScalar(0, 0, c.n) in known else None
    ext = Magma([s.label for s in scalars], tab, name=f"N({m.name})", zero=zero, carrier=c)
    construction = "groupoid-lift" if c.op == "lin" else "ring-closure"
    return NeutroMagma(m, ext, construction, ext.index(i_el.label), tuple(range(m.order)))


def full_ring(n: int, op: str = "mul") -> NeutroMagma:
    """All n^2 elements a+bI of Z_n[I] under one ring operation."""
    if n * n > order_cap():
        raise CapExceeded(f"Z_{n}[I] has order {n * n} above the cap")
    base = zn_mul(n) if op == "mul" else zn_add(n)
    scalars = [NeutroScalar(a, 0, n) for a in range(n)]
    scalars += sorted((NeutroScalar(a, b, n) for b in range(1, n) for a in range(n)), key=lambda s: (s.b, s.a))
    c = ModularCarrier(n, op)
    tab = _table_from_scalars(scalars, lifted_op(c))
    ext = Magma(
        [s.label for s in scalars],
        tab,
        name=f"ZI({n};{op})",
        zero="0" if op == "mul" else None,
        carrier=c,
    )
    return NeutroMagma(base, ext, "ring-closure", ext.index("I"), tuple(range(n)))


def extend_loop(loop: Magma) -> NeutroMagma:
    """<L_n(m) u I>: flags are absorbing, base parts multiply as in L_n(m)."""
    fam = loop.family
    if not fam or fam[0] != "Ln":
        raise NonModularCarrier(f"{loop.name} was not built as an L_n(m) loop")
    if not np.array_equal(build_loop_Ln(fam[1], fam[2]).table, loop.table):
        raise NonModularCarrier(f"{loop.name} does not match L_{fam[1]}({fam[2]})")
    k = loop.order
    t = loop.table
    ar = np.arange(2 * k)
    base_i = ar % k
    flag = ar >= k
    tab = t[base_i[:, None], base_i[None, :]] + k * (flag[:, None] | flag[None, :])
    labels = list(loop.labels) + [lab + "I" for lab in loop.labels]
    ext = Magma(labels, tab, name=f"N({loop.name})", family=("NLn", fam[1], fam[2]))
    return NeutroMagma(loop, ext, "loop-doubling", k, tuple(range(k)))


# ---------------------------------------------------------------------------
# element classes


@dataclass(frozen=True)
class NeutroClasses:
    neutrosophic: SubSet
    idempotents: SubSet
    units: SubSet
    pseudo_torsion: SubSet
    exponents: dict[str, int]


def neutro_element_classes(nm: NeutroMagma) -> NeutroClasses:
    m = nm.extended
    target = nm.i_target
    flags = m.neutro
    exps: dict[str, int] = {}
    neut, idem, unit, tors = [], [], [], []
    e = m.identity
    for x in range(m.order):
        r = x
        for k in range(1, m.order + 1):
            if r == target:
                exps[m.labels[x]] = k
                neut.append(x)
                if x != target:
                    tors.append(x)
                break
            r = m.op(r, x)
        if flags[x] and m.op(x, x) == x:
            idem.append(x)
        if flags[x] and e is not None and any(m.op(x, y) == e and m.op(y, x) == e for y in range(m.order)):
            unit.append(x)
    return NeutroClasses(
        SubSet.of(m, neut), SubSet.of(m, idem), SubSet.of(m, unit), SubSet.of(m, tors), exps
    )


# ---------------------------------------------------------------------------
# substructure flavours


def substructure_flavor(nm: NeutroMagma, s: SubSet) -> str:
    m = nm.extended
    s = SubSet(m, s.mask)
    if not is_closed(m, s):
        raise NotClosed(f"{s!r} is not closed in {m.name}")
    flags = m.neutro
    flagged = [i for i in s.members if flags[i]]
    if not flagged:
        return "plain"
    plain = [i for i in s.members if not flags[i]]
    if len(plain) <= 1:
        return "pseudo-neutrosophic"
    if nm.construction == "loop-doubling":
        # a neutrosophic subloop is <A u I>: its flagged half is exactly A*I
        k = nm.base.order
        if sorted(flagged) == sorted(i + k for i in plain):
            return "neutrosophic"
        return "degenerate"
    return "neutrosophic"


def flavored_subsets(nm: NeutroMagma, flavor: str | None = None, include_trivial: bool = False) -> list[SubSet]:
    """Closed subsets of the extension with the given flavour (all flavours if None)."""
    m = nm.extended
    triv = set() if include_trivial else nm.trivial_masks()
    out = []
    for s in all_closed_subsets(m):
        if s.mask in triv or (not include_trivial and len(s) == 1):
            continue
        if flavor is None or substructure_flavor(nm, s) == flavor:
            out.append(s)
    return out


def neutrosophic_subloops(nm: NeutroMagma) -> list[SubSet]:
    """All <A u I> with A a nontrivial subloop, whole extension included."""
    return [s for s in all_closed_subsets(nm.extended) if substructure_flavor(nm, s) == "neutrosophic"]


def embeds_base(nm: NeutroMagma) -> bool:
    """The base maps into the extension label-preservingly and multiplicatively."""
    b, x = nm.base, nm.extended
    f = nm.embedding
    if any(b.labels[i] != x.labels[f[i]] for i in range(b.order)):
        return False
    fa = np.asarray(f)
    return bool(np.array_equal(fa[b.table], x.table[fa[:, None], fa[None, :]]))


def unflagged_part(nm: NeutroMagma) -> SubSet:
    m = nm.extended
    return SubSet.of(m, [i for i in range(m.order) if not m.neutro[i]])


__all__ = [
    "NeutroScalar",
    "NeutroMagma",
    "NeutroClasses",
    "extend_modular",
    "extend_loop",
    "full_ring",
    "neutro_element_classes",
    "substructure_flavor",
    "flavored_subsets",
    "neutrosophic_subloops",
    "embeds_base",
    "unflagged_part",
    "canonical_label",
]
