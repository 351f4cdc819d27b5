"""Finite binary systems stored as Cayley tables.

Elements are addressed by index; labels are only for display and parsing.
A label containing ``I`` marks the element as neutrosophic.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .errors import (
    CapExceeded,
    IndexOutOfRange,
    InvariantViolation,
    MissingIdentity,
    NoZeroDesignated,
    NotALoop,
    NotClosed,
)

KINDS = ("group", "loop", "monoid", "semigroup", "groupoid")

DEFAULT_ORDER_CAP = 64
DEFAULT_ISO_CAP = 32


def order_cap() -> int:
    return int(os.environ.get("MAGMA_ORDER_CAP", DEFAULT_ORDER_CAP))


def iso_cap() -> int:
    return min(DEFAULT_ISO_CAP, order_cap())


@dataclass(frozen=True)
class Element:
    index: int
    label: str
    neutro: bool = False


@dataclass(frozen=True)
class ModularCarrier:
    """Marks a magma whose elements are residues a+bI mod n under a lifted rule.

    op is one of "add", "mul" or "lin" (a*b = t*a + u*b).
    """

    n: int
    op: str
    t: int = 1
    u: int = 1


ElementRef = Union[int, str, Element]


class Magma:
    def __init__(
        self,
        labels: Sequence[object],
        table: Sequence[Sequence[int]] | np.ndarray,
        *,
        kind: str | None = None,
        name: str = "",
        zero: ElementRef | None = None,
        carrier: ModularCarrier | None = None,
        family: tuple | None = None,
    ):
        labels = tuple(str(x) for x in labels)
        k = len(labels)
        if k == 0:
            raise InvariantViolation("a magma needs at least one element")
        if len(set(labels)) != k:
            raise InvariantViolation("element labels must be pairwise distinct")
        for lab in labels:
            if not lab or any(ch.isspace() for ch in lab):
                raise InvariantViolation(f"label {lab!r} is empty or contains whitespace")
        tab = np.array(table, dtype=np.int64)
        if tab.shape != (k, k):
            raise InvariantViolation(f"table shape {tab.shape} does not match order {k}")
        if tab.size and (tab.min() < 0 or tab.max() >= k):
            raise InvariantViolation("table entries must lie in [0, order)")
        tab.setflags(write=False)
        self.labels = labels
        self.table = tab
        self.name = name or "M"
        self.carrier = carrier
        self.family = family
        self._index = {lab: i for i, lab in enumerate(labels)}
        self.zero = None if zero is None else self.index(zero)
        detected = _detect_kind(tab)
        if kind is None:
            kind = detected
        if kind not in KINDS:
            raise InvariantViolation(f"unknown kind {kind!r}")
        if not _kind_holds(kind, tab):
            raise InvariantViolation(f"table does not satisfy the axioms of kind {kind!r}")
        self.kind = kind

    # registry -------------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.labels)

    @cached_property
    def neutro(self) -> tuple[bool, ...]:
        return tuple("I" in lab for lab in self.labels)

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        return tuple(Element(i, lab, fl) for i, (lab, fl) in enumerate(zip(self.labels, self.neutro)))

    @cached_property
    def rows(self) -> list[list[int]]:
        return self.table.tolist()

    def index(self, x: ElementRef) -> int:
        if isinstance(x, Element):
            if x.index >= self.order or self.labels[x.index] != x.label:
                raise IndexOutOfRange(f"element {x.label!r} does not belong to {self.name}")
            return x.index
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            if not 0 <= x < self.order:
                raise IndexOutOfRange(f"index {x} out of range for order {self.order}")
            return int(x)
        if isinstance(x, str) and x in self._index:
            return self._index[x]
        raise IndexOutOfRange(f"{x!r} is not an element of {self.name}")

    def element(self, x: ElementRef) -> Element:
        return self.elements[self.index(x)]

    def label(self, i: int) -> str:
        return self.labels[i]

    def op(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def subset(self, items: Iterable[ElementRef]) -> "SubSet":
        return SubSet.of(self, items)

    def full(self) -> "SubSet":
        return SubSet(self, (1 << self.order) - 1)

    @cached_property
    def identity(self) -> int | None:
        return _find_identity(self.table)

    # comparison -----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Magma):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.kind == other.kind
            and self.zero == other.zero
            and self.name == other.name
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"Magma({self.name!r}, kind={self.kind}, order={self.order})"


class SubSet:
    """A subset of a magma's elements, stored as an integer bitmask."""

    __slots__ = ("owner", "mask")

    def __init__(self, owner: Magma, mask: int):
        if mask < 0 or mask >> owner.order:
            raise IndexOutOfRange("subset mask refers to indices outside the owner")
        self.owner = owner
        self.mask = mask

    @classmethod
    def of(cls, owner: Magma, items: Iterable[ElementRef]) -> "SubSet":
        mask = 0
        for x in items:
            mask |= 1 << owner.index(x)
        return cls(owner, mask)

    @property
    def members(self) -> tuple[int, ...]:
        return _bits(self.mask)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.owner.labels[i] for i in self.members)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, x: object) -> bool:
        try:
            i = self.owner.index(x)  # type: ignore[arg-type]
        except IndexOutOfRange:
            return False
        return bool(self.mask >> i & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubSet):
            return NotImplemented
        return self.owner is other.owner and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __or__(self, other: "SubSet") -> "SubSet":
        return SubSet(self.owner, self.mask | other.mask)

    def __and__(self, other: "SubSet") -> "SubSet":
        return SubSet(self.owner, self.mask & other.mask)

    def __le__(self, other: "SubSet") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "SubSet") -> bool:
        return self <= other and self.mask != other.mask

    def render(self) -> str:
        return ",".join(self.labels)

    def __repr__(self) -> str:
        return "{" + self.render() + "}"


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# table scans


def _find_identity(t: np.ndarray) -> int | None:
    k = t.shape[0]
    ar = np.arange(k)
    for e in range(k):
        if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar):
            return e
    return None


def _is_latin(t: np.ndarray) -> bool:
    k = t.shape[0]
    target = np.arange(k)
    return bool(
        np.all(np.sort(t, axis=1) == target) and np.all(np.sort(t, axis=0) == target[:, None])
    )


def _is_associative(t: np.ndarray) -> bool:
    # row by row so that large semigroups (order 256) stay cheap
    for x in range(t.shape[0]):
        if not np.array_equal(t[t[x]], t[x][t]):
            return False
    return True


def _detect_kind(t: np.ndarray) -> str:
    assoc = _is_associative(t)
    ident = _find_identity(t) is not None
    latin = _is_latin(t)
    if assoc and ident and latin:
        return "group"
    if ident and latin:
        return "loop"
    if assoc and ident:
        return "monoid"
    if assoc:
        return "semigroup"
    return "groupoid"


def _kind_holds(kind: str, t: np.ndarray) -> bool:
    if kind == "groupoid":
        return True
    assoc = _is_associative(t)
    ident = _find_identity(t) is not None
    if kind == "semigroup":
        return assoc
    if kind == "monoid":
        return assoc and ident
    latin = _is_latin(t)
    if kind == "loop":
        return ident and latin
    return assoc and ident and latin


def classify_kind(m: Magma) -> str:
    """Strongest applicable kind tag, recomputed from the table."""
    return _detect_kind(m.table)


# ---------------------------------------------------------------------------
# element level


def apply(m: Magma, a: ElementRef, b: ElementRef) -> Element:
    return m.elements[m.op(m.index(a), m.index(b))]


def identity_of(m: Magma) -> Element | None:
    e = m.identity
    return None if e is None else m.elements[e]


def left_identities(m: Magma) -> SubSet:
    ar = np.arange(m.order)
    return SubSet.of(m, [e for e in range(m.order) if np.array_equal(m.table[e], ar)])


def right_identities(m: Magma) -> SubSet:
    ar = np.arange(m.order)
    return SubSet.of(m, [e for e in range(m.order) if np.array_equal(m.table[:, e], ar)])


def left_power(m: Magma, x: ElementRef, k: int) -> Element:
    if k < 1:
        raise ValueError("power exponent must be positive")
    xi = m.index(x)
    r = xi
    for _ in range(k - 1):
        r = m.op(r, xi)
    return m.elements[r]


def order_to(m: Magma, x: ElementRef, target: ElementRef) -> int | None:
    """Smallest k with left_power(x, k) == target, or None if never reached."""
    xi, ti = m.index(x), m.index(target)
    r = xi
    for k in range(1, m.order + 1):
        if r == ti:
            return k
        r = m.op(r, xi)
    return None


def right_translation(m: Magma, a: ElementRef) -> tuple[int, ...]:
    """The map x -> x*a as a tuple of indices."""
    return tuple(int(v) for v in m.table[:, m.index(a)])


def left_translation(m: Magma, a: ElementRef) -> tuple[int, ...]:
    return tuple(int(v) for v in m.table[m.index(a)])


# ---------------------------------------------------------------------------
# identities


class IdentityName(str, Enum):
    Moufang1 = "Moufang1"
    Moufang2 = "Moufang2"
    Moufang3 = "Moufang3"
    Bol = "Bol"
    BruckA = "BruckA"
    LeftAlternative = "LeftAlternative"
    RightAlternative = "RightAlternative"
    WIP = "WIP"
    PGroupoid = "PGroupoid"
    IdempotentLaw = "IdempotentLaw"
    Commutativity = "Commutativity"
    Associativity = "Associativity"


ARITY = {
    IdentityName.Moufang1: 3,
    IdentityName.Moufang2: 3,
    IdentityName.Moufang3: 3,
    IdentityName.Bol: 3,
    IdentityName.BruckA: 3,
    IdentityName.LeftAlternative: 2,
    IdentityName.RightAlternative: 2,
    IdentityName.WIP: 3,
    IdentityName.PGroupoid: 2,
    IdentityName.IdempotentLaw: 1,
    IdentityName.Commutativity: 2,
    IdentityName.Associativity: 3,
}

EQUATIONS = {
    IdentityName.Moufang1: "(xy)(zx) = (x(yz))x",
    IdentityName.Moufang2: "((xy)z)y = x(y(zy))",
    IdentityName.Moufang3: "x(y(xz)) = ((xy)x)z",
    IdentityName.Bol: "((xy)z)y = x((yz)y)",
    IdentityName.BruckA: "(x(yx))z = x(y(xz))",
    IdentityName.LeftAlternative: "(xx)y = x(xy)",
    IdentityName.RightAlternative: "(xy)y = x(yy)",
    IdentityName.WIP: "(xy)z = e implies x(yz) = e",
    IdentityName.PGroupoid: "(xy)x = x(yx)",
    IdentityName.IdempotentLaw: "xx = x",
    IdentityName.Commutativity: "xy = yx",
    IdentityName.Associativity: "(xy)z = x(yz)",
}


def _sides(t: np.ndarray, name: IdentityName) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of an identity evaluated over every variable assignment.

    Arrays are indexed [x, y, z] (fewer axes for lower arity).
    """
    k = t.shape[0]
    ar = np.arange(k)
    if ARITY[name] == 3:
        x, y, z = ar[:, None, None], ar[None, :, None], ar[None, None, :]
    elif ARITY[name] == 2:
        x, y = ar[:, None], ar[None, :]
    else:
        x = ar

    def mul(a, b):
        return t[a, b]

    if name is IdentityName.Moufang1:
        return mul(mul(x, y), mul(z, x)), mul(mul(x, mul(y, z)), x)
    if name is IdentityName.Moufang2:
        return mul(mul(mul(x, y), z), y), mul(x, mul(y, mul(z, y)))
    if name is IdentityName.Moufang3:
        return mul(x, mul(y, mul(x, z))), mul(mul(mul(x, y), x), z)
    if name is IdentityName.Bol:
        return mul(mul(mul(x, y), z), y), mul(x, mul(mul(y, z), y))
    if name is IdentityName.BruckA:
        return mul(mul(x, mul(y, x)), z), mul(x, mul(y, mul(x, z)))
    if name is IdentityName.LeftAlternative:
        return mul(mul(x, x), y), mul(x, mul(x, y))
    if name is IdentityName.RightAlternative:
        return mul(mul(x, y), y), mul(x, mul(y, y))
    if name is IdentityName.PGroupoid:
        return mul(mul(x, y), x), mul(x, mul(y, x))
    if name is IdentityName.IdempotentLaw:
        return mul(x, x), x
    if name is IdentityName.Commutativity:
        return mul(x, y), mul(y, x)
    if name is IdentityName.Associativity:
        return mul(mul(x, y), z), mul(x, mul(y, z))
    raise ValueError(f"{name} has no two-sided form")


def _first_violation(lhs: np.ndarray, rhs: np.ndarray) -> tuple[int, ...] | None:
    bad = np.argwhere(np.broadcast_to(lhs != rhs, np.broadcast_shapes(lhs.shape, rhs.shape)))
    if len(bad) == 0:
        return None
    return tuple(int(v) for v in bad[0])


@dataclass(frozen=True)
class IdentityVerdict:
    name: IdentityName
    holds: bool
    witness: tuple[int, ...] | None = None
    witness_labels: tuple[str, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def evaluate_identity(m: Magma, name: IdentityName | str, args: Sequence[ElementRef]) -> tuple[int, int]:
    """Both sides of the identity at one assignment (indices).

    For WIP the pair is ((xy)z, x(yz)).
    """
    name = IdentityName(name)
    idx = [m.index(a) for a in args]
    r = m.rows
    if name is IdentityName.WIP:
        x, y, z = idx
        return r[r[x][y]][z], r[x][r[y][z]]
    sub = np.array(idx)
    lhs, rhs = _sides(m.table, name)
    key = tuple(sub)
    lhs_b = np.broadcast_to(lhs, np.broadcast_shapes(lhs.shape, rhs.shape))
    rhs_b = np.broadcast_to(rhs, lhs_b.shape)
    return int(lhs_b[key]), int(rhs_b[key])


def check_identity(m: Magma, name: IdentityName | str, within: SubSet | None = None) -> IdentityVerdict:
    """Decide an identity over all assignments; `within` restricts variables to a closed subset."""
    name = IdentityName(name)
    members = None
    if within is not None:
        if not is_closed(m, within):
            raise NotClosed(f"{within!r} is not closed in {m.name}")
        members = np.array(within.members)
    t = m.table
    if members is not None:
        t = _restrict(m, members)
    if name is IdentityName.WIP:
        e = _find_identity(t)
        if e is None:
            raise MissingIdentity("WIP needs a two-sided identity")
        k = t.shape[0]
        ar = np.arange(k)
        x, y, z = ar[:, None, None], ar[None, :, None], ar[None, None, :]
        lhs = t[t[x, y], z]
        rhs = t[x, t[y, z]]
        bad = np.argwhere((lhs == e) & (rhs != e))
        wit = None if len(bad) == 0 else tuple(int(v) for v in bad[0])
    else:
        wit = _first_violation(*_sides(t, name))
    if wit is None:
        return IdentityVerdict(name, True)
    if members is not None:
        wit = tuple(int(members[i]) for i in wit)
    return IdentityVerdict(name, False, wit, tuple(m.labels[i] for i in wit))


def _restrict(m: Magma, members: np.ndarray) -> np.ndarray:
    pos = {int(v): i for i, v in enumerate(members)}
    sub = m.table[np.ix_(members, members)]
    return np.vectorize(pos.__getitem__, otypes=[np.int64])(sub) if sub.size else sub


def restrict(m: Magma, s: SubSet, name: str | None = None) -> Magma:
    """The closed subset s as a magma in its own right."""
    if not is_closed(m, s):
        raise NotClosed(f"{s!r} is not closed in {m.name}")
    members = np.array(s.members)
    zero = m.labels[m.zero] if m.zero is not None and m.zero in s.members else None
    return Magma(
        [m.labels[i] for i in members],
        _restrict(m, members),
        name=name or f"{m.name}|{{{s.render()}}}",
        zero=zero,
    )


# ---------------------------------------------------------------------------
# closure and lattice


def _close(rows: list[list[int]], done: list[int], mask: int, queue: list[int]) -> int:
    """Extend a closed set `done` (bitmask `mask`) by `queue` to the product closure."""
    done = list(done)
    queue = list(queue)
    for v in queue:
        mask |= 1 << v
    while queue:
        y = queue.pop()
        ry = rows[y]
        cand = [ry[y]]
        for d in done:
            cand.append(ry[d])
            cand.append(rows[d][y])
        done.append(y)
        for v in cand:
            if not mask >> v & 1:
                mask |= 1 << v
                queue.append(v)
    return mask


def closure(m: Magma, seed: SubSet | Iterable[ElementRef]) -> SubSet:
    if not isinstance(seed, SubSet):
        seed = SubSet.of(m, seed)
    return SubSet(m, _close(m.rows, [], 0, list(seed.members)))


def is_closed(m: Magma, s: SubSet) -> bool:
    mem = s.members
    if not mem:
        return True
    sub = m.table[np.ix_(mem, mem)]
    inside = np.zeros(m.order, dtype=bool)
    inside[list(mem)] = True
    return bool(inside[sub].all())


def all_closed_subsets(m: Magma, cap: int | None = None) -> list[SubSet]:
    """Every nonempty product-closed subset, ordered by (size, mask)."""
    cap = order_cap() if cap is None else cap
    if m.order > cap:
        raise CapExceeded(f"order {m.order} exceeds the lattice cap {cap}")
    return [SubSet(m, mask) for mask in _closed_masks(m)]


def _closed_masks(m: Magma) -> list[int]:
    cache = m.__dict__.get("_closed_masks")
    if cache is not None:
        return cache
    rows, k = m.rows, m.order
    found: set[int] = set()
    stack: list[int] = []
    for x in range(k):
        c = _close(rows, [], 0, [x])
        if c not in found:
            found.add(c)
            stack.append(c)
    while stack:
        s = stack.pop()
        mem = list(_bits(s))
        for x in range(k):
            if s >> x & 1:
                continue
            c = _close(rows, mem, s, [x])
            if c not in found:
                found.add(c)
                stack.append(c)
    out = sorted(found, key=lambda v: (bin(v).count("1"), v))
    m.__dict__["_closed_masks"] = out
    return out


# ---------------------------------------------------------------------------
# normality, simplicity, cosets


def _require_closed(m: Magma, h: SubSet) -> None:
    if h.owner is not m:
        h = SubSet(m, h.mask)
    if not is_closed(m, h):
        raise NotClosed(f"{h!r} is not closed in {m.name}")


def _set_rows(values: np.ndarray, k: int) -> np.ndarray:
    """values[j, *rest] -> boolean membership array [*rest, k] (set over axis 0)."""
    rest = values.shape[1:]
    out = np.zeros(rest + (k,), dtype=bool)
    grids = np.meshgrid(*[np.arange(s) for s in rest], indexing="ij")
    for j in range(values.shape[0]):
        out[tuple(grids) + (values[j],)] = True
    return out


def is_normal_sub(m: Magma, h: SubSet) -> bool:
    """Set equations xH = Hx, (Hx)y = H(xy) and y(xH) = (yx)H for all x, y."""
    _require_closed(m, h)
    t, k = m.table, m.order
    hh = np.array(h.members)
    hx = t[hh, :]  # [j, x] = h_j x
    xh = t[:, hh].T  # [j, x] = x h_j
    if not np.array_equal(_set_rows(hx, k), _set_rows(xh, k)):
        return False
    ar = np.arange(k)
    lhs = t[hx[:, :, None], ar[None, None, :]]
    rhs = t[hh[:, None, None], t[None, :, :]]
    if not np.array_equal(_set_rows(lhs, k), _set_rows(rhs, k)):
        return False
    lhs = t[ar[None, None, :], xh[:, :, None]]
    rhs = t[t.T[None, :, :], hh[:, None, None]]
    return bool(np.array_equal(_set_rows(lhs, k), _set_rows(rhs, k)))


def inverse_of(m: Magma, x: ElementRef) -> int | None:
    e = m.identity
    if e is None:
        return None
    xi = m.index(x)
    for y in range(m.order):
        if m.op(xi, y) == e and m.op(y, xi) == e:
            return y
    return None


def is_normal_by_conjugation(m: Magma, h: SubSet) -> bool:
    """gHg^-1 = H for every g; meaningful for groups."""
    if classify_kind(m) != "group":
        raise InvariantViolation("the conjugation criterion needs a group")
    mem = set(h.members)
    for g in range(m.order):
        gi = inverse_of(m, g)
        conj = {m.op(m.op(g, x), gi) for x in mem}
        if conj != mem:
            return False
    return True


def is_simple(m: Magma, pool: Iterable[SubSet] | None = None) -> bool:
    """No nontrivial proper closed subset is normal.

    `pool` replaces the candidate family (all closed subsets by default);
    singletons and the whole set are never candidates.
    """
    cands = all_closed_subsets(m) if pool is None else list(pool)
    full = (1 << m.order) - 1
    for s in cands:
        if len(s) <= 1 or s.mask == full:
            continue
        if is_normal_sub(m, SubSet(m, s.mask)):
            return False
    return True


def cosets(m: Magma, h: SubSet, side: str = "right") -> dict[int, SubSet]:
    """Map each representative a to Ha (side="right") or aH (side="left")."""
    _require_closed(m, h)
    mem = h.members
    out = {}
    for a in range(m.order):
        if side == "right":
            vals = [m.op(x, a) for x in mem]
        elif side == "left":
            vals = [m.op(a, x) for x in mem]
        else:
            raise ValueError("side must be 'left' or 'right'")
        out[a] = SubSet.of(m, vals)
    return out


def partition_check(m: Magma, blocks: dict[int, SubSet] | Iterable[SubSet]) -> bool:
    """True iff the distinct blocks are pairwise disjoint, equal-sized and cover m."""
    vals = blocks.values() if isinstance(blocks, dict) else blocks
    distinct = {b.mask for b in vals}
    sizes = {bin(b).count("1") for b in distinct}
    if len(sizes) != 1:
        return False
    union = 0
    for b in distinct:
        if union & b:
            return False
        union |= b
    return union == (1 << m.order) - 1


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class IdealReport:
    left: bool
    right: bool
    two_sided: bool
    maximal: bool
    minimal: bool
    principal: str | None


def is_ideal(m: Magma, p: SubSet, side: str = "two") -> bool:
    mem = p.members
    if not mem:
        return False
    inside = np.zeros(m.order, dtype=bool)
    inside[list(mem)] = True
    left = bool(inside[m.table[:, list(mem)]].all())
    right = bool(inside[m.table[list(mem), :]].all())
    return {"left": left, "right": right, "two": left and right}[side]


def ideal_family(m: Magma, side: str = "two") -> list[SubSet]:
    return [s for s in all_closed_subsets(m) if is_ideal(m, s, side)]


def principal_ideal(m: Magma, a: ElementRef, side: str = "two") -> SubSet:
    """Smallest ideal of the given side containing a."""
    s = closure(m, [a]).mask
    while True:
        mem = list(_bits(s))
        extra = set()
        if side in ("left", "two"):
            extra.update(int(v) for v in m.table[:, mem].ravel())
        if side in ("right", "two"):
            extra.update(int(v) for v in m.table[mem, :].ravel())
        new = s
        for v in extra:
            new |= 1 << v
        new = _close(m.rows, [], 0, list(_bits(new)))
        if new == s:
            return SubSet(m, s)
        s = new


def ideals(m: Magma, p: SubSet) -> IdealReport:
    """Per-side verdicts; maximal/minimal/principal refer to the two-sided family."""
    _require_closed(m, p)
    left, right = is_ideal(m, p, "left"), is_ideal(m, p, "right")
    two = left and right
    maximal = minimal = False
    principal = None
    if two:
        fam = ideal_family(m, "two")
        full = (1 << m.order) - 1
        proper = [s.mask for s in fam if s.mask != full]
        maximal = p.mask != full and not any(p.mask != q and p.mask & ~q == 0 for q in proper)
        minimal = not any(q != p.mask and q & ~p.mask == 0 for q in (s.mask for s in fam))
        for a in p.members:
            if principal_ideal(m, a).mask == p.mask:
                principal = m.labels[a]
                break
    return IdealReport(left, right, two, maximal, minimal, principal)


# ---------------------------------------------------------------------------
# special elements, centre


def idempotents(m: Magma) -> SubSet:
    return SubSet.of(m, [x for x in range(m.order) if m.op(x, x) == x])


def zero_divisors(m: Magma) -> SubSet:
    """Nonzero x with x*y = 0 or y*x = 0 for some nonzero y."""
    if m.zero is None:
        raise NoZeroDesignated(f"{m.name} has no designated zero")
    z = m.zero
    t = m.table
    hits = ((t == z) | (t.T == z))
    hits[z, :] = False
    hits[:, z] = False
    return SubSet.of(m, [int(x) for x in np.nonzero(hits.any(axis=1))[0]])


def units(m: Magma) -> SubSet:
    if m.identity is None:
        raise MissingIdentity(f"{m.name} has no two-sided identity")
    return SubSet.of(m, [x for x in range(m.order) if inverse_of(m, x) is not None])


@dataclass(frozen=True)
class SpecialElements:
    idempotents: SubSet
    zero_divisors: SubSet | None
    units: SubSet | None


def special_elements(m: Magma) -> SpecialElements:
    zd = zero_divisors(m) if m.zero is not None else None
    un = units(m) if m.identity is not None else None
    return SpecialElements(idempotents(m), zd, un)


def commutant(m: Magma) -> SubSet:
    t = m.table
    return SubSet.of(m, [a for a in range(m.order) if np.array_equal(t[a], t[:, a])])


def nucleus(m: Magma) -> SubSet:
    """Elements associating with every pair in all three positions."""
    t = m.table
    ar = np.arange(m.order)
    x, y = ar[:, None], ar[None, :]
    out = []
    for a in range(m.order):
        if (
            np.array_equal(t[t[a, x], y], t[a, t[x, y]])
            and np.array_equal(t[t[x, a], y], t[x, t[a, y]])
            and np.array_equal(t[t[x, y], a], t[x, t[y, a]])
        ):
            out.append(a)
    return SubSet.of(m, out)


def center_and_commutant(m: Magma) -> tuple[SubSet, SubSet]:
    """(centre, commutant); the centre adds the mixed associativity conditions."""
    t = m.table
    ar = np.arange(m.order)
    x, y = ar[:, None], ar[None, :]
    comm = commutant(m)
    centre = []
    for a in comm.members:
        v1 = t[a, t[x, y]]
        if (
            np.array_equal(v1, t[t[a, x], y])
            and np.array_equal(v1, t[x, t[a, y]])
            and np.array_equal(v1, t[t[x, a], y])
            and np.array_equal(t[t[x, y], a], t[x, t[y, a]])
        ):
            centre.append(a)
    return SubSet.of(m, centre), comm


def _require_loop(m: Magma) -> None:
    if m.identity is None or not _is_latin(m.table):
        raise NotALoop(f"{m.name} is not a loop")


def _left_division(m: Magma) -> np.ndarray:
    """ld[a, b] = the unique c with a*c = b."""
    k = m.order
    ld = np.empty((k, k), dtype=np.int64)
    ar = np.arange(k)
    ld[ar[:, None], m.table] = ar[None, :]
    return ld


@dataclass(frozen=True)
class CommutatorAssociator:
    commutators: SubSet
    associators: SubSet
    commutator_subloop: SubSet
    associator_subloop: SubSet


def commutator_associator(m: Magma) -> CommutatorAssociator:
    """Solve xy = (yx)c and (xy)z = (x(yz))a for every tuple."""
    _require_loop(m)
    t = m.table
    ld = _left_division(m)
    ar = np.arange(m.order)
    x, y, z = ar[:, None, None], ar[None, :, None], ar[None, None, :]
    comm = np.unique(ld[t.T, t])
    assoc = np.unique(ld[t[x, t[y, z]], t[t[x, y], z]])
    cs = SubSet.of(m, comm.tolist())
    asc = SubSet.of(m, assoc.tolist())
    return CommutatorAssociator(cs, asc, closure(m, cs), closure(m, asc))


def principal_isotope(m: Magma, a: ElementRef, b: ElementRef) -> Magma:
    """x*y = XY where Xa = x and bY = y."""
    _require_loop(m)
    ai, bi = m.index(a), m.index(b)
    k = m.order
    rinv = np.empty(k, dtype=np.int64)
    rinv[m.table[:, ai]] = np.arange(k)
    linv = np.empty(k, dtype=np.int64)
    linv[m.table[bi, :]] = np.arange(k)
    tab = m.table[rinv[:, None], linv[None, :]]
    return Magma(m.labels, tab, name=f"{m.name}^({m.labels[ai]},{m.labels[bi]})")


# ---------------------------------------------------------------------------
# products and isomorphism


def direct_product(ms: Sequence[Magma], name: str | None = None, cap: int | None = None) -> Magma:
    if not ms:
        raise ValueError("direct product of an empty list")
    cap = order_cap() if cap is None else cap
    total = 1
    for f in ms:
        total *= f.order
    if total > cap:
        raise CapExceeded(f"product order {total} exceeds cap {cap}")
    combos = list(product(*[range(f.order) for f in ms]))
    pos = {c: i for i, c in enumerate(combos)}
    labels = ["(" + ",".join(f.labels[i] for f, i in zip(ms, c)) + ")" for c in combos]
    tab = np.empty((total, total), dtype=np.int64)
    for i, a in enumerate(combos):
        for j, b in enumerate(combos):
            tab[i, j] = pos[tuple(f.rows[x][y] for f, x, y in zip(ms, a, b))]
    zero = None
    if all(f.zero is not None for f in ms):
        zero = pos[tuple(f.zero for f in ms)]
    return Magma(labels, tab, name=name or "x".join(f.name for f in ms), zero=zero)


def _signature(m: Magma) -> list[tuple]:
    t = m.table
    k = m.order
    sq = np.diag(t)
    roots = np.bincount(sq, minlength=k)
    commuting = (t == t.T).sum(axis=1)
    row_fix = (t == np.arange(k)[None, :]).sum(axis=1)
    col_fix = (t == np.arange(k)[:, None]).sum(axis=0)
    sig = []
    for x in range(k):
        # left-power orbit shape: (tail length, cycle length)
        seen = {}
        r, step = x, 0
        while r not in seen:
            seen[r] = step
            r = m.rows[r][x]
            step += 1
        sig.append((int(sq[x] == x), int(roots[x]), int(commuting[x]), int(row_fix[x]), int(col_fix[x]), seen[r], step - seen[r]))
    return sig


def are_isomorphic(m1: Magma, m2: Magma, cap: int | None = None) -> dict[int, int] | None:
    """A table-preserving bijection (index map) or None."""
    cap = iso_cap() if cap is None else cap
    if m1.order > cap or m2.order > cap:
        raise CapExceeded(f"isomorphism search is capped at order {cap}")
    if m1.order != m2.order:
        return None
    s1, s2 = _signature(m1), _signature(m2)
    if sorted(s1) != sorted(s2):
        return None
    k = m1.order
    cands = [[y for y in range(k) if s2[y] == s1[x]] for x in range(k)]
    r1, r2 = m1.rows, m2.rows

    def assign(f: list[int], used: list[bool], x: int, y: int) -> bool:
        queue = [(x, y)]
        while queue:
            a, b = queue.pop()
            if f[a] != -1:
                if f[a] != b:
                    return False
                continue
            if used[b] or s1[a] != s2[b]:
                return False
            f[a] = b
            used[b] = True
            done = [c for c in range(k) if f[c] != -1]
            for c in done:
                for p, q in ((r1[a][c], r2[b][f[c]]), (r1[c][a], r2[f[c]][b])):
                    if f[p] == -1:
                        queue.append((p, q))
                    elif f[p] != q:
                        return False
        return True

    def search(f: list[int], used: list[bool]) -> list[int] | None:
        free = [x for x in range(k) if f[x] == -1]
        if not free:
            return f
        x = min(free, key=lambda v: len(cands[v]))
        for y in cands[x]:
            if used[y]:
                continue
            f2, u2 = list(f), list(used)
            if assign(f2, u2, x, y):
                res = search(f2, u2)
                if res is not None:
                    return res
        return None

    res = search([-1] * k, [False] * k)
    if res is None:
        return None
    return {x: res[x] for x in range(k)}


def is_homomorphism(m1: Magma, m2: Magma, f: Sequence[int]) -> bool:
    t1, t2 = m1.table, m2.table
    fa = np.asarray(f)
    return bool(np.array_equal(fa[t1], t2[fa[:, None], fa[None, :]]))
