"""Concrete finite families: the loops L_n(m), groupoids Z_n(t,u) and classical groups/semigroups."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, gcd, prod

import numpy as np

from .errors import CapExceeded, FamilyConstraintViolation, InadmissibleSpec
from .magma import Magma, ModularCarrier

GROUPOID_FAMILIES = ("Z", "Zstar", "Zstarstar", "Zfull")
CLASSICAL_CAPS = {"symmetric_group": 5, "alternating_group": 5, "symmetric_semigroup": 4}


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def is_prime(n: int) -> bool:
    return n > 1 and factorize(n) == {n: 1}


# ---------------------------------------------------------------------------
# L_n(m)


@dataclass(frozen=True)
class LoopFamilySpec:
    n: int
    m: int

    def problems(self) -> list[str]:
        n, m = self.n, self.m
        out = []
        if n <= 3 or n % 2 == 0:
            out.append(f"n={n} must be an odd integer greater than 3")
        if not 1 < m < n:
            out.append(f"m={m} must satisfy 1 < m < n")
        if gcd(m, n) != 1:
            out.append(f"gcd(m, n) = {gcd(m, n)} != 1")
        if gcd(m - 1, n) != 1:
            out.append(f"gcd(m-1, n) = {gcd(m - 1, n)} != 1")
        return out

    @property
    def admissible(self) -> bool:
        return not self.problems()


def ln_label(n: int, residue: int) -> str:
    r = residue % n
    return str(n if r == 0 else r)


def build_loop_Ln(n: int | LoopFamilySpec, m: int | None = None) -> Magma:
    spec = n if isinstance(n, LoopFamilySpec) else LoopFamilySpec(n, m)  # type: ignore[arg-type]
    bad = spec.problems()
    if bad:
        raise InadmissibleSpec(f"L_{spec.n}({spec.m}) is inadmissible: " + "; ".join(bad))
    n, m = spec.n, spec.m
    k = n + 1
    tab = np.zeros((k, k), dtype=np.int64)
    ar = np.arange(k)
    tab[0, :] = ar
    tab[:, 0] = ar
    i = ar[1:, None]
    j = ar[None, 1:]
    r = (m * j - (m - 1) * i) % n
    tab[1:, 1:] = np.where(r == 0, n, r)
    tab[ar[1:], ar[1:]] = 0
    labels = ["e"] + [str(v) for v in range(1, n + 1)]
    return Magma(labels, tab, kind="loop", name=f"Ln({n},{m})", family=("Ln", n, m))


def enumerate_Ln(n: int) -> list[int]:
    if n <= 3 or n % 2 == 0:
        raise InadmissibleSpec(f"n={n} must be an odd integer greater than 3")
    return [m for m in range(2, n) if gcd(m, n) == 1 and gcd(m - 1, n) == 1]


def count_Ln(n: int) -> int:
    """Closed form prod (p-2) p^(a-1) over the factorisation of n."""
    if n <= 3 or n % 2 == 0:
        raise InadmissibleSpec(f"n={n} must be an odd integer greater than 3")
    return prod((p - 2) * p ** (a - 1) for p, a in factorize(n).items())


def count_strictly_noncommutative(n: int) -> int:
    """Closed form prod (p-3) p^(a-1); it also yields 0 whenever 3 divides n."""
    if n <= 3 or n % 2 == 0:
        raise InadmissibleSpec(f"n={n} must be an odd integer greater than 3")
    return prod((p - 3) * p ** (a - 1) for p, a in factorize(n).items())


count_strictly_nonalternative = count_strictly_noncommutative


def is_strictly_noncommutative(m: Magma) -> bool:
    """No two distinct non-identity elements commute."""
    e = m.identity
    t = m.table
    mask = t != t.T
    np.fill_diagonal(mask, True)
    if e is not None:
        mask[e, :] = True
        mask[:, e] = True
    return bool(mask.all())


def is_strictly_non_right_alternative(m: Magma) -> bool:
    """(xy)y != x(yy) for all distinct non-identity x, y."""
    e = m.identity
    t = m.table
    ar = np.arange(m.order)
    lhs = t[t, ar[None, :]]
    rhs = t[ar[:, None], np.diag(t)[None, :]]
    ok = lhs != rhs
    np.fill_diagonal(ok, True)
    if e is not None:
        ok[e, :] = True
        ok[:, e] = True
    return bool(ok.all())


def is_strictly_non_left_alternative(m: Magma) -> bool:
    """(xx)y != x(xy) for all distinct non-identity x, y."""
    e = m.identity
    t = m.table
    ar = np.arange(m.order)
    lhs = t[np.diag(t)[:, None], ar[None, :]]
    rhs = t[ar[:, None], t]
    ok = lhs != rhs
    np.fill_diagonal(ok, True)
    if e is not None:
        ok[e, :] = True
        ok[:, e] = True
    return bool(ok.all())


# ---------------------------------------------------------------------------
# Z_n(t,u)


@dataclass(frozen=True)
class GroupoidFamilySpec:
    n: int
    t: int
    u: int
    family: str = "Zfull"

    def problems(self) -> list[str]:
        n, t, u, fam = self.n, self.t, self.u, self.family
        out = []
        if fam not in GROUPOID_FAMILIES:
            return [f"unknown family {fam!r}"]
        if n < 3:
            out.append(f"n={n} must be at least 3")
        if not (0 <= t < n and 0 <= u < n):
            out.append("t and u must be residues in [0, n)")
        if fam != "Zfull" and (t == 0 or u == 0):
            out.append(f"family {fam} needs t, u nonzero")
        if fam in ("Z", "Zstar") and t == u:
            out.append(f"family {fam} needs t != u")
        if fam == "Z" and gcd(t, u) != 1:
            out.append(f"family Z needs gcd(t, u) = 1, got {gcd(t, u)}")
        return out


def build_groupoid_Zn(n: int | GroupoidFamilySpec, t: int | None = None, u: int | None = None, family: str = "Zfull") -> Magma:
    spec = n if isinstance(n, GroupoidFamilySpec) else GroupoidFamilySpec(n, t, u, family)  # type: ignore[arg-type]
    bad = spec.problems()
    if bad:
        raise FamilyConstraintViolation(
            f"Z_{spec.n}({spec.t},{spec.u}) violates family {spec.family}: " + "; ".join(bad)
        )
    n, t, u = spec.n, spec.t, spec.u
    ar = np.arange(n)
    tab = (t * ar[:, None] + u * ar[None, :]) % n
    return Magma(
        [str(v) for v in range(n)],
        tab,
        name=f"Zn({t},{u};{n};{spec.family})",
        zero="0",
        carrier=ModularCarrier(n, "lin", t, u),
        family=("Zn", n, t, u, spec.family),
    )


def groupoid_family_members(n: int, family: str) -> list[tuple[int, int]]:
    out = []
    for t, u in product(range(n), repeat=2):
        if not GroupoidFamilySpec(n, t, u, family).problems():
            out.append((t, u))
    return out


def count_groupoid_family(n: int, family: str) -> int:
    """Number of admissible (t, u) pairs, by direct scan."""
    if n < 3:
        raise FamilyConstraintViolation(f"n={n} must be at least 3")
    return len(groupoid_family_members(n, family))


def zstar_count_formula(n: int) -> int:
    return (n - 1) * (n - 2)


# ---------------------------------------------------------------------------
# classical structures


def cyclic_group(n: int) -> Magma:
    labels = ["1", "g"] + [f"g{k}" for k in range(2, n)]
    ar = np.arange(n)
    return Magma(labels[:n], (ar[:, None] + ar[None, :]) % n, kind="group", name=f"C({n})")


def zn_add(n: int) -> Magma:
    ar = np.arange(n)
    return Magma(
        [str(v) for v in range(n)],
        (ar[:, None] + ar[None, :]) % n,
        kind="group",
        name=f"Zadd({n})",
        carrier=ModularCarrier(n, "add"),
    )


def zn_mul(n: int, residues: list[int] | None = None) -> Magma:
    """Z_n (or a multiplicatively closed subset of it) under multiplication mod n."""
    res = list(range(n)) if residues is None else sorted(set(r % n for r in residues))
    pos = {r: i for i, r in enumerate(res)}
    tab = np.zeros((len(res), len(res)), dtype=np.int64)
    for i, a in enumerate(res):
        for j, b in enumerate(res):
            p = a * b % n
            if p not in pos:
                raise FamilyConstraintViolation(f"{res} is not closed under multiplication mod {n}")
            tab[i, j] = pos[p]
    name = f"Zmul({n})" if residues is None else f"Zmul({n};{','.join(map(str, res))})"
    return Magma(
        [str(r) for r in res],
        tab,
        name=name,
        zero="0" if 0 in pos else None,
        carrier=ModularCarrier(n, "mul"),
    )


def _perm_label(p: tuple[int, ...]) -> str:
    return "[" + "".join(str(v + 1) for v in p) + "]" if len(p) < 10 else "[" + ",".join(str(v + 1) for v in p) + "]"


def _compose_table(maps: list[tuple[int, ...]]) -> np.ndarray:
    # f*g applies f first, then g
    pos = {f: i for i, f in enumerate(maps)}
    k = len(maps)
    tab = np.zeros((k, k), dtype=np.int64)
    for i, f in enumerate(maps):
        for j, g in enumerate(maps):
            tab[i, j] = pos[tuple(g[f[x]] for x in range(len(f)))]
    return tab


def _check_cap(kind: str, n: int) -> None:
    cap = CLASSICAL_CAPS.get(kind)
    if cap is not None and n > cap:
        raise CapExceeded(f"{kind}({n}) exceeds the cap n <= {cap}")
    if n < 1:
        raise ValueError("n must be positive")


def _parity(p: tuple[int, ...]) -> int:
    seen, par = set(), 0
    for s in range(len(p)):
        if s in seen:
            continue
        length, x = 0, s
        while x not in seen:
            seen.add(x)
            x = p[x]
            length += 1
        par += length - 1
    return par % 2


def symmetric_group(n: int) -> Magma:
    _check_cap("symmetric_group", n)
    maps = list(permutations(range(n)))
    return Magma([_perm_label(p) for p in maps], _compose_table(maps), kind="group", name=f"Sn({n})")


def alternating_group(n: int) -> Magma:
    _check_cap("alternating_group", n)
    maps = [p for p in permutations(range(n)) if _parity(p) == 0]
    return Magma([_perm_label(p) for p in maps], _compose_table(maps), kind="group", name=f"An({n})")


def symmetric_semigroup(n: int) -> Magma:
    """All n^n self-maps of {1..n} under composition."""
    _check_cap("symmetric_semigroup", n)
    maps = list(product(range(n), repeat=n))
    return Magma([_perm_label(p) for p in maps], _compose_table(maps), kind="monoid", name=f"Ssym({n})")


def dihedral_2n(n: int) -> Magma:
    """Elements a^i b^j with a^2 = b^n = 1 and bab = a."""
    if n < 1:
        raise ValueError("n must be positive")
    elems = [(i, j) for i in range(2) for j in range(n)]
    pos = {x: k for k, x in enumerate(elems)}

    def lab(i: int, j: int) -> str:
        b = "" if j == 0 else ("b" if j == 1 else f"b{j}")
        a = "a" if i else ""
        return (a + b) or "1"

    tab = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for x, (i, j) in enumerate(elems):
        for y, (k, l) in enumerate(elems):
            jj = (-j if k else j) + l
            tab[x, y] = pos[((i + k) % 2, jj % n)]
    return Magma([lab(*x) for x in elems], tab, kind="group", name=f"D2n({n})")


def build_classical(kind: str, n: int) -> Magma:
    builders = {
        "cyclic_group": cyclic_group,
        "zn_add": zn_add,
        "zn_mul_semigroup": zn_mul,
        "symmetric_group": symmetric_group,
        "alternating_group": alternating_group,
        "dihedral_2n": dihedral_2n,
        "symmetric_semigroup": symmetric_semigroup,
    }
    if kind not in builders:
        raise ValueError(f"unknown classical kind {kind!r}")
    return builders[kind](n)


def classical_order(kind: str, n: int) -> int:
    return {
        "cyclic_group": n,
        "zn_add": n,
        "zn_mul_semigroup": n,
        "symmetric_group": factorial(n),
        "alternating_group": factorial(n) // 2 if n > 1 else 1,
        "dihedral_2n": 2 * n,
        "symmetric_semigroup": n**n,
    }[kind]
