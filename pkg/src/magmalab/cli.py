"""Command-line entry point: ``magmalab <command> ...``."""
from __future__ import annotations

import argparse
import sys

from . import constructors as C
from .classify import cauchy_report, lagrange_verdict, sylow_report
from .errors import MagmaError
from .harness import REGISTRY, render_report, run_check
from .magma import (
    IdentityName,
    Magma,
    center_and_commutant,
    check_identity,
    idempotents,
    nucleus,
    units,
    zero_divisors,
)
from .neutro import NeutroMagma, flavored_subsets, neutro_element_classes
from .nstruct import MultiStructure, classify_taxon, deficit_classify, n_classify, sub_multi_family
from .specparse import as_magma, parse_spec
from .textio import dump_magma, dump_multi


class Output:
    """Collects human-readable text and machine-readable key=value lines."""

    def __init__(self) -> None:
        self.human: list[str] = []
        self.machine: list[str] = []
        self.ok = True

    def both(self, line: str) -> None:
        self.human.append(line)
        self.machine.append(line)


def _components(x) -> list[tuple[str, Magma, NeutroMagma | None]]:
    if isinstance(x, MultiStructure):
        return [(f"component {i} kind={c.kind}", c.magma, c.ext) for i, c in enumerate(x)]
    return [("", as_magma(x), x if isinstance(x, NeutroMagma) else None)]


def render_table(m: Magma) -> list[str]:
    w = max(len(lab) for lab in m.labels)
    head = " " * w + " | " + " ".join(lab.rjust(w) for lab in m.labels)
    lines = [head, "-" * len(head)]
    for i, row in enumerate(m.rows):
        lines.append(m.labels[i].rjust(w) + " | " + " ".join(m.labels[v].rjust(w) for v in row))
    return lines


def cmd_build(x, args, out: Output) -> None:
    text = dump_multi(x) if isinstance(x, MultiStructure) else dump_magma(as_magma(x))
    for line in text.rstrip("\n").split("\n"):
        out.both(line)


def cmd_table(x, args, out: Output) -> None:
    for head, m, _ in _components(x):
        if head:
            out.human.append(head)
        out.human.extend(render_table(m))
    out.machine.extend((dump_multi(x) if isinstance(x, MultiStructure) else dump_magma(as_magma(x))).rstrip("\n").split("\n"))


def _props_one(m: Magma, ext: NeutroMagma | None, prefix: str, out: Output) -> None:
    out.both(f"{prefix}name={m.name}")
    out.both(f"{prefix}order={m.order}")
    out.both(f"{prefix}kind={m.kind}")
    out.both(f"{prefix}identity={'none' if m.identity is None else m.labels[m.identity]}")
    for name in IdentityName:
        if name is IdentityName.WIP and m.identity is None:
            continue
        v = check_identity(m, name)
        extra = "" if v.holds else " witness=" + ",".join(v.witness_labels or ())
        out.both(f"{prefix}identity.{name.value}={'yes' if v.holds else 'no'}{extra}")
    out.both(f"{prefix}idempotents={idempotents(m).render()}")
    if m.zero is not None:
        out.both(f"{prefix}zero_divisors={zero_divisors(m).render()}")
    if m.identity is not None:
        out.both(f"{prefix}units={units(m).render()}")
    centre, comm = center_and_commutant(m)
    out.both(f"{prefix}centre={centre.render()}")
    out.both(f"{prefix}commutant={comm.render()}")
    out.both(f"{prefix}nucleus={nucleus(m).render()}")
    if ext is not None:
        cls = neutro_element_classes(ext)
        out.both(f"{prefix}construction={ext.construction}")
        out.both(f"{prefix}neutrosophic_elements={cls.neutrosophic.render()}")
        out.both(f"{prefix}neutrosophic_idempotents={cls.idempotents.render()}")


def cmd_props(x, args, out: Output) -> None:
    if isinstance(x, MultiStructure):
        out.both(f"name={x.name}")
        out.both(f"N={x.N}")
        out.both(f"order={x.order}")
        out.both(f"taxa={','.join(classify_taxon(x))}")
    for i, (head, m, ext) in enumerate(_components(x)):
        _props_one(m, ext, f"component{i}." if head else "", out)


def cmd_subs(x, args, out: Output) -> None:
    if isinstance(x, MultiStructure):
        fam = sub_multi_family(x, allow_deficit=args.deficit, flavor=args.flavor)
        out.both(f"count={len(fam)}")
        out.both(f"truncated={'yes' if fam.truncated else 'no'}")
        for s in fam:
            out.both(f"sub order={s.order} deficit={s.deficit} flavor={s.flavor} parts={s.render()}")
        return
    if args.deficit:
        raise MagmaError("--deficit applies to multi-structures only")
    m = as_magma(x)
    if isinstance(x, NeutroMagma):
        subs = [(s, f) for f in ("plain", "neutrosophic", "pseudo-neutrosophic", "degenerate") for s in flavored_subsets(x, f, include_trivial=True)]
        subs = [(s, f) for s, f in subs if args.flavor is None or f == args.flavor]
        subs.sort(key=lambda sf: (len(sf[0]), sf[0].mask))
    else:
        from .magma import all_closed_subsets

        if args.flavor not in (None, "plain"):
            subs = []
        else:
            subs = [(s, "plain") for s in all_closed_subsets(m)]
    out.both(f"count={len(subs)}")
    for s, f in subs:
        out.both(f"sub order={len(s)} flavor={f} members={s.render()}")


def _verdict_lines(lag, syl, cau, out: Output) -> None:
    out.both(f"LAGRANGE={lag.tag}")
    for r in syl.records:
        out.both(f"SYLOW p={r.p} alpha={r.alpha} found={'yes' if r.found else 'no'}")
    out.both(f"SYLOW={syl.tag}")
    out.both(f"CAUCHY={cau.tag}")
    for s in lag.witnesses:
        out.both(f"witness.lagrange={s.render()}")
    for s in lag.counterexamples:
        out.both(f"counterexample.lagrange={s.render()}")
    for r in syl.records:
        for s in r.found:
            out.both(f"witness.sylow.{r.p}={s.render()}")
    for r in cau.records:
        if r.divides is False or r.neutro_divides is False:
            out.both(f"anti_cauchy={r.label}")


def cmd_classify(x, args, out: Output) -> None:
    if isinstance(x, MultiStructure):
        flavor = args.flavor
        if flavor is None and any(c.neutro for c in x):
            flavor = "neutrosophic"
        v = n_classify(x, flavor)
        out.both(f"order={x.order}")
        _verdict_lines(v.lagrange, v.sylow, v.cauchy, out)
        if args.deficit:
            for d in deficit_classify(x, flavor):
                live = ",".join(map(str, d.live))
                out.both(f"DEFICIT live={live} order={d.live_order} LAGRANGE={d.lagrange.tag} SYLOW={d.sylow.tag}")
        return
    flavor = args.flavor or ("neutrosophic" if isinstance(x, NeutroMagma) else "plain")
    out.both(f"order={as_magma(x).order}")
    _verdict_lines(lagrange_verdict(x, flavor), sylow_report(x, flavor), cauchy_report(x), out)


def _overrides(items: list[str] | None) -> dict[str, str]:
    out = {}
    for it in items or []:
        if "=" not in it:
            raise MagmaError(f"--range expects key=lo..hi, got {it!r}")
        k, v = it.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def cmd_verify(args, out: Output) -> None:
    ids = list(REGISTRY) if args.command == "verify-all" else [args.check]
    overrides = _overrides(getattr(args, "range", None))
    results = [run_check(i, overrides if args.command == "verify" else None, mutate=args.mutate) for i in ids]
    for r in results:
        out.human.append(f"{'PASS' if r.passed else 'FAIL'} {r.id} ({r.runtime:.2f}s) {REGISTRY[r.id].claim}")
        for c in r.counterexamples[:5]:
            out.human.append(f"    counterexample: {c}")
    out.machine.extend(render_report(results).rstrip("\n").split("\n"))
    out.ok = all(r.passed for r in results)


def cmd_scan(args, out: Output) -> None:
    ns = [int(v) for v in _range(args.n_range)]
    fam = args.family
    for n in ns:
        if fam == "Ln":
            if n <= 3 or n % 2 == 0:
                continue
            ms = C.enumerate_Ln(n)
            loops = {m: C.build_loop_Ln(n, m) for m in ms}
            comm = [m for m in ms if check_identity(loops[m], "Commutativity").holds]
            wip = [m for m in ms if check_identity(loops[m], "WIP").holds]
            ra = [m for m in ms if check_identity(loops[m], "RightAlternative").holds]
            la = [m for m in ms if check_identity(loops[m], "LeftAlternative").holds]
            out.both(
                f"n={n} count={len(ms)} formula={C.count_Ln(n)} members={_ints(ms)} commutative={_ints(comm)} "
                f"wip={_ints(wip)} right_alt={_ints(ra)} left_alt={_ints(la)}"
            )
        elif fam == "NLn":
            if n <= 3 or n % 2 == 0:
                continue
            from .harness import loop_ext

            for m in C.enumerate_Ln(n):
                nm = loop_ext(n, m)
                out.both(f"n={n} m={m} order={nm.order} LAGRANGE={lagrange_verdict(nm).tag} SYLOW={sylow_report(nm).tag}")
        elif fam == "Zn":
            if n < 3:
                continue
            assoc = idem = 0
            for t in range(n):
                for u in range(n):
                    g = C.build_groupoid_Zn(n, t, u)
                    assoc += check_identity(g, "Associativity").holds
                    idem += check_identity(g, "IdempotentLaw").holds
            out.both(
                f"n={n} associative={assoc} idempotent={idem} Z={C.count_groupoid_family(n, 'Z')} "
                f"Zstar={C.count_groupoid_family(n, 'Zstar')} Zstarstar={C.count_groupoid_family(n, 'Zstarstar')}"
            )
        else:
            raise MagmaError(f"unknown family {fam!r}; use Ln, NLn or Zn")


def _range(text: str) -> list[int]:
    from .harness import parse_range

    return parse_range(text)


def _ints(v: list[int]) -> str:
    return ",".join(map(str, v)) or "-"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="magmalab", description="Finite loops, groupoids and their neutrosophic extensions.")
    p.add_argument("--out", help="write the machine-readable report to this file")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("build", "table", "props", "subs", "classify"):
        sp = sub.add_parser(name)
        sp.add_argument("spec")
        if name in ("subs", "classify"):
            sp.add_argument("--flavor", choices=("plain", "neutrosophic", "pseudo-neutrosophic", "degenerate"))
            sp.add_argument("--deficit", action="store_true")
    v = sub.add_parser("verify")
    v.add_argument("check")
    v.add_argument("--range", action="append", metavar="KEY=LO..HI")
    v.add_argument("--mutate", action="store_true", help="run the negative-control mutation")
    va = sub.add_parser("verify-all")
    va.add_argument("--mutate", action="store_true")
    s = sub.add_parser("scan")
    s.add_argument("family")
    s.add_argument("--n-range", required=True)
    sub.add_parser("checks")
    for sp in sub.choices.values():
        sp.add_argument("--out", default=argparse.SUPPRESS, help="write the machine-readable report to this file")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output()
    try:
        if args.command in ("verify", "verify-all"):
            cmd_verify(args, out)
        elif args.command == "scan":
            cmd_scan(args, out)
        elif args.command == "checks":
            for cid, chk in REGISTRY.items():
                out.both(f"{cid} {chk.claim}")
        else:
            x = parse_spec(args.spec)
            {
                "build": cmd_build,
                "table": cmd_table,
                "props": cmd_props,
                "subs": cmd_subs,
                "classify": cmd_classify,
            }[args.command](x, args, out)
    except MagmaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print("\n".join(out.human))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(out.machine) + "\n")
    return 0 if out.ok else 1


if __name__ == "__main__":
    sys.exit(main())
