"""Batch command-line frontend.

Every verb maps onto one public operation; nontrivial inputs come from JSON
documents so runs are reproducible.  Data goes to stdout, diagnostics to
stderr, and output is byte-identical for identical inputs.  Exit codes:
0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio
from .errors import QOrbitsError
from .l2pair import construct_l2_pair, verify_l2_pair
from .lparam import is_discrete, langlands_assemble, langlands_decompose
from .mupole import square_integrable, total_order
from .orbits import bala_carter, enumerate_distinguished, graded_dims
from .rootsys import CartanType, build_root_system, closed_subsystem, full_subsystem
from .torus import is_q_distinguished, polar_parts, torus_element

GOLDEN_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "G2", "F4", "E6", "E7", "E8"]
GOLDEN_ORBIT_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"]


def _parse_fracs(text: str) -> list[Fraction]:
    return [Fraction(piece) for piece in text.split(",") if piece != ""]


def _element_from_args(args) -> "tuple":
    sys_ = build_root_system(CartanType.parse(args.type))
    rs = _parse_fracs(args.r) if args.r else [Fraction(0)] * sys_.rank
    thetas = _parse_fracs(args.theta) if args.theta else None
    return sys_, torus_element(sys_, rs, thetas)


def _emit(args, payload: dict, pretty_lines: list[str], tsv_lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(jsonio.dumps(payload))
    elif args.format == "tsv":
        sys.stdout.write("\n".join(tsv_lines) + "\n")
    else:
        sys.stdout.write("\n".join(pretty_lines) + "\n")


def _read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def cmd_roots_gen(args) -> int:
    sys_ = build_root_system(CartanType.parse(args.type))
    payload = jsonio.rootsystem_to_json(sys_)
    pretty = [f"{sys_.label}: {len(sys_.roots)} roots, {len(sys_.positives)} positive"]
    pretty += ["  " + " ".join(str(c) for c in beta) for beta in sys_.roots]
    tsv = ["\t".join(str(c) for c in beta) for beta in sys_.roots]
    _emit(args, payload, pretty, tsv)
    return 0


def cmd_roots_sub(args) -> int:
    sys_ = build_root_system(CartanType.parse(args.type))
    if args.members:
        members = [tuple(int(c) for c in item.split(",")) for item in args.members.split(";")]
    else:
        members = [tuple(m) for m in _read_json(args.infile)["members"]]
    sub = closed_subsystem(sys_, members)
    from .rootsys import irreducible_components

    comps = irreducible_components(sub)
    payload = jsonio.subsystem_to_json(sub)
    payload["components"] = [str(t) for t in comps]
    pretty = [
        f"subsystem of {sys_.label}: rank {sub.rank}, {len(sub.members)} roots, "
        f"components {'x'.join(str(t) for t in comps) or '0'}"
    ]
    tsv = ["\t".join(str(c) for c in m) for m in sub.members]
    _emit(args, payload, pretty, tsv)
    return 0


def cmd_orbits_distinguished(args) -> int:
    sys_ = build_root_system(CartanType.parse(args.type))
    data = enumerate_distinguished(full_subsystem(sys_), rank_bound=args.rank_bound)
    rows = []
    for d in data:
        dim0, dim2 = graded_dims(d)
        rows.append({"weight2": list(d.weight2), "dim0": dim0, "dim2": dim2})
    payload = {"type": sys_.label, "count": len(rows), "data": rows}
    pretty = [f"{sys_.label}: {len(rows)} distinguished data"] + [
        f"  J={tuple(r['weight2'])} dim0={r['dim0']} dim2={r['dim2']}" for r in rows
    ]
    tsv = ["\t".join([",".join(map(str, r["weight2"])) or "-", str(r["dim0"]), str(r["dim2"])]) for r in rows]
    _emit(args, payload, pretty, tsv)
    return 0


def cmd_orbits_balacarter(args) -> int:
    sys_ = build_root_system(CartanType.parse(args.type))
    labels = bala_carter(sys_, dedup=not args.no_dedup, rank_bound=args.rank_bound)
    payload = {
        "type": sys_.label,
        "raw": bool(args.no_dedup),
        "count": len(labels),
        "labels": [jsonio.orbitlabel_to_json(lab) for lab in labels],
    }
    pretty = [f"{sys_.label}: {len(labels)} orbit labels" + (" (raw)" if args.no_dedup else "")]
    for lab in labels:
        diag = ",".join(jsonio.frac_str(x) for x in lab.diagram)
        pretty.append(f"  levi={lab.levi} J={lab.datum.weight2} diagram=({diag})")
    tsv = [
        "\t".join(
            [
                ",".join(map(str, lab.levi)) or "-",
                ",".join(map(str, lab.datum.weight2)) or "-",
                ",".join(jsonio.frac_str(x) for x in lab.diagram),
            ]
        )
        for lab in labels
    ]
    _emit(args, payload, pretty, tsv)
    return 0


def cmd_qdist_check(args) -> int:
    _, s = _element_from_args(args)
    flag, margin = is_q_distinguished(s)
    payload = {"element": jsonio.torus_to_json(s), "q_distinguished": flag, "margin": margin}
    verdict = "q-distinguished, margin 0" if flag else f"not q-distinguished, margin {margin}"
    _emit(args, payload, [verdict], [f"{flag}\t{margin}"])
    return 0


def cmd_l2pair_build(args) -> int:
    _, s = _element_from_args(args)
    pair = construct_l2_pair(s)
    payload = jsonio.l2pair_to_json(pair)
    pretty = [
        f"support rank {pair.support.rank}, base {[list(b) for b in pair.support.sub_base]}, "
        f"weight-2 nodes {list(pair.datum.weight2)}"
    ]
    tsv = ["\t".join([",".join(map(str, b)) for b in pair.support.sub_base])]
    _emit(args, payload, pretty, tsv)
    return 0


def cmd_l2pair_verify(args) -> int:
    pair = jsonio.l2pair_from_json(_read_json(args.infile))
    result = verify_l2_pair(pair)
    payload = {"ok": result.ok, "problems": list(result.problems)}
    pretty = ["valid pair" if result.ok else "invalid pair:"] + [f"  {p}" for p in result.problems]
    tsv = [f"{result.ok}"] + list(result.problems)
    _emit(args, payload, pretty, tsv)
    return 0


def cmd_mupole_ledger(args) -> int:
    ms, s = jsonio.musetting_from_json(_read_json(args.infile))
    if s is None:
        raise QOrbitsError("the setting file carries no torus element 's'")
    ledger = total_order(ms, s)
    payload = jsonio.ledger_to_json(ledger)
    pretty = ["line | dq | d1 | class"]
    for e in ledger.entries:
        pretty.append(f"{','.join(map(str, e.line))} | {e.dq} | {e.d1} | {e.cls.name}")
    pretty.append(f"total: {ledger.total}")
    tsv = ["\t".join([",".join(map(str, e.line)), str(e.dq), str(e.d1), e.cls.name]) for e in ledger.entries]
    tsv.append(f"TOTAL\t\t\t{ledger.total}")
    _emit(args, payload, pretty, tsv)
    return 0


def cmd_mupole_sqint(args) -> int:
    ms, s = jsonio.musetting_from_json(_read_json(args.infile))
    if s is None:
        raise QOrbitsError("the setting file carries no torus element 's'")
    flag, report = square_integrable(ms, s)
    payload = {
        "flag": flag,
        "rank_cent": report.rank_cent,
        "parabolic_rank": report.parabolic_rank,
        "rank_ok": report.rank_ok,
        "q_distinguished": report.qdist,
        "margin": report.qdist_margin,
        "ledger_total": report.ledger_total,
    }
    pretty = [
        f"square-integrable: {flag}",
        f"  rank {report.rank_cent} vs parabolic rank {report.parabolic_rank}: {report.rank_ok}",
        f"  q-distinguished: {report.qdist} (margin {report.qdist_margin})",
        f"  ledger total: {report.ledger_total}",
    ]
    tsv = [f"{flag}\t{report.rank_cent}\t{report.parabolic_rank}\t{report.ledger_total}"]
    _emit(args, payload, pretty, tsv)
    return 0


def cmd_param_split(args) -> int:
    _, s = _element_from_args(args)
    nr, fin = polar_parts(s)
    payload = {"nr": jsonio.torus_to_json(nr), "fin": jsonio.torus_to_json(fin)}
    pretty = [
        "hyperbolic: " + " ".join(jsonio.frac_str(v.r) for v in nr.vals),
        "compact angles: " + " ".join(jsonio.frac_str(v.theta) for v in fin.vals),
    ]
    tsv = [
        "\t".join(jsonio.frac_str(v.r) for v in nr.vals),
        "\t".join(jsonio.frac_str(v.theta) for v in fin.vals),
    ]
    _emit(args, payload, pretty, tsv)
    return 0


def cmd_param_discrete(args) -> int:
    p = jsonio.skeleton_from_json(_read_json(args.infile))
    flag, report = is_discrete(p)
    payload = {
        "discrete": flag,
        "rank_ok": report.rank_ok,
        "pair_ok": report.pair_ok,
        "central_twist_zero": report.central_twist_zero,
        "detail": list(report.detail),
    }
    pretty = [f"discrete: {flag}"] + [f"  {d}" for d in report.detail]
    tsv = [f"{flag}\t{report.rank_ok}\t{report.pair_ok}\t{report.central_twist_zero}"]
    _emit(args, payload, pretty, tsv)
    return 0


def cmd_param_decompose(args) -> int:
    p = jsonio.skeleton_from_json(_read_json(args.infile))
    triple = langlands_decompose(p)
    payload = jsonio.triple_to_json(triple)
    pretty = [
        f"tempered block nodes: {list(triple.m2)}",
        "twist: " + " ".join(jsonio.frac_str(x) for x in triple.lambda2),
    ]
    tsv = ["\t".join(map(str, triple.m2)), "\t".join(jsonio.frac_str(x) for x in triple.lambda2)]
    _emit(args, payload, pretty, tsv)
    return 0


def cmd_param_assemble(args) -> int:
    triple = jsonio.triple_from_json(_read_json(args.infile))
    p = langlands_assemble(triple)
    payload = jsonio.skeleton_to_json(p)
    pretty = ["assembled skeleton frob: " + " ".join(str(v) for v in p.frob.vals)]
    tsv = ["\t".join(jsonio.frac_str(v.r) for v in p.frob.vals)]
    _emit(args, payload, pretty, tsv)
    return 0


def cmd_tables_golden(args) -> int:
    distinguished = {}
    for t in GOLDEN_TYPES:
        sys_ = build_root_system(CartanType.parse(t))
        distinguished[t] = len(enumerate_distinguished(full_subsystem(sys_)))
    orbits = {}
    for t in GOLDEN_ORBIT_TYPES:
        sys_ = build_root_system(CartanType.parse(t))
        orbits[t] = len(bala_carter(sys_))
    payload = {"distinguished_counts": distinguished, "orbit_counts": orbits}
    pretty = ["distinguished counts:"]
    pretty += [f"  {t}: {n}" for t, n in distinguished.items()]
    pretty.append("orbit counts:")
    pretty += [f"  {t}: {n}" for t, n in orbits.items()]
    tsv = [f"distinguished\t{t}\t{n}" for t, n in distinguished.items()]
    tsv += [f"orbits\t{t}\t{n}" for t, n in orbits.items()]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(jsonio.dumps(payload))
    _emit(args, payload, pretty, tsv)
    return 0


def _add_format(parser) -> None:
    parser.add_argument("--format", choices=["json", "tsv", "pretty"], default="pretty")


def _add_element_flags(parser) -> None:
    parser.add_argument("--type", required=True, help="Cartan type, e.g. A2")
    parser.add_argument("--r", default="", help="comma-separated rational exponents")
    parser.add_argument("--theta", default="", help="comma-separated rational angles")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qorbits", description=__doc__)
    top = parser.add_subparsers(dest="group", required=True)

    roots = top.add_parser("roots", help="root system construction").add_subparsers(
        dest="verb", required=True
    )
    gen = roots.add_parser("gen", help="generate a full root system")
    gen.add_argument("--type", required=True)
    _add_format(gen)
    gen.set_defaults(func=cmd_roots_gen)
    sub = roots.add_parser("sub", help="close a root subset into a subsystem")
    sub.add_argument("--type", required=True)
    sub.add_argument("--members", default="", help="semicolon-separated coordinate lists")
    sub.add_argument("--in", dest="infile", default="", help="JSON file with a members array")
    _add_format(sub)
    sub.set_defaults(func=cmd_roots_sub)

    orbits = top.add_parser("orbits", help="distinguished data and orbit labels").add_subparsers(
        dest="verb", required=True
    )
    dist = orbits.add_parser("distinguished")
    dist.add_argument("--type", required=True)
    dist.add_argument("--rank-bound", type=int, default=8)
    _add_format(dist)
    dist.set_defaults(func=cmd_orbits_distinguished)
    bc = orbits.add_parser("balacarter")
    bc.add_argument("--type", required=True)
    bc.add_argument("--no-dedup", action="store_true")
    bc.add_argument("--rank-bound", type=int, default=6)
    _add_format(bc)
    bc.set_defaults(func=cmd_orbits_balacarter)

    qdist = top.add_parser("qdist", help="q-distinguished test").add_subparsers(
        dest="verb", required=True
    )
    check = qdist.add_parser("check")
    _add_element_flags(check)
    _add_format(check)
    check.set_defaults(func=cmd_qdist_check)

    l2 = top.add_parser("l2pair", help="pair construction and verification").add_subparsers(
        dest="verb", required=True
    )
    build = l2.add_parser("build")
    _add_element_flags(build)
    _add_format(build)
    build.set_defaults(func=cmd_l2pair_build)
    ver = l2.add_parser("verify")
    ver.add_argument("--in", dest="infile", required=True)
    _add_format(ver)
    ver.set_defaults(func=cmd_l2pair_verify)

    mupole = top.add_parser("mupole", help="pole-order ledgers").add_subparsers(
        dest="verb", required=True
    )
    ledger = mupole.add_parser("ledger")
    ledger.add_argument("--in", dest="infile", required=True)
    _add_format(ledger)
    ledger.set_defaults(func=cmd_mupole_ledger)
    sqint = mupole.add_parser("sqint")
    sqint.add_argument("--in", dest="infile", required=True)
    _add_format(sqint)
    sqint.set_defaults(func=cmd_mupole_sqint)

    param = top.add_parser("param", help="parameter skeleton bookkeeping").add_subparsers(
        dest="verb", required=True
    )
    split = param.add_parser("split")
    _add_element_flags(split)
    _add_format(split)
    split.set_defaults(func=cmd_param_split)
    for name, func in (
        ("discrete", cmd_param_discrete),
        ("decompose", cmd_param_decompose),
        ("assemble", cmd_param_assemble),
    ):
        sp = param.add_parser(name)
        sp.add_argument("--in", dest="infile", required=True)
        _add_format(sp)
        sp.set_defaults(func=func)

    tables = top.add_parser("tables", help="golden tables").add_subparsers(
        dest="verb", required=True
    )
    golden = tables.add_parser("golden")
    golden.add_argument("--out", default="", help="also write the JSON payload here")
    _add_format(golden)
    golden.set_defaults(func=cmd_tables_golden)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QOrbitsError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
