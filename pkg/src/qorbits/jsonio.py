"""JSON encoding and decoding for every shared data shape.

All rationals travel as strings ("3/2", "0"), all vectors as integer lists,
and field order is fixed so that identical inputs serialize byte-identically.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import InvalidType
from .l2pair import L2Pair
from .lparam import LanglandsTriple, ParameterSkeleton
from .mupole import INTERNAL, MuSetting, PoleLedger, make_mu_setting
from .orbits import OrbitLabel, ParabolicDatum, WeightedCoweight
from .rootsys import (
    CartanType,
    RootSystem,
    Subsystem,
    build_root_system,
    closed_subsystem,
    root_system_from_cartan,
    subsystem_with_base,
)
from .torus import RootValue, TorusElement


def frac_str(x: Fraction) -> str:
    return str(Fraction(x))


def parse_frac(text: str) -> Fraction:
    return Fraction(str(text))


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- root systems -----------------------------------------------------------

def rootsystem_to_json(sys: RootSystem) -> dict:
    return {
        "type": sys.label,
        "rank": sys.rank,
        "cartan": [list(row) for row in sys.cartan],
        "roots": [list(r) for r in sys.roots],
    }


def rootsystem_from_json(data: dict | str) -> RootSystem:
    if isinstance(data, str):
        return build_root_system(CartanType.parse(data))
    try:
        sys = build_root_system(CartanType.parse(data["type"]))
        if list(map(list, sys.cartan)) == data["cartan"]:
            return sys
    except InvalidType:
        pass
    return root_system_from_cartan(data["cartan"], label=data["type"])


def subsystem_to_json(sub: Subsystem) -> dict:
    return {
        "parent": rootsystem_to_json(sub.parent),
        "members": [list(m) for m in sub.members],
        "sub_base": [list(b) for b in sub.sub_base],
        "sub_cartan": [list(row) for row in sub.sub_cartan],
    }


def subsystem_from_json(data: dict) -> Subsystem:
    parent = rootsystem_from_json(data["parent"])
    members = [tuple(m) for m in data["members"]]
    if "sub_base" in data and data["sub_base"]:
        return subsystem_with_base(parent, members, [tuple(b) for b in data["sub_base"]])
    return closed_subsystem(parent, members)


# -- torus elements ---------------------------------------------------------

def torus_to_json(s: TorusElement) -> dict:
    return {
        "sys": s.sys.label,
        "vals": [{"r": frac_str(v.r), "theta": frac_str(v.theta)} for v in s.vals],
    }


def torus_from_json(data: dict, sys: RootSystem | None = None) -> TorusElement:
    if sys is None:
        sys = build_root_system(CartanType.parse(data["sys"]))
    vals = tuple(RootValue(parse_frac(v["r"]), parse_frac(v["theta"])) for v in data["vals"])
    return TorusElement(sys, vals)


# -- orbit labels -----------------------------------------------------------

def orbitlabel_to_json(label: OrbitLabel) -> dict:
    return {
        "levi": list(label.levi),
        "weight2": list(label.datum.weight2),
        "diagram": [frac_str(x) for x in label.diagram],
    }


# -- pairs ------------------------------------------------------------------

def l2pair_to_json(p: L2Pair) -> dict:
    return {
        "s": torus_to_json(p.s),
        "support_base": [list(b) for b in p.support.sub_base],
        "weight2": list(p.datum.weight2),
    }


def l2pair_from_json(data: dict, sys: RootSystem | None = None) -> L2Pair:
    s = torus_from_json(data["s"], sys)
    base = [tuple(b) for b in data["support_base"]]
    generated = closed_subsystem(s.sys, [b for b in base] + [tuple(-c for c in b) for b in base])
    support = subsystem_with_base(s.sys, generated.members, base)
    datum = ParabolicDatum(support, tuple(data["weight2"]))
    return L2Pair(s=s, support=support, datum=datum)


# -- pole settings ----------------------------------------------------------

def _line_key(label) -> str:
    if label == INTERNAL:
        return INTERNAL
    return ",".join(str(c) for c in label)


def _parse_line(text: str):
    if text == INTERNAL:
        return INTERNAL
    return tuple(int(c) for c in text.split(","))


def musetting_to_json(ms: MuSetting, s: TorusElement | None = None) -> dict:
    out = {
        "ambient": ms.ambient.label,
        "levi": list(ms.levi),
        "cent_members": [list(m) for m in ms.cent.members],
        "line_map": {
            ",".join(str(c) for c in beta): _line_key(ms.line_map[beta])
            for beta in ms.cent.members
        },
    }
    if s is not None:
        out["s"] = torus_to_json(s)
    return out


def musetting_from_json(data: dict) -> tuple[MuSetting, TorusElement | None]:
    ambient = rootsystem_from_json(data["ambient"])
    cent = closed_subsystem(ambient, [tuple(m) for m in data["cent_members"]])
    line_map = None
    if data.get("line_map"):
        line_map = {
            tuple(int(c) for c in key.split(",")): _parse_line(value)
            for key, value in data["line_map"].items()
        }
    ms = make_mu_setting(ambient, data["levi"], cent, line_map)
    s = torus_from_json(data["s"], ambient) if "s" in data and data["s"] else None
    return ms, s


def ledger_to_json(ledger: PoleLedger) -> dict:
    return {
        "entries": [
            {"line": list(e.line), "dq": e.dq, "d1": e.d1, "class": e.cls.name}
            for e in ledger.entries
        ],
        "total": ledger.total,
    }


# -- skeletons --------------------------------------------------------------

def skeleton_to_json(p: ParameterSkeleton) -> dict:
    return {
        "ambient": p.ambient.label,
        "min_levi": list(p.min_levi),
        "cent_members": [list(m) for m in p.cent.members],
        "frob": torus_to_json(p.frob),
        "sl2": None if p.sl2 is None else {"pairings": [frac_str(x) for x in p.sl2.pairings]},
    }


def skeleton_from_json(data: dict) -> ParameterSkeleton:
    ambient = rootsystem_from_json(data["ambient"])
    cent = closed_subsystem(ambient, [tuple(m) for m in data["cent_members"]])
    frob = torus_from_json(data["frob"], ambient)
    sl2 = None
    if data.get("sl2"):
        sl2 = WeightedCoweight(cent, [parse_frac(x) for x in data["sl2"]["pairings"]])
    return ParameterSkeleton(ambient=ambient, min_levi=tuple(data["min_levi"]), cent=cent, frob=frob, sl2=sl2)


def triple_to_json(t: LanglandsTriple) -> dict:
    return {
        "m2": list(t.m2),
        "lambda2": [frac_str(x) for x in t.lambda2],
        "discrete": skeleton_to_json(t.discrete_part),
    }


def triple_from_json(data: dict) -> LanglandsTriple:
    discrete = skeleton_from_json(data["discrete"])
    return LanglandsTriple(
        m2=tuple(data["m2"]),
        lambda2=tuple(parse_frac(x) for x in data["lambda2"]),
        discrete_part=discrete,
    )
