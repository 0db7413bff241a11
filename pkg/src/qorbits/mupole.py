"""Pole-order ledgers over relative-root lines and the rank criterion.

A setting is an ambient system, a Levi node subset, a centralizer subsystem
and a map sending each non-internal centralizer root to the line of its
restriction to the Levi-central directions.  Lines aggregate both signs, so
for each line the q-eigenspace and 1-eigenspace dimensions differ by -2, 1
or 0; the ledger total over all reduced lines is the pole order.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Mapping, Sequence

from .errors import BoundViolated, IllegalDifference, InvalidSetting, UnknownLine
from .rootsys import (
    CartanType,
    Root,
    RootSystem,
    Subsystem,
    dual_system,
    irreducible_components,
)
from .torus import ONE, Q_VALUE, TorusElement, is_q_distinguished, restrict_to_subsystem, value_on_root

INTERNAL = "internal"

LineLabel = tuple[int, ...]


def _primitive_direction(vec: Sequence[Fraction]) -> LineLabel:
    denom = 1
    for x in vec:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def _is_internal(beta: Root, levi: frozenset[int]) -> bool:
    return all(c == 0 or i in levi for i, c in enumerate(beta))


@dataclass(frozen=True)
class MuSetting:
    """Ambient system, Levi subset, centralizer subsystem and line data."""

    ambient: RootSystem
    levi: tuple[int, ...]
    cent: Subsystem
    line_map: Mapping[Root, LineLabel | str]

    def __post_init__(self):
        object.__setattr__(self, "levi", tuple(sorted(set(self.levi))))
        if any(i < 0 or i >= self.ambient.rank for i in self.levi):
            raise InvalidSetting("levi indices outside the base")
        if self.cent.parent != self.ambient:
            raise InvalidSetting("centralizer subsystem lives on a different system")

    @cached_property
    def levi_set(self) -> frozenset[int]:
        return frozenset(self.levi)

    @cached_property
    def lines(self) -> tuple[LineLabel, ...]:
        """Every reduced relative line of the ambient system, sorted."""
        labels = {
            _project_direction(self.ambient, self.levi_set, beta)
            for beta in self.ambient.roots
            if not _is_internal(beta, self.levi_set)
        }
        return tuple(sorted(labels))

    @cached_property
    def members_by_line(self) -> dict[LineLabel, tuple[Root, ...]]:
        out: dict[LineLabel, list[Root]] = {label: [] for label in self.lines}
        for beta in self.cent.members:
            label = self.line_map[beta]
            if label == INTERNAL:
                continue
            out[label].append(beta)
        return {k: tuple(v) for k, v in out.items()}


def _project_direction(sys: RootSystem, levi: frozenset[int], beta: Root) -> LineLabel:
    """Primitive direction of the projection away from the Levi span."""
    idx = sorted(levi)
    if not idx:
        return _primitive_direction([Fraction(c) for c in beta])
    # Solve the Gram system for the orthogonal projection onto the Levi span.
    k = len(idx)
    gram = [[sys.inner(sys.base[a], sys.base[b]) for b in idx] for a in idx]
    rhs = [sys.inner(beta, sys.base[a]) for a in idx]
    aug = [gram[i] + [rhs[i]] for i in range(k)]
    for col in range(k):
        pivot = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    coeffs = {idx[i]: aug[i][k] for i in range(k)}
    proj = [Fraction(c) - coeffs.get(i, Fraction(0)) for i, c in enumerate(beta)]
    return _primitive_direction(proj)


def derive_line_map(
    ambient: RootSystem, levi: Sequence[int], cent: Subsystem
) -> dict[Root, LineLabel | str]:
    """Assign each centralizer root its relative line (or the internal tag)."""
    levi_set = frozenset(levi)
    out: dict[Root, LineLabel | str] = {}
    for beta in cent.members:
        if _is_internal(beta, levi_set):
            out[beta] = INTERNAL
        else:
            out[beta] = _project_direction(ambient, levi_set, beta)
    return out


def make_mu_setting(
    ambient: RootSystem,
    levi: Sequence[int],
    cent: Subsystem,
    line_map: Mapping[Root, LineLabel | str] | None = None,
) -> MuSetting:
    """Build a setting, deriving and/or validating the line map."""
    derived = derive_line_map(ambient, levi, cent)
    if line_map is None:
        line_map = derived
    else:
        for beta in cent.members:
            if beta not in line_map:
                raise InvalidSetting(f"line map is not total: {beta} missing")
            if tuple(line_map[beta]) != derived[beta] and line_map[beta] != derived[beta]:
                raise InvalidSetting(
                    f"{beta} mapped to {line_map[beta]} but lies on {derived[beta]}"
                )
        line_map = {beta: derived[beta] for beta in cent.members}
    return MuSetting(ambient=ambient, levi=tuple(levi), cent=cent, line_map=dict(line_map))


class LineClass(enum.Enum):
    """Classification of one relative line by its q-vs-1 dimension gap."""

    ZERO = -2
    POLE = 1
    REGULAR = 0

    @property
    def order(self) -> int:
        return self.value


def line_dims(ms: MuSetting, line: LineLabel, s: TorusElement) -> tuple[int, int]:
    """(dim q, dim 1) of the adjoint action on the line's root spaces."""
    label = tuple(line)
    if label not in ms.members_by_line:
        raise UnknownLine(f"{label} is not a relative line of this setting")
    dq = d1 = 0
    for gamma in ms.members_by_line[label]:
        val = value_on_root(s, gamma)
        if val == Q_VALUE:
            dq += 1
        elif val == ONE:
            d1 += 1
    return dq, d1


def classify_line(dq: int, d1: int) -> LineClass:
    """Map the dimension difference to its class; other values are input bugs."""
    diff = dq - d1
    try:
        return LineClass(diff)
    except ValueError:
        raise IllegalDifference(
            f"difference {diff} (dq={dq}, d1={d1}) is outside {{-2, 1, 0}}"
        ) from None


@dataclass(frozen=True)
class LedgerEntry:
    line: LineLabel
    dq: int
    d1: int
    cls: LineClass


@dataclass(frozen=True)
class PoleLedger:
    entries: tuple[LedgerEntry, ...]
    total: int


def total_order(ms: MuSetting, s: TorusElement) -> PoleLedger:
    """Classify every reduced relative line and sum the pole orders."""
    entries = []
    total = 0
    for line in ms.lines:
        dq, d1 = line_dims(ms, line, s)
        cls = classify_line(dq, d1)
        entries.append(LedgerEntry(line=line, dq=dq, d1=d1, cls=cls))
        total += cls.order
    return PoleLedger(entries=tuple(entries), total=total)


@dataclass(frozen=True)
class SquareIntegrabilityReport:
    rank_cent: int
    parabolic_rank: int
    rank_ok: bool
    qdist: bool
    qdist_margin: int
    ledger_total: int
    flag: bool


def square_integrable(ms: MuSetting, s: TorusElement) -> tuple[bool, SquareIntegrabilityReport]:
    """Rank equality plus the q-distinguished test on the centralizer."""
    parabolic_rank = ms.ambient.rank - len(ms.levi)
    rank_ok = ms.cent.rank == parabolic_rank
    restricted = restrict_to_subsystem(s, ms.cent)
    qdist, margin = is_q_distinguished(restricted)
    ledger = total_order(ms, s)
    flag = rank_ok and qdist
    report = SquareIntegrabilityReport(
        rank_cent=ms.cent.rank,
        parabolic_rank=parabolic_rank,
        rank_ok=rank_ok,
        qdist=qdist,
        qdist_margin=margin,
        ledger_total=ledger.total,
        flag=flag,
    )
    return flag, report


def center_rank_check(ms: MuSetting) -> bool:
    """Centralizer rank equals the parabolic rank; exceeding it is an error."""
    parabolic_rank = ms.ambient.rank - len(ms.levi)
    if ms.cent.rank > parabolic_rank:
        raise BoundViolated(
            f"centralizer rank {ms.cent.rank} exceeds the parabolic rank {parabolic_rank}"
        )
    return ms.cent.rank == parabolic_rank


@dataclass(frozen=True)
class TypeMatchVerdict:
    ok: bool
    matched: tuple[tuple[CartanType, CartanType, str], ...]
    unmatched_left: tuple[CartanType, ...]
    unmatched_right: tuple[CartanType, ...]


def _bc_key(t: CartanType) -> tuple[str, int]:
    return ("BC" if t.family in ("B", "C") else t.family, t.rank)


def type_match(cent_a: Subsystem, sigma0: Subsystem) -> TypeMatchVerdict:
    """Compare components against the dual's, allowing B_n and C_n to stand in
    for each other."""
    left = irreducible_components(cent_a)
    right = irreducible_components(dual_system(sigma0))
    remaining = list(right)
    matched: list[tuple[CartanType, CartanType, str]] = []
    unmatched_left: list[CartanType] = []
    for t in left:
        exact = next((u for u in remaining if u == t), None)
        if exact is not None:
            remaining.remove(exact)
            matched.append((t, exact, "exact"))
            continue
        swapped = next((u for u in remaining if _bc_key(u) == _bc_key(t)), None)
        if swapped is not None:
            remaining.remove(swapped)
            matched.append((t, swapped, "bc-clause"))
            continue
        unmatched_left.append(t)
    return TypeMatchVerdict(
        ok=not unmatched_left and not remaining,
        matched=tuple(matched),
        unmatched_left=tuple(unmatched_left),
        unmatched_right=tuple(remaining),
    )
