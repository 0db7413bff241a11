"""Construction and verification of torus/orbit pairs with q-twist.

The construction follows the polar decomposition: the compact part cuts out a
support subsystem, a base of the support is chosen so that the hyperbolic
part is nonnegative, and the weight-2 nodes are those where the element takes
the value q.  The resulting datum must be distinguished and the support must
have full rank; failures carry the step that broke.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonTrivialCompactPart, NotQDistinguished
from .orbits import (
    ParabolicDatum,
    WeightedCoweight,
    coweight_from_datum,
    is_distinguished,
)
from .rootsys import Root, Subsystem, _base_key, subsystem_with_base
from .torus import (
    ONE,
    Q_VALUE,
    TorusElement,
    centralizer_subsystem,
    eigenspace_dim,
    is_q_distinguished,
    polar_parts,
    value_on_root,
)


@dataclass(frozen=True)
class L2Pair:
    """A torus element with its orbit descriptor on the compact-centralizer."""

    s: TorusElement
    support: Subsystem
    datum: ParabolicDatum


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class SL2Flags:
    admissible: bool
    discrete: bool


def _positivity_key(s_v: TorusElement, beta: Root) -> tuple:
    # r-functional first, generic lexicographic perturbation as tie-break.
    return (value_on_root(s_v, beta).r, *beta)


def _tuple_positive(key: tuple) -> bool:
    for x in key:
        if x != 0:
            return x > 0
    return False


def _dims_message(s: TorusElement) -> tuple[str, int, int]:
    dq = eigenspace_dim(s, Q_VALUE)
    d1 = eigenspace_dim(s, ONE)
    rel = "<" if dq < d1 else (">" if dq > d1 else "=")
    return f"dim g(q)={dq} {rel} dim g(1)={d1}", dq, d1


def construct_l2_pair(s: TorusElement) -> L2Pair:
    """Build the pair attached to a torus element, or raise NotQDistinguished."""
    s_v, s_c = polar_parts(s)
    support0 = centralizer_subsystem(s_c)

    positives = [m for m in support0.members if _tuple_positive(_positivity_key(s_v, m))]
    pos_set = set(positives)
    base = tuple(
        sorted(
            (
                m
                for m in positives
                if not any(tuple(a - b for a, b in zip(m, g)) in pos_set for g in positives if g != m)
            ),
            key=_base_key,
        )
    )
    support = subsystem_with_base(s.sys, support0.members, base)

    weight2 = []
    for j, b in enumerate(base):
        val = value_on_root(s, b)
        if val.is_q:
            weight2.append(j)
        elif not val.is_one:
            msg, dq, d1 = _dims_message(s)
            raise NotQDistinguished(
                f"{msg} (support base root {b} has value {val})",
                step="bad base value",
                dim_q=dq,
                dim_one=d1,
            )

    if support.rank != s.sys.rank:
        msg, dq, d1 = _dims_message(s)
        raise NotQDistinguished(
            f"{msg} (support rank {support.rank} < ambient rank {s.sys.rank})",
            step="rank deficit",
            dim_q=dq,
            dim_one=d1,
        )

    datum = ParabolicDatum(support, tuple(weight2))
    if not is_distinguished(datum):
        msg, dq, d1 = _dims_message(s)
        raise NotQDistinguished(
            f"{msg} (datum J={tuple(weight2)} is not distinguished in the support)",
            step="non-distinguished datum",
            dim_q=dq,
            dim_one=d1,
        )
    return L2Pair(s=s, support=support, datum=datum)


def verify_l2_pair(p: L2Pair) -> VerifyResult:
    """Re-check every pair invariant; never raises."""
    problems: list[str] = []
    for j, b in enumerate(p.support.sub_base):
        val = value_on_root(p.s, b)
        if j in p.datum.weight2:
            if not val.is_q:
                problems.append(f"weight-2 base root {b} has value {val}, expected q")
        elif not val.is_one:
            problems.append(f"weight-0 base root {b} has value {val}, expected 1")
    if p.support.rank != p.s.sys.rank:
        problems.append(
            f"support rank {p.support.rank} differs from ambient rank {p.s.sys.rank}"
        )
    try:
        if not is_distinguished(p.datum):
            problems.append("datum is not distinguished in the support")
    except (KeyError, ValueError) as exc:
        problems.append(f"datum is structurally inconsistent: {exc}")
    flag, _margin = is_q_distinguished(p.s)
    if not flag:
        problems.append("element is not q-distinguished")
    return VerifyResult(ok=not problems, problems=tuple(problems))


def discrete_sl2_parameter(s: TorusElement) -> tuple[WeightedCoweight, SL2Flags]:
    """The coweight of the pair's datum for a purely hyperbolic element."""
    if any(v.theta != 0 for v in s.vals):
        raise NonTrivialCompactPart("the element carries nonzero compact angles")
    pair = construct_l2_pair(s)
    return coweight_from_datum(pair.datum), SL2Flags(admissible=True, discrete=True)
