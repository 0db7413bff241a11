"""Parameter skeletons: Frobenius data, discreteness, and the
classification round trip.

A skeleton holds an ambient system, a minimal-Levi node subset, the
centralizer subsystem of the (abstracted) Weil-group image, the torus value
at Frobenius and an optional coweight for the extra rank-one factor.  The
round trip extracts the hyperbolic Levi-central twist of the Frobenius value,
records the nodes it vanishes on, and multiplies it back in on assembly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .errors import (
    BoundViolated,
    MalformedSkeleton,
    NonDominantUnresolvable,
    NotHyperbolicCenter,
    NotQDistinguished,
)
from .l2pair import VerifyResult, construct_l2_pair, verify_l2_pair
from .mupole import make_mu_setting, center_rank_check
from .orbits import WeightedCoweight, torus_from_coweight
from .rootsys import RootSystem, Subsystem
from .torus import (
    RootValue,
    TorusElement,
    multiply,
    polar_parts,
    restrict_to_subsystem,
    value_on_root,
)


@dataclass(frozen=True)
class ParameterSkeleton:
    """The computable shadow of a discrete-parameter candidate."""

    ambient: RootSystem
    min_levi: tuple[int, ...]
    cent: Subsystem
    frob: TorusElement
    sl2: WeightedCoweight | None = None

    def __post_init__(self):
        object.__setattr__(self, "min_levi", tuple(sorted(set(self.min_levi))))
        if any(i < 0 or i >= self.ambient.rank for i in self.min_levi):
            raise MalformedSkeleton("min_levi indices outside the base")
        if self.cent.parent != self.ambient:
            raise MalformedSkeleton("centralizer subsystem lives on a different system")
        if self.frob.sys != self.ambient:
            raise MalformedSkeleton("frob lives on a different system")
        levi = set(self.min_levi)
        for beta in self.cent.members:
            if all(c == 0 or i in levi for i, c in enumerate(beta)):
                raise MalformedSkeleton(
                    f"centralizer root {beta} lies inside the Levi span"
                )
        if self.sl2 is not None and self.sl2.sub != self.cent:
            raise MalformedSkeleton("the rank-one coweight must live on the centralizer")


@dataclass(frozen=True)
class LanglandsTriple:
    """Tempered-block nodes, strictly twisted coweight data, discrete part."""

    m2: tuple[int, ...]
    lambda2: tuple[Fraction, ...]
    discrete_part: ParameterSkeleton


@dataclass(frozen=True)
class DiscretenessReport:
    rank_ok: bool
    pair_ok: bool
    central_twist_zero: bool
    detail: tuple[str, ...] = ()


def tori_correspond(sys: RootSystem, lam: Sequence) -> TorusElement:
    """The hyperbolic element whose exponent vector is the given coordinates."""
    vals = tuple(RootValue(Fraction(x), Fraction(0)) for x in lam)
    return TorusElement(sys, vals)


def frobenius_split(s: TorusElement) -> tuple[TorusElement, TorusElement]:
    """(unramified hyperbolic part, finite-order compact part)."""
    s_v, s_c = polar_parts(s)
    return s_v, s_c


def _central_split(
    sys: RootSystem, levi: Sequence[int], r_vector: Sequence[Fraction]
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Split a pairing vector into Levi-coroot-span and Levi-central parts."""
    idx = sorted(levi)
    k = len(idx)
    if k == 0:
        zero = tuple(Fraction(0) for _ in r_vector)
        return zero, tuple(Fraction(x) for x in r_vector)
    # Coefficients x on the Levi simple coroots reproducing the pairings on
    # Levi nodes: sum_j x_j cartan[idx_j][idx_i] = r[idx_i].
    aug = [
        [Fraction(sys.cartan[idx[j]][idx[i]]) for j in range(k)] + [Fraction(r_vector[idx[i]])]
        for i in range(k)
    ]
    for col in range(k):
        pivot = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    x = [aug[i][k] for i in range(k)]
    internal = tuple(
        sum((x[j] * sys.cartan[idx[j]][i] for j in range(k)), Fraction(0))
        for i in range(sys.rank)
    )
    central = tuple(Fraction(r_vector[i]) - internal[i] for i in range(sys.rank))
    return internal, central


def is_discrete(p: ParameterSkeleton) -> tuple[bool, DiscretenessReport]:
    """Rank condition, pair verification, and relative compactness of frob."""
    detail: list[str] = []
    setting = make_mu_setting(p.ambient, p.min_levi, p.cent)
    try:
        rank_ok = center_rank_check(setting)
    except BoundViolated as exc:
        raise MalformedSkeleton(str(exc)) from exc
    if not rank_ok:
        detail.append(
            f"centralizer rank {p.cent.rank} != parabolic rank {p.ambient.rank - len(p.min_levi)}"
        )

    if p.sl2 is not None:
        element = torus_from_coweight(p.sl2)
    else:
        element, _ = polar_parts(restrict_to_subsystem(p.frob, p.cent))
    try:
        pair = construct_l2_pair(element)
        result: VerifyResult = verify_l2_pair(pair)
        pair_ok = result.ok
        detail.extend(result.problems)
    except NotQDistinguished as exc:
        pair_ok = False
        detail.append(str(exc))

    central_twist_zero = all(v.r == 0 for v in p.frob.vals)
    if not central_twist_zero:
        detail.append("frob carries a nonzero hyperbolic part")

    flag = rank_ok and pair_ok and central_twist_zero
    return flag, DiscretenessReport(
        rank_ok=rank_ok,
        pair_ok=pair_ok,
        central_twist_zero=central_twist_zero,
        detail=tuple(detail),
    )


def langlands_decompose(p: ParameterSkeleton) -> LanglandsTriple:
    """Extract the hyperbolic central twist and the tempered-block nodes.

    The hyperbolic part of frob must be Levi-central (the internal component
    belongs to the discrete datum, whose Weil image is relatively compact).
    Compact angles always stay inside the discrete part.
    """
    r_vector = tuple(v.r for v in p.frob.vals)
    internal, central = _central_split(p.ambient, p.min_levi, r_vector)
    if any(x != 0 for x in internal):
        raise NotHyperbolicCenter(
            "the hyperbolic part of frob has a component inside the Levi "
            f"(internal pairings {tuple(str(x) for x in internal)})"
        )
    m2 = tuple(
        sorted(set(p.min_levi) | {i for i in range(p.ambient.rank) if central[i] == 0})
    )
    m2_set = set(m2)
    for beta in p.ambient.roots:
        if all(c == 0 or i in m2_set for i, c in enumerate(beta)):
            continue
        pairing = sum(Fraction(c) * central[i] for i, c in enumerate(beta))
        if pairing == 0:
            raise NonDominantUnresolvable(
                f"direction {beta} outside the tempered block pairs to zero"
            )
    untwisted = TorusElement(
        p.ambient,
        tuple(RootValue(v.r - central[i], v.theta) for i, v in enumerate(p.frob.vals)),
    )
    discrete = replace(p, frob=untwisted)
    return LanglandsTriple(m2=m2, lambda2=central, discrete_part=discrete)


def langlands_assemble(t: LanglandsTriple) -> ParameterSkeleton:
    """Multiply the twist back into the discrete part's Frobenius value."""
    p = t.discrete_part
    twisted = multiply(p.frob, tori_correspond(p.ambient, t.lambda2))
    return replace(p, frob=twisted)
