"""Distinguished parabolic data and the orbit-label enumeration.

A parabolic datum is a subsystem together with the set J of base nodes that
carry weight 2.  The induced weight of a member root is twice the sum of its
coordinates over J.  A datum is distinguished when the number of weight-2
roots equals the rank plus the number of weight-0 roots; enumeration over all
J produces one datum per distinguished-orbit class, and Levi-subset scans
extend this to the full orbit-label table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import RankBoundExceeded, SingularSystem
from .rootsys import (
    Root,
    RootSystem,
    Subsystem,
    closed_subsystem,
    weyl_dominantize,
    weyl_orbit_of_rootset,
)
from .torus import RootValue, TorusElement


@dataclass(frozen=True)
class ParabolicDatum:
    """A subsystem with its weight-2 node set (indices into sub_base)."""

    sub: Subsystem
    weight2: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weight2", tuple(sorted(set(self.weight2))))
        if any(j < 0 or j >= self.sub.rank for j in self.weight2):
            raise ValueError("weight-2 indices outside the sub-base")


def weight_of_root(d: ParabolicDatum, beta: Root) -> int:
    """Twice the sum of the root's coordinates over the weight-2 nodes."""
    coords = d.sub.coord_map[tuple(beta)]
    return 2 * sum(coords[j] for j in d.weight2)


def graded_dims(d: ParabolicDatum) -> tuple[int, int]:
    """(dim0, dim2): weight-0 roots plus the Cartan rank, and weight-2 roots."""
    dim0 = d.sub.rank
    dim2 = 0
    for beta in d.sub.members:
        w = weight_of_root(d, beta)
        if w == 0:
            dim0 += 1
        elif w == 2:
            dim2 += 1
    assert dim0 >= dim2, f"graded dimension inequality violated for {d}"
    return dim0, dim2


def is_distinguished(d: ParabolicDatum) -> bool:
    """Weight-2 count equals rank plus weight-0 count."""
    dim0, dim2 = graded_dims(d)
    return dim2 == dim0


def enumerate_distinguished(sub: Subsystem, rank_bound: int = 8) -> list[ParabolicDatum]:
    """All distinguished weight-2 subsets, in (size, lexicographic) order."""
    n = sub.rank
    if n > rank_bound:
        raise RankBoundExceeded(f"{n} > {rank_bound}: refusing the 2^{n} subset scan")
    found = []
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            d = ParabolicDatum(sub, combo)
            if is_distinguished(d):
                found.append(d)
    return found


@dataclass(frozen=True)
class WeightedCoweight:
    """A rational coweight on a subsystem, stored by its base pairings."""

    sub: Subsystem
    pairings: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairings", tuple(Fraction(p) for p in self.pairings))
        if len(self.pairings) != self.sub.rank:
            raise ValueError("one pairing per sub-base root is required")

    def pairing_with_member(self, beta: Root) -> Fraction:
        coords = self.sub.coord_map[tuple(beta)]
        return sum((Fraction(c) * p for c, p in zip(coords, self.pairings)), Fraction(0))

    @cached_property
    def coroot_coefficients(self) -> tuple[Fraction, ...]:
        """x with H = sum x_j b_j-coroot, solved from the sub-Cartan system."""
        n = self.sub.rank
        c = self.sub.sub_cartan
        aug = [[Fraction(c[j][i]) for j in range(n)] + [self.pairings[i]] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise SingularSystem("sub-Cartan matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return tuple(aug[i][n] for i in range(n))

    def ambient_pairings(self) -> tuple[Fraction, ...]:
        """Pairings of the coweight against the parent base."""
        parent = self.sub.parent
        x = self.coroot_coefficients
        out = []
        for i in range(parent.rank):
            alpha = parent.base[i]
            total = Fraction(0)
            for xj, bj in zip(x, self.sub.sub_base):
                if xj:
                    total += xj * 2 * parent.inner(alpha, bj) / parent.inner(bj, bj)
            out.append(total)
        return tuple(out)


def coweight_from_datum(d: ParabolicDatum) -> WeightedCoweight:
    """The coweight pairing to 2 on weight-2 nodes and 0 elsewhere."""
    pairings = tuple(Fraction(2 if j in d.weight2 else 0) for j in range(d.sub.rank))
    return WeightedCoweight(d.sub, pairings)


def is_distinguished_coweight(w: WeightedCoweight) -> tuple[bool, bool]:
    """(distinguished, even): graded equality at levels 0/2, and no odd pairing."""
    dim0 = w.sub.rank
    dim2 = 0
    even = True
    for beta in w.sub.members:
        p = w.pairing_with_member(beta)
        if p == 0:
            dim0 += 1
        elif p == 2:
            dim2 += 1
        if p.denominator == 1 and int(p) % 2 != 0:
            even = False
    return dim0 == dim2, even


def torus_from_coweight(w: WeightedCoweight) -> TorusElement:
    """The hyperbolic element with r = pairing/2 on each sub-base root."""
    vals = tuple(RootValue(p / 2, Fraction(0)) for p in w.pairings)
    return TorusElement(w.sub.as_root_system, vals)


@dataclass(frozen=True)
class OrbitLabel:
    """One orbit class: Levi subset, datum inside the Levi, dominant diagram."""

    levi: tuple[int, ...]
    datum: ParabolicDatum
    diagram: tuple[Fraction, ...]
    raw: bool = False


def _levi_members(sys: RootSystem, subset: Sequence[int]) -> list[Root]:
    chosen = set(subset)
    return [
        beta
        for beta in sys.roots
        if all(c == 0 or i in chosen for i, c in enumerate(beta))
    ]


def bala_carter(
    sys: RootSystem, *, dedup: bool = True, rank_bound: int = 6, subset_rank_bound: int = 8
) -> list[OrbitLabel]:
    """Orbit labels from distinguished data inside standard Levi subsystems.

    With dedup on, Levi subsets generating Weyl-conjugate subsystems are
    identified by an explicit orbit walk (refused above rank_bound).  With
    dedup off every subset is emitted and labels carry raw=True.
    """
    if dedup and sys.rank > rank_bound:
        raise RankBoundExceeded(
            f"Weyl dedup refused above rank {rank_bound}; pass dedup=False for raw output"
        )
    labels: list[OrbitLabel] = []
    seen: set[frozenset[Root]] = set()
    for size in range(sys.rank + 1):
        for subset in itertools.combinations(range(sys.rank), size):
            members = frozenset(_levi_members(sys, subset))
            if dedup:
                if members in seen:
                    continue
                seen |= weyl_orbit_of_rootset(sys, members, rank_bound=rank_bound)
            levi_sub = closed_subsystem(sys, members)
            for datum in enumerate_distinguished(levi_sub, rank_bound=subset_rank_bound):
                w = coweight_from_datum(datum)
                diagram, _ = weyl_dominantize(sys, w.ambient_pairings())
                labels.append(
                    OrbitLabel(levi=subset, datum=datum, diagram=diagram, raw=not dedup)
                )
    return labels
