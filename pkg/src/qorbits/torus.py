"""Exact semisimple torus elements over a formal base q.

A root value q^r * e^(2*pi*i*theta) is stored as the pair (r, theta) with r
rational and theta rational mod 1.  q is treated as a fixed transcendental
real > 1, so a value equals 1 exactly when r = 0 and theta = 0, and equals q
exactly when r = 1 and theta = 0.  Elements live on the root lattice
(adjoint convention): they are determined by their values on the base.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .rootsys import Root, RootSystem, Subsystem, closed_subsystem


@dataclass(frozen=True)
class RootValue:
    """The value q^r * e^(2*pi*i*theta); addition mirrors multiplication."""

    r: Fraction
    theta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "theta", Fraction(self.theta) % 1)

    def __add__(self, other: "RootValue") -> "RootValue":
        return RootValue(self.r + other.r, self.theta + other.theta)

    def __neg__(self) -> "RootValue":
        return RootValue(-self.r, -self.theta)

    def __sub__(self, other: "RootValue") -> "RootValue":
        return self + (-other)

    def scale(self, k: int) -> "RootValue":
        return RootValue(self.r * k, self.theta * k)

    @property
    def is_one(self) -> bool:
        return self.r == 0 and self.theta == 0

    @property
    def is_q(self) -> bool:
        return self.r == 1 and self.theta == 0

    def __str__(self) -> str:
        return f"q^{self.r}*e(2pi*{self.theta})" if self.theta else f"q^{self.r}"


ONE = RootValue(Fraction(0), Fraction(0))
Q_VALUE = RootValue(Fraction(1), Fraction(0))


@dataclass(frozen=True)
class TorusElement:
    """A semisimple element given by one RootValue per base root."""

    sys: RootSystem
    vals: tuple[RootValue, ...]

    def __post_init__(self):
        if len(self.vals) != self.sys.rank:
            raise ValueError("one value per base root is required")


def torus_element(sys: RootSystem, rs: Sequence, thetas: Sequence | None = None) -> TorusElement:
    """Convenience constructor from separate exponent and angle vectors."""
    if thetas is None:
        thetas = [0] * sys.rank
    vals = tuple(RootValue(Fraction(r), Fraction(t)) for r, t in zip(rs, thetas, strict=True))
    return TorusElement(sys, vals)


def identity_element(sys: RootSystem) -> TorusElement:
    return torus_element(sys, [0] * sys.rank)


def value_on_root(s: TorusElement, beta: Sequence[int]) -> RootValue:
    """Multiplicative extension of the base values to the root lattice."""
    r = Fraction(0)
    theta = Fraction(0)
    for coeff, val in zip(beta, s.vals):
        if coeff:
            r += coeff * val.r
            theta += coeff * val.theta
    return RootValue(r, theta)


def polar_parts(s: TorusElement) -> tuple[TorusElement, TorusElement]:
    """(hyperbolic, compact): exponents-only and angles-only factors."""
    s_v = TorusElement(s.sys, tuple(RootValue(v.r, Fraction(0)) for v in s.vals))
    s_c = TorusElement(s.sys, tuple(RootValue(Fraction(0), v.theta) for v in s.vals))
    return s_v, s_c


def multiply(a: TorusElement, b: TorusElement) -> TorusElement:
    if a.sys != b.sys:
        raise ValueError("elements live on different systems")
    return TorusElement(a.sys, tuple(x + y for x, y in zip(a.vals, b.vals)))


def invert(s: TorusElement) -> TorusElement:
    return TorusElement(s.sys, tuple(-v for v in s.vals))


def eigenspace_dim(s: TorusElement, lam: RootValue) -> int:
    """Adjoint eigenspace dimension on the derived algebra.

    Counts roots whose value equals lam; the Cartan contributes the rank when
    lam = 1.
    """
    count = sum(1 for beta in s.sys.roots if value_on_root(s, beta) == lam)
    if lam.is_one:
        count += s.sys.rank
    return count


def is_q_distinguished(s: TorusElement) -> tuple[bool, int]:
    """(flag, margin) with flag = dim g(q) >= dim g(1), margin the difference.

    A true flag forces margin 0; a positive margin would be a bug.
    """
    dq = eigenspace_dim(s, Q_VALUE)
    d1 = eigenspace_dim(s, ONE)
    margin = dq - d1
    flag = margin >= 0
    assert not flag or margin == 0, f"q-eigenspace exceeds 1-eigenspace by {margin}"
    return flag, margin


def centralizer_subsystem(s_part: TorusElement) -> Subsystem:
    """Subsystem on the roots taking the exact value 1 on the element."""
    members = [beta for beta in s_part.sys.roots if value_on_root(s_part, beta).is_one]
    return closed_subsystem(s_part.sys, members)


def apply_simple_reflection(s: TorusElement, i: int) -> TorusElement:
    """Weyl action on coordinates: the new value on alpha_j is the old value
    on s_i(alpha_j)."""
    c = s.sys.cartan
    vals = tuple(s.vals[j] - s.vals[i].scale(c[i][j]) for j in range(s.sys.rank))
    return TorusElement(s.sys, vals)


def weyl_orbit(s: TorusElement, rank_bound: int = 6) -> set[tuple[RootValue, ...]]:
    """All coordinate tuples in the Weyl orbit of the element."""
    from .errors import RankBoundExceeded

    if s.sys.rank > rank_bound:
        raise RankBoundExceeded(f"orbit walk refused above rank {rank_bound}")
    seen = {s.vals}
    frontier = [s]
    while frontier:
        new = []
        for elem in frontier:
            for i in range(s.sys.rank):
                image = apply_simple_reflection(elem, i)
                if image.vals not in seen:
                    seen.add(image.vals)
                    new.append(image)
        frontier = new
    return seen


def restrict_to_subsystem(s: TorusElement, sub: Subsystem) -> TorusElement:
    """View the element inside a subsystem, on the subsystem's own base."""
    vals = tuple(value_on_root(s, b) for b in sub.sub_base)
    return TorusElement(sub.as_root_system, vals)


def compact_order(s: TorusElement) -> int:
    """Multiplicative order of the compact part (lcm of angle denominators)."""
    return lcm(1, *(v.theta.denominator for v in s.vals))
