"""Finite root systems and closed subsystems in exact integer arithmetic.

A root is a tuple of integers: its coordinates over the simple roots.  All
geometry (pairings, the symmetrizer, coroots) derives from the Cartan matrix
with Fraction arithmetic, so there is no floating point anywhere.  The Cartan
convention is ``cartan[i][j] = <alpha_j, alpha_i-coroot>``, i.e. row i holds
the pairings of every simple root against the i-th simple coroot.

Root order is (height, lexicographic) and is part of the observable contract.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidType, NotAnAutomorphism, RankBoundExceeded, UnrecognizedDiagram

Root = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 1,
    "C": lambda n: n >= 1,
    "D": lambda n: n >= 2,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class CartanType:
    """A classical family letter with a rank, e.g. ``CartanType("F", 4)``."""

    family: str
    rank: int

    def __post_init__(self):
        rule = _RANK_RULES.get(self.family)
        if rule is None:
            raise InvalidType(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not rule(self.rank):
            raise InvalidType(f"rank {self.rank} is invalid for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidType(f"cannot parse Cartan type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    def cartan_matrix(self) -> Matrix:
        """The integer Cartan matrix in the package's node ordering."""
        n = self.rank
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

        def chain(upto: int) -> None:
            for i in range(upto):
                a[i][i + 1] = a[i + 1][i] = -1

        fam = self.family
        if fam == "A":
            chain(n - 1)
        elif fam in ("B", "C"):
            chain(n - 2)
            if n >= 2:
                # B: last node short; C: last node long.
                if fam == "B":
                    a[n - 2][n - 1], a[n - 1][n - 2] = -1, -2
                else:
                    a[n - 2][n - 1], a[n - 1][n - 2] = -2, -1
        elif fam == "D":
            chain(n - 2)
            if n >= 3:
                a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        elif fam == "E":
            chain(n - 2)
            a[n - 4][n - 1] = a[n - 1][n - 4] = -1
        elif fam == "F":
            a[0][1] = a[1][0] = -1
            a[1][2], a[2][1] = -1, -2
            a[2][3] = a[3][2] = -1
        elif fam == "G":
            a[0][1], a[1][0] = -3, -1
        return tuple(tuple(row) for row in a)


def _root_key(beta: Root) -> tuple:
    return (sum(beta), beta)


def _base_key(beta: Root) -> tuple:
    # Height, then leftmost support, then lex: unit vectors sort in index
    # order, so the full system's sub-base coincides with its base.
    first = next((i for i, c in enumerate(beta) if c != 0), len(beta))
    return (sum(beta), first, beta)


def _is_positive_definite(cartan: Sequence[Sequence[int]]) -> bool:
    # Sylvester criterion over exact rationals; rules out affine matrices,
    # whose root generation would not terminate.
    n = len(cartan)
    m = [[Fraction(cartan[i][j]) for j in range(n)] for i in range(n)]
    for k in range(n):
        sub = [row[: k + 1] for row in m[: k + 1]]
        if _det(sub) <= 0:
            return False
    return True


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return det


def _generate_positive_roots(cartan: Matrix) -> list[Root]:
    """Closure generation: extend root strings upward until a fixed point."""
    n = len(cartan)
    if n == 0:
        return []
    base = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    known: set[Root] = set(base)
    frontier: list[Root] = list(base)
    while frontier:
        new: list[Root] = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(cartan[i][k] * beta[k] for k in range(n))
                # Depth of the alpha_i-string below beta among known roots.
                p = 0
                down = tuple(b - (1 if k == i else 0) for k, b in enumerate(beta))
                while down in known:
                    p += 1
                    down = tuple(b - (1 if k == i else 0) for k, b in enumerate(down))
                if p - pairing >= 1:
                    up = tuple(b + (1 if k == i else 0) for k, b in enumerate(beta))
                    if up not in known:
                        known.add(up)
                        new.append(up)
        frontier = new
    return sorted(known, key=_root_key)


@dataclass(frozen=True)
class RootSystem:
    """An immutable root system: label, rank, Cartan matrix and all roots."""

    label: str
    rank: int
    cartan: Matrix
    roots: tuple[Root, ...]

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    @cached_property
    def base(self) -> tuple[Root, ...]:
        return tuple(tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def positive_indices(self) -> tuple[int, ...]:
        return tuple(i for i, beta in enumerate(self.roots) if sum(beta) > 0)

    @cached_property
    def positives(self) -> tuple[Root, ...]:
        return tuple(self.roots[i] for i in self.positive_indices)

    @cached_property
    def symmetrizer(self) -> tuple[Fraction, ...]:
        """d_i with d_i * cartan[i][j] symmetric; d = 1 on each component seed."""
        n = self.rank
        d: list[Fraction | None] = [None] * n
        for seed in range(n):
            if d[seed] is not None:
                continue
            d[seed] = Fraction(1)
            stack = [seed]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if self.cartan[i][j] != 0 and i != j and d[j] is None:
                        d[j] = d[i] * Fraction(self.cartan[i][j], self.cartan[j][i])
                        stack.append(j)
        return tuple(d)  # type: ignore[arg-type]

    def pairing(self, beta: Sequence, i: int):
        """<beta, alpha_i-coroot>; integer on roots, Fraction on rational vectors."""
        return sum(self.cartan[i][k] * beta[k] for k in range(self.rank))

    def inner(self, beta: Sequence, gamma: Sequence) -> Fraction:
        d = self.symmetrizer
        total = Fraction(0)
        for i in range(self.rank):
            if beta[i]:
                for j in range(self.rank):
                    if gamma[j]:
                        total += Fraction(beta[i]) * Fraction(gamma[j]) * d[i] * self.cartan[i][j]
        return total

    def coroot_coords(self, beta: Root) -> Root:
        """Coordinates of 2*beta/(beta,beta) over the simple coroots."""
        d = self.symmetrizer
        half_norm = self.inner(beta, beta) / 2
        coords = tuple(Fraction(c) * d[i] / half_norm for i, c in enumerate(beta))
        assert all(c.denominator == 1 for c in coords)
        return tuple(int(c) for c in coords)

    def reflect(self, beta: Root, i: int) -> Root:
        """Simple reflection s_i applied to a root."""
        k = self.pairing(beta, i)
        return tuple(b - k * (1 if j == i else 0) for j, b in enumerate(beta))

    def __repr__(self) -> str:
        return f"RootSystem({self.label}, {len(self.roots)} roots)"


def root_system_from_cartan(cartan: Sequence[Sequence[int]], label: str | None = None) -> RootSystem:
    """Generate a root system from any valid finite-type Cartan matrix."""
    n = len(cartan)
    matrix: Matrix = tuple(tuple(int(x) for x in row) for row in cartan)
    for i in range(n):
        if matrix[i][i] != 2:
            raise InvalidType("Cartan diagonal must be 2")
        for j in range(n):
            if i != j and (matrix[i][j] > 0 or (matrix[i][j] == 0) != (matrix[j][i] == 0)):
                raise InvalidType("invalid off-diagonal Cartan entries")
    if n and not _is_positive_definite(matrix):
        raise InvalidType("Cartan matrix is not of finite type")
    positives = _generate_positive_roots(matrix)
    roots = sorted(
        itertools.chain(positives, (tuple(-c for c in b) for b in positives)), key=_root_key
    )
    sys = RootSystem(label or "?", n, matrix, tuple(roots))
    if label is None:
        comp = "x".join(str(t) for t in _component_types(matrix, list(range(n)))) or "0"
        sys = RootSystem(comp, n, matrix, tuple(roots))
    return sys


def build_root_system(t: CartanType | str) -> RootSystem:
    """The full root system of a Cartan type, in (height, lex) root order."""
    if isinstance(t, str):
        t = CartanType.parse(t)
    return root_system_from_cartan(t.cartan_matrix(), label=str(t))


@dataclass(frozen=True)
class Subsystem:
    """A closed subsystem of a parent system, with its own base and Cartan matrix.

    ``sub_base`` consists of the indecomposable positives of the member set;
    positivity is inherited from the parent unless the subsystem was rebased
    explicitly (see ``subsystem_with_base``).
    """

    parent: RootSystem
    members: tuple[Root, ...]
    sub_base: tuple[Root, ...]
    sub_cartan: Matrix

    @property
    def rank(self) -> int:
        return len(self.sub_base)

    @cached_property
    def member_set(self) -> frozenset[Root]:
        return frozenset(self.members)

    @cached_property
    def _solver(self) -> list[list[Fraction]]:
        # Row-reduced augmented solver for coordinates over sub_base.
        return _row_reduce_basis(self.sub_base, self.parent.rank)

    def coords(self, beta: Root) -> tuple[int, ...]:
        """Integer coordinates of a member root over sub_base."""
        sol = _solve_in_basis(self._solver, self.sub_base, beta)
        if sol is None:
            raise ValueError(f"{beta} is not in the span of the sub-base")
        assert all(c.denominator == 1 for c in sol)
        return tuple(int(c) for c in sol)

    @cached_property
    def coord_map(self) -> dict[Root, tuple[int, ...]]:
        return {beta: self.coords(beta) for beta in self.members}

    @cached_property
    def as_root_system(self) -> RootSystem:
        """The subsystem as an abstract root system on its own base."""
        sys = root_system_from_cartan(self.sub_cartan)
        assert set(sys.roots) == {self.coord_map[m] for m in self.members}
        return sys

    def __repr__(self) -> str:
        return f"Subsystem(rank {self.rank}, {len(self.members)} roots of {self.parent.label})"


def _row_reduce_basis(basis: Sequence[Root], dim: int) -> list[list[Fraction]]:
    # Plain coefficient rows (basis vectors as columns); solved per query.
    k = len(basis)
    return [[Fraction(basis[j][i]) for j in range(k)] for i in range(dim)]


def _solve_in_basis(rows: list[list[Fraction]], basis: Sequence[Root], beta: Root):
    k = len(basis)
    if k == 0:
        return () if all(c == 0 for c in beta) else None
    aug = [row[:k] + [Fraction(beta[i])] for i, row in enumerate(rows)]
    n = len(aug)
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(k):
        pivot = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
    # Consistency: zero rows must have zero rhs.
    for i in range(r, n):
        if aug[i][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for row, col in pivots:
        sol[col] = aug[row][k]
    return tuple(sol)


def _close_under_addition(sys: RootSystem, members: Iterable[Root]) -> frozenset[Root]:
    current = set(members)
    grew = True
    while grew:
        grew = False
        for a, b in itertools.combinations(sorted(current, key=_root_key), 2):
            s = tuple(x + y for x, y in zip(a, b))
            if s in sys.root_set and s not in current:
                current.add(s)
                grew = True
    return frozenset(current)


def _string_cartan(member_set: frozenset[Root], base: Sequence[Root]) -> Matrix:
    """Cartan matrix of a base from root-string lengths inside the member set."""

    def entry(bi: Root, bj: Root) -> int:
        if bi == bj:
            return 2
        p = q = 0
        down = tuple(a - b for a, b in zip(bj, bi))
        while down in member_set:
            p += 1
            down = tuple(a - b for a, b in zip(down, bi))
        up = tuple(a + b for a, b in zip(bj, bi))
        while up in member_set:
            q += 1
            up = tuple(a + b for a, b in zip(up, bi))
        return p - q

    return tuple(tuple(entry(bi, bj) for bj in base) for bi in base)


def _indecomposable_positives(member_set: frozenset[Root], is_positive) -> tuple[Root, ...]:
    positives = [m for m in member_set if is_positive(m)]
    pos_set = set(positives)
    base = []
    for m in positives:
        decomposable = any(
            tuple(a - b for a, b in zip(m, g)) in pos_set for g in positives if g != m
        )
        if not decomposable:
            base.append(m)
    return tuple(sorted(base, key=_base_key))


def closed_subsystem(sys: RootSystem, members: Iterable[Root]) -> Subsystem:
    """Close a negation-closed root subset under addition and package it."""
    member_list = {tuple(int(c) for c in m) for m in members}
    for m in member_list:
        if m not in sys.root_set:
            raise ValueError(f"{m} is not a root of {sys.label}")
        if tuple(-c for c in m) not in member_list:
            raise ValueError("member set is not closed under negation")
    closed = _close_under_addition(sys, member_list)
    base = _indecomposable_positives(closed, lambda m: sum(m) > 0)
    sub = Subsystem(
        parent=sys,
        members=tuple(sorted(closed, key=_root_key)),
        sub_base=base,
        sub_cartan=_string_cartan(closed, base),
    )
    assert len(base) <= sys.rank
    return sub


def subsystem_with_base(sys: RootSystem, members: Iterable[Root], base: Sequence[Root]) -> Subsystem:
    """Package an already-closed member set with an explicitly chosen base."""
    closed = frozenset(tuple(int(c) for c in m) for m in members)
    base_t = tuple(tuple(int(c) for c in b) for b in base)
    return Subsystem(
        parent=sys,
        members=tuple(sorted(closed, key=_root_key)),
        sub_base=base_t,
        sub_cartan=_string_cartan(closed, base_t),
    )


def full_subsystem(sys: RootSystem) -> Subsystem:
    """The whole system viewed as a subsystem of itself."""
    return closed_subsystem(sys, sys.roots)


def _component_types(cartan: Matrix, nodes: list[int]) -> list[CartanType]:
    """Split nodes into connected components and identify each diagram."""
    remaining = set(nodes)
    comps: list[list[int]] = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        stack = [seed]
        while stack:
            i = stack.pop()
            for j in remaining - comp:
                if cartan[i][j] != 0:
                    comp.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
        remaining -= comp
    return [_identify_component(cartan, comp) for comp in comps]


def _identify_component(cartan: Matrix, nodes: list[int]) -> CartanType:
    n = len(nodes)
    if n == 1:
        return CartanType("A", 1)
    edges = []
    for a, b in itertools.combinations(nodes, 2):
        if cartan[a][b] != 0:
            edges.append((a, b, cartan[a][b] * cartan[b][a]))
    degree = {v: 0 for v in nodes}
    for a, b, _ in edges:
        degree[a] += 1
        degree[b] += 1
    if len(edges) != n - 1:
        raise UnrecognizedDiagram("diagram has a cycle")
    multi = [e for e in edges if e[2] > 1]

    if multi:
        if len(multi) > 1 or max(degree.values()) > 2:
            raise UnrecognizedDiagram("multiple marked edges or branch with a marked edge")
        a, b, m = multi[0]
        if m == 3:
            if n != 2:
                raise UnrecognizedDiagram("triple edge outside rank 2")
            return CartanType("G", 2)
        if m != 2:
            raise UnrecognizedDiagram(f"edge weight {m}")
        if n == 2:
            return CartanType("B", 2)  # B2 and C2 coincide up to node order
        if degree[a] == 2 and degree[b] == 2:
            if n != 4:
                raise UnrecognizedDiagram("interior double edge outside rank 4")
            return CartanType("F", 4)
        leaf, inner = (a, b) if degree[a] == 1 else (b, a)
        # Shorter root has the -2 in its own row.
        return CartanType("B" if cartan[leaf][inner] == -2 else "C", n)

    branch = [v for v in nodes if degree[v] >= 3]
    if not branch:
        return CartanType("A", n)
    if len(branch) > 1 or degree[branch[0]] > 3:
        raise UnrecognizedDiagram("more than one branch point")
    # Arm lengths from the branch node.
    b0 = branch[0]
    arms = []
    for nb in (v for v in nodes if cartan[b0][v] != 0 and v != b0):
        length, prev, cur = 1, b0, nb
        while True:
            nxt = [v for v in nodes if v not in (prev,) and v != cur and cartan[cur][v] != 0]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return CartanType("D", n)
    if arms == [1, 2, 2]:
        return CartanType("E", 6)
    if arms == [1, 2, 3]:
        return CartanType("E", 7)
    if arms == [1, 2, 4]:
        return CartanType("E", 8)
    raise UnrecognizedDiagram(f"arm profile {arms}")


def irreducible_components(sub: Subsystem) -> list[CartanType]:
    """Cartan types of the connected components of the sub-base diagram."""
    return _component_types(sub.sub_cartan, list(range(sub.rank)))


def dual_system(sub: Subsystem) -> Subsystem:
    """The subsystem on coroots; component types swap B_n and C_n."""
    parent = sub.parent
    dual_cartan = tuple(tuple(parent.cartan[j][i] for j in range(parent.rank)) for i in range(parent.rank))
    dual_parent = root_system_from_cartan(dual_cartan)
    dual_members = [parent.coroot_coords(m) for m in sub.members]
    return closed_subsystem(dual_parent, dual_members)


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A permutation of base indices intended to preserve the Cartan matrix."""

    permutation: tuple[int, ...]

    def preserves(self, sys: RootSystem) -> bool:
        p = self.permutation
        if sorted(p) != list(range(sys.rank)):
            return False
        return all(
            sys.cartan[p[i]][p[j]] == sys.cartan[i][j]
            for i in range(sys.rank)
            for j in range(sys.rank)
        )

    def cycle_count(self) -> int:
        seen: set[int] = set()
        cycles = 0
        for start in range(len(self.permutation)):
            if start in seen:
                continue
            cycles += 1
            i = start
            while i not in seen:
                seen.add(i)
                i = self.permutation[i]
        return cycles


def fixed_corank(sys: RootSystem, a: DiagramAutomorphism) -> int:
    """Dimension of the fixed space of the permutation action on the base span."""
    if not a.preserves(sys):
        raise NotAnAutomorphism(f"{a.permutation} does not preserve the Cartan matrix of {sys.label}")
    return a.cycle_count()


def weyl_dominantize(sys: RootSystem, pairings: Sequence) -> tuple[tuple[Fraction, ...], int]:
    """Reflect a coweight (given by its base pairings) into the dominant chamber.

    Returns the unique dominant representative and the number of simple
    reflections applied.
    """
    p = [Fraction(x) for x in pairings]
    if len(p) != sys.rank:
        raise ValueError("pairing vector length must equal the rank")
    word = 0
    while True:
        i = next((k for k in range(sys.rank) if p[k] < 0), None)
        if i is None:
            return tuple(p), word
        pi = p[i]
        p = [p[j] - pi * sys.cartan[i][j] for j in range(sys.rank)]
        word += 1


def weyl_orbit_of_rootset(sys: RootSystem, rootset: frozenset[Root], rank_bound: int = 6) -> set[frozenset[Root]]:
    """All Weyl images of a set of roots, by breadth-first reflection walk."""
    if sys.rank > rank_bound:
        raise RankBoundExceeded(f"orbit walk refused above rank {rank_bound}")
    start = frozenset(rootset)
    orbit = {start}
    frontier = [start]
    while frontier:
        new = []
        for state in frontier:
            for i in range(sys.rank):
                image = frozenset(sys.reflect(beta, i) for beta in state)
                if image not in orbit:
                    orbit.add(image)
                    new.append(image)
        frontier = new
    return orbit
