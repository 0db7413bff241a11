import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qorbits import (
    CartanType,
    DiagramAutomorphism,
    InvalidType,
    NotAnAutomorphism,
    UnrecognizedDiagram,
    build_root_system,
    closed_subsystem,
    dual_system,
    fixed_corank,
    full_subsystem,
    irreducible_components,
    subsystem_with_base,
    weyl_dominantize,
)
from qorbits.rootsys import _identify_component

COUNT_FORMULAS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
}
EXCEPTIONAL_COUNTS = {"G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240}


def test_invalid_types():
    for family, rank in [("E", 5), ("E", 9), ("F", 3), ("G", 3), ("D", 1), ("A", 0), ("H", 2)]:
        with pytest.raises(InvalidType):
            CartanType(family, rank)


@pytest.mark.parametrize("family,rank", [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(1, 5)]
    + [("C", n) for n in range(1, 5)]
    + [("D", n) for n in range(2, 6)])
def test_classical_root_counts(family, rank):
    sys = build_root_system(CartanType(family, rank))
    assert len(sys.roots) == COUNT_FORMULAS[family](rank)
    assert len(sys.positives) * 2 == len(sys.roots)


@pytest.mark.parametrize("label,count", sorted(EXCEPTIONAL_COUNTS.items()))
def test_exceptional_root_counts(label, count):
    sys = build_root_system(label)
    assert len(sys.roots) == count


def test_a1_roots():
    sys = build_root_system("A1")
    assert sys.roots == ((-1,), (1,))


def test_roots_closed_under_negation_and_order():
    for label in ["A3", "B3", "G2", "F4"]:
        sys = build_root_system(label)
        root_set = set(sys.roots)
        assert all(tuple(-c for c in beta) in root_set for beta in sys.roots)
        keys = [(sum(beta), beta) for beta in sys.roots]
        assert keys == sorted(keys)


def test_cartan_matrix_recoverable_from_root_strings():
    # The stored matrix must agree with the string-computed one.
    for label in ["A2", "B2", "C3", "G2", "F4"]:
        sys = build_root_system(label)
        sub = full_subsystem(sys)
        assert sub.sub_cartan == sys.cartan


def test_closed_subsystem_whole_and_empty():
    sys = build_root_system("A3")
    whole = closed_subsystem(sys, sys.roots)
    assert whole.sub_base == sys.base
    empty = closed_subsystem(sys, [])
    assert empty.rank == 0 and empty.members == ()


def test_g2_long_roots_close_to_a2():
    g2 = build_root_system("G2")
    norms = {beta: g2.inner(beta, beta) for beta in g2.roots}
    long_norm = max(norms.values())
    longs = [b for b, n in norms.items() if n == long_norm]
    sub = closed_subsystem(g2, longs)
    assert len(sub.members) == 6
    assert irreducible_components(sub) == [CartanType("A", 2)]


def test_g2_short_roots_are_an_abstract_a2():
    # The short roots are not additively closed (closing them pulls in long
    # roots), but packaged with their own base they form an A2 diagram.
    g2 = build_root_system("G2")
    norms = {beta: g2.inner(beta, beta) for beta in g2.roots}
    long_norm = max(norms.values())
    shorts = [b for b, n in norms.items() if n != long_norm]
    closed = closed_subsystem(g2, shorts)
    assert len(closed.members) == 12  # closure is the whole system
    rebased = subsystem_with_base(g2, shorts, [(1, 0), (1, 1)])
    assert irreducible_components(rebased) == [CartanType("A", 2)]


def test_orthogonal_pair_in_a3():
    a3 = build_root_system("A3")
    sub = closed_subsystem(a3, [(1, 0, 0), (-1, 0, 0), (0, 0, 1), (0, 0, -1)])
    assert irreducible_components(sub) == [CartanType("A", 1), CartanType("A", 1)]


def test_whole_a3_components():
    a3 = build_root_system("A3")
    assert irreducible_components(full_subsystem(a3)) == [CartanType("A", 3)]


def test_identify_rejects_non_diagram():
    with pytest.raises(UnrecognizedDiagram):
        _identify_component(((2, -2), (-2, 2)), [0, 1])


@pytest.mark.parametrize(
    "label,expected",
    [("A2", "A2"), ("A4", "A4"), ("B3", "C3"), ("C3", "B3"), ("G2", "G2"), ("F4", "F4"), ("D4", "D4")],
)
def test_dual_component_types(label, expected):
    sub = full_subsystem(build_root_system(label))
    dual = dual_system(sub)
    comps = irreducible_components(dual)
    assert comps == [CartanType.parse(expected)]


def test_dual_is_involutive_on_components():
    for label in ["A3", "B2", "B3", "C3", "D4", "G2", "F4"]:
        sub = full_subsystem(build_root_system(label))
        twice = dual_system(dual_system(sub))
        assert sorted(map(str, irreducible_components(twice))) == sorted(
            map(str, irreducible_components(sub))
        )


def test_dual_coroot_counts():
    for label in ["B3", "C3", "G2"]:
        sub = full_subsystem(build_root_system(label))
        assert len(dual_system(sub).members) == len(sub.members)


def test_fixed_corank_identity_f4():
    f4 = build_root_system("F4")
    assert fixed_corank(f4, DiagramAutomorphism((0, 1, 2, 3))) == 4


def test_fixed_corank_a2_flip():
    a2 = build_root_system("A2")
    assert fixed_corank(a2, DiagramAutomorphism((1, 0))) == 1


def test_fixed_corank_d4_triality():
    d4 = build_root_system("D4")
    # Outer nodes 0, 2, 3 around the center node 1.
    assert fixed_corank(d4, DiagramAutomorphism((2, 1, 3, 0))) == 2


def test_fixed_corank_rejects_non_automorphism():
    b2 = build_root_system("B2")
    with pytest.raises(NotAnAutomorphism):
        fixed_corank(b2, DiagramAutomorphism((1, 0)))


def test_dominantize_examples():
    a1 = build_root_system("A1")
    dom, length = weyl_dominantize(a1, [Fraction(-2)])
    assert dom == (Fraction(2),) and length == 1
    a2 = build_root_system("A2")
    dom, _ = weyl_dominantize(a2, [Fraction(-1), Fraction(2)])
    assert dom == (Fraction(1), Fraction(1))
    dom, length = weyl_dominantize(a2, [Fraction(3), Fraction(0)])
    assert dom == (Fraction(3), Fraction(0)) and length == 0


@settings(max_examples=60, deadline=None)
@given(
    label=st.sampled_from(["A2", "B2", "G2", "A3", "B3"]),
    data=st.data(),
)
def test_dominantize_reflection_invariance(label, data):
    sys = build_root_system(label)
    pairings = data.draw(
        st.lists(
            st.integers(min_value=-4, max_value=4).map(Fraction),
            min_size=sys.rank,
            max_size=sys.rank,
        )
    )
    i = data.draw(st.integers(min_value=0, max_value=sys.rank - 1))
    reflected = [pairings[j] - pairings[i] * sys.cartan[i][j] for j in range(sys.rank)]
    assert weyl_dominantize(sys, pairings)[0] == weyl_dominantize(sys, reflected)[0]


@settings(max_examples=40, deadline=None)
@given(label=st.sampled_from(["A2", "B2", "A3"]), data=st.data())
def test_closure_idempotent(label, data):
    sys = build_root_system(label)
    positives = list(sys.positives)
    chosen = data.draw(st.lists(st.sampled_from(positives), max_size=4))
    members = set(chosen) | {tuple(-c for c in m) for m in chosen}
    once = closed_subsystem(sys, members)
    twice = closed_subsystem(sys, once.members)
    assert once.members == twice.members and once.sub_base == twice.sub_base


def test_subsystem_coordinates_are_integral():
    b3 = build_root_system("B3")
    sub = full_subsystem(b3)
    for beta in sub.members:
        coords = sub.coord_map[beta]
        assert beta == tuple(
            sum(c * b[i] for c, b in zip(coords, sub.sub_base)) for i in range(b3.rank)
        )
