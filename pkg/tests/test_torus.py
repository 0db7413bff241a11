import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qorbits import (
    ONE,
    Q_VALUE,
    CartanType,
    RootValue,
    build_root_system,
    centralizer_subsystem,
    eigenspace_dim,
    identity_element,
    irreducible_components,
    is_q_distinguished,
    multiply,
    polar_parts,
    torus_element,
    value_on_root,
)
from qorbits.torus import apply_simple_reflection, weyl_orbit

half = Fraction(1, 2)


def test_root_value_reduction_and_arithmetic():
    v = RootValue(Fraction(1), Fraction(5, 2))
    assert v.theta == half
    assert (v + v).theta == 0 and (v + v).r == 2
    assert (-v).theta == half
    assert v.scale(3) == RootValue(3, Fraction(3, 2))


@settings(max_examples=50, deadline=None)
@given(
    st.tuples(st.integers(-6, 6), st.fractions(min_value=-2, max_value=2)),
    st.tuples(st.integers(-6, 6), st.fractions(min_value=-2, max_value=2)),
)
def test_root_value_group_laws(a, b):
    x = RootValue(Fraction(a[0]), a[1])
    y = RootValue(Fraction(b[0]), b[1])
    assert x + y == y + x
    assert (x + y) - y == x
    assert x + ONE == x


def test_value_on_root_a1():
    a1 = build_root_system("A1")
    s = torus_element(a1, [1])
    assert value_on_root(s, (1,)) == Q_VALUE
    assert value_on_root(s, (-1,)) == RootValue(-1, 0)


def test_value_on_root_additivity():
    a2 = build_root_system("A2")
    s = torus_element(a2, [1, 1])
    assert value_on_root(s, (1, 1)) == RootValue(2, 0)


def test_polar_parts():
    a1 = build_root_system("A1")
    s = torus_element(a1, [1], [half])
    s_v, s_c = polar_parts(s)
    assert s_v.vals == (RootValue(1, 0),)
    assert s_c.vals == (RootValue(0, half),)
    assert multiply(s_c, s_v) == s
    assert polar_parts(s_v) == (s_v, identity_element(a1))
    ident = identity_element(a1)
    assert polar_parts(ident) == (ident, ident)


def test_eigenspace_dims():
    a1 = build_root_system("A1")
    assert eigenspace_dim(identity_element(a1), ONE) == 3
    st_elem = torus_element(a1, [1])
    assert eigenspace_dim(st_elem, Q_VALUE) == 1
    assert eigenspace_dim(st_elem, ONE) == 1
    a2 = build_root_system("A2")
    s = torus_element(a2, [1, 1])
    assert eigenspace_dim(s, Q_VALUE) == 2
    assert eigenspace_dim(s, RootValue(2, 0)) == 1
    assert eigenspace_dim(s, ONE) == 2


def test_eigenspace_partition():
    # Distinct values partition roots; adding the Cartan recovers the total.
    b2 = build_root_system("B2")
    s = torus_element(b2, [1, half], [0, half])
    values = {value_on_root(s, beta) for beta in b2.roots}
    total = sum(eigenspace_dim(s, lam) for lam in values)
    if ONE not in values:
        total += eigenspace_dim(s, ONE)
    assert total == len(b2.roots) + b2.rank


def test_q_distinguished_examples():
    a1 = build_root_system("A1")
    assert is_q_distinguished(identity_element(a1)) == (False, -3)
    assert is_q_distinguished(torus_element(a1, [1])) == (True, 0)
    g2 = build_root_system("G2")
    assert is_q_distinguished(torus_element(g2, [1, 1])) == (True, 0)


def test_centralizer_subsystem():
    a2 = build_root_system("A2")
    assert len(centralizer_subsystem(identity_element(a2)).members) == 6
    s = torus_element(a2, [0, 0], [half, 0])
    sub = centralizer_subsystem(s)
    assert set(sub.members) == {(0, 1), (0, -1)}
    assert irreducible_components(sub) == [CartanType("A", 1)]
    a1 = build_root_system("A1")
    third = torus_element(a1, [0], [Fraction(1, 3)])
    assert centralizer_subsystem(third).members == ()


def test_centralizer_of_compact_contains_full_one_values():
    b2 = build_root_system("B2")
    s = torus_element(b2, [1, 0], [0, half])
    _, s_c = polar_parts(s)
    central = set(centralizer_subsystem(s_c).members)
    exact_ones = {beta for beta in b2.roots if value_on_root(s, beta).is_one}
    assert exact_ones <= central


GRID_R = [Fraction(0), half, Fraction(1), Fraction(2)]
GRID_T = [Fraction(0), half]


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2", "A3"])
def test_weyl_invariance_of_q_distinguished(label):
    sys = build_root_system(label)
    n = sys.rank
    sample = list(itertools.product(GRID_R, repeat=n))[:: max(1, 4**n // 12)]
    for rs in sample:
        for ths in (tuple([Fraction(0)] * n), tuple([half] * n)):
            s = torus_element(sys, rs, ths)
            verdict = is_q_distinguished(s)
            for vals in weyl_orbit(s):
                image = type(s)(sys, vals)
                assert is_q_distinguished(image) == verdict


def test_reflection_formula_matches_root_action():
    b2 = build_root_system("B2")
    s = torus_element(b2, [1, half], [0, half])
    for i in range(2):
        image = apply_simple_reflection(s, i)
        for beta in b2.roots:
            assert value_on_root(image, beta) == value_on_root(s, b2.reflect(beta, i))
