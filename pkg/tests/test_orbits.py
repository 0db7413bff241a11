import itertools
import json
from fractions import Fraction
from pathlib import Path

import pytest

from qorbits import (
    ParabolicDatum,
    RankBoundExceeded,
    bala_carter,
    build_root_system,
    coweight_from_datum,
    enumerate_distinguished,
    full_subsystem,
    graded_dims,
    identity_element,
    is_distinguished,
    is_distinguished_coweight,
    is_q_distinguished,
    torus_from_coweight,
    weight_of_root,
)

GOLDEN = Path(__file__).parent / "golden"


def datum(label, weight2):
    return ParabolicDatum(full_subsystem(build_root_system(label)), weight2)


def test_weight_of_root():
    d0 = datum("A2", ())
    assert all(weight_of_root(d0, beta) == 0 for beta in d0.sub.members)
    d1 = datum("A1", (0,))
    assert weight_of_root(d1, (1,)) == 2
    assert weight_of_root(d1, (-1,)) == -2
    d2 = datum("A2", (0,))
    assert weight_of_root(d2, (1, 1)) == 2


def test_graded_dims():
    assert graded_dims(datum("A1", (0,))) == (1, 1)
    assert graded_dims(datum("A2", (0,))) == (4, 2)
    assert graded_dims(datum("G2", (0, 1))) == (2, 2)


def test_is_distinguished():
    assert is_distinguished(datum("A1", (0,)))
    assert not is_distinguished(datum("A2", (0,)))
    assert is_distinguished(datum("A2", (0, 1)))


def test_type_a_has_unique_distinguished_datum():
    for n in range(1, 9):
        data = enumerate_distinguished(full_subsystem(build_root_system(f"A{n}")))
        assert len(data) == 1
        assert data[0].weight2 == tuple(range(n))


def test_distinguished_counts_match_golden():
    golden = json.loads((GOLDEN / "distinguished_counts.json").read_text())
    for label in ["G2", "F4", "B2", "B3", "B4", "C3", "D4"]:
        data = enumerate_distinguished(full_subsystem(build_root_system(label)))
        assert len(data) == golden[label], label


def test_rank_bound():
    with pytest.raises(RankBoundExceeded):
        enumerate_distinguished(full_subsystem(build_root_system("E8")), rank_bound=7)


def test_coweight_from_datum():
    w = coweight_from_datum(datum("A1", (0,)))
    assert w.pairings == (Fraction(2),)
    assert w.coroot_coefficients == (Fraction(1),)  # H is the simple coroot
    w2 = coweight_from_datum(datum("A2", (0, 1)))
    assert w2.pairings == (Fraction(2), Fraction(2))
    g2 = coweight_from_datum(datum("G2", (1,)))
    assert g2.pairings == (Fraction(0), Fraction(2))


def test_coweight_pairings_extend_to_members():
    d = datum("G2", (1,))
    w = coweight_from_datum(d)
    for beta in d.sub.members:
        assert w.pairing_with_member(beta) == weight_of_root(d, beta)


def test_is_distinguished_coweight():
    from qorbits import WeightedCoweight

    a1 = full_subsystem(build_root_system("A1"))
    zero = WeightedCoweight(a1, [Fraction(0)])
    assert is_distinguished_coweight(zero) == (False, True)
    coroot = WeightedCoweight(a1, [Fraction(2)])
    assert is_distinguished_coweight(coroot) == (True, True)
    a2 = full_subsystem(build_root_system("A2"))
    reg = WeightedCoweight(a2, [Fraction(2), Fraction(2)])
    assert is_distinguished_coweight(reg) == (True, True)


def test_torus_from_coweight():
    from qorbits import WeightedCoweight

    a2 = full_subsystem(build_root_system("A2"))
    zero = WeightedCoweight(a2, [0, 0])
    assert torus_from_coweight(zero) == identity_element(a2.as_root_system)
    reg = WeightedCoweight(a2, [2, 2])
    assert [v.r for v in torus_from_coweight(reg).vals] == [1, 1]


def test_distinguished_data_yield_even_distinguished_coweights():
    for label in ["A3", "B3", "C3", "D4", "G2", "F4"]:
        sub = full_subsystem(build_root_system(label))
        for d in enumerate_distinguished(sub):
            w = coweight_from_datum(d)
            dist, even = is_distinguished_coweight(w)
            assert dist and even, (label, d.weight2)
            flag, margin = is_q_distinguished(torus_from_coweight(w))
            assert flag and margin == 0, (label, d.weight2)


def test_graded_inequality_exhaustive_small():
    for label in ["A2", "B2", "G2", "B3"]:
        sub = full_subsystem(build_root_system(label))
        for size in range(sub.rank + 1):
            for combo in itertools.combinations(range(sub.rank), size):
                graded_dims(ParabolicDatum(sub, combo))  # asserts internally


def test_bala_carter_counts_match_golden():
    golden = json.loads((GOLDEN / "orbit_counts.json").read_text())
    for label, expected in golden.items():
        labels = bala_carter(build_root_system(label))
        assert len(labels) == expected, label


def test_bala_carter_a1():
    labels = bala_carter(build_root_system("A1"))
    assert [(lab.levi, lab.diagram) for lab in labels] == [
        ((), (Fraction(0),)),
        ((0,), (Fraction(2),)),
    ]


def test_bala_carter_a2_diagrams():
    labels = bala_carter(build_root_system("A2"))
    diagrams = {lab.diagram for lab in labels}
    assert diagrams == {
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(1)),
        (Fraction(2), Fraction(2)),
    }


def test_bala_carter_g2_diagrams():
    labels = bala_carter(build_root_system("G2"))
    diagrams = {lab.diagram for lab in labels}
    assert diagrams == {
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(1)),
        (Fraction(0), Fraction(2)),
        (Fraction(2), Fraction(2)),
    }


def test_bala_carter_diagram_entries_in_range():
    for label in ["A3", "B3", "C3", "D4", "F4"]:
        for lab in bala_carter(build_root_system(label)):
            assert all(x in (0, 1, 2) for x in lab.diagram), (label, lab.diagram)


def test_bala_carter_raw_mode_flags_and_dedup_bound():
    labels = bala_carter(build_root_system("A2"), dedup=False)
    assert all(lab.raw for lab in labels)
    assert len(labels) == 4  # both singleton Levis kept
    with pytest.raises(RankBoundExceeded):
        bala_carter(build_root_system("A3"), rank_bound=2)
