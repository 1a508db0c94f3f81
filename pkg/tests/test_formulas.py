from fractions import Fraction
from math import comb

import pytest

from sumdiff.enumeration import TypeDescriptor, count_by_size
from sumdiff.formulas import (
    FormulaKind,
    boundary_bounds,
    lemma_Tn,
    lemma_type_counts,
    probe_divisibility,
    size3_dominance_ratio,
    theorem_size2,
    theorem_size3_odd,
)
from sumdiff.groups import dicyclic


def test_size2_values():
    assert theorem_size2(2).as_tuple() == (0, 0, 28)
    assert theorem_size2(3).as_tuple() == (24, 0, 42)
    assert theorem_size2(4).as_tuple() == (32, 0, 88)


def test_size2_sums_to_all_pairs():
    for n in range(2, 21):
        assert theorem_size2(n).total == comb(4 * n, 2)


def test_size2_matches_enumeration_small():
    for n in range(2, 7):
        assert theorem_size2(n) == count_by_size(dicyclic(n), 2)


def test_size2_rejects_small_n():
    with pytest.raises(ValueError):
        theorem_size2(1)


def test_size3_values():
    assert theorem_size3_odd(3).as_tuple() == (24, 48, 148)
    assert theorem_size3_odd(5).as_tuple() == (400, 200, 540)
    assert theorem_size3_odd(9).as_tuple() == (3744, 1116, 2280)


def test_size3_sums_to_all_triples():
    for n in range(3, 22, 2):
        assert theorem_size3_odd(n).total == comb(4 * n, 3)


def test_size3_rejects_even_n():
    with pytest.raises(ValueError):
        theorem_size3_odd(4)
    with pytest.raises(ValueError):
        theorem_size3_odd(1)


def test_Tn_values():
    assert lemma_Tn(3).value == 8
    assert lemma_Tn(5).value == 40
    assert lemma_Tn(9).value == 132
    assert lemma_Tn(15).value == 400
    assert lemma_Tn(5).kind is FormulaKind.EXACT


def test_Tn_rejects_even():
    with pytest.raises(ValueError):
        lemma_Tn(6)


def test_type_counts_at_n3():
    cases = {
        (3, 0): (0, 12, 8),
        (2, 1): (12, 12, 66),
        (1, 2): (12, 24, 54),
        (0, 3): (0, 0, 20),
    }
    for sig, expected in cases.items():
        assert lemma_type_counts(3, TypeDescriptor(*sig)).as_tuple() == expected


def test_type_counts_sum_to_size3():
    sigs = [(3, 0), (2, 1), (1, 2), (0, 3)]
    for n in range(3, 16, 2):
        total = None
        for sig in sigs:
            c = lemma_type_counts(n, TypeDescriptor(*sig))
            total = c if total is None else total + c
        assert total == theorem_size3_odd(n)


def test_type_counts_reject_bad_signature():
    with pytest.raises(ValueError):
        lemma_type_counts(3, TypeDescriptor(2, 2))
    with pytest.raises(ValueError):
        lemma_type_counts(4, TypeDescriptor(2, 1))


def test_boundary_bounds_even():
    b = boundary_bounds(6)
    assert (b.mstd.value, b.mdts.value, b.balanced.value) == (364, 14, 910)
    assert b.mstd.kind is FormulaKind.LOWER_BOUND
    assert b.mdts.kind is FormulaKind.LOWER_BOUND
    assert boundary_bounds(8).mstd.value == 1980


def test_boundary_bounds_odd():
    b = boundary_bounds(7)
    assert (b.mstd.value, b.mdts.value, b.balanced.value) == (864, 0, 26432)
    assert b.mdts.kind is FormulaKind.EXACT


def test_boundary_bounds_reject_small_n():
    with pytest.raises(ValueError):
        boundary_bounds(5)


def test_dominance_ratio():
    assert size3_dominance_ratio(5) == 2
    assert size3_dominance_ratio(15) == Fraction(175, 41)
    # approaches 6 from below
    seen = [size3_dominance_ratio(n) for n in (5, 15, 35, 75, 155)]
    assert all(r < 6 for r in seen)
    assert seen == sorted(seen)
    assert abs(float(size3_dominance_ratio(100001)) - 6) < 1e-3


def test_probe_rows_match_enumeration():
    rows = probe_divisibility([2, 3], [2, 3])
    assert len(rows) == 4
    by_key = {(p.n, p.size): p for p in rows}
    assert by_key[(3, 3)].mstd == 24
    assert by_key[(3, 3)].mstd_div_4 is True
    assert by_key[(3, 3)].mstd_div_4n is True
    assert by_key[(2, 3)].excess_sign == -1
    assert by_key[(2, 2)].excess_sign == 0
    for p in rows:
        expected = count_by_size(dicyclic(p.n), p.size)
        assert (p.mstd, p.mdts, p.balanced) == expected.as_tuple()
        assert p.all_even == (
            p.mstd % 2 == 0 and p.mdts % 2 == 0 and p.balanced % 2 == 0
        )
