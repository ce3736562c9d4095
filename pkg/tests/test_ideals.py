import pytest

from ideal_arrangements.rootsys import build_root_system
from ideal_arrangements.ideals import (Ideal, all_ideal_masks, classical_closed_forms,
                                       count_ideals, enumerate_ideals, height_ideal,
                                       height_partition, ideal_closure, ideal_exponents,
                                       parse_ideal, predicted_counts)


def exponents_by_index(lam):
    """m_i = #{j : lam_j >= s - i + 1}, i = 1..s, with s = lam_1."""
    s = lam[0] if lam else 0
    return sorted(sum(1 for x in lam if x >= s - i + 1) for i in range(1, s + 1))


def test_closure_examples():
    a3 = build_root_system("A3")
    I = ideal_closure(a3, [a3.simple_indices[1]])
    assert sorted(a3.format_root(k) for k in a3.members(I.complement)) == ["001", "100"]
    assert ideal_closure(a3, []).members == 0
    f4 = build_root_system("F4")
    I = parse_ideal(f4, "[0121]")
    comp = {f4.format_root(k) for k in f4.members(I.complement)}
    assert comp == {"1000", "0100", "0010", "0001", "1100", "0110", "0011", "1110",
                    "0120", "0111", "1120", "1111", "1220"}


@pytest.mark.parametrize("name,count", [("A2", 5), ("A4", 42), ("B3", 20), ("D4", 50), ("G2", 8)])
def test_small_counts(name, count):
    assert count_ideals(build_root_system(name)) == count


def test_height_filter_f4():
    assert count_ideals(build_root_system("F4"), "contained_in_It", 5) == 22


@pytest.mark.parametrize("name", ["A5", "B4", "C4", "D5", "G2", "F4", "E6"])
def test_every_ideal_is_upward_closed_and_unique(name):
    rs = build_root_system(name)
    masks = all_ideal_masks(rs)
    assert masks == sorted(set(masks))
    for m in masks:
        I = Ideal(rs, m)
        assert I.is_upward_closed()
        assert ideal_closure(rs, I.generators()).members == m


@pytest.mark.parametrize("name", ["A4", "B4", "C3", "D4", "G2", "F4", "E6"])
def test_exponents_against_indexing_formula(name):
    rs = build_root_system(name)
    for I in enumerate_ideals(rs):
        lam = height_partition(I)
        ex = ideal_exponents(I)
        assert sorted(ex.values) == exponents_by_index(lam)
        assert sum(ex.values) == len(rs.members(I.complement))
        assert all(a >= b for a, b in zip(lam, lam[1:]))
        s = sum(1 for k in rs.simple_indices if I.complement >> k & 1)
        assert (lam[0] if lam else 0) == s
        if I.complement:
            assert min(ex.values) == 1


def test_exponent_examples():
    g2 = build_root_system("G2")
    assert sorted(ideal_exponents(Ideal(g2, 0)).values) == [1, 5]
    f4 = build_root_system("F4")
    assert sorted(ideal_exponents(parse_ideal(f4, "[0121]")).values) == [1, 3, 4, 5]
    assert ideal_exponents(height_ideal(f4, 2)).values == [1, 1, 1, 1]
    assert ideal_exponents(Ideal(f4, f4.full)).values == []


@pytest.mark.parametrize("t,n", [("A", 3), ("B", 3), ("C", 5), ("D", 6)])
def test_closed_forms_match_product_formula(t, n):
    rs = build_root_system(f"{t}{n}")
    assert predicted_counts(rs) == classical_closed_forms(t, n)


def test_b3_strictly_positive():
    rs = build_root_system("B3")
    assert predicted_counts(rs) == {"all": 20, "strictly_positive": 10}
    assert count_ideals(rs, "strictly_positive") == 10


def test_parse_and_serialize():
    f4 = build_root_system("F4")
    I = parse_ideal(f4, "F4:[1120, 0122]")
    # generators are listed in root order (by height, then coordinates)
    assert I.serialize() == "F4:[1120,0122]"
    assert parse_ideal(f4, "[0122,1120]").serialize() == I.serialize()
    assert parse_ideal(f4, I.serialize()) == I
    assert parse_ideal(f4, "I3") == height_ideal(f4, 3)
    assert parse_ideal(f4, "theta").members == 1 << f4.highest
    e6 = build_root_system("E6")
    J = parse_ideal(e6, "[01110(1), 11111(0)]")
    assert len(J.generators()) == 2
    for bad in ["0121", "[01x1]", "[0121,]"]:
        with pytest.raises(ValueError):
            parse_ideal(f4, bad)
