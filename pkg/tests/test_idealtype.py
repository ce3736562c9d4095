import pytest

from ideal_arrangements.rootsys import build_root_system
from ideal_arrangements.ideals import Ideal, enumerate_ideals, height_ideal, ideal_exponents, parse_ideal
from ideal_arrangements.arrangement import from_roots, is_reducible
from ideal_arrangements.idealtype import (arrangement_of_ideal_type, check_condition,
                                          classification_counts, classification_record,
                                          classify_ideal, condition_subsystems,
                                          find_condition_subsystem, height_table,
                                          reduce_via_condition, table_counts_by_height)
from ideal_arrangements import freecert


def parabolic(rs, name):
    return next(p for p in rs.maximal_parabolics() if p.name == name)


def nonzero(xs):
    return sorted(x for x in xs if x)


def test_arrangement_examples():
    rs = build_root_system("D4")
    assert len(arrangement_of_ideal_type(rs, Ideal(rs, rs.full))) == 0
    assert len(arrangement_of_ideal_type(rs, Ideal(rs, 0))) == 12
    assert len(arrangement_of_ideal_type(rs, height_ideal(rs, 4))) == 10


def test_a3_condition_examples():
    rs = build_root_system("A3")
    I = parse_ideal(rs, "[010]")
    good = rs.parabolic([0, 1])
    w = check_condition(rs, I, good)
    assert w is not None and [rs.format_root(k) for k in w.boundary_roots] == ["001"]
    assert check_condition(rs, I, rs.parabolic([0, 2])) is None
    red = reduce_via_condition(rs, I, w)
    assert red.new_exponent == 1
    assert [rs.format_root(k) for k in red.localized.labels] == ["100"]


def test_f4_examples():
    rs = build_root_system("F4")
    I = parse_ideal(rs, "[1120, 0122]")
    w = check_condition(rs, I, parabolic(rs, "C3"))
    assert [rs.format_root(k) for k in w.boundary_roots] == ["1000", "1100", "1110", "1111"]
    J = parse_ideal(rs, "[0121]")
    w = check_condition(rs, J, parabolic(rs, "B3"))
    red = reduce_via_condition(rs, J, w)
    # four boundary roots: the new exponent is 4, the localization keeps 1, 3, 5
    assert red.new_exponent == 4
    arr = arrangement_of_ideal_type(rs, J)
    assert arr.rank_of(red.modular_flat) == arr.rank - 1


def test_find_condition_examples():
    e6 = build_root_system("E6")
    assert find_condition_subsystem(e6, parse_ideal(e6, "[01110(1)]")) is None
    e7 = build_root_system("E7")
    w = check_condition(e7, parse_ideal(e7, "[001110(0)]"), parabolic(e7, "E6"))
    assert [e7.format_root(k) for k in w.boundary_roots] == ["000001(0)", "000011(0)", "000111(0)"]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_type_d_two_roots_of_equal_height(n):
    rs = build_root_system(f"D{n}")
    d = rs.parabolic(range(1, n))
    plus, minus = rs.parse_root(f"e1+e{n}"), rs.parse_root(f"e1-e{n}")
    assert rs.heights[plus] == rs.heights[minus] == n - 1
    for I in enumerate_ideals(rs):
        if I.complement >> plus & 1 and I.complement >> minus & 1:
            assert check_condition(rs, I, d) is None


@pytest.mark.parametrize("name", ["A4", "B4", "C4", "D4", "D5", "G2", "F4", "E6"])
def test_every_witness_reduces(name):
    rs = build_root_system(name)
    for I in enumerate_ideals(rs):
        for w in condition_subsystems(rs, I):
            # the dependence roots always lie in the complement
            assert all(I.complement >> g & 1 for g in w.dependence_triples.values())
            red = reduce_via_condition(rs, I, w)
            sub_exps = ideal_exponents(Ideal(rs, rs.full & ~(I.complement & w.phi0.positive_roots_mask)))
            assert sorted(ideal_exponents(I).values) == sorted(sub_exps.values + [red.new_exponent])


@pytest.mark.parametrize("name", ["A4", "B4", "C4", "D4", "G2", "F4"])
def test_fast_reducibility_agrees_with_matroid(name):
    rs = build_root_system(name)
    for I in enumerate_ideals(rs):
        tag = classify_ideal(rs, I).tag
        assert (tag == "reducible") == is_reducible(arrangement_of_ideal_type(rs, I))


@pytest.mark.parametrize("name,total,classified", [("G2", 8, 8), ("F4", 105, 85), ("E6", 833, 771)])
def test_classification_counts(name, total, classified):
    c = classification_counts(build_root_system(name))
    assert (c["all"], c["classified"]) == (total, classified)


def test_classification_record_schema():
    rs = build_root_system("F4")
    rec = classification_record(rs, parse_ideal(rs, "[0121]"))
    assert set(rec) == {"type", "rank", "ideal", "tag", "phi0", "boundary", "exponents"}
    assert rec["tag"] == "condition_met" and rec["phi0"] == "B3"
    assert rec["boundary"] == ["0001", "0011", "0111", "1111"]
    theta = classification_record(rs, parse_ideal(rs, "theta"))
    assert theta["tag"] == "penultimate_theta"
    assert classification_record(rs, Ideal(rs, 0))["tag"] == "empty_ideal"


def test_tables():
    rs = build_root_system("F4")
    assert list(table_counts_by_height(rs).values())[:5] == [105, 66, 48, 36, 22]
    rows = dict(height_table(rs, 3))
    assert ("B3", ["0001", "0011"]) in rows["0111"]


# Lifting along the modular coatom keeps every certified status

def _statuses(arr, fs, fac):
    return (freecert.supersolvable(arr), freecert.inductively_factored(arr, search=fac),
            freecert.inductively_free(arr, search=fs))


@pytest.mark.parametrize("name", ["A4", "B4", "C4", "D4", "G2", "F4"])
def test_status_is_inherited_from_the_localization(census, name):
    rs = build_root_system(name)
    fs, fac = freecert.FreenessSearch(), freecert.FactorizationSearch()
    seen = 0
    for m, verdicts in census(name).items():
        I = Ideal(rs, m)
        for w in condition_subsystems(rs, I):
            red = reduce_via_condition(rs, I, w)
            local = _statuses(red.localized, fs, fac)
            assert [v.status for v in local] == [v.status for v in verdicts]
            for big, small in zip(verdicts, local):
                if big.status == "certified_yes":
                    assert nonzero(big.exponents) == nonzero(small.exponents + [red.new_exponent])
            seen += 1
    assert seen > 0


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "G2"])
def test_classical_ideals_supersolvable(name):
    rs = build_root_system(name)
    for I in enumerate_ideals(rs):
        v = freecert.supersolvable(arrangement_of_ideal_type(rs, I))
        assert v.status == "certified_yes"
        assert nonzero(v.exponents) == sorted(ideal_exponents(I).values)
        freecert.verify_certificate(v.certificate)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3",
                                  "C4", "D4", "G2", "F4"])
def test_penultimate_ideal_free(name):
    rs = build_root_system(name)
    I = parse_ideal(rs, "theta")
    v = freecert.inductively_free(arrangement_of_ideal_type(rs, I))
    assert v.status == "certified_yes"
    assert nonzero(v.exponents) == sorted(ideal_exponents(I).values)


def _contains(I, J):
    return J.members & ~I.members == 0


@pytest.mark.parametrize("name", ["D4", "D5", "D6"])
def test_large_ideals_positive(name):
    rs = build_root_system(name)
    I3, I4 = height_ideal(rs, 3), height_ideal(rs, 4)
    fac = freecert.FactorizationSearch()
    for I in enumerate_ideals(rs):
        arr = arrangement_of_ideal_type(rs, I)
        if _contains(I, I3):
            assert freecert.supersolvable(arr).status == "certified_yes"
        if _contains(I, I4):
            assert freecert.inductively_factored(arr, search=fac).status == "certified_yes"


def test_small_ideals_negative_d4(census):
    rs = build_root_system("D4")
    I4, I5 = height_ideal(rs, 4), height_ideal(rs, 5)
    for m, (ss, fac, _) in census("D4").items():
        I = Ideal(rs, m)
        if _contains(I4, I):
            assert ss.status == "certified_no"
        if _contains(I5, I):
            assert fac.status == "certified_no"


@pytest.mark.parametrize("name,step", [("D5", 1), ("E6", 15)])
def test_small_ideals_not_supersolvable(name, step):
    rs = build_root_system(name)
    small = list(enumerate_ideals(rs, "contained_in_It", 4))
    for I in small[::step]:
        assert freecert.supersolvable(arrangement_of_ideal_type(rs, I)).status == "certified_no"


def test_e6_large_ideals_sampled():
    rs = build_root_system("E6")
    I3 = height_ideal(rs, 3)
    big = [I for I in enumerate_ideals(rs) if _contains(I, I3)]
    for I in big[::10]:
        assert freecert.supersolvable(arrangement_of_ideal_type(rs, I)).status == "certified_yes"
