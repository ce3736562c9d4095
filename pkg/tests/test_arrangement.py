from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from ideal_arrangements.rootsys import build_root_system
from ideal_arrangements.ideals import Ideal, enumerate_ideals, parse_ideal
from ideal_arrangements.arrangement import (Arrangement, LatticeBudgetError, char_poly,
                                            components, decompose_product, from_roots,
                                            is_modular, is_modular_coatom, is_reducible,
                                            localization, region_count, restriction)


def boolean(n):
    return Arrangement(n, [tuple(int(i == j) for j in range(n)) for i in range(n)])


def poly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def test_from_roots_examples():
    a3 = build_root_system("A3")
    arr = from_roots(a3, (1 << a3.simple_indices[0]) | (1 << a3.simple_indices[2]))
    assert len(arr) == 2 and arr.rank == 2
    assert len(from_roots(a3, 0)) == 0
    d4 = build_root_system("D4")
    full = from_roots(d4, d4.full)
    assert len(full) == 12 and full.rank == 4


def test_parallel_normals_collapse():
    arr = Arrangement(2, [(1, 0), (-2, 0), (1, 1)])
    assert len(arr) == 2


def test_boolean_lattice():
    for n in range(1, 6):
        lat = boolean(n).lattice()
        assert len(lat) == 2 ** n
        assert region_count(boolean(n)) == 2 ** n


def test_rank_two_lattice():
    arr = Arrangement(2, [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2)])
    lat = arr.lattice()
    assert lat.counts() == [1, 5, 1]
    assert lat.mu[lat.top] == 4


def test_braid_arrangement_char_poly():
    a3 = build_root_system("A3")
    arr = from_roots(a3, a3.full)
    # (t-1)(t-2)(t-3)
    assert char_poly(arr) == [-6, 11, -6, 1]


def test_empty_char_poly():
    arr = Arrangement(3, [])
    assert char_poly(arr) == [0, 0, 0, 1]
    assert region_count(arr) == 1


@pytest.mark.parametrize("name", ["A2", "A3", "B3", "G2", "D4", "F4", "B4"])
def test_regions_of_weyl_arrangement(name):
    rs = build_root_system(name)
    assert region_count(from_roots(rs, rs.full)) == rs.weyl_order()


def test_lattice_budget():
    rs = build_root_system("D4")
    with pytest.raises(LatticeBudgetError):
        from_roots(rs, rs.full).lattice(budget=20)


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "D4"])
def test_deletion_restriction(name):
    rs = build_root_system(name)
    for I in enumerate_ideals(rs):
        arr = from_roots(rs, I.complement)
        chi = char_poly(arr)
        for h in range(len(arr)):
            lhs = poly_sub(char_poly(arr.delete(h)), char_poly(restriction(arr, 1 << h)))
            assert chi == lhs[:len(chi)] and not any(lhs[len(chi):])


def _fingerprint(arr):
    lat = arr.lattice()
    return lat.counts(), char_poly(arr)


def test_modular_coatom_restriction_isomorphism():
    # a modular coatom X has the localization at X isomorphic to A^H for H outside X
    for name in ["A3", "B3", "D4"]:
        rs = build_root_system(name)
        for I in enumerate_ideals(rs):
            arr = from_roots(rs, I.complement)
            if arr.rank < 2:
                continue
            lat = arr.lattice()
            for X in lat.levels[arr.rank - 1]:
                if not is_modular_coatom(arr, X, lat.pair_flats()):
                    continue
                assert lat.is_modular(X)
                loc = arr.subarrangement(X)
                for h in range(len(arr)):
                    if not X >> h & 1:
                        res = restriction(arr, 1 << h)
                        lc, lchi = _fingerprint(loc)
                        rc, rchi = _fingerprint(res)
                        assert lc[:len(rc)] == rc
                        # the localization carries one extra factor of t
                        assert lchi[1:] == rchi


def test_localization_is_an_interval():
    rs = build_root_system("D4")
    arr = from_roots(rs, rs.full)
    lat = arr.lattice()
    for X in lat.levels[2] + lat.levels[3]:
        loc = localization(arr, X)
        below = [Y for Y in lat.flats() if Y & ~X == 0]
        assert len(loc.lattice()) == len(below)


def test_localization_examples():
    a3 = build_root_system("A3")
    I = parse_ideal(a3, "[010]")
    arr = from_roots(a3, I.complement)
    assert len(localization(arr, 1)) == 1
    assert len(localization(arr, arr.full)) == len(arr)


def test_modularity_extremes():
    rs = build_root_system("B3")
    arr = from_roots(rs, rs.full)
    assert is_modular(arr, 0)
    assert is_modular(arr, arr.full)
    plane = Arrangement(2, [(1, 0), (0, 1), (1, 1)])
    for h in range(3):
        assert is_modular(plane, 1 << h)


def test_products():
    assert len(decompose_product(boolean(4))[0]) == 4
    a3 = build_root_system("A3")
    arr = from_roots(a3, parse_ideal(a3, "[010]").complement)
    assert len(decompose_product(arr)[0]) == 2 and is_reducible(arr)
    for name in ["A4", "B3", "D4", "F4", "G2"]:
        rs = build_root_system(name)
        assert len(components(from_roots(rs, rs.full))) == 1
        assert not is_reducible(from_roots(rs, rs.full))


def test_three_lines_in_a_plane_are_irreducible():
    assert len(components(Arrangement(2, [(1, 0), (0, 1), (1, 1)]))) == 1


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize("name", ["A4", "B4", "D4"])
def test_char_poly_is_multiplicative_over_factors(name):
    rs = build_root_system(name)
    for I in enumerate_ideals(rs):
        arr = from_roots(rs, I.complement)
        factors, empty = decompose_product(arr)
        p = [0] * empty + [1]
        for f in factors:
            p = _pmul(p, char_poly(f)[f.dim - f.rank:])
        assert char_poly(arr) == p


vectors = st.lists(st.tuples(*[st.integers(-2, 2)] * 3).filter(any), min_size=1, max_size=6)


@given(vectors)
@settings(max_examples=80, deadline=None)
def test_zaslavsky_and_deletion_restriction_random(ns):
    arr = Arrangement(3, ns)
    chi = char_poly(arr)
    assert chi[-1] == 1
    assert region_count(arr) > 0
    for h in range(len(arr)):
        lhs = poly_sub(char_poly(arr.delete(h)), char_poly(restriction(arr, 1 << h)))
        assert chi == lhs[:len(chi)]
