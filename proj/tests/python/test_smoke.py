"""Smoke tests for the python bindings."""

import pytest

dimerkit = pytest.importorskip("dimerkit")

B2 = [[0, 1, 1, -2], [-1, 0, 2, -1]]
B10 = [[0, 0, 1, 1, 1, -3], [-1, -1, 0, 0, 0, 2]]


def test_plucker_and_vol():
    C = dimerkit.plucker_form(B2)
    assert C[0][1] == 1 and C[2][3] == 3 and C[0][3] == -2
    assert dimerkit.vol_A(B2) == 3
    assert dimerkit.unimodular_exists(B2)


def test_kasteleyn_det_matches_printed_value():
    det = dimerkit.kasteleyn_det(B2, weights="critical")
    assert det == ("27*u^[0,0,3,3] - 18*u^[1,1,2,2] + 4*u^[1,2,3,0]"
                   " + 4*u^[2,1,0,3] - 1*u^[2,2,1,1]")


def test_analyze_report():
    rep = dimerkit.analyze(B=B2, seed=3)
    assert rep["gkz"]["vol_A"] == 3
    assert rep["adet"]["status"] == "match"
    assert rep["dessin"]["genus"] == 1
    assert rep["kasteleyn"]["newton_equals_secondary"] is True
    assert len(rep["fan"]["cones"]) == 4


def test_polygon_input():
    B = dimerkit.lattice_from_polygon([[0, 0], [1, 0], [1, 1], [0, 1]])
    assert sorted(map(tuple, zip(*B))) == [(-1, 0), (0, -1), (0, 1), (1, 0)]


def test_superpotential_shape():
    W = dimerkit.superpotential(B10)
    terms = W.split(" - ")
    assert len(terms[0].split(" + ")) == 6
    assert len(terms) == 7  # 6 positive + 6 negative terms


def test_factor_antisymmetric_round_trip():
    C = dimerkit.plucker_form(B2)
    B = dimerkit.factor_antisymmetric(C)
    assert dimerkit.plucker_form(B) == C


def test_invalid_input_raises():
    with pytest.raises(Exception):
        dimerkit.vol_A([[1, 1, -1, -1], [2, 2, -2, -2]])
