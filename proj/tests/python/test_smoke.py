"""Smoke tests for the Python bindings: each entry point does real work."""

import json

import pytest

import pathhom

CYCLE3 = "v a\nv b\nv c\ne a b\ne b c\ne c a\n"
POINT = "v p\n"
TRIANGLE_SC = json.dumps({"facets": [["a", "b"], ["b", "c"], ["a", "c"]]})
LOOP_PAIR = json.dumps(
    {
        "vertices": ["0", "1", "2", "3"],
        "paths": {
            "1": [["0", "1"], ["0", "2"], ["0", "3"], ["1", "0"], ["1", "2"], ["1", "3"]],
            "2": [["0", "1", "0"], ["0", "1", "2"]],
        },
        "exhaustive": True,
    }
)


def test_homology_of_cycle():
    groups = pathhom.homology(CYCLE3)
    assert groups[0]["group"] == "Z"
    assert groups[1]["group"] == "Z"
    assert groups[1]["rank"] == 1
    assert groups[1]["torsion"] == []


def test_homology_over_other_rings():
    assert pathhom.homology(CYCLE3, ring="Q")[1]["group"] == "Q"
    assert pathhom.homology(CYCLE3, ring="Zp:2")[1]["group"] == "Z_2"
    with pytest.raises(pathhom.UnsupportedRingError):
        pathhom.homology(CYCLE3, ring="Zp:4")


def test_cohomology_and_path_complex_input():
    groups = pathhom.cohomology(LOOP_PAIR, ring="Z")
    assert groups[0]["group"] == "Z"
    assert groups[1]["group"] == "Z"


def test_realize_produces_cell_json():
    cells = json.loads(pathhom.realize(LOOP_PAIR))
    assert cells["counts"] == [4, 6, 2]
    assert cells["closure_cells"] == 0


def test_product_homology_is_torus_shaped():
    torus = pathhom.product(CYCLE3, "v x\nv y\nv z\ne x y\ne y z\ne z x\n")
    groups = pathhom.homology(torus)
    assert [g["group"] for g in groups[:3]] == ["Z", "Z^2", "Z"]


def test_join_with_point_is_contractible():
    cone = pathhom.join(CYCLE3, POINT)
    groups = pathhom.homology(cone)
    assert groups[0]["group"] == "Z"
    assert groups[1]["group"] == "0"


def test_cubical_digraph_text():
    digraph = pathhom.cubical(json.dumps({"facets": [["a", "b"]]}))
    assert "e a|b a" in digraph and "e a|b b" in digraph
    groups = pathhom.homology(digraph)
    assert groups[0]["group"] == "Z"


def test_hochschild_matches_circle():
    hh = pathhom.hochschild(TRIANGLE_SC, ring="Q", max_deg=2)
    assert hh["algebra_dim"] == 12
    assert [g["group"] for g in hh["homology"][:2]] == ["Q", "Q"]
    assert [g["group"] for g in hh["cohomology"][:2]] == ["Q", "Q"]


def test_checks_pass():
    assert pathhom.check_realization(LOOP_PAIR)["pass"]
    assert pathhom.check_kunneth(CYCLE3, POINT, kind="join")["pass"]
    assert pathhom.check_hochschild(TRIANGLE_SC, ring="Q", max_deg=2)["pass"]


def test_error_mapping():
    with pytest.raises(pathhom.ParseError):
        pathhom.homology("v a\ne a zz\n")
    with pytest.raises(pathhom.BudgetError):
        pathhom.homology(CYCLE3, budget=2)
    with pytest.raises(pathhom.InvalidInputError):
        pathhom.homology(TRIANGLE_SC)  # simplicial input needs cubical()/hochschild()
