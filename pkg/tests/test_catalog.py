import json

import pytest

from hermann_biharmonic.catalog import PARAM_MIN, catalog, catalog_multiplicities, find, theorem_cases
from hermann_biharmonic.solver import GROUP_LABELS, CaseLabel, classify, classify_catalog
from hermann_biharmonic.surd import QuadraticSurd
from hermann_biharmonic.triad import Kind

ROW_FIELDS = {"group_g", "group_k1", "group_k2", "kind", "m1", "m2", "n1", "n2", "params", "theorem_case"}


def entry(g, k1, k2):
    (e,) = [e for e in catalog() if (e.group_g, e.group_k1, e.group_k2) == (g, k1, k2)]
    return e


def test_table_rows():
    t = entry("SO(8)", "U(4)", "U(4)'").triad()
    assert (t.kind, t.mults) == (Kind.I_BC1, (4, 1, 1, 0))
    t = entry("F4", "Sp(3).Sp(1)", "Spin(9)").triad()
    assert (t.kind, t.mults) == (Kind.III_BC1, (4, 3, 4, 4))
    t = entry("F4", "Spin(9)", "Spin(9)").triad()
    assert (t.kind, t.mults) == (Kind.ISO_BC1, (8, 7, 0, 0))
    t = entry("E6", "SO(10).U(1)", "F4").triad()
    assert t.mults == (8, 7, 8, 1)


def test_parametrised_rows():
    so = find("1-1")[0]
    assert so.triad({"b": 3, "c": 5}).mults == (4, 0, 3, 0)
    assert not so.admissible({"b": 1, "c": 2})
    su = find("2-2")[0]
    assert su.triad({"b": 2, "c": 3}).mults == (4, 1, 4, 0)
    assert su.triad({"b": 0, "c": 3}).kind is Kind.ISO_BC1
    assert catalog_multiplicities("so", 1, 2) == (1, 0, 1, 0)     # c - 1 = b routes to (3-1)
    assert catalog_multiplicities("su", 1, 3) == (4, 1, 2, 0)
    with pytest.raises(ValueError):
        catalog_multiplicities("sp", 1, 2)


def test_classification_lists():
    cases = theorem_cases()
    assert cases[1] == ["1-1", "1-2", "1-3"]
    assert cases[2] == [f"2-{i}" for i in range(1, 8)]
    assert cases[3] == [f"3-{i}" for i in range(1, 9)]


def test_every_instance_passes_axioms():
    for e in catalog():
        for p in e.instances(8):
            assert e.triad(p).validate().passed, (e.theorem_case, p)


def test_rows_are_json_with_stable_fields():
    rows = [e.row(p) for e in catalog() for p in e.instances(4)]
    assert rows and all(set(r) == ROW_FIELDS for r in rows)
    assert json.loads(json.dumps(rows)) == rows


def test_minimum_parameters():
    assert PARAM_MIN == {"b": 1, "c": 2, "q": 2}
    assert find("2-2")[0].minimum("b") == 0
    assert min(p["b"] for p in find("1-1")[0].instances(5)) == 1


def test_catalog_sweep_small():
    report = classify_catalog(6)
    assert report.passed
    assert [len(v) for v in report.groups().values()] == [3, 7, 8]
    assert report.to_dict()["families"] == 18
    with pytest.raises(ValueError):
        classify_catalog(1)


def test_group_expectations_by_direct_classification():
    """Each stored case label agrees with classify on a few instances."""
    for e in catalog():
        for p in list(e.instances(5))[:4]:
            assert classify(e.triad(p)).case_label is GROUP_LABELS[e.theorem_group]


def test_octonionic_plane_mapped_to_2_7():
    (e,) = [e for e in find("2-7")]
    r = classify(e.triad())
    assert r.case_label is CaseLabel.TWO_PROPER
    assert r.harmonic_t == QuadraticSurd(7, 0, 0, 15)
