import os
from fractions import Fraction
from pathlib import Path

import pytest

import hurwitz

DATA = Path(os.environ.get("HURWITZ_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture(scope="module")
def s3():
    return hurwitz.Group.load(str(DATA / "s3.json"))


@pytest.fixture(scope="module")
def t3(s3):
    return hurwitz.Table(s3, 8)


def test_group_basics(s3):
    assert s3.order == 6
    assert s3.degree == 3
    assert s3.product(["(1 2)", "(2 3)"]) == "(1 2 3)"
    cls = hurwitz.classes(s3)
    assert cls["schema_version"] == hurwitz.schema_version
    subs = hurwitz.subgroups(s3)
    assert len(subs["subgroups"]) == 5


def test_braid_action(s3):
    assert s3.braid(["(1 2)", "(2 3)"], [1]) == ["(1 3)", "(1 2)"]
    assert s3.braid(["(1 2)", "(2 3)"], [1, -1]) == ["(1 2)", "(2 3)"]
    with pytest.raises(hurwitz.InvalidArgument):
        s3.braid(["(1 2)", "(2 3)"], [0])


def test_orbits(s3):
    a = ["(1 2)", "(1 2)", "(2 3)", "(2 3)"]
    b = ["(1 2)", "(2 3)", "(2 3)", "(1 2)"]
    assert s3.equivalent(a, b)
    r = s3.orbit(a)
    assert r["product"] == "()"
    assert r["subgroup_order"] == 6
    assert r["size"] > 1


def test_caps_raise(s3):
    with pytest.raises(hurwitz.CapExceeded):
        s3.orbit(["(1 2)", "(2 3)"] * 3, caps={"max_orbit_size": 2})
    with pytest.raises(hurwitz.InvalidArgument):
        s3.orbit(["(1 2)"], caps={"no_such_cap": 1})


def test_table(s3, t3):
    g = s3.whole_group_id
    assert [t3.hilbert(g, n) for n in range(9)] == [0, 0, 0, 0, 1, 0, 1, 0, 1]
    c = t3.component_of(["(1 2)", "(1 2)", "(2 3)", "(2 3)"])
    assert c is not None
    assert t3.factorization(c)
    report = t3.components()
    assert report["max_degree"] == 8
    assert t3.hilbert_csv().startswith("degree,subgroup,subgroup_order,count")
    checks = t3.verify(braid_samples=100, lemma_samples=20)
    assert {c["status"] for c in checks} == {"passed"}


def test_symmetric_closed_forms():
    assert hurwitz.hf_leading_coefficient(4) == Fraction(3)
    assert hurwitz.hf_leading_coefficient(5) == Fraction(25)
    assert [hurwitz.hf_closed_form(4, m) for m in range(3, 7)] == [17, 20, 23, 26]
    assert [hurwitz.census(4, 2 * m)["count"] for m in range(3, 7)] == [17, 20, 23, 26]
    assert hurwitz.census_full_group(5, 8) == 1
    sp = hurwitz.symmetric_spectrum(3)
    assert sp["stratum_count"] == 4


def test_presentation():
    t = hurwitz.Table(hurwitz.Group.symmetric(3), 6)
    assert t.presentation()["ok"]


def test_loads_rejects_garbage():
    with pytest.raises(hurwitz.InvalidArgument):
        hurwitz.Group.loads("{not json")
