import pytest

import trmod


@pytest.fixture(scope="module")
def s3():
    return trmod.standard(3)


def test_ring(s3):
    assert s3.hilbert_series == (1, 3, 2)
    assert s3.basis == ["1", "x", "y", "z", "x*y", "x*z"]
    assert s3.mul("y", "z") == "0"
    assert s3.partner("x+y-z") == "x-y+z"
    assert s3.partner("y") is None
    assert len(s3.exact_zero_divisors()) == 9
    assert not s3.check()["gorenstein"]


def test_ring_from_spec():
    g = trmod.Ring.from_spec({"characteristic": 3, "variables": ["x", "y"], "relations": ["x^2", "y^2"]})
    assert g.check()["gorenstein"]
    with pytest.raises(ValueError, match="m\\^2 = 0"):
        trmod.Ring.from_spec({"characteristic": 2, "variables": ["x", "y"], "relations": ["x^2", "y^2", "x*y"]})


def test_totally_reflexive(s3):
    cert = trmod.check_totally_reflexive(s3, [["x", "z"], ["y", "x"]])
    assert cert["verdict"] == "certified"
    assert cert["period"] == 2
    refuted = trmod.check_totally_reflexive(s3, "[[x*y],[x*z]]")
    assert refuted["verdict"] == "refuted"
    assert refuted["refutation"]["kind"] == "k-summand"


def test_upper_triangular(s3):
    r = trmod.check_upper_triangular(s3, "[[x,y],[0,x+y]]", True)
    assert r["totally_reflexive"] and r["cross_check"]
    assert r["diagonal"] == ["x", "x+y"]
    assert not trmod.find_ut_form(s3, "[[x,z],[y,x]]")["found"]
    f = trmod.filtrate(s3, "[[x,y],[0,x+y]]")
    assert f["lengths"] == [3, 6]


def test_ext_and_gamma(s3):
    assert trmod.ext1(s3, "[[x]]", "[[x]]")["rank"] == 3
    assert trmod.gamma(s3, "[[x-y]]", "[[x+y]]") == {"rank": 2, "unit_part": 1, "gamma": 1}
    assert trmod.pushout_middle(s3, "x+y", "x-y", "1") == [["x-y", "-1"], ["0", "x+y"]]
    with pytest.raises(ValueError):
        trmod.pushout_middle(s3, "x+y", "x", "1")


def test_equivalence_and_budget():
    s2 = trmod.standard(2)
    w = trmod.is_equivalent(s2, "[[0,x+z],[x,y]]", "[[x,y],[0,x+z]]")
    assert w is not None
    assert trmod.is_equivalent(s2, "[[x]]", "[[x+y]]") is None
    with pytest.raises(trmod.BudgetExceeded):
        trmod.find_ut_form(trmod.standard(3), "[[x,z],[y,x]]", budget=1)


def test_classify():
    table = trmod.classify_ut2(trmod.standard(2))
    assert table["class_count"] == 24
