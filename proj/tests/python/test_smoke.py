import pytest

import ceerlab


def test_ceer_table_queries():
    t = ceerlab.CeerTable(16)
    t.add(1, 2, 3).add(2, 7, 9)
    assert t.related(1, 2, 3)
    assert not t.related(1, 2, 2)
    assert t.representative(7) == 1
    assert t.classes(3)[:3] == [[0], [1, 2], [3]]
    assert t.pairs() == [(1, 2, 3), (2, 7, 9)]
    with pytest.raises(ceerlab._core.MonotonicityError):
        t.add(3, 4, 1)


def test_pairing_and_product():
    assert ceerlab.cantor_pair(0, 1) == 2
    assert ceerlab.cantor_unpair(2) == (0, 1)
    a = ceerlab.CeerTable(4)
    a.add(0, 1, 1)
    p = ceerlab.product(a, ceerlab.CeerTable(4), 16)
    assert p.related(ceerlab.cantor_pair(0, 2), ceerlab.cantor_pair(1, 2))
    j = ceerlab.uniform_join([a, ceerlab.CeerTable(4)], 16)
    assert j.related(ceerlab.cantor_pair(0, 0), ceerlab.cantor_pair(0, 1))
    assert not j.related(ceerlab.cantor_pair(1, 0), ceerlab.cantor_pair(1, 1))


def test_algebra():
    i = ceerlab.HomogeneousIdeal(2, 8)
    i.add_generator(ceerlab.Poly.parse("x*y + y*x"))
    assert i.member(ceerlab.Poly.parse("x*x*y + x*y*x"))
    assert not i.member(ceerlab.Poly.parse("x*y"))
    assert i.quotient_dim(2) == 3
    assert str(ceerlab.Poly.parse("1 + x", 3) * ceerlab.Poly.parse("1 - x", 3)) == "1 + 2*x^2"


def test_gs_audit():
    ok, text = ceerlab.gs_audit("1/4", {10: 2}, 20)
    assert not ok
    assert text == "fail at k=10: n_k = 2 > 6561/4096"
    assert ceerlab.gs_audit("1/4", {11: 1}, 20)[0]


def test_scenario_round_trip():
    sc = ceerlab.parse_scenario("construction = star-universal\nstages = 12\n[ceer U]\nbound = 16\n0 1 @ 5\n")
    assert sc.construction == "star-universal"
    out = ceerlab.run_scenario(sc)
    assert out.records >= 2
    ok, report = ceerlab.verify_log(out.log, "vi-vs-U")
    assert ok, report
    assert ceerlab.run_scenario(sc).log == out.log


def test_scenario_errors_name_the_line():
    with pytest.raises(ValueError, match="line 2"):
        ceerlab.run_scenario(ceerlab.parse_scenario("construction = dark-ring\nepsilon = 0\n"))
