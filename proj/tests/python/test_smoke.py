import pytest

import gkn


def test_construct_sweep_and_alpha():
    phi = gkn.sample_coloring(5, 12, 87)
    assert phi.k == 5 and phi.n == 12 and len(phi) == 66
    g = gkn.build_g(phi)
    h = gkn.build_h(g)
    assert (len(g), len(h)) == (3, 22)
    report = gkn.full_sweep(g, h, 5, 87)
    assert report.verdict == "pass"
    assert report.subsets_checked == 924
    assert report.h_histogram == {0: 847, 2: 77}
    assert gkn.alpha(h)["alpha"] == 10


def test_shards_merge_to_whole():
    phi = gkn.sample_planted_coloring(5, 12, 7, 400)
    g = gkn.build_g(phi)
    h = gkn.build_h(g)
    whole = gkn.full_sweep(g, h, 5, 7)
    parts = [gkn.full_sweep(g, h, 5, 7, shard=i, shards=4) for i in range(4)]
    assert gkn.merge_reports(parts).to_text() == whole.to_text()
    assert whole.to_text().endswith("sweep 5 12 7 pass 508 405 11\n")


def test_hand_built_t3_fails():
    g = gkn.EdgeSet(4, 6, [[3, 4, 5, 6], [1, 2, 5, 6], [1, 2, 3, 4]])
    report = gkn.full_sweep(g, gkn.build_h(g), 5)
    assert report.verdict == "fail"
    assert any(kind == "claim3" for kind, _, _ in report.failures)


def test_probability_packing_and_bound():
    p = gkn.edge_probability(5)
    assert (p["numerator"], p["denominator"]) == (67, 629856)
    assert len(gkn.greedy_steiner_packing(12, 5)) == 3
    assert gkn.union_bound(12, 12, p["value"], 3)[1]
    assert gkn.max_feasible_n(12, p["value"], 3)["max_n"] == 12


def test_geometry():
    assert gkn.motzkin_count([[0, 10], [10, 3], [6, -8], [-6, -8], [-10, 3]]) == 0
    assert gkn.motzkin_count([[0, 0], [10, 0], [10, 10], [0, 10], [3, 4]]) == 2
    s = gkn.motzkin_sweep(2, 50, seed=1)
    assert s["passed"] == 50


def test_certificate_round_trip_and_tamper():
    text = gkn.certify(gkn.sample_coloring(5, 12, 87), 11)
    assert gkn.verify_certificate(text) == ("ok", "g_5(11) > 12")
    tampered = text.replace("\nalpha 10\n", "\nalpha 9\n")
    assert gkn.verify_certificate(tampered)[0] == "alpha mismatch"


def test_errors_map_to_exceptions():
    with pytest.raises(gkn.ConfigError):
        gkn.sample_coloring(3, 8, 0)
    with pytest.raises(gkn.FormatError):
        gkn.read_coloring("nonsense\n")
    with pytest.raises(gkn.DomainError):
        gkn.EdgeSet(2, 5, [[1, 2, 3]])
