"""Interlacing checks, quotients, support correspondence, and the search."""

import math
import random

import numpy as np
import pytest

from pstwalk.graphs import build_complete, build_cycle, build_double_star, build_path, build_star
from pstwalk.verify import (
    EquitabilityError,
    check_cauchy,
    check_kyfan,
    check_weyl,
    equitable_quotient,
    random_connected_graph,
    run_suite,
    search_no_pst,
    suite_correspondence,
    verify_double_star_quotient_relations,
    verify_support_correspondence_p2,
    verify_support_correspondence_p3,
)


def test_check_cauchy_on_deletions():
    rng = random.Random(300)
    nprng = np.random.default_rng(300)
    for _ in range(50):
        n = rng.randint(2, 9)
        a = nprng.normal(size=(n, n))
        a = a + a.T
        keep = sorted(rng.sample(range(n), rng.randint(1, n - 1)))
        s = np.zeros((n, len(keep)))
        for col, v in enumerate(keep):
            s[v, col] = 1.0
        assert check_cauchy(a, s)


def test_check_cauchy_detects_direction():
    # negative slack turns the true inequalities into violated ones
    a = np.diag([3.0, 1.0, -2.0])
    s = np.eye(3)[:, :2]
    assert check_cauchy(a, s)
    assert not check_cauchy(a, s, slack=-10.0)


def test_check_cauchy_rejects_bad_isometry():
    a = np.eye(3)
    with pytest.raises(ValueError):
        check_cauchy(a, np.ones((3, 2)))
    with pytest.raises(ValueError):
        check_cauchy(a, np.eye(2))


def test_check_weyl_and_kyfan():
    nprng = np.random.default_rng(301)
    for _ in range(100):
        n = int(nprng.integers(1, 9))
        a = nprng.normal(size=(n, n))
        a = a + a.T
        b = nprng.normal(size=(n, n))
        b = b + b.T
        assert check_weyl(a, b)
        assert check_kyfan(a, b)
    with pytest.raises(ValueError):
        check_weyl(np.eye(2), np.eye(3))
    assert not check_weyl(np.diag([1.0, 0.0]), np.diag([1.0, 0.0]), slack=-5.0)


def test_equitable_quotient_star():
    g = build_star(4)
    q = equitable_quotient(g, [[0], [1, 2, 3, 4]])
    assert np.allclose(q.quotient, [[0, 2], [2, 0]])
    eig = np.linalg.eigvalsh(q.quotient)
    assert sorted(eig) == pytest.approx([-2.0, 2.0])


def test_equitable_quotient_double_star():
    g, a, b = build_double_star(2, 2)
    cells = [[a], [1, 2], [b], [4, 5]]
    q = equitable_quotient(g, cells)
    full = np.linalg.eigvalsh(g.weights)
    for th in np.linalg.eigvalsh(q.quotient):
        assert np.min(np.abs(full - th)) <= 1e-8


def test_equitable_quotient_rejects_uneven_partition():
    g = build_path(4)
    with pytest.raises(EquitabilityError):
        equitable_quotient(g, [[0, 1], [2, 3]])  # vertex 1 vs 0 differ toward cell 2
    with pytest.raises(EquitabilityError):
        equitable_quotient(g, [[0], [1, 2]])  # does not cover
    with pytest.raises(EquitabilityError):
        equitable_quotient(g, [[0, 0], [1, 2, 3]])
    with pytest.raises(EquitabilityError):
        equitable_quotient(g, [[], [0, 1, 2, 3]])


def test_double_star_quotient_relations():
    # K_{1,3} with an apex loop: theta^2 - theta - 3 = 0
    assert verify_double_star_quotient_relations(0, 3)
    # cone over C3 is K4: relations hold with k = 2
    assert verify_double_star_quotient_relations(2, 3)
    assert verify_double_star_quotient_relations(1, 4)


def test_support_correspondence_p2_k1():
    k1 = build_path(1)
    assert verify_support_correspondence_p2(k1, 0, k1, 0)


def test_support_correspondence_p2_p2_leaf():
    p2 = build_path(2)
    assert verify_support_correspondence_p2(p2, 0, p2, 0)


def test_support_correspondence_p3_k1():
    k1 = build_path(1)
    assert verify_support_correspondence_p3(k1, 0, k1, 0)


def test_support_correspondence_p3_p2_leaf():
    p2 = build_path(2)
    assert verify_support_correspondence_p3(p2, 0, p2, 0)


def test_support_correspondence_requires_walk_equivalence():
    p2 = build_path(2)
    k1 = build_path(1)
    with pytest.raises(ValueError):
        verify_support_correspondence_p2(p2, 0, k1, 0)
    with pytest.raises(ValueError):
        verify_support_correspondence_p3(p2, 0, k1, 0)


def test_support_correspondence_star_centers():
    s3 = build_star(3)
    assert verify_support_correspondence_p2(s3, 0, s3, 0)
    assert verify_support_correspondence_p3(s3, 0, s3, 0)
    c4 = build_cycle(4)
    assert verify_support_correspondence_p2(c4, 0, c4, 0)
    assert verify_support_correspondence_p3(c4, 0, c4, 0)


def test_correspondence_suites_small():
    assert suite_correspondence(2, max_n=3).passed
    assert suite_correspondence(3, max_n=3).passed


def test_search_tiny():
    report = search_no_pst(2, 2, scan_t_max=10.0, scan_steps=2000)
    assert report.instances_tested == 4  # two marked graphs, ordered pairs
    assert len(report.pst_successes) == 1
    assert report.nontrivial_successes == []
    assert report.pst_successes[0]["n1"] == 1 and report.pst_successes[0]["n2"] == 1
    assert report.scan_disagreements == []
    data = report.to_json()
    assert data["instances_tested"] == 4
    assert data["family"]["bridge"] == 2


def test_search_bridge3_tiny():
    report = search_no_pst(3, 2, scan_t_max=10.0, scan_steps=2000)
    assert report.instances_tested == 4
    assert len(report.pst_successes) == 1  # K1 - K1 over the 3-path is P3
    assert report.nontrivial_successes == []


def test_search_parallel_matches_serial():
    serial = search_no_pst(2, 3, scan_cross_check=False)
    parallel = search_no_pst(2, 3, scan_cross_check=False, jobs=2)
    assert serial.instances_tested == parallel.instances_tested
    assert serial.failure_histogram == parallel.failure_histogram
    assert sorted(map(str, serial.pst_successes)) == sorted(
        map(str, parallel.pst_successes)
    )


def test_search_rejects_bad_bridge():
    with pytest.raises(ValueError):
        search_no_pst(4, 2)


def test_search_custom_source():
    p2 = build_path(2)
    report = search_no_pst(2, 0, graph_source=[(p2, 0), (p2, 1)], scan_cross_check=False)
    assert report.instances_tested == 4
    # P2 composed with P2 at leaves is P4; its end pair has no transfer
    assert report.pst_successes == []


def test_random_connected_graph_properties():
    rng = random.Random(302)
    for _ in range(60):
        n = rng.randint(1, 8)
        g = random_connected_graph(rng, n, weighted=True, loops=True)
        assert g.n == n
        assert g.is_connected()
        assert np.allclose(g.weights, g.weights.T)


def test_run_suite_dispatch():
    assert run_suite("onesum", instances=10).passed
    assert run_suite("neutrino", instances=10).passed
    assert run_suite("interlacing", instances=10).passed
    with pytest.raises(ValueError):
        run_suite("unknown-suite")


def test_suite_result_json():
    r = run_suite("onesum", instances=5)
    data = r.to_json()
    assert data["passed"] is True
    assert data["suite"] == "onesum"
    assert data["instances"] == 15
