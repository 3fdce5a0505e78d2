import math

import pytest

import rgenus


def complete(n):
    return rgenus.Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def test_exact_genus_fixtures():
    assert rgenus.exact_genus(complete(5)) == {"genus": 1, "f": 5, "visited": rgenus.exact_genus(complete(5))["visited"]}
    assert rgenus.exact_genus(complete(4))["genus"] == 0
    assert rgenus.exact_genus(complete(6))["genus"] == 1
    assert rgenus.exact_genus(rgenus.cycle_graph(5))["f"] == 2


def test_graph_errors():
    with pytest.raises(ValueError):
        rgenus.Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        rgenus.Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        rgenus.gnm(4, 7)


def test_budget_exceeded_carries_bound():
    edges = []
    mid = 6
    for a in range(3):
        for b in range(3, 6):
            edges += [(a, mid), (b, mid)]
            mid += 1
    with pytest.raises(rgenus.BudgetExceeded) as info:
        rgenus.exact_genus(rgenus.Graph(15, edges), budget=3)
    assert info.value.best_upper >= 1


def test_series():
    for c in (0.0, 0.3, 0.9):
        assert abs(rgenus.u(c) - (1 - c / 2)) < 1e-10
    assert abs(rgenus.mu(0.5)) < 1e-9
    assert 0.45 < rgenus.mu(20) < 0.5
    assert rgenus.lambda_i(0) == 0.0
    assert rgenus.lambda_i(1) == pytest.approx(2.50156743, abs=1e-7)


def test_random_models_are_seeded():
    a = rgenus.gnm(200, 300, seed=4)
    b = rgenus.gnm(200, 300, seed=4)
    assert a == b and a.size() == 300
    traj = rgenus.kappa_trajectory(50, seed=1, steps=10)
    assert len(traj) == 11 and traj[0] == 50


def test_predict_and_contiguity():
    p = rgenus.predict_genus(10_000, 30_000)
    assert p["regime"] == "linear"
    assert p["lo"] == pytest.approx(rgenus.mu(3) * 30_000)
    assert rgenus.contiguity_verdict(1000, None, 1000 * 1000 / 20, 0.1) == "contiguous"


def test_bounds_sandwich():
    g = rgenus.gnm(300, 900, seed=2)
    lower = rgenus.genus_lower_bound_short_cycles(g, 4)
    assert 0 <= lower <= rgenus.genus_upper_bound(g)
    assert rgenus.genus_lower_bound_density(complete(8)) == 2


def test_fragile_and_suite():
    r = rgenus.fragile_experiment(rgenus.path_graph(20_000), 2, 1000, seed=3)
    assert r["l"] == math.ceil(3 * 2 * 20_000 / 1000)
    assert r["upper_bound"] <= 1000
    report = rgenus.run_suite("asymptotics")
    assert report["report"]["pass"]
    with pytest.raises(ValueError):
        rgenus.run_suite("nope")
