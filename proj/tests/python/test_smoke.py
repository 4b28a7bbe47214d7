import math

import pytest

import segmarket as sm


@pytest.fixture
def catalog():
    return sm.Catalog([("a", 1.0), ("b", 2.0), ("c", 0.5)])


def test_catalog_orders_by_quality(catalog):
    assert catalog.ids == ["b", "a", "c"]
    assert catalog.qualities == [2.0, 1.0, 0.5]
    assert len(catalog) == 3


def test_special_functions():
    assert sm.lambert_w(1.0) == pytest.approx(0.5671432904097838, rel=1e-11)
    v = sm.lambert_v(1.0)
    assert v * math.exp(v / (1 - v)) == pytest.approx(1.0, abs=1e-12)
    assert sm.lambert_v_derivative(1.0) > 0
    with pytest.raises(ValueError):
        sm.lambert_w(-1.0)


def test_demand_roundtrip(catalog):
    demand = sm.mnl_demand(catalog, [1.0, 0.5, 0.25])
    assert demand.outside_share + sum(demand.demands) == pytest.approx(1.0, abs=1e-12)
    prices = sm.price_from_demand(catalog, demand.demands, demand.outside_share)
    assert prices == pytest.approx([1.0, 0.5, 0.25], abs=1e-10)


def test_bertrand_single_seller():
    single = sm.Catalog([("only", 1.0)])
    eq = sm.bertrand_solve(single)
    assert eq.prices[0] == pytest.approx(1.5671432904, rel=1e-9)
    assert eq.welfare > eq.revenue


def test_cournot_matches_bertrand_for_one_seller():
    single = sm.Catalog([("only", 2.0)])
    assert sm.cournot_solve(single).prices[0] == pytest.approx(
        sm.bertrand_solve(single).prices[0], abs=1e-10
    )


def test_dynamics_reach_the_equilibrium():
    pair = sm.Catalog([("a", 1.0), ("b", 1.0)])
    eq = sm.bertrand_solve(pair)
    approx_eq, trace, rounds = sm.best_response_dynamics(pair, [0.0, 0.0])
    assert rounds >= 1
    assert approx_eq.prices == pytest.approx(eq.prices, abs=1e-6)
    assert trace[0].round == 1


def test_segmentation_thresholds():
    high = sm.Catalog([(f"p{i}", 10.0) for i in range(5)])
    pick = sm.optimize(high, "bertrand", "revenue")
    assert pick.k_star == 1

    low = sm.Catalog([(f"p{i}", 0.5) for i in range(5)])
    assert sm.optimize(low, "bertrand", "revenue").k_star == 5

    curve = sm.objective_curve(high, "bertrand", "welfare")
    assert curve[0] == 0.0
    assert all(curve[k] > curve[k - 1] for k in range(1, len(curve)))


def test_oracle_agreement(catalog):
    mech = sm.optimize(catalog, "cournot", "revenue")
    oracle = sm.brute_force_optimize(catalog, "cournot", "revenue")
    assert mech.objective_value == pytest.approx(oracle.value, abs=1e-9)


def test_monopoly_dominates(catalog):
    eq = sm.bertrand_solve(catalog)
    assert sm.monopoly_welfare_optimal(catalog).value >= eq.welfare - 1e-9
    assert sm.monopoly_revenue_optimal(catalog).value >= eq.revenue - 1e-9


def test_scans_hold(catalog):
    assert sm.welfare_slope_scan(catalog, [0]).holds
    assert sm.revenue_quasiconvexity_scan(catalog, [0]).holds
    assert sm.lambert_bound_scan(grid=500).holds
    assert sm.share_sigmoid(0.5) == pytest.approx(0.5)
    assert sm.curvature_ratio(0.5) == pytest.approx(-1.0 / 3.0)


def test_digest_is_stable(catalog):
    again = sm.Catalog([("c", 0.5), ("b", 2.0), ("a", 1.0)])
    assert sm.catalog_digest(catalog) == sm.catalog_digest(again)
