import math

import pytest

import ideq


@pytest.fixture
def flagship():
    return ideq.example1_params(0.05)


def test_closed_forms_anchors(flagship):
    plain = ideq.closed_forms(16, flagship)
    dense = ideq.closed_forms(256, flagship)
    assert plain.pe_min == pytest.approx(1 / 32, abs=1e-12)
    assert dense.pe_min == pytest.approx(1 / 512, abs=1e-12)
    assert plain.r_max == pytest.approx(0.0224, abs=1e-3)
    assert plain.pe_star == pytest.approx(0.5, abs=1e-12)
    assert not plain.no_tradeoff


def test_bounds_match_closed_forms(flagship):
    uniform = ideq.uniform_pmf(16)
    plain = ideq.closed_forms(16, flagship)
    assert ideq.rate_bound(16, flagship, uniform) == pytest.approx(
        plain.r_max, abs=1e-12
    )
    assert ideq.detection_bound(16, flagship, uniform) == pytest.approx(
        plain.pe_star, abs=1e-12
    )


def test_frontier_shape(flagship):
    f = ideq.frontier(16, flagship, grid=128)
    assert f.pe_min == pytest.approx(1 / 32, abs=1e-12)
    assert f.points[0].rate == pytest.approx(0.0, abs=1e-12)
    assert f.rate_at(0.6) == pytest.approx(f.r_max, abs=1e-12)
    assert f.rate_at(0.001) is None
    pes = [p.pe for p in f.points]
    rates = [p.rate for p in f.points]
    assert pes == sorted(pes)
    assert rates == sorted(rates)
    w = f.points[0].witness
    assert w is not None
    assert w.n * w.p1 + (16 - w.n) * w.p2 == pytest.approx(1.0, abs=1e-9)
    assert "pe,rate,n,p1,p2" in f.to_csv()


def test_entangled_frontier_dominates(flagship):
    plain = ideq.frontier(16, flagship, grid=128)
    dense = ideq.frontier(256, flagship, grid=128)
    for k in range(11):
        pe = plain.pe_min + (plain.pe_star - plain.pe_min) * k / 10
        r_plain = plain.rate_at(pe)
        r_dense = dense.rate_at(pe)
        assert r_dense is not None and r_plain is not None
        assert r_dense >= r_plain - 1e-9


def test_unreliable_composition(flagship):
    composed = ideq.compose_unreliable(flagship, 0.8)
    a, b = composed.alpha, composed.beta
    assert a[0] == pytest.approx(flagship.alpha[0] * 0.8)
    assert b[0] == pytest.approx(flagship.alpha[0] * 0.2 + flagship.beta[0])
    f = ideq.unreliable_frontier(flagship, 0.8, grid=64)
    full = ideq.frontier(256, flagship, grid=64)
    assert f.r_max <= full.r_max + 1e-12


def test_simulation_roundtrip(flagship):
    px = ideq.uniform_pmf(16)
    rep = ideq.run_detection_trials(flagship, 16, px, trials=200000, seed=5)
    assert rep.analytic_pd == pytest.approx(0.5, abs=1e-12)
    assert abs(rep.empirical_pd - rep.analytic_pd) <= 4 * rep.std_err
    again = ideq.run_detection_trials(flagship, 16, px, trials=200000, seed=5)
    assert again.empirical_pd == rep.empirical_pd
    mi = ideq.empirical_mutual_information(flagship, 16, px, trials=500000, seed=5)
    assert mi == pytest.approx(ideq.rate_bound(16, flagship, px), abs=0.02)


def test_validation_errors_map_to_value_error():
    with pytest.raises(ValueError):
        ideq.IdeParams(d=2, alpha=(0.5, 0.5), beta=(0.2, 0.5), gamma=(0.2, 0.0))
    p = ideq.IdeParams(d=2, alpha=(0.5, 0.5), beta=(0.5, 0.5), gamma=(0.0, 0.0))
    round_trip = ideq.IdeParams.from_config_text(p.to_config_text())
    assert round_trip.alpha == p.alpha


def test_oracle_agreement_small():
    p = ideq.IdeParams(d=3, alpha=(0.7, 0.2), beta=(0.2, 0.6), gamma=(0.1, 0.2))
    swept = ideq.frontier(3, p, grid=256)
    oracle = ideq.frontier_bruteforce(3, p, samples=20000, seed=9)
    for k in range(9):
        pe = swept.pe_min + (swept.pe_star - swept.pe_min) * k / 8
        a, b = swept.rate_at(pe), oracle.rate_at(pe)
        if a is None or b is None:
            continue
        assert abs(a - b) <= 1e-3


def test_version_string():
    assert ideq.__version__ == "0.1.0"
