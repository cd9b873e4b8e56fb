import math

import pytest

import janus


def test_single_state_reduction():
    for r in (0.1, 0.5, 1.3):
        assert janus.g2(r, 0.0, r, 0.0, 1.0, 0.0, 0.0) == pytest.approx(3 + 1 / math.sinh(r) ** 2, rel=1e-12)


def test_analytic_matches_fock():
    chi = janus.solve_chi(0.6, 1.1, 0.4, 0.2, 0.8, 2.5)
    a = janus.g2(0.6, 1.1, 0.4, 0.2, chi, 0.8, 2.5)
    assert abs(a - janus.g2_fock(0.6, 1.1, 0.4, 0.2, chi, 0.8, 2.5)) < 1e-8


def test_boundary_curve_is_odd_cat():
    rs = [0.1, 0.34, 0.8]
    for r, g in zip(rs, janus.boundary_curve(rs)):
        assert g == pytest.approx(janus.odd_cat_g2(r), rel=1e-10)


def test_infeasible_raises():
    with pytest.raises(janus.JanusError, match="Infeasible|infeasible"):
        janus.ridge_row(0.40)


def test_scan_round_trip(tmp_path):
    path = tmp_path / "fig4.json"
    janus.write_preset("4", path, points=16)
    back = janus.read_scan(path)
    direct = janus.scan_preset("4", points=16)
    assert back["shape"] == [16, 16]
    assert back["values"] == direct["values"]
    assert min(v for v in back["values"] if v is not None) >= 1.0
    assert "5c" in janus.presets()
