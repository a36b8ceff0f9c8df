import json
import math
import pathlib

import pytest

import rocopula as rc

ROOT = pathlib.Path(__file__).resolve().parents[2]
SPEC = (ROOT / "docs" / "examples" / "exponential_gaussian.json").read_text()


def test_tau_theta_closed_forms():
    assert rc.tau_from_theta(rc.CopulaFamily.Gumbel, 2.0) == 0.5
    assert rc.tau_from_theta(rc.CopulaFamily.Clayton, 2.0) == 0.5
    theta = rc.theta_from_tau(rc.CopulaFamily.Frank, 0.3)
    assert abs(rc.tau_from_theta(rc.CopulaFamily.Frank, theta) - 0.3) < 1e-9
    assert abs(rc.Copula.from_tau(rc.CopulaFamily.Gumbel, 0.4).kendall_tau() - 0.4) < 1e-9


def test_marginals_and_copula():
    e = rc.Marginal.exponential(0.23)
    assert abs(e.cdf(3.0) - (1.0 - math.exp(-0.69))) < 1e-12
    n = rc.Marginal.normal(0.0, 1.0)
    assert abs(n.quantile(n.cdf(0.7)) - 0.7) < 1e-12
    c = rc.Copula(rc.CopulaFamily.Independence)
    assert abs(c.joint_survival(0.3, 0.6) - 0.7 * 0.4) < 1e-15


def test_curves_from_model_spec():
    m = rc.JointModel.from_json(SPEC)
    out = m.curve("ruleout", points=64)
    assert out["kind"] == "ruleout"
    assert len(out["fpf"]) == len(out["tpf"])
    assert out["fpf"] == sorted(out["fpf"])
    lo, hi = out["fpf_range"]
    assert 0.0 <= rc.pauc(out) <= hi - lo
    both = m.curve("combined", points=64)
    assert both["fpf_range"][0] == pytest.approx(both["fpf"][0], abs=1e-9)
    fpf, tpf = m.ruleout_point(1.0)
    assert 0.0 <= fpf <= tpf <= 1.0


def test_thread_count_does_not_change_curves():
    m = rc.JointModel.from_json(SPEC)
    assert m.curve("rulein", points=48, threads=1) == m.curve("rulein", points=48, threads=3)


def test_fitting():
    mu, sigma = rc.fit_from_point_and_ratio((0.3, 0.8), 1e12)
    assert abs(sigma - 1.0) < 1e-9
    mu, sigma = rc.fit_binormal_deming([(0.1, 0.4), (0.3, 0.7), (0.6, 0.9)])
    assert mu > 0 and sigma > 0
    with pytest.raises(rc.NumericError):
        rc.fit_binormal_deming([(0.0, 0.5), (1.0, 1.0)])
    assert rc.workload_ruled_out(0.01, 0.5, 0.98) == 0.4952


def test_simulate_and_analyze_round_trip():
    m = rc.JointModel.from_json(SPEC)
    csv = rc.simulate_csv(m, 300, seed=5)
    assert csv.startswith("case_id,label,score_a,score_b")
    assert csv == rc.simulate_csv(m, 300, seed=5, threads=4)
    report = json.loads(rc.analyze_csv(csv, rule_out_fpf=0.5, points=32))
    assert {f["family"] for f in report["families"]} >= {"gaussian", "independence"}


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        rc.Marginal.normal(0.0, -1.0)
    with pytest.raises(ValueError):
        rc.JointModel.from_json("{not json")
    with pytest.raises(rc.DataError):
        rc.analyze_csv("case_id,label,score_a,score_b\nc1,0,1.0,2.0\n")


def test_cli_entry_point():
    code, out, _ = rc.run_cli(["--version"])
    assert code == 0 and out.strip() == rc.__version__
    code, _, err = rc.run_cli(["no-such-command"])
    assert code == 2 and err
