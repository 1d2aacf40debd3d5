import csv
import json
import math

import pytest
from click.testing import CliRunner
from scipy import special

from diskscatter.cli import main
from diskscatter.resonance import find_quasi_resonances


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, [str(a) for a in args], catch_exceptions=False)

    return invoke


def rows(text):
    body = [l for l in text.splitlines() if l and not l.startswith("#")]
    return list(csv.DictReader(body))


def header(text):
    out = {}
    for l in text.splitlines():
        if l.startswith("# ") and " = " in l:
            k, v = l[2:].split(" = ", 1)
            out[k] = v
    return out


def test_version(run):
    r = run("--version")
    assert r.exit_code == 0 and "diskscatter" in r.output


def test_unit_contrast_scatters_nothing(run):
    r = run("field", "--lambda", 1, "--oeps", 2, "--truncation", 5)
    assert r.exit_code == 0
    data = rows(r.output)
    assert len(data) == 11
    assert all(float(d["re_c"]) == 0 and float(d["im_c"]) == 0 for d in data)


def test_plane_wave_incident_moduli(run):
    x = 2.5
    r = run("field", "--kind", "incident", "--lambda", 2, "--oeps", x, "--truncation", 6)
    assert r.exit_code == 0
    for d in rows(r.output):
        n = int(d["n"])
        assert math.hypot(float(d["re_c"]), float(d["im_c"])) == pytest.approx(
            abs(special.jv(n, x)), rel=1e-13, abs=1e-300)


def test_total_matches_transmitted_on_the_boundary(run):
    args = ("--lambda", 3, "--oeps", 1.7, "--mode", "0:1", "--mode", "2:0.5:-1", "--format", "json")
    tot = json.loads(run("field", "--kind", "total", *args).output)
    tra = json.loads(run("field", "--kind", "transmitted", *args).output)
    for (n1, a, b), (n2, c, d) in zip(tot["coefficients"], tra["coefficients"]):
        assert n1 == n2
        assert abs(complex(a, b) - complex(c, d)) <= 1e-9 * max(1.0, abs(complex(c, d)))


def test_radius_multiple_of_eps(run):
    r = run("field", "--lambda", 2, "--oeps", 1, "--eps", 0.5, "--radius", "2eps", "--mode", "1:1")
    assert r.exit_code == 0
    assert float(header(r.output)["R"]) == 1.0


def test_resonances_order_thirty(run):
    r = run("resonances", "--n", 30, "--lambda", 2)
    assert r.exit_code == 0
    data = rows(r.output)
    assert [int(d["k"]) for d in data] == list(range(1, 9))
    assert float(data[0]["omega_nk"]) == 17.421168203137952
    assert float(data[-1]["omega_nk"]) == 31.468322685685688


def test_resonances_none(run):
    r = run("resonances", "--n", 5, "--lambda", 1.001)
    assert r.exit_code == 0
    assert rows(r.output) == []


def test_figure_qr1_flags(run):
    r = run("figure", "qr1")
    assert r.exit_code == 0
    flagged = [float(d["x"]) for d in rows(r.output) if d["is_resonance"] == "1"]
    assert flagged == [w.location for w in find_quasi_resonances(30, 2.0)]
    assert header(r.output)["resonances"] == "8"


def test_figure_bad_points(run):
    assert run("figure", "qr2", "--points", 1).exit_code == 2


def test_usage_errors_exit_two(run):
    assert run("field", "--oeps", 1).exit_code == 2
    assert run("field", "--lambda", 2, "--q", 4, "--oeps", 1).exit_code == 2
    assert run("field", "--lambda", 2, "--oeps", 1, "--kind", "transmitted",
               "--radius", "2eps").exit_code == 2
    assert run("field", "--lambda", 2, "--oeps", 1, "--mode", "x:y").exit_code == 2
    assert run("resonances", "--lambda", 2).exit_code == 2


def test_library_error_exits_one(run):
    r = run("norms", "--lambda", 2, "--oeps", 5, "--plane-wave", "--truncation", 1)
    assert r.exit_code == 1
    assert "AccuracyError" in r.output


def test_config_precedence(run, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# settings\nlam = 3\neps = 0.5\noeps = 2\n")
    r = run("--config", cfg, "field", "--eps", 0.25, "--show-config")
    assert r.exit_code == 0
    lines = {l.split(" = ")[0]: l for l in r.output.splitlines() if " = " in l}
    assert lines["lam"].endswith("# config") and "= 3 " in lines["lam"]
    assert lines["eps"].endswith("# flag") and "= 0.25 " in lines["eps"]
    assert lines["sigma"].endswith("# default")
    out = run("--config", cfg, "field", "--eps", 0.25, "--mode", "1:1")
    h = header(out.output)
    assert float(h["eps"]) == 0.25 and float(h["q"]) == 9.0


def test_config_errors(run, tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("bogus = 1\n")
    assert run("--config", bad, "field", "--lambda", 2, "--oeps", 1).exit_code == 2
    broken = tmp_path / "broken.cfg"
    broken.write_text("no equals sign\n")
    assert run("--config", broken, "field", "--lambda", 2, "--oeps", 1).exit_code == 2


def test_verify_single_statement(run, tmp_path):
    out = tmp_path / "v.jsonl"
    r = run("verify", "prop-estimate5half", "--samples", 20, "--seed", 5, "--out", out)
    assert r.exit_code == 0
    lines = [json.loads(l) for l in out.read_text().splitlines()]
    assert lines[0]["seed"] == 5
    assert lines[-1]["summary"] == "prop-estimate5half" and lines[-1]["count"] == 20


def test_verify_list_and_unknown(run):
    r = run("verify", "--list")
    assert r.exit_code == 0 and len(r.output.split()) >= 25
    assert run("verify", "no-such-id").exit_code == 2


def test_exclusions_summary(run, tmp_path):
    out, summ = tmp_path / "ex.csv", tmp_path / "ex.json"
    r = run("exclusions", "--lambda", 20, "--tau", 0.1, "--max-order", 3, "--window", 0, 2,
            "--out", out, "--summary", summ)
    assert r.exit_code == 0
    s = json.loads(summ.read_text())
    assert s["pass"]
    for o in s["orders"].values():
        assert o["measure"] <= o["bound"]
    data = rows(out.read_text())
    assert {int(d["n"]) for d in data} == {0, 1, 2, 3}
    assert all(float(d["alpha_end"]) < float(d["beta_end"]) for d in data)


def test_exclusions_broadband_beta(run, tmp_path):
    summ = tmp_path / "s.json"
    r = run("exclusions", "--eps", 0.1, "--beta", 0.5, "--alpha", 1, "--max-order", 6,
            "--window", 0, 3, "--out", tmp_path / "b.csv", "--summary", summ)
    assert r.exit_code == 0
    assert json.loads(summ.read_text())["pass"]
    assert run("exclusions", "--eps", 0.5, "--beta", 0.5, "--alpha", 1).exit_code == 2


def test_norms(run):
    r = run("norms", "--lambda", 2, "--oeps", 1, "--mode", "1:1")
    assert r.exit_code == 0
    vals = {d["norm"]: float(d["value"]) for d in rows(r.output)}
    assert vals["N_script"] == pytest.approx(math.sqrt(2 * math.pi) * 0.58186522, rel=1e-7)
    assert vals["H_star"] <= vals["H"]
    assert vals["N_bold"] == vals["N_script"]
