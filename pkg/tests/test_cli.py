"""End-to-end CLI behavior: formats, determinism, exit codes."""

import json
import math

import numpy as np
import pytest

import pointscatter
from pointscatter import canonicalize, probabilities, transmission_probability
from pointscatter.cli import FIGURE_PRESETS, main
from pointscatter.compose import TwoPointSolution


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    lines = text.strip().split("\n")
    header = lines[0].split(",")
    rows = [[float(x) for x in line.split(",")] for line in lines[1:]]
    return header, rows


def test_single_sweep_stdout(capsys):
    code, out, err = run(
        capsys,
        [
            "single",
            "--Lp1", "2", "--Lm1", "0.5", "--mu1", str(math.pi / 2),
            "--k-min", "0.5", "--k-max", "1.5", "--steps", "3",
        ],
    )
    assert code == 0 and err == ""
    header, rows = parse_csv(out)
    assert header == ["k", "T1", "R1"]
    assert len(rows) == 3
    assert rows[1][0] == 1.0
    assert rows[1][1] == pytest.approx(0.36, abs=1e-12)
    assert rows[1][2] == pytest.approx(0.64, abs=1e-12)


def test_csv_output_is_byte_identical(tmp_path, capsys):
    argv = [
        "spectrum",
        "--Lp1", "3", "--Lm1", "1", "--mu1", "1.2",
        "--Lp2", "4", "--Lm2", "-4", "--mu2", "0.9", "--xi2", "2.0",
        "--k-min", "0.1", "--k-max", "6.0", "--steps", "500",
    ]
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for path in paths:
        code, _, _ = run(capsys, argv + ["--out", str(path)])
        assert code == 0
    first, second = (p.read_bytes() for p in paths)
    assert first == second
    assert b"\r" not in first
    assert first.endswith(b"\n")


def test_csv_values_match_library(capsys):
    code, out, _ = run(
        capsys,
        [
            "spectrum",
            "--Lp1", "3", "--Lm1", "1", "--mu1", "1.2",
            "--Lp2", "4", "--Lm2", "-4", "--mu2", "0.9", "--xi2", "2.0",
            "--k-min", "0.1", "--k-max", "6.0", "--steps", "7",
        ],
    )
    assert code == 0
    _, rows = parse_csv(out)
    p1 = canonicalize(3.0, 1.0, 1.2, xi=0.0)
    p2 = canonicalize(4.0, -4.0, 0.9, xi=2.0)
    ks = np.linspace(0.1, 6.0, 7)
    want = transmission_probability(p1, p2, ks)
    # 17 significant digits round-trip doubles exactly, so the parsed
    # columns must match the vectorized evaluation bit for bit
    assert [row[0] for row in rows] == list(ks)
    assert [row[1] for row in rows] == list(want)


def test_spectrum_json_with_amplitudes(capsys):
    code, out, _ = run(
        capsys,
        [
            "spectrum",
            "--Lp1", "1", "--Lm1", "0", "--mu1", "1.0",
            "--Lp2", "2", "--Lm2", "-1", "--mu2", "1.3",
            "--k-min", "0.5", "--k-max", "2.5", "--steps", "5",
            "--format", "json", "--amplitudes",
        ],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["columns"] == [
        "k", "T2",
        "re_A", "im_A", "re_B", "im_B", "re_C", "im_C", "re_D", "im_D",
    ]
    assert len(payload["rows"]) == 5
    for row in payload["rows"]:
        t2 = row[1]
        d = complex(row[8], row[9])
        assert abs(abs(d) ** 2 - t2) < 1e-13


def test_resonances_report_from_params_file(tmp_path, capsys):
    d = (math.pi - math.atan(math.sqrt(1.25) / 2.0)) / math.sqrt(1.25)
    params = {
        "interaction1": {"L_plus": 3.0, "L_minus": 1.0, "mu": math.pi / 2},
        "interaction2": {"L_plus": 4.0, "L_minus": -4.0, "mu": math.pi / 2, "xi": d},
    }
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(params))
    code, out, _ = run(
        capsys,
        ["resonances", "--params", str(path), "--k-min", "1e-3", "--k-max", "6"],
    )
    assert code == 0
    report = json.loads(out)
    assert report["classification"]["case"] == "incidental"
    assert report["classification"]["k_squared"] == 1.25
    assert report["quartic"] == {"alpha": -448.0, "beta": 512.0, "gamma": 60.0}
    assert len(report["roots"]) == 1
    assert report["roots"][0]["k"] == pytest.approx(math.sqrt(1.25), abs=1e-12)
    assert report["incidental"]["k"] == math.sqrt(1.25)
    assert report["incidental"]["spacings"][0] == pytest.approx(d, abs=1e-12)


def test_classify_report(capsys):
    code, out, _ = run(
        capsys,
        [
            "classify",
            "--Lp1", "2", "--Lm1", "0.5", "--mu1", str(math.pi / 3),
            "--Lp2", "-0.5", "--Lm2", "-2", "--mu2", str(math.pi / 3),
        ],
    )
    assert code == 0
    assert json.loads(out)["case"] == "II"


def test_classify_accepts_infinite_strings(capsys):
    code, out, _ = run(
        capsys,
        [
            "classify",
            "--Lp1", "inf", "--Lm1", "0", "--mu1", "1.0",
            "--Lp2", "1", "--Lm2", "-1", "--mu2", "1.0",
        ],
    )
    assert code == 0
    assert json.loads(out)["quartic_bypassed"] is True


def test_figure_presets_all_run(capsys):
    for name in FIGURE_PRESETS:
        code, out, _ = run(capsys, ["figure", name, "--steps", "40"])
        assert code == 0, name
        header, rows = parse_csv(out)
        assert len(rows) == 40
        if name == "fig2":
            assert header == ["k", "T1", "R1"]
        elif name == "fig5":
            assert header == ["k", "T2_mu_pi_over_2", "T2_mu_pi_over_3", "T2_mu_pi_over_4"]
        else:
            assert header == ["k", "T2"]


def test_figure_fig2_matches_library(capsys):
    code, out, _ = run(capsys, ["figure", "fig2", "--steps", "11"])
    assert code == 0
    _, rows = parse_csv(out)
    p = canonicalize(2.0, 0.5, math.pi / 2)
    for k, t1, r1 in rows:
        want_t, want_r = probabilities(p, k)
        assert t1 == float(want_t) and r1 == float(want_r)


def test_verify_passes_and_reports(capsys):
    code, out, _ = run(capsys, ["verify", "--trials", "25", "--seed", "7"])
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert report["seed"] == 7 and report["trials"] == 25
    names = {c["name"] for c in report["checks"]}
    assert len(names) == len(report["checks"]) >= 4
    for check in report["checks"]:
        assert check["pass"] is True
        assert check["max_residual"] < check["tolerance"]


def test_verify_catches_a_broken_solver(capsys, monkeypatch):
    """Mutation check: the oracle comparison must notice a biased solver."""

    def biased(p1, p2, k, max_condition=1e12):
        sol = pointscatter.two_point_amplitudes(p1, p2, k)
        return TwoPointSolution(sol.A + 1e-6, sol.B, sol.C, sol.D, sol.k)

    monkeypatch.setattr("pointscatter.verify.solve_direct", biased)
    code, out, _ = run(capsys, ["verify", "--trials", "10", "--seed", "7"])
    assert code == 2
    report = json.loads(out)
    assert report["pass"] is False


def test_exit_code_one_for_bad_input(capsys, tmp_path):
    bad_calls = [
        ["single", "--Lp1", "2", "--Lm1", "0.5"],  # no mu
        ["single", "--Lp1", "2", "--Lm1", "0.5", "--mu1", "1.0", "--k-min", "3", "--k-max", "1"],
        ["single", "--Lp1", "2", "--Lm1", "0.5", "--mu1", "1.0", "--steps", "1"],
        ["single", "--Lp1", "2", "--Lm1", "0.5", "--mu1", "7.0"],  # mu out of range
        ["spectrum", "--Lp1", "2", "--Lm1", "0.5", "--mu1", "1.0"],  # half a pair
        ["resonances", "--params", str(tmp_path / "missing.json")],
        ["verify", "--trials", "0"],
        ["nonsense"],
        [],
    ]
    for argv in bad_calls:
        code = main(argv)
        capsys.readouterr()
        assert code == 1, argv


def test_exit_code_one_for_malformed_params(capsys, tmp_path):
    path = tmp_path / "three.json"
    entry = {"L_plus": 1.0, "L_minus": 0.0, "mu": 1.0}
    path.write_text(json.dumps([entry, entry, entry]))
    code, _, err = run(capsys, ["spectrum", "--params", str(path)])
    assert code == 1 and "two interactions" in err

    path = tmp_path / "incomplete.json"
    path.write_text(json.dumps({"interaction1": entry}))
    code, _, _ = run(capsys, ["spectrum", "--params", str(path)])
    assert code == 1


def test_params_array_form(capsys, tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(
        json.dumps(
            [
                {"L_plus": 2.0, "L_minus": 0.5, "mu": 1.0},
                {"L_plus": 1.0, "L_minus": -1.0, "mu": 1.2, "xi": 1.5},
            ]
        )
    )
    code, out, _ = run(
        capsys,
        ["spectrum", "--params", str(path), "--k-min", "1", "--k-max", "2", "--steps", "3"],
    )
    assert code == 0
    _, rows = parse_csv(out)
    p1 = canonicalize(2.0, 0.5, 1.0)
    p2 = canonicalize(1.0, -1.0, 1.2, xi=1.5)
    assert rows[0][1] == float(transmission_probability(p1, p2, 1.0))


def test_exit_code_three_for_standing_wave(capsys):
    # Dirichlet cavity with k d = pi: the amplitude system is singular
    code, _, err = run(
        capsys,
        [
            "spectrum", "--amplitudes",
            "--Lp1", "0", "--Lm1", "0", "--mu1", "0",
            "--Lp2", "0", "--Lm2", "0", "--mu2", "0", "--xi2", "1.0",
            "--k-min", str(math.pi), "--k-max", str(2 * math.pi), "--steps", "2",
        ],
    )
    assert code == 3
    assert "numerical failure" in err


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "single" in out and "resonances" in out
