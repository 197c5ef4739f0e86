import json
import subprocess
import sys

import pytest

from _corpus import SIGMA_TEXT, SWISS_CUBES, SWISS_TEXT
from pvdecomp.cli import area_from_json, cube_from_json, main
from pvdecomp.geometry import parse_cube
from pvdecomp.pv import parse_generator
from pvdecomp.semantics import state_space


@pytest.fixture
def swiss_file(tmp_path):
    p = tmp_path / "swiss.pv"
    p.write_text(SWISS_TEXT)
    return p


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_sigma_decomposes(capsys):
    assert run(capsys, "analyze", "--gen", "sigma:2,2", "--decompose") == (0, "{1,3}{2,4}\n", "")


def test_gen_sigma_prime(capsys):
    code, out, _ = run(capsys, "analyze", "--gen", "sigma-prime:2,2")
    assert code == 0 and out == "No decomposition\n"


def test_model_listing(capsys, swiss_file):
    code, out, _ = run(capsys, "analyze", str(swiss_file), "--model", "--no-decompose")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 8
    assert lines[0].startswith("   ") and all(l.startswith("|| ") for l in lines[1:])
    assert [l[3:] for l in lines] == SWISS_CUBES


def test_text_output_is_deterministic(capsys, tmp_path):
    p = tmp_path / "s.pv"
    p.write_text(SIGMA_TEXT)
    first = run(capsys, "analyze", str(p), "--model", "--summary", "--oracle-check")
    second = run(capsys, "analyze", str(p), "--model", "--summary", "--oracle-check")
    assert first == second and first[0] == 0
    assert "oracle check: ok" in first[1]
    assert "N=4 semaphores: a/2 b/2 c/3" in first[1]


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "analyze", "--gen", "sigma:2,2", "--json")
    assert code == 0
    report = json.loads(out)
    assert set(report) >= {"program", "cubes", "partition", "timings_ms"}
    assert report["partition"] == [[1, 3], [2, 4]]
    assert set(report["timings_ms"]) == {"semantics", "normalization", "factorization"}
    assert area_from_json(report) == state_space(parse_generator("sigma:2,2"))
    assert report["cubes"][0] == [[0, 1], [0, 1], [0, None], [0, None]]
    assert cube_from_json(report["factors"][0]["cubes"][0]) == parse_cube("[0,1[*[0,-[")


def test_timings_flag(capsys):
    code, out, _ = run(capsys, "analyze", "--gen", "philosophers:3", "--timings")
    assert code == 0 and out.splitlines()[-1].startswith("timings (ms): semantics=")


def test_bench_rows(capsys):
    code, out, _ = run(capsys, "bench", "philosophers:3", "sigma:2,2,2", "sigma:3,3")
    rows = [l.split() for l in out.splitlines()[1:]]
    assert code == 0
    assert [(r[0], r[-1]) for r in rows] == [
        ("philosophers:3", "No"), ("sigma:2,2,2", "{1,4}{2,5}{3,6}"), ("sigma:3,3", "{1,3,5}{2,4,6}"),
    ]


def test_bench_json(capsys):
    code, out, _ = run(capsys, "bench", "--json", "philosophers:4")
    assert code == 0 and json.loads(out)[0]["decomposition"] == "No"


@pytest.mark.parametrize("argv", [
    ["analyze"],
    ["analyze", "/no/such/file.pv"],
    ["analyze", "--gen", "nope:1"],
    ["analyze", "--gen", "philosophers:6", "--oracle-check"],
    ["bench", "sigma:"],
])
def test_input_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("error:")


def test_parse_error_exit_1(capsys, tmp_path):
    p = tmp_path / "bad.pv"
    p.write_text("sem a 2\nproc p = P(a).P(z)\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 1 and "line 2, column 17" in err


def test_invariant_violation_exit_2(capsys, monkeypatch):
    import pvdecomp.cli as cli

    monkeypatch.setattr(cli, "complement_area", lambda n, forb: cli.Area.full(n))
    code, _, err = run(capsys, "analyze", "--gen", "sigma:2", "--oracle-check")
    assert code == 2 and err.startswith("internal error:")


def test_module_entry_point(tmp_path):
    p = tmp_path / "s.pv"
    p.write_text(SIGMA_TEXT)
    out = subprocess.run([sys.executable, "-m", "pvdecomp", "analyze", str(p)],
                         capture_output=True, text=True, check=True)
    assert out.stdout == "{1,3}{2,4}\n"
