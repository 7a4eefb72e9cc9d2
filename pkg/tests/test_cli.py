import json

import pytest

from boselab.classification import secant_frame
from boselab.cli import main
from boselab.field import default_tower
from boselab.harness import UnsupportedQ, run_suite


def frame_args(frame):
    return [str(c) for P in frame for c in P]


def test_classify_ok(capsys):
    F = default_tower(3)
    code = main(["classify", "--q", "3", "--frame", *frame_args(secant_frame(F)), "--conic", "0", "1", "0", "0", "0", "2"])
    out = capsys.readouterr().out
    assert code == 0
    rec = json.loads(out[out.index("{"):])
    assert rec["case"] == "1a" and rec["weight_sum"] == 4
    assert set(rec) >= {"case", "q", "subplane_frame", "conic_coeffs", "components", "infinity", "weight_sum", "checks"}


def test_classify_degenerate(capsys):
    F = default_tower(3)
    code = main(["classify", "--q", "3", "--frame", *frame_args(secant_frame(F)), "--conic", "0", "1", "0", "0", "0", "0"])
    assert code == 2
    assert "degenerate conic" in capsys.readouterr().err


def test_classify_bad_frame(capsys):
    frame = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]
    code = main(["classify", "--q", "3", "--frame", *frame_args(frame), "--conic", "0", "0", "2", "1", "0", "0"])
    assert code == 2
    assert "bad frame" in capsys.readouterr().err


def test_suite_json_and_exit(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["suite", "spread", "--q", "2", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["suite"] == "spread" and data["q"] == 2 and data["seed"] == 0
    assert data["counts"]["failed"] == 0


def test_report_deterministic():
    a = run_suite("scroll", 3, seed=7).to_json()
    b = run_suite("scroll", 3, seed=7).to_json()
    a.pop("wall_time_s"), b.pop("wall_time_s")
    assert a == b


def test_unsupported_q(capsys):
    with pytest.raises(UnsupportedQ):
        run_suite("sublines", 7)
    assert main(["suite", "classify", "--q", "2"]) == 2
    assert main(["suite", "spread", "--q", "6"]) == 2


def test_field_spec_file(tmp_path):
    spec = tmp_path / "f.txt"
    spec.write_text(default_tower(3).spec() + "\n")
    assert main(["suite", "fields", "--q", "3", "--field", str(spec)]) == 0
    spec.write_text("p=3 e=1 t0=1\n")
    assert main(["suite", "fields", "--q", "3", "--field", str(spec)]) == 2
