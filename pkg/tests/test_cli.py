import json
import subprocess
import sys

import pytest

from legplat.cli import main


def run(*args):
    return subprocess.run([sys.executable, "-m", "legplat", *args],
                          capture_output=True, text=True)


def test_analyze_trefoil(capsys):
    assert main(["analyze", "[3]"]) == 0
    r = json.loads(capsys.readouterr().out)
    assert r["fillability"]["theorem1"]["fillable"] is True
    assert r["classical"] == {"tb": 1, "rotation": 0}
    assert r["rulings"]["count"] == 3
    assert r["augmentations"]["count"] == 5
    assert {tuple(a["dims"]) for a in r["augmentations"]["list"]} == {(2, 1)}
    assert r["transcripts"]["filling"]["accounting"]["euler_characteristic"] == -1
    assert r["consistent"] is True


def test_analyze_showcase(capsys):
    assert main(["analyze", "[3,(6,2),2,(2,0),4]", "--no-transcripts"]) == 0
    r = json.loads(capsys.readouterr().out)
    assert r["totals"]["crossings"] == 19
    assert "transcripts" not in r


def test_analyze_text(capsys):
    assert main(["analyze", "[1,(2,1),1]", "--text"]) == 0
    out = capsys.readouterr().out
    assert "tb           -1" in out and "verdict      fillable" in out


def test_analyze_link(capsys):
    assert main(["analyze", "[2]"]) == 0
    r = json.loads(capsys.readouterr().out)
    assert r["classical"] is None and r["fillability"]["theorem1"] is None


def test_validity_error_exit_code(capsys):
    assert main(["analyze", "[3,(0,0),3]"]) == 1
    assert "u+l > 0" in capsys.readouterr().err


def test_syntax_error_exit_code(capsys):
    assert main(["analyze", "[3,"]) == 1


def test_usage_errors(capsys):
    assert main(["crosscheck", "0"]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_crosscheck_small(capsys):
    assert main(["crosscheck", "3"]) == 0
    assert "discrepancies 0" in capsys.readouterr().out


def test_crosscheck_independent_of_workers(monkeypatch):
    from legplat.crosscheck import crosscheck
    assert crosscheck(6, 1).to_json() == crosscheck(6, 3).to_json()
    monkeypatch.setenv("LEGPLAT_WORKERS", "2")
    from legplat.crosscheck import default_workers
    assert default_workers() == 2


def test_json_output_is_byte_identical():
    a, b = run("analyze", "[1,(2,1),1]"), run("analyze", "[1,(2,1),1]")
    assert a.returncode == 0 and a.stdout == b.stdout


def test_render_files(tmp_path):
    out = tmp_path / "t.svg"
    assert main(["render", "[3]", "--svg", str(out)]) == 0
    assert out.read_text().count('class="crossing"') == 3
    out2 = tmp_path / "tr.svg"
    assert main(["render", "[3]", "--svg", str(out2), "--transcript"]) == 0
    assert out2.read_text().count('class="frame"') == 6


def test_render_io_error(tmp_path):
    assert main(["render", "[3]", "--svg", str(tmp_path / "missing" / "x.svg")]) == 1


def test_render_transcript_of_unfillable(tmp_path):
    assert main(["render", "[1,(1,0),1]", "--svg", str(tmp_path / "x.svg"),
                 "--transcript"]) == 1
