import io
import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from jumpnum.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def values(text):
    return [line.split("\t")[0] for line in text.splitlines()]


def test_jumps_text():
    code, text = run("jumps", "--point-basis", "2,1,1", "--up-to", "3/2")
    assert code == 0
    assert values(text) == ["5/6", "7/6", "4/3", "3/2"]
    assert text.splitlines()[0] == "5/6\tblock 0: s=0 t=0"


def test_jumps_of_a_single_point():
    assert values(run("jumps", "--point-basis", "1", "--up-to", "3")[1]) == ["2", "3"]


def test_jumps_from_pairs():
    assert values(run("jumps", "--char-pairs", "3:2", "--up-to", "1")[1]) == ["5/6"]


def test_jumps_json():
    code, text = run("jumps", "--point-basis", "6,3,3,3,1,1,1,1", "--up-to", "1/2", "--format", "json")
    payload = json.loads(text)
    assert code == 0
    assert payload["generators"] == [[6, 9], [3, 22], [1, 67]]
    assert payload["caps"] == [3, 1]
    assert [j["value"] for j in payload["jumps"]] == ["5/18", "25/66", "14/33", "31/66"]
    assert payload["jumps"][0]["decompositions"] == [{"block": 0, "m": 0, "s": 0, "t": 0}]


@pytest.mark.parametrize(
    "flags",
    [
        ["--point-basis", "6,3,3,3,1,1,1,1"],
        ["--proximity", "8:3>1,6>4,7>4"],
        ["--puiseux", "3/2,7/3,2"],
        ["--multiplicities", "6,3,3,3,1,1,1", "--t", "1"],
        ["--char-pairs", "3:2;13:3", "--t", "1"],
    ],
)
def test_every_input_form_reaches_the_same_ideal(flags):
    code, text = run("jumps", *flags, "--up-to", "1/2")
    assert code == 0
    assert values(text) == ["5/18", "25/66", "14/33", "31/66"]


@pytest.mark.parametrize(
    "basis, golden", [("6,3,3,3,1,1,1,1", "worked_example"), ("1", "single_point"), ("2,1,1", "cusp")]
)
def test_dual_graph_dot_golden(basis, golden):
    code, text = run("dual-graph", "--point-basis", basis)
    assert code == 0
    assert text == (GOLDEN / f"{golden}.dot").read_text()


def test_dual_graph_json_and_ascii():
    payload = json.loads(run("dual-graph", "--point-basis", "6,3,3,3,1,1,1,1", "--format", "json")[1])
    assert payload["stars"] == [3, 7]
    assert payload["ends"] == [1, 2, 5, 8]
    assert payload["weights"] == [3, 2, 2, 4, 2, 2, 2, 1]
    cusp = json.loads(run("dual-graph", "--point-basis", "2,1,1", "--format", "json")[1])
    assert cusp["weights"] == [3, 2, 1] and cusp["edges"] == [[1, 3], [2, 3]]
    text = run("dual-graph", "--point-basis", "1", "--format", "ascii")[1]
    assert text == "e1 (w=1, a=1): -\n"


def test_invert_from_file(tmp_path):
    path = tmp_path / "jumps.txt"
    path.write_text("# cusp\n5/6, 7/6, 4/3\n3/2 5/3 11/6\n2\n")
    code, text = run("invert", "--jumps-file", str(path), "--format", "json")
    payload = json.loads(text)
    assert code == 0
    assert payload["point_basis"] == [2, 1, 1]
    assert payload["ord"] == 2 and payload["e"] == 6 and payload["lct"] == "5/6"


def test_invert_inline_and_curve_mode():
    assert "point_basis: 1\n" in run("invert", "--jumps", "2")[1]
    code, text = run("invert", "--jumps", "5/6", "--mode", "curve", "--format", "json")
    payload = json.loads(text)
    assert code == 0
    assert payload["multiplicities"] == [2, 1, 1] and payload["char_pairs"] == [[3, 2]]


def test_verify_single_and_random():
    code, text = run("verify", "--point-basis", "6,3,3,3,1,1,1,1", "--up-to", "2")
    assert code == 0 and text.startswith("PASS 6,3,3,3,1,1,1,1")
    assert run("verify", "--point-basis", "1", "--up-to", "5")[0] == 0
    code, text = run("verify", "--random", "6", "20", "15", "3", "--r-samples", "2")
    assert code == 0
    assert text.splitlines()[-1] == "15 passed, 0 failed"


def test_info():
    code, text = run("info", "--point-basis", "6,3,3,3,1,1,1,1")
    fields = dict(line.split(": ", 1) for line in text.splitlines())
    assert code == 0
    assert fields["puiseux"] == "3/2,7/3,2"
    assert fields["terminal satellites"] == "3,7"
    assert fields["generators"] == "(6,9) (3,22) (1,67)"
    cusp = dict(line.split(": ", 1) for line in run("info", "--point-basis", "2,1,1")[1].splitlines())
    assert (cusp["lct"], cusp["e"], cusp["ord"]) == ("5/6", "6", "2")
    single = dict(line.split(": ", 1) for line in run("info", "--point-basis", "1")[1].splitlines())
    assert (single["lct"], single["e"]) == ("2", "1")


@pytest.mark.parametrize(
    "argv, code",
    [
        (["jumps", "--point-basis", "2,1"], 3),
        (["jumps", "--point-basis", "2,x"], 2),
        (["jumps", "--point-basis", "2,1,1", "--up-to", "0.5"], 2),
        (["jumps", "--point-basis", "2,1,1", "--up-to", "0"], 3),
        (["jumps", "--char-pairs", "4:2"], 3),
        (["jumps", "--proximity", "4:4>1"], 3),
        (["invert", "--jumps", "1/3,2"], 4),
        (["invert", "--jumps", "5/6,7/6"], 4),
        (["invert", "--jumps-file", "/nonexistent/jumps.txt"], 2),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert run(*argv)[0] == code
    assert capsys.readouterr().err.startswith("jn: ")


def test_missing_input_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        run("verify")
    assert info.value.code == 2


@pytest.mark.skipif(shutil.which("jn") is None, reason="console script not installed")
def test_console_script():
    result = subprocess.run(
        ["jn", "jumps", "--point-basis", "2,1,1", "--up-to", "1"], capture_output=True, text=True
    )
    assert result.returncode == 0
    assert values(result.stdout) == ["5/6"]


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "jumpnum.cli", "jumps", "--point-basis", "1", "--up-to", "2"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0 and result.stdout == "2\tblock 0: s=0 t=0\n"
