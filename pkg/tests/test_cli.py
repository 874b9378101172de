import io
import json
import subprocess
import sys

import pytest

from nutkit.cli import EXIT_BUDGET, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, run
from nutkit.graph import make_antiprism, parse_graph6, to_graph6


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def adjlist(seed_by_key, d, n):
    return seed_by_key[(d, n)].graph.to_adjlist()


def test_census_rows():
    code, out, _ = call("census", "-d", "4", "--orders", "8..12")
    assert code == EXIT_OK
    assert out.splitlines() == ["8 1", "10 12", "12 269"]


def test_census_show_zero_and_json():
    code, out, _ = call("census", "-d", "8", "--orders", "12..13", "--show-zero")
    assert out.splitlines() == ["12 24", "13 0"]
    code, out, _ = call("census", "-d", "5", "--orders", "9..12", "--json")
    assert json.loads(out) == {"degree": 5, "rows": [{"order": 10, "count": 9}, {"order": 12, "count": 4}]}


def test_check_seed(seed_by_key):
    code, out, _ = call("check", adjlist(seed_by_key, 6, 12))
    assert code == EXIT_OK and out == "Nut, nullity 1\n"


def test_check_witness_and_json():
    g6 = to_graph6(make_antiprism(4))
    code, out, _ = call("check", g6, "--witness")
    lines = out.splitlines()
    assert lines[0] == "Nut, nullity 1"
    assert lines[1].startswith("witness: ")
    code, out, _ = call("check", "A_", "--json")
    assert json.loads(out) == {"n": 2, "nullity": 0, "classification": "NonSingular"}


def test_check_from_file_and_stdin(tmp_path, monkeypatch):
    path = tmp_path / "g.txt"
    path.write_text("{0: 1 2; 1: 0 2; 2: 0 1}\n")
    code, out, _ = call("check", str(path))
    assert out == "NonSingular, nullity 0\n"
    monkeypatch.setattr(sys, "stdin", io.StringIO("Bg\n"))
    code, out, _ = call("check", "-")
    assert out == "SingularNonCore, nullity 1\n"


def test_extend_and_detect(seed_by_key):
    code, out, _ = call("extend", adjlist(seed_by_key, 5, 10), "--vertex", "0")
    assert code == EXIT_OK
    h = parse_graph6(out.strip())
    assert h.n == 20 and h.is_regular(5)
    code, out, _ = call("detect", out.strip())
    assert out.startswith("base ") and out.strip().endswith("pivot 0")
    code, out, _ = call("detect", adjlist(seed_by_key, 4, 8))
    assert out == "seed\n"


def test_extend_adjlist_output(seed_by_key):
    code, out, _ = call("extend", adjlist(seed_by_key, 4, 8), "-v", "1", "--output-format", "adjlist")
    assert out.startswith("{0:")


def test_generate_stream_and_count():
    code, out, _ = call("generate", "-n", "10", "-d", "3")
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 21
    code, out, _ = call("generate", "-n", "10", "-d", "3", "--count-only")
    assert out == "21\n"
    code, out, _ = call("generate", "-n", "10", "-d", "3", "--connected", "--count-only")
    assert out == "19\n"
    code, out, _ = call("generate", "-n", "12", "-d", "3", "--nut-only", "--count-only")
    assert out == "9\n"
    code, out, _ = call("generate", "-n", "12", "-d", "3", "--girth", "5")
    assert len(out.splitlines()) == 2


def test_generate_workers_byte_identical():
    a = call("generate", "-n", "11", "-d", "4", "--workers", "1")[1]
    b = call("generate", "-n", "11", "-d", "4", "--workers", "2")[1]
    assert a == b and a


def test_certify_output(tmp_path):
    code, out, _ = call("certify", "-d", "5")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["degree"] == 5 and doc["claimed_set"]["threshold"] == 10
    path = tmp_path / "cert.json"
    code, _, _ = call("certify", "-d", "5", "--strict", "--out", str(path))
    assert path.read_text() == out
    code, out2, _ = call("certify", "-d", "5", "--trusting")
    assert json.loads(out2)["exclusions"][0]["mode"] == "trusting"


def test_seeds():
    code, out, _ = call("seeds", "-d", "5")
    assert [ln.split()[:2] for ln in out.splitlines()] == [["5", str(n)] for n in (10, 12, 14, 16, 18)]
    code, out, _ = call("seeds", "--validate")
    assert code == EXIT_OK and out.splitlines()[-1] == "91 seeds valid"


def test_vt_commands():
    code, out, _ = call("vt", to_graph6(make_antiprism(5)))
    assert out == "vertex-transitive\n"
    code, out, _ = call("vt", "Bg")
    assert out.startswith("not vertex-transitive")
    code, out, _ = call("vt-pair", "-n", "14", "-d", "6")
    assert out == "fail: n != 0 mod 4\n"


@pytest.mark.parametrize("argv, code", [
    (["generate", "-n", "7", "-d", "3"], EXIT_USAGE),
    (["check", "{0: 1; 1: 2}"], EXIT_USAGE),
    (["check", "A`"], EXIT_USAGE),
    (["extend", "C~", "--vertex", "0"], EXIT_DOMAIN),
    (["extend", "A_", "--vertex", "5"], EXIT_USAGE),
    (["census", "-d", "4", "--orders", "14..14", "--budget", "0.000001"], EXIT_BUDGET),
    (["certify", "-d", "9", "--budget", "0.000001"], EXIT_BUDGET),
    (["census", "-d", "4", "--orders", "9..x"], EXIT_USAGE),
    (["frobnicate"], EXIT_USAGE),
    (["generate", "-n", "8", "-d", "3", "--workers", "0"], EXIT_USAGE),
    (["certify", "-d", "12"], EXIT_USAGE),
])
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_errors_go_to_stderr():
    code, out, err = call("extend", "C~", "--vertex", "0")
    assert out == "" and "NotANut" in err


def test_env_workers(monkeypatch):
    monkeypatch.setenv("NUTKIT_WORKERS", "2")
    from nutkit.regular import default_workers

    assert default_workers() == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nutkit", "vt-pair", "-n", "8", "-d", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("pass")
