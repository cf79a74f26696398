import io
import json
import subprocess
import sys

import pytest

from funcdigraphs.cli import main, parse_component, parse_digraph, render
from funcdigraphs.components import generate_components
from funcdigraphs.digraphs import generate_digraphs


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


GOLDEN_C4 = """\
[[1],[1],[1],[1]]
[[1],[1],[2,1]]
[[1],[3,2,1]]
[[4,3,2,1]]
[[2,1],[2,1]]
[[4,1,2,1]]
[[1],[3,1,1]]
[[4,3,1,1]]
[[4,1,1,1]]
"""


def test_gen_connected_4(capsys):
    status, out, _ = run(capsys, "gen", "--connected", "-n", "4")
    assert status == 0
    assert out == GOLDEN_C4


def test_gen_digraphs_4(capsys):
    status, out, _ = run(capsys, "gen", "-n", "4")
    assert status == 0
    lines = out.splitlines()
    assert len(lines) == 19
    assert lines[0] == "[[[1]],[[1]],[[1]],[[1]]]"
    assert lines[-1] == "[[[4,1,1,1]]]"


def test_gen_count(capsys):
    status, out, _ = run(capsys, "gen", "-n", "4", "--count")
    assert (status, out) == (0, "19\n")
    status, out, _ = run(capsys, "gen", "--connected", "-n", "7", "--count")
    assert (status, out) == (0, "125\n")


def test_gen_n1(capsys):
    status, out, _ = run(capsys, "gen", "-n", "1")
    assert (status, out) == (0, "[[[1]]]\n")


def test_gen_limit(capsys):
    status, out, _ = run(capsys, "gen", "-n", "4", "--limit", "3")
    assert status == 0
    assert len(out.splitlines()) == 3


def test_gen_start_resumes_connected(capsys):
    status, out, _ = run(capsys, "gen", "--connected", "-n", "4",
                         "--start", "[[1],[1],[2,1]]")
    assert status == 0
    assert out == "".join(line + "\n" for line in GOLDEN_C4.splitlines()[2:])


def test_gen_start_resumes_digraphs(capsys):
    status, out, _ = run(capsys, "gen", "-n", "4", "--start", "[[[1],[1]],[[2,1]]]")
    assert status == 0
    assert out.splitlines()[0] == "[[[2,1]],[[2,1]]]"  # G9 -> G10
    # resuming from the last code yields nothing
    status, out, _ = run(capsys, "gen", "-n", "4", "--start", "[[[4,1,1,1]]]")
    assert (status, out) == (0, "")


def test_gen_rejects_bad_start(capsys):
    cases = [
        ("[[2,1],[1]]", "rotation"),          # component not canonical
        ("[[1],[3,1]]", "invalid"),            # invalid tree code
        ("[[1],[1],[1]]", "expected 4"),       # wrong size
        ("not json", "unparsable"),
    ]
    for code, needle in cases:
        status, _, err = run(capsys, "gen", "--connected", "-n", "4", "--start", code)
        assert status == 2, code
        assert needle in err, (code, err)
    status, _, err = run(capsys, "gen", "-n", "4", "--start", "[[[2,1]],[[1],[1]]]")
    assert status == 2
    assert "generation order" in err
    status, _, err = run(capsys, "gen", "-n", "5", "--start", "[[[2,1]],[[1],[1],[1]],[[1],[1]]]")
    assert status == 2
    assert "nondecreasing" in err


def test_gen_rejects_bad_size(capsys):
    status, _, err = run(capsys, "gen", "-n", "0")
    assert status == 2
    assert "size" in err
    status, _, err = run(capsys, "gen", "-n", str(10**6 + 1))
    assert status == 2


def test_gen_format_json_matches_text(capsys):
    _, text, _ = run(capsys, "gen", "-n", "4", "--format", "text")
    _, as_json, _ = run(capsys, "gen", "-n", "4", "--format", "json")
    assert text == as_json
    for line in text.splitlines():
        json.loads(line)


def test_gen_deterministic(capsys):
    _, first, _ = run(capsys, "gen", "--connected", "-n", "6")
    _, second, _ = run(capsys, "gen", "--connected", "-n", "6")
    assert first == second


def test_render_parse_round_trip():
    for n in range(1, 7):
        for c in generate_components(n):
            assert parse_component(render([list(t) for t in c])) == c
        for g in generate_digraphs(n):
            assert parse_digraph(render([[list(t) for t in c] for c in g])) == g


def test_canon_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("0 0 0 0\n1 2 3 0\n"))
    status, out, _ = run(capsys, "canon")
    assert status == 0
    assert out == "[[[4,1,1,1]]]\n[[[1],[1],[1],[1]]]\n"


def test_canon_file(capsys, tmp_path):
    path = tmp_path / "tables.txt"
    path.write_text("0 0 1 1\n\n0 0 0 1\n")  # blank lines are skipped
    status, out, _ = run(capsys, "canon", str(path))
    assert status == 0
    assert out == "[[[4,3,1,1]]]\n[[[4,1,2,1]]]\n"


def test_canon_check_iso(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("0 0 2 2\n1 1 2 2\n0 0 2 2\n2 2 0 0\n"))
    status, out, _ = run(capsys, "canon", "--check-iso")
    assert status == 0
    assert out == "iso\nnon-iso\n"


def test_canon_parse_error_reports_line(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("0 0\n1 x\n"))
    status, _, err = run(capsys, "canon")
    assert status == 2
    assert "line 2" in err
    monkeypatch.setattr(sys, "stdin", io.StringIO("0 5\n"))
    status, _, err = run(capsys, "canon")
    assert status == 2
    assert "line 1" in err


def test_verify(capsys):
    status, out, _ = run(capsys, "verify", "4")
    assert status == 0
    assert [line for line in out.splitlines()] == [
        "n=1: digraphs=1 components=1",
        "n=2: digraphs=3 components=2",
        "n=3: digraphs=7 components=4",
        "n=4: digraphs=19 components=9",
    ]


def test_verify_guard(capsys):
    status, _, err = run(capsys, "verify", "9")
    assert status == 2
    assert "at most 8" in err
    status, _, _ = run(capsys, "verify", "0")
    assert status == 2


def test_verify_n1(capsys):
    status, out, _ = run(capsys, "verify", "1")
    assert status == 0
    assert "n=1" in out


def test_bench(capsys):
    status, out, _ = run(capsys, "bench", "4", "--limit", "9", "--connected")
    assert status == 0
    assert "n=4: calls=9" in out
    assert "slope(max): n/a" in out
    status, out, _ = run(capsys, "bench", "1")
    assert status == 0
    assert "n=1: calls=1" in out
    assert "slope(max): n/a" in out
    status, out, _ = run(capsys, "bench", "4", "6", "--limit", "50")
    assert status == 0
    assert "slope(max): " in out
    assert "n/a" not in out


def test_bench_rejects_size_zero(capsys):
    status, _, err = run(capsys, "bench", "0")
    assert status == 2
    status, _, err = run(capsys, "bench", "4", "--limit", "0")
    assert status == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["gen"])  # missing required -n
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "funcdigraphs", "gen", "--connected", "-n", "4"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == GOLDEN_C4
