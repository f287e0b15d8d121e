import json

import pytest

from domforce.cli import main
from domforce.io import from_graph6, to_graph6
from domforce import families as fam


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_p3(capsys):
    code, out, _ = run(capsys, "compute", "--invariant", "fcd", "--g6", "Bg")
    assert code == 0 and out.splitlines()[0] == "2"
    code, out, _ = run(capsys, "compute", "--invariant", "fcd", "--g6", "Bg", "--json", "--method", "oracle")
    data = json.loads(out)
    assert data["value"] == 2 and data["witness"] == [0, 1] and data["method"] == "oracle"


def test_compute_from_file(capsys, tmp_path):
    f = tmp_path / "c5.txt"
    f.write_text("0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run(capsys, "compute", "--invariant", "maxleaf", "--file", str(f))
    assert code == 0 and out.startswith("2")


def test_exit_codes(capsys, tmp_path):
    f = tmp_path / "dis.txt"
    f.write_text("n 4\n0 1\n2 3\n")
    assert run(capsys, "compute", "--invariant", "fcd", "--file", str(f))[0] == 3
    q5 = to_graph6(fam.hypercube(5))
    assert run(capsys, "compute", "--invariant", "fd", "--g6", q5, "--budget", "100")[0] == 4
    assert run(capsys, "compute", "--invariant", "z", "--g6", "A")[0] == 5
    assert run(capsys, "trace", "--g6", "Bg", "--set", "0,x")[0] == 2
    assert run(capsys, "trace", "--g6", "Bg", "--set", "7")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["compute", "--invariant", "bogus", "--g6", "Bg"])
    assert info.value.code == 2


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--family", "petersen")
    assert code == 0 and from_graph6(out.strip()) == fam.petersen()
    code, out, _ = run(capsys, "generate", "--product", "corona", "--operands", "cycle:3", "complete:2")
    assert from_graph6(out.strip()) == fam.corona(fam.cycle(3), fam.complete(2))
    code, out, _ = run(capsys, "generate", "--product", "rooted_product", "--operands", "path:3", "path:4",
                       "--root", "1", "--format", "edges")
    assert out.startswith("n 12\n")
    code, out, _ = run(capsys, "generate", "--family", "grid", "--params", "2", "3", "--format", "dot")
    assert out.startswith("graph G {")
    assert run(capsys, "generate", "--family", "grid", "--params", "5", "3")[0] == 5


def test_trace(capsys):
    code, out, _ = run(capsys, "trace", "--g6", "Ch", "--set", "0")
    assert code == 0 and from_graph6("Ch") == fam.path(4)
    assert out.splitlines()[:3] == ["0 -> 1", "1 -> 2", "2 -> 3"]
    code, out, _ = run(capsys, "trace", "--g6", "Bw", "--set", "0,1")
    assert out.splitlines()[0] == "0 -> 2" and "zero forcing" in out


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "grid", "--p", "11", "--q", "11", "--check")
    assert code == 0 and "47 vertices" in out and out.strip().endswith("verified")
    code, out, _ = run(capsys, "witness", "grid", "--p", "4", "--q", "7", "--check", "--special-p4")
    assert code == 1 and "FAILED" in out


def test_verify(capsys, tmp_path):
    report = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "verify", "--suite", "families", "--json", str(report), "--no-timing")
    assert code == 0 and "0 unexpected failures" in out
    rows = [json.loads(x) for x in report.read_text().splitlines()]
    assert all(r["status"] in ("MATCH", "IN_INTERVAL", "WITNESS_VERIFIED", "SKIPPED_BUDGET") for r in rows)
    assert all(r["elapsed_ms"] == 0 for r in rows)
    # an empty allowlist turns documented discrepancies into a failing exit
    empty = tmp_path / "none.txt"
    empty.write_text("")
    assert run(capsys, "verify", "--suite", "splitting", "--allowlist", str(empty))[0] == 1
    assert run(capsys, "verify", "--suite", "splitting")[0] == 0
