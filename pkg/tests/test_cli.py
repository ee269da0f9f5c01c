from __future__ import annotations

import io
import json
import subprocess
import sys
from importlib import resources

import pytest

from stabkit.cli import main
from stabkit.families import cycle
from stabkit.graph import format_edge_list
from stabkit.stab import StabReport


def data(name: str) -> str:
    return str(resources.files("stabkit").joinpath("data", f"{name}.txt"))


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_triangle_square(self, capsys):
        code, out, _ = run(capsys, "analyze", "--input", data("triangle_square"))
        assert code == 0
        obj = json.loads(out)
        assert (obj["astab"], obj["dstab"]) == (4, 4)
        assert obj["bounds"] == {"astabBound": 8, "dstabBound": 6, "dstabBoundLoose": 6}

    def test_triangle(self, capsys):
        code, out, _ = run(capsys, "analyze", "-i", data("triangle"))
        obj = json.loads(out)
        assert code == 0 and obj["astab"] == obj["dstab"] == 2

    def test_round_trip_bytes(self, capsys):
        _, out, _ = run(capsys, "analyze", "--input", data("triangle_square"))
        assert StabReport.from_json(out).to_json() == out
        assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out

    def test_text(self, capsys):
        code, out, _ = run(capsys, "analyze", "--input", data("c5"), "--format", "text")
        assert code == 0 and out.startswith("astab = 3\ndstab = 3\n")

    def test_k_max(self, capsys):
        _, out, _ = run(capsys, "analyze", "--input", data("triangle"), "--k-max", "4")
        assert sorted(json.loads(out)["assByPower"], key=int) == ["1", "2", "3", "4"]

    def test_c4_bipartite(self, capsys):
        code, out, err = run(capsys, "analyze", "--input", data("c4"))
        assert code == 3 and not out
        assert "graph is bipartite" in err

    def test_disconnected(self, capsys, tmp_path):
        p = tmp_path / "g.txt"
        p.write_text("a b\nb c\nc a\nx y\n")
        code, _, err = run(capsys, "analyze", "--input", str(p))
        assert code == 3 and "graph is disconnected" in err

    def test_parse_error(self, capsys, tmp_path):
        p = tmp_path / "g.txt"
        p.write_text("a b c\n")
        code, _, err = run(capsys, "analyze", "--input", str(p))
        assert code == 2 and err.startswith("error:")

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "analyze", "--input", str(tmp_path / "nope.txt"))
        assert code == 2

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO(format_edge_list(cycle(7))))
        code, out, _ = run(capsys, "analyze", "--input", "-")
        assert code == 0 and json.loads(out)["astab"] == 4

    def test_vertex_cap(self, capsys):
        code, _, err = run(capsys, "analyze", "--input", data("triangle_hendecagon"), "--max-vertices", "12")
        assert code == 4 and "error:" in err


class TestArguments:
    def test_phi_forbids_k(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["phi", "--input", data("triangle_square"), "--k", "2"])
        assert exc.value.code == 2

    @pytest.mark.parametrize("cmd", ["ass", "oracle"])
    def test_k_required(self, cmd):
        with pytest.raises(SystemExit) as exc:
            main([cmd, "--input", data("triangle_square")])
        assert exc.value.code == 2

    def test_k_positive(self):
        with pytest.raises(SystemExit) as exc:
            main(["ass", "--input", data("triangle_square"), "--k", "0"])
        assert exc.value.code == 2

    def test_dot_only_for_decompose(self):
        with pytest.raises(SystemExit) as exc:
            main(["analyze", "--input", data("triangle_square"), "--format", "dot"])
        assert exc.value.code == 2

    def test_limits_env(self, capsys, monkeypatch):
        monkeypatch.setenv("STABKIT_LIMITS", "max_vertices=4")
        code, _, _ = run(capsys, "analyze", "--input", data("triangle_square"))
        assert code == 4


class TestOtherCommands:
    def test_ass(self, capsys):
        code, out, _ = run(capsys, "ass", "--input", data("triangle_square"), "--k", "4")
        obj = json.loads(out)
        assert code == 0 and obj["k"] == 4
        assert obj["primes"][0] == list("abcdefgh")
        assert list("abcdefg") in obj["primes"]

    def test_phi(self, capsys):
        code, out, _ = run(capsys, "phi", "--input", data("triangle_square"))
        obj = json.loads(out)
        assert code == 0
        assert (obj["phi"], obj["psi"], obj["nuStar"]) == (1, 2, 5)
        assert len(obj["criticalMaking"]) == 3
        assert sum(obj["replication"].values()) == 3

    def test_phi_text(self, capsys):
        code, out, _ = run(capsys, "phi", "--input", data("triangle_square"), "-f", "text")
        assert code == 0 and "phi = 1\npsi = 2\nnu* = 5\n" in out

    def test_decompose_formats(self, capsys):
        _, out, _ = run(capsys, "decompose", "--input", data("triangle_square"))
        obj = json.loads(out)
        assert obj["evenEars"] == 1 and obj["bridges"] == 2
        _, dot, _ = run(capsys, "decompose", "--input", data("triangle_square"), "--format", "dot")
        assert dot.lstrip().startswith("graph") and 'color="red"' in dot
        _, text, _ = run(capsys, "decompose", "--input", data("triangle_square"), "--format", "text")
        assert len(text.splitlines()) == 4

    def test_oracle(self, capsys):
        code, out, _ = run(capsys, "oracle", "--input", data("triangle"), "--k", "2")
        obj = json.loads(out)
        assert code == 0 and [2, 2, 2] in obj["components"]
        assert len(obj["components"]) == 7
        _, text, _ = run(capsys, "oracle", "--input", data("triangle"), "--k", "2", "-f", "text")
        assert "(v1^2, v2^2, v3^2)" in text

    def test_oracle_power_cap(self, capsys):
        code, _, _ = run(capsys, "oracle", "--input", data("triangle"), "--k", "5")
        assert code == 4

    @pytest.mark.parametrize("name", ["triangle", "c5"])
    def test_verify(self, capsys, name):
        code, out, _ = run(capsys, "verify", "--input", data(name), "--k-max", "3")
        obj = json.loads(out)
        assert code == 0 and obj["agree"] and [r["k"] for r in obj["rows"]] == [1, 2, 3]

    def test_verify_c5_maximal_at_three(self, capsys):
        _, out, _ = run(capsys, "verify", "--input", data("c5"), "--k-max", "3")
        rows = json.loads(out)["rows"]
        full = ["v1", "v2", "v3", "v4", "v5"]
        assert [full in r["oracle"] for r in rows] == [False, False, True]

    @pytest.mark.slow
    def test_verify_triangle_square(self, capsys):
        code, out, _ = run(capsys, "verify", "--input", data("triangle_square"), "--k-max", "4")
        assert code == 0 and json.loads(out)["agree"]

    def test_verify_cap(self, capsys):
        code, _, _ = run(capsys, "verify", "--input", data("triangle_hendecagon"))
        assert code == 4

    def test_corpus_small(self, capsys):
        code, out, _ = run(capsys, "corpus", "--size", "5")
        obj = json.loads(out)
        assert code == 0 and obj["graphs"] == 20

    def test_corpus_random(self, capsys):
        code, out, _ = run(capsys, "corpus", "--size", "6", "--samples", "10", "--seed", "3")
        assert code == 0
        again = run(capsys, "corpus", "--size", "6", "--samples", "10", "--seed", "3")[1]
        assert out == again

    def test_corpus_cap(self, capsys):
        code, _, err = run(capsys, "corpus", "--size", "8")
        assert code == 4 and "error:" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stabkit", "analyze", "--input", data("c4")],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 3 and "graph is bipartite" in proc.stderr
