import json

import pytest

from strees.cli import main
from strees.errors import SpanMismatch
from strees.fixtures import FIXTURE_NAMES, fixture_path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDecompose:
    def test_json_matches_published_parts(self, capsys):
        code, out, _ = run(
            capsys, "decompose", fixture_path("tree18"), "--format", "json"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["support_parts"] == [[1, 2, 3], [4, 5, 6, 7, 8], [9, 10, 11, 12]]
        assert obj["nonsingular_parts"] == [[13, 14], [15, 16, 17, 18]]

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "decompose", fixture_path("tree8"))
        assert code == 0
        assert "support: 2 3 4 5 7 8" in out
        assert "core: 1 6" in out

    def test_dot_output(self, capsys):
        code, out, _ = run(
            capsys, "decompose", fixture_path("tree18"), "--format", "dot"
        )
        assert code == 0
        assert out.startswith("graph tree {")

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("1 2\n2 3\n"))
        code, out, _ = run(capsys, "decompose", "-")
        assert code == 0
        assert "support: 1 3" in out


class TestVectorCommands:
    def test_null_basis_four_vectors(self, capsys):
        code, out, _ = run(capsys, "null-basis", fixture_path("tree18"))
        assert code == 0
        assert len(out.strip().split("\n")) == 4

    def test_null_basis_json(self, capsys):
        code, out, _ = run(
            capsys, "null-basis", fixture_path("tree18"), "--format", "json"
        )
        obj = json.loads(out)
        assert len(obj["vectors"]) == 4
        for vec in obj["vectors"]:
            assert all(e["coeff"] in (-1, 1) for e in vec)

    def test_range_basis_count(self, capsys):
        code, out, _ = run(
            capsys, "range-basis", fixture_path("tree18"), "--format", "json"
        )
        obj = json.loads(out)
        assert len(obj["vectors"]) == 14
        assert len(obj["roles"]) == 14

    def test_trivial_null_space(self, capsys, tmp_path):
        p = tmp_path / "p2.edges"
        p.write_text("1 2\n")
        code, out, _ = run(capsys, "null-basis", str(p))
        assert code == 0
        assert "trivial" in out


class TestClassifyInvariants:
    def test_classify_nonsingular_pair(self, capsys, tmp_path):
        p = tmp_path / "p2.edges"
        p.write_text("1 2\n")
        code, out, _ = run(capsys, "classify", str(p))
        assert code == 0
        assert "nonsingular_tree: true" in out
        assert "nullity: 0" in out

    def test_invariants_json(self, capsys):
        code, out, _ = run(
            capsys, "invariants", fixture_path("tree8"), "--format", "json"
        )
        obj = json.loads(out)
        assert obj["rank"] == 4
        assert obj["max_matching_count"] == 11
        assert "rank_is_twice_matching" in obj["checks"]


class TestBuildCommands:
    def test_stellare(self, capsys, tmp_path):
        p = tmp_path / "k1.edges"
        p.write_text("0\n")
        code, out, _ = run(capsys, "stellare", str(p), "--ks", "2")
        assert code == 0
        assert out.count("\n") == 2  # a path on 3 vertices has 2 edges

    def test_stellare_bad_ks(self, capsys, tmp_path):
        p = tmp_path / "k1.edges"
        p.write_text("0\n")
        code, _, err = run(capsys, "stellare", str(p), "--ks", "2,x")
        assert code == 1
        assert "error" in err

    def test_coalesce(self, capsys, tmp_path):
        plan = {
            "parts": [
                {"tree": {"vertices": [1, 2, 3], "edges": [[1, 2], [1, 3]]}, "attach": 2},
                {"tree": {"vertices": [1, 2, 3], "edges": [[1, 2], [1, 3]]}, "attach": 2},
            ]
        }
        p = tmp_path / "plan.json"
        p.write_text(json.dumps(plan))
        code, out, _ = run(capsys, "coalesce", str(p), "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert len(obj["tree"]["vertices"]) == 5
        assert obj["star_vertex"] in obj["tree"]["vertices"]

    def test_coalesce_bad_plan(self, capsys, tmp_path):
        p = tmp_path / "plan.json"
        p.write_text("{}")
        code, _, err = run(capsys, "coalesce", str(p))
        assert code == 1

    def test_random_deterministic(self, capsys):
        code1, out1, _ = run(capsys, "random", "--n", "9", "--seed", "5")
        code2, out2, _ = run(capsys, "random", "--n", "9", "--seed", "5")
        assert code1 == code2 == 0
        assert out1 == out2

    def test_enumerate(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "3")
        assert code == 0
        blocks = [b for b in out.split("\n\n") if b.strip()]
        assert len(blocks) == 3


class TestVerifyCommand:
    def test_fixtures_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--fixtures")
        assert code == 0
        assert "FAIL" not in out
        assert "0 failures" in out

    def test_single_tree(self, capsys):
        code, out, _ = run(capsys, "verify", fixture_path("tree8"))
        assert code == 0
        assert "PASS null_basis" in out

    def test_exhaustive_small(self, capsys):
        code, out, _ = run(capsys, "verify", "--exhaustive-n", "4", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["ok"] is True


class TestErrorPaths:
    def test_bad_input_exit_1(self, capsys, tmp_path):
        p = tmp_path / "bad.edges"
        p.write_text("1 2\n2 3\n3 1\n")
        code, _, err = run(capsys, "decompose", str(p))
        assert code == 1
        assert "error" in err

    def test_missing_file_exit_1(self, capsys):
        code, _, err = run(capsys, "decompose", "/no/such/file")
        assert code == 1

    def test_unknown_flag_exit_1(self, capsys):
        code, _, err = run(capsys, "decompose", "--nope")
        assert code == 1

    def test_no_command_exit_1(self, capsys):
        code, _, err = run(capsys)
        assert code == 1

    def test_double_input_exit_1(self, capsys, tmp_path):
        p = tmp_path / "t.edges"
        p.write_text("1 2\n")
        code, _, err = run(capsys, "decompose", str(p), "-i", str(p))
        assert code == 1

    def test_verification_failure_exit_2(self, capsys, monkeypatch):
        def boom(args):
            raise SpanMismatch("forced")

        monkeypatch.setitem(
            __import__("strees.cli", fromlist=["_HANDLERS"])._HANDLERS,
            "decompose",
            boom,
        )
        code, _, err = run(capsys, "decompose", fixture_path("tree8"))
        assert code == 2
        assert "verification failure" in err


class TestDeterminism:
    @pytest.mark.parametrize("name", FIXTURE_NAMES)
    def test_repeat_runs_identical(self, capsys, name):
        first = run(capsys, "decompose", fixture_path(name), "--format", "json")
        second = run(capsys, "decompose", fixture_path(name), "--format", "json")
        assert first == second
