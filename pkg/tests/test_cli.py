"""End-to-end command tests driven through main(argv).

Everything runs in-process against tmp_path files; one subprocess smoke
test at the end checks that module execution propagates exit codes.
"""

import json
import subprocess
import sys

import pytest

from bracelab import (
    BraceDocument,
    LeftBrace,
    make_group,
    parse_brace_document,
    parse_solution_document,
    serialize_brace_document,
    serialize_solution_document,
    SolutionDocument,
)
from bracelab.cli import main
from bracelab.census import enumerate_braces
from bracelab.solutions import from_brace


def brace_file(tmp_path, brace, name):
    path = tmp_path / name
    path.write_text(serialize_brace_document(BraceDocument.from_brace(brace)))
    return str(path)


@pytest.fixture
def t6_file(tmp_path):
    return brace_file(tmp_path, LeftBrace.trivial(make_group((6,))), "t6.json")


@pytest.fixture
def b4_file(tmp_path, b4):
    return brace_file(tmp_path, b4, "b4.json")


@pytest.fixture
def zero_socle_file(tmp_path, census):
    return brace_file(tmp_path, census(8).entries[16].brace, "z8.json")


class TestValidate:
    def test_valid_file(self, t6_file, capsys):
        assert main(["validate", t6_file]) == 0
        assert capsys.readouterr().out == "valid brace of order 6, additive type [6]\n"

    def test_invalid_table_exits_1_with_witness(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "type": "brace",
            "order": 3,
            "invariant_factors": [3],
            "operation": "circle_table",
            "table": [[0, 1, 2], [1, 0, 2], [2, 1, 0]],
        }))
        assert main(["validate", str(path)]) == 1
        err = capsys.readouterr().err
        assert err.startswith("check failed:")
        assert "[witness (" in err

    def test_truncated_json_exits_2(self, tmp_path, capsys):
        path = tmp_path / "trunc.json"
        path.write_text('{"type": "brace", "order": 3')
        assert main(["validate", str(path)]) == 2
        assert capsys.readouterr().err.startswith("error: not valid JSON")

    def test_missing_file_exits_2(self, tmp_path, capsys):
        assert main(["validate", str(tmp_path / "nope.json")]) == 2
        assert "error:" in capsys.readouterr().err


class TestAnalyze:
    def test_text_output_trivial(self, t6_file, capsys):
        assert main(["analyze", t6_file]) == 0
        assert capsys.readouterr().out == (
            "order: 6\n"
            "invariant factors: [6]\n"
            "socle size: 6\n"
            "multipermutation level: 1\n"
            "radical chain index: 2\n"
            "sylow orders: [2, 3]\n"
            "two-sided: yes\n"
            "minus rule: yes\n"
            "left nilpotency index: 2\n"
            "adjoint group nilpotent: yes\n"
            "ring nilpotent: yes\n"
        )

    def test_text_output_infinite_level(self, zero_socle_file, capsys):
        # left nilpotent of index 4 yet no finite level: the two notions
        # genuinely differ and the report must not conflate them
        assert main(["analyze", zero_socle_file]) == 0
        out = capsys.readouterr().out
        assert "socle size: 1\n" in out
        assert "multipermutation level: not finite\n" in out
        assert "radical chain index: not finite\n" in out
        assert "left nilpotency index: 4\n" in out
        assert "ring nilpotent: n/a (one-sided)\n" in out

    def test_json_output_matches_api(self, b4_file, b4, capsys):
        assert main(["analyze", "--json", b4_file]) == 0
        info = json.loads(capsys.readouterr().out)
        assert list(info) == [
            "order", "invariant_factors", "socle_size", "multipermutation_level",
            "radical_chain_index", "sylow_orders", "two_sided", "minus_rule",
            "left_nil_index", "adjoint_nilpotent", "ring_nilpotent",
        ]
        assert info["order"] == 4
        assert info["socle_size"] == b4.socle().size
        assert info["multipermutation_level"] == b4.multipermutation_level()
        assert info["radical_chain_index"] == b4.radical_chain_index()
        traits = b4.classify()
        assert info["two_sided"] == traits.is_two_sided
        assert info["left_nil_index"] == traits.left_nil_index


class TestEnumerate:
    def test_summary_plural(self, capsys):
        assert main(["enumerate", "--order", "4"]) == 0
        assert capsys.readouterr().out == "order 4: 4 classes\n"

    def test_summary_singular(self, capsys):
        assert main(["enumerate", "--order", "1"]) == 0
        assert capsys.readouterr().out == "order 1: 1 class\n"

    def test_out_writes_valid_documents(self, tmp_path, capsys):
        out = tmp_path / "cdir"
        assert main(["enumerate", "--order", "4", "--out", str(out)]) == 0
        text = capsys.readouterr().out
        assert f"wrote 4 documents to {out}\n" in text
        names = sorted(p.name for p in out.iterdir())
        assert names == [f"brace_4_{i:03d}.json" for i in range(4)]
        for name in names:
            assert main(["validate", str(out / name)]) == 0

    def test_slow_order_needs_flag(self, capsys):
        assert main(["enumerate", "--order", "36"]) == 3
        err = capsys.readouterr().err
        assert err.startswith("resource limit:")
        assert "slow flag" in err

    def test_order_zero_is_usage_error(self, capsys):
        assert main(["enumerate", "--order", "0"]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_env_bound_shrinks_reach(self, monkeypatch, capsys):
        monkeypatch.setenv("BRACELAB_MAX_ORDER", "5")
        assert main(["enumerate", "--order", "6"]) == 3
        assert capsys.readouterr().err.startswith("resource limit:")

    def test_env_bound_must_be_integer(self, monkeypatch, capsys):
        monkeypatch.setenv("BRACELAB_MAX_ORDER", "abc")
        assert main(["enumerate", "--order", "4"]) == 2
        assert "BRACELAB_MAX_ORDER" in capsys.readouterr().err

    def test_env_bound_must_be_positive(self, monkeypatch, capsys):
        monkeypatch.setenv("BRACELAB_MAX_ORDER", "0")
        assert main(["enumerate", "--order", "4"]) == 2
        assert "positive" in capsys.readouterr().err


class TestSolutionCommands:
    def test_from_brace_emits_document(self, b4_file, b4, capsys):
        assert main(["solution", "from-brace", b4_file]) == 0
        out = capsys.readouterr().out
        doc = parse_solution_document(out)
        assert doc.size == 4
        assert doc.sigma == from_brace(b4).sigma

    def test_check_reports_group_order(self, tmp_path, b4, capsys):
        path = tmp_path / "s.json"
        path.write_text(serialize_solution_document(
            SolutionDocument.from_solution(from_brace(b4))
        ))
        assert main(["solution", "check", str(path)]) == 0
        assert capsys.readouterr().out == (
            "valid involutive solution of size 4, permutation group order 2\n"
        )

    def test_check_rejects_braid_failure(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "type": "solution",
            "size": 2,
            "sigma": [[1, 0], [0, 1]],
            "tau": [[0, 1], [0, 1]],
        }))
        assert main(["solution", "check", str(path)]) == 1
        assert capsys.readouterr().err.startswith("check failed:")

    def solution_file(self, tmp_path, brace, name="sol.json"):
        path = tmp_path / name
        path.write_text(serialize_solution_document(
            SolutionDocument.from_solution(from_brace(brace))
        ))
        return str(path)

    def test_retract_tower(self, tmp_path, b4, capsys):
        path = self.solution_file(tmp_path, b4)
        assert main(["solution", "retract", "--tower", str(path)]) == 0
        assert capsys.readouterr().out == "4 -> 2 -> 1\nmultipermutation level: 2\n"

    def test_retract_tower_irretractable(self, tmp_path, census, capsys):
        path = self.solution_file(tmp_path, census(8).entries[16].brace)
        assert main(["solution", "retract", "--tower", str(path)]) == 0
        assert capsys.readouterr().out == (
            "8\nmultipermutation level: none (tower stabilizes at size 8)\n"
        )

    def test_retract_once_emits_document(self, tmp_path, b4, capsys):
        path = self.solution_file(tmp_path, b4)
        assert main(["solution", "retract", str(path)]) == 0
        doc = parse_solution_document(capsys.readouterr().out)
        assert doc.size == 2


class TestProductCommands:
    def test_semidirect_with_action(self, tmp_path, capsys):
        t3 = brace_file(tmp_path, LeftBrace.trivial(make_group((3,))), "t3.json")
        t2 = brace_file(tmp_path, LeftBrace.trivial(make_group((2,))), "t2.json")
        act = tmp_path / "neg.json"
        act.write_text(json.dumps({
            "type": "action",
            "acting_order": 2,
            "target_order": 3,
            "maps": [[0, 1, 2], [0, 2, 1]],
        }))
        assert main([
            "product", "semidirect", t3, t2, "--action", str(act)
        ]) == 0
        captured = capsys.readouterr()
        assert captured.err == "semidirect product of order 6\n"
        doc = parse_brace_document(captured.out)
        assert doc.invariant_factors == (6,)
        brace = doc.to_brace()
        assert brace.socle().size == 3
        assert brace.multipermutation_level() == 2
        assert not brace.classify().is_two_sided

    def test_semidirect_action_order_mismatch(self, tmp_path, capsys):
        t3 = brace_file(tmp_path, LeftBrace.trivial(make_group((3,))), "t3.json")
        t2 = brace_file(tmp_path, LeftBrace.trivial(make_group((2,))), "t2.json")
        act = tmp_path / "act.json"
        act.write_text(json.dumps({
            "type": "action",
            "acting_order": 3,
            "target_order": 3,
            "maps": [[0, 1, 2], [0, 1, 2], [0, 1, 2]],
        }))
        assert main([
            "product", "semidirect", t3, t2, "--action", str(act)
        ]) == 2
        assert "action file is for orders 3 acting on 3" in capsys.readouterr().err

    def test_semidirect_default_trivial_action(self, tmp_path, capsys):
        t3 = brace_file(tmp_path, LeftBrace.trivial(make_group((3,))), "t3.json")
        t2 = brace_file(tmp_path, LeftBrace.trivial(make_group((2,))), "t2.json")
        assert main(["product", "semidirect", t3, t2]) == 0
        doc = parse_brace_document(capsys.readouterr().out)
        brace = doc.to_brace()
        assert brace.socle().size == 6  # direct sum of trivial braces is trivial

    def test_wreath(self, tmp_path, capsys):
        t2 = brace_file(tmp_path, LeftBrace.trivial(make_group((2,))), "t2.json")
        assert main(["product", "wreath", t2, t2]) == 0
        captured = capsys.readouterr()
        assert captured.err == "wreath product of order 8\n"
        doc = parse_brace_document(captured.out)
        assert doc.order == 8
        assert doc.invariant_factors == (2, 2, 2)

    def test_wreath_respects_env_bound(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("BRACELAB_MAX_ORDER", "7")
        t2 = brace_file(tmp_path, LeftBrace.trivial(make_group((2,))), "t2.json")
        assert main(["product", "wreath", t2, t2]) == 3
        assert capsys.readouterr().err.startswith("resource limit:")


class TestVerify:
    def test_small_run_passes(self, capsys):
        assert main(["verify", "--order-max", "6"]) == 0
        lines = capsys.readouterr().out.splitlines()
        summary = lines[-1]
        assert summary.startswith("orders 1..6:")
        assert " 0 fail," in summary
        for line in lines[:-1]:
            verdict = line.split()[0]
            assert verdict in ("pass", "hypothesis-not-met")

    def test_order_max_zero_is_usage_error(self, capsys):
        assert main(["verify", "--order-max", "0"]) == 2
        assert "--order-max" in capsys.readouterr().err

    def test_env_bound_caps_coverage(self, monkeypatch, capsys):
        monkeypatch.setenv("BRACELAB_MAX_ORDER", "4")
        assert main(["verify", "--order-max", "6"]) == 0
        assert capsys.readouterr().out.splitlines()[-1].startswith("orders 1..4:")


class TestParserBehavior:
    def test_no_arguments_is_usage_error(self):
        assert main([]) == 2

    def test_unknown_subcommand_is_usage_error(self):
        assert main(["frobnicate"]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        assert "bracelab" in capsys.readouterr().out

    def test_subprocess_exit_code(self, tmp_path):
        proc = subprocess.run(
            [sys.executable, "-m", "bracelab.cli", "enumerate", "--order", "36"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 3
        assert proc.stderr.startswith("resource limit:")
