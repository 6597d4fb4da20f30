"""End-to-end CLI tests.

Happy paths are pinned to golden files: each verb is run twice and must
produce byte-identical output that matches the checked-in golden copy.
Regenerate with UPDATE_GOLDEN=1 after an intentional output change.
Error paths assert exit codes and the error JSON on stderr.
"""

import contextlib
import io
import json
import os
import pathlib
import subprocess
import sys

import pytest
from cli_cases import DATA, GOLDEN, GOLDEN_CASES

from deltamon import cli

HERE = pathlib.Path(__file__).parent


def run_cli(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = cli.main(list(argv))
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 1
    return code, out.getvalue(), err.getvalue()


def assert_golden(name: str, text: str) -> None:
    path = GOLDEN / name
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(text, encoding="utf-8")
    assert text == path.read_text(encoding="utf-8"), f"output differs from {name}"


class TestGoldenOutputs:
    @pytest.mark.parametrize(
        "name,argv", GOLDEN_CASES, ids=[name for name, _ in GOLDEN_CASES]
    )
    def test_matches_golden_and_reruns_identically(self, name, argv):
        code1, out1, err1 = run_cli(*argv)
        code2, out2, err2 = run_cli(*argv)
        assert code1 == code2 == 0
        assert err1 == err2 == ""
        assert out1 == out2
        assert_golden(name, out1)

    def test_outputs_are_canonical_json(self):
        for name, _ in GOLDEN_CASES:
            text = (GOLDEN / name).read_text(encoding="utf-8")
            payload = json.loads(text)
            assert payload["schema"] == 1
            assert text == json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def test_spawned_process_matches_golden(self):
        argv = GOLDEN_CASES[0][1]
        proc = subprocess.run(
            [sys.executable, "-m", "deltamon.cli", *argv],
            capture_output=True, text=True, cwd=str(HERE.parent),
        )
        assert proc.returncode == 0
        assert_golden(GOLDEN_CASES[0][0], proc.stdout)


class TestErrorPaths:
    def run_err(self, *argv):
        code, out, err = run_cli(*argv)
        assert out == ""
        return code, json.loads(err)

    def test_missing_file_is_usage(self):
        code, body = self.run_err("member", str(DATA / "missing.ideal"), "y1")
        assert code == 1
        assert body["error"]["code"] == "usage"

    def test_parse_error_carries_line_number(self):
        code, body = self.run_err("member", str(DATA / "broken.ideal"), "y1")
        assert code == 1
        assert body["error"]["code"] == "parse"
        assert "line 5" in body["error"]["message"]

    def test_decompose_wrong_kind_is_precondition(self):
        code, body = self.run_err("decompose", str(DATA / "squares.ideal"))
        assert code == 3
        assert body["error"]["code"] == "precondition"

    def test_decompose_choice_explosion_is_cap_exceeded(self):
        code, body = self.run_err("decompose", str(DATA / "wide_cross.ideal"))
        assert code == 2
        assert body["error"]["code"] == "cap_exceeded"
        assert "1048576" in body["error"]["message"]

    def test_dual_point_below_degrees_is_precondition(self):
        code, body = self.run_err(
            "dual", str(DATA / "cross.ideal"), "--point", "0,0"
        )
        assert code == 3
        assert body["error"]["code"] == "precondition"

    def test_dual_unparseable_point(self):
        code, body = self.run_err(
            "dual", str(DATA / "cross.ideal"), "--point", "a,b"
        )
        assert code == 1
        assert body["error"]["code"] == "parse"

    def test_unknown_closure_kind_is_parse(self):
        code, body = self.run_err(
            "closure", str(DATA / "squares.ideal"), "--kind", "mystery"
        )
        assert code == 1
        assert body["error"]["code"] == "parse"

    def test_missing_required_option_exits_one(self):
        code, out, err = run_cli("closure", str(DATA / "squares.ideal"))
        assert code == 1
        assert out == ""
        assert "--kind" in err

    def test_unknown_verb_exits_one(self):
        code, out, err = run_cli("conjure")
        assert code == 1
        assert "invalid choice" in err


class TestParserShape:
    def test_server_option_parses_in_both_positions(self):
        parser = cli.build_parser()
        before = parser.parse_args(
            ["--server", "http://h:1", "reduce", "file.ideal"]
        )
        after = parser.parse_args(
            ["reduce", "file.ideal", "--server", "http://h:1"]
        )
        assert before.server == after.server == "http://h:1"
        assert parser.parse_args(["reduce", "file.ideal"]).server is None

    def test_serve_defaults(self):
        args = cli.build_parser().parse_args(["serve"])
        assert args.host == "127.0.0.1"
        assert args.port == 8321

    def test_check_rejects_unknown_predicate(self):
        code, out, err = run_cli(
            "check", str(DATA / "squares.ideal"), "--predicate", "sorted"
        )
        assert code == 1
        assert "invalid choice" in err
