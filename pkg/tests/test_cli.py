"""Command-line behaviour: output formats and exit codes."""

import json
import logging

import pytest

from multieuler import __version__
from multieuler.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main, run
from multieuler.exceptions import IntegralityException, NegativeEntryException
from multieuler.model.report import CheckResult


@pytest.fixture(autouse=True)
def restore_package_logger():
    # run() installs a stderr handler bound to the captured stream
    pkg = logging.getLogger("multieuler")
    saved = (pkg.level, list(pkg.handlers))
    yield
    pkg.setLevel(saved[0])
    pkg.handlers[:] = saved[1]


def _json(capsys):
    return json.loads(capsys.readouterr().out)


class TestCompute:
    """The compute subcommand."""

    def test_json_output(self, capsys):
        assert run(["compute", "--family", "S", "--n", "3"]) == EXIT_OK
        data = _json(capsys)
        assert data["schema"] == 1
        assert data["method"] == "rec"
        assert data["coeffs"] == ["1", "209", "1884", "2828", "811", "27"]

    @pytest.mark.parametrize("method", ["enum", "invseq", "grammar", "diffsys"])
    def test_methods(self, capsys, method):
        assert run(["compute", "--family", "P", "--n", "2", "--method", method]) == EXIT_OK
        assert _json(capsys)["coeffs"] == ["1", "4", "1"]

    def test_csv_output(self, capsys):
        assert run(["compute", "--family", "Q", "--n", "1", "--format", "csv"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines == ["family,n,k,value", "Q,1,0,1", "Q,1,1,2"]

    def test_text_output(self, capsys):
        assert run(["compute", "--family", "T", "--n", "1", "--format", "text"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("T_1(x) = ")

    def test_dump_words(self, capsys):
        args = ["compute", "--family", "S", "--n", "1", "--method", "enum", "--dump-words"]
        assert run(args) == EXIT_OK
        words = capsys.readouterr().out.splitlines()
        assert sorted(words) == sorted(["1 1", "-1 1", "1 -1", "-1 -1"])

    def test_dump_formal(self, capsys):
        args = ["compute", "--family", "Q", "--n", "1", "--method", "grammar", "--dump-formal"]
        assert run(args) == EXIT_OK
        terms = _json(capsys)["terms"]
        assert {"coeff": "2/1", "exps": {"x": 1, "y": 1, "w": 1}} in terms
        assert len(terms) == 2

    @pytest.mark.parametrize(
        "flag, needed", [("--dump-words", "--method enum"), ("--dump-formal", "--method grammar")]
    )
    def test_dump_needs_method(self, capsys, flag, needed):
        assert run(["compute", "--family", "P", "--n", "2", flag]) == EXIT_USAGE
        assert needed in capsys.readouterr().err

    def test_dump_flags_exclusive(self, capsys):
        args = ["compute", "--family", "P", "--n", "2", "--dump-words", "--dump-formal"]
        assert run(args) == EXIT_USAGE

    def test_cap_exceeded(self, capsys):
        args = ["compute", "--family", "S", "--n", "5", "--method", "enum"]
        assert run(args) == EXIT_USAGE
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "exceeds cap" in captured.err


class TestAnalysisCommands:
    """gamma, decompose and roots."""

    def test_gamma(self, capsys):
        assert run(["gamma", "--family", "P", "--n", "3"]) == EXIT_OK
        data = _json(capsys)
        assert data["symmetric"] is True
        assert data["gamma"] == ["1", "16", "10"]

    def test_gamma_text(self, capsys):
        assert run(["gamma", "--family", "Q", "--n", "2", "--format", "text"]) == EXIT_OK
        assert "bi_gamma_positive: True" in capsys.readouterr().out

    def test_decompose(self, capsys):
        assert run(["decompose", "--family", "Q", "--n", "2"]) == EXIT_OK
        data = _json(capsys)
        assert data["center"] == 3
        assert data["a"] == ["1", "11", "11", "1"]
        assert data["b"] == ["1", "4", "1"]

    def test_decompose_csv(self, capsys):
        assert run(["decompose", "--family", "S", "--n", "1", "--format", "csv"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[1:] == ["S_a,1,0,1", "S_a,1,1,1", "S_b,1,0,2"]

    def test_roots(self, capsys):
        assert run(["roots", "--family", "P", "--n", "2"]) == EXIT_OK
        data = _json(capsys)
        assert data["degree"] == 2
        assert data["real_rooted"] is True
        assert len(data["roots"]) == 2

    def test_roots_text(self, capsys):
        assert run(["roots", "--family", "S", "--n", "2", "--format", "text"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("3/3 real roots")


class TestVerifyAndExport:
    """verify and export."""

    def test_verify_passes(self, capsys):
        assert run(["verify", "--suite", "cross", "--max-n", "4"]) == EXIT_OK
        data = _json(capsys)
        assert data["passed"] is True
        assert [s["suite"] for s in data["suites"]] == ["cross"]
        assert "elapsed_seconds" not in data["suites"][0]

    def test_verify_timings(self, capsys):
        assert run(["verify", "--suite", "roots", "--max-n", "2", "--timings"]) == EXIT_OK
        assert "elapsed_seconds" in _json(capsys)["suites"][0]

    def test_verify_failure_exit_code(self, capsys, mocker):
        failing = CheckResult("roots", "real_rooted", "P", 1, False, "forced")
        report = mocker.Mock(passed=False, failures=[failing])
        report.to_dict.return_value = {"suite": "roots", "passed": False}
        mocker.patch("multieuler.cli.verify_suites", return_value=[report])
        assert run(["verify", "--suite", "roots", "--max-n", "1"]) == EXIT_FAILED
        assert _json(capsys)["passed"] is False

    def test_integrality_failure_exit_code(self, capsys, mocker):
        mocker.patch(
            "multieuler.cli.family_polynomial",
            side_effect=IntegralityException("non-integral coefficient", family="P", n=2),
        )
        assert run(["compute", "--family", "P", "--n", "2"]) == EXIT_FAILED
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error: non-integral coefficient" in captured.err

    def test_negative_entry_exit_code(self, capsys, mocker):
        mocker.patch(
            "multieuler.cli.build_table",
            side_effect=NegativeEntryException("negative gamma entry", table="p", n=3, k=1),
        )
        assert run(["export", "--table", "p", "--max-n", "3"]) == EXIT_FAILED
        assert "negative gamma entry (p[3][1])" in capsys.readouterr().err

    def test_export(self, capsys):
        assert run(["export", "--table", "p", "--max-n", "3"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "family,n,k,value"
        assert lines[-1].endswith(",3,2,10")


class TestUsage:
    """Argument errors exit with code 2."""

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["compute", "--family", "X", "--n", "2"],
            ["compute", "--family", "P", "--n", "0"],
            ["compute", "--family", "P", "--n", "two"],
            ["verify", "--suite", "speed"],
            ["export", "--table", "P"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        assert run(argv) == EXIT_USAGE

    def test_version(self, capsys):
        assert run(["--version"]) == EXIT_OK
        assert __version__ in capsys.readouterr().out

    def test_main_exits(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["compute", "--family", "P", "--n", "1"])
        assert info.value.code == EXIT_OK

    def test_parser_has_subcommands(self):
        parser = build_parser()
        args = parser.parse_args(["verify"])
        assert args.suite == "all"
        assert args.max_n is None
        assert args.workers == 1
