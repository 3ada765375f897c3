from fractions import Fraction

import pytest

from multieuler.exceptions import NegativeEntryException, ValidationException
from multieuler.model.poly import UniPoly
from multieuler.model.report import CheckResult, SuiteReport
from multieuler.model.series import TruncSeries
from multieuler.model.structure import (
    GammaVector,
    PositivityReport,
    RootInterval,
    RootIsolation,
)
from multieuler.model.table import GammaTable, TriTable


class TestTriTable:
    """Coefficient triangles indexed from n = 1."""

    @pytest.fixture
    def table(self):
        return TriTable("P", ((1,), (1, 4, 1)))

    def test_rows_and_entries(self, table):
        assert table.n_max == 2
        assert table.row(2) == (1, 4, 1)
        assert table.entry(2, 1) == 4
        assert table.entry(2, 5) == 0
        assert table.entry(3, 0) == 0
        assert table.entry(1, -1) == 0
        assert table.poly(2) == UniPoly.of(1, 4, 1)

    def test_missing_row(self, table):
        with pytest.raises(ValidationException, match=r"Row 3 not in table P"):
            table.row(3)

    def test_csv_rows(self, table):
        assert list(table.csv_rows()) == [
            ("P", 1, 0, 1), ("P", 2, 0, 1), ("P", 2, 1, 4), ("P", 2, 2, 1),
        ]

    def test_negative_entry(self):
        with pytest.raises(NegativeEntryException, match=r"\(S\[2\]\[1\]\)"):
            TriTable("S", ((1, 3), (1, -1)))

    def test_unknown_family(self):
        with pytest.raises(ValidationException, match="Unknown table family"):
            TriTable("X", ((1,),))


class TestGammaTable:
    def test_offset_rows(self):
        table = GammaTable("eta_minus", ((0,), (2,), (2, 0)))
        assert table.first == 1
        assert table.last == 3
        assert table.row(3) == (2, 0)
        assert table.entry(3, 1) == 0
        assert list(table.csv_rows())[-1] == ("eta_minus", 3, 1, 0)

    def test_negative_entry(self):
        with pytest.raises(NegativeEntryException) as info:
            GammaTable("p", ((1,), (1, -2)))
        assert info.value.table == "p"
        assert info.value.n == 2
        assert info.value.k == 1

    def test_missing_row(self):
        with pytest.raises(ValidationException, match=r"\(1\.\.1\)"):
            GammaTable("r", ((1,),)).row(2)


class TestStructure:
    """Result dataclasses of the analysis layer."""

    def test_gamma_vector_reassembles(self):
        vector = GammaVector(center=2, gammas=(Fraction(1), Fraction(2)))
        assert vector.is_nonnegative
        assert vector.reassemble() == UniPoly.of(1, 4, 1)
        assert not GammaVector(2, (Fraction(1), Fraction(-1))).is_nonnegative

    def test_root_isolation_json(self):
        isolation = RootIsolation((
            RootInterval(Fraction(-4), Fraction(-2)),
            RootInterval(Fraction(-2), Fraction(0), mult=2),
        ))
        assert isolation.root_count == 3
        assert isolation.to_json()[1] == {"lo": "-2/1", "hi": "0/1", "mult": 2}

    def test_positivity_report_dict(self):
        report = PositivityReport(
            center=2, symmetric=True, gamma_positive=True, bi_gamma_positive=True,
            alternatingly_increasing=True, unimodal=True, mode_set=[1],
            gamma=GammaVector(2, (Fraction(1), Fraction(2))),
        )
        data = report.to_dict()
        assert data["gamma"] == ["1", "2"]
        assert data["gamma_a"] is None
        assert report.observed_mode == 1


class TestReports:
    """Suite reports order their checks and hide timings by default."""

    def test_counts_and_order(self):
        checks = [
            CheckResult("gamma", "bi_gamma", "T", 2, True),
            CheckResult("gamma", "bi_gamma", "S", 2, False, "bad"),
            CheckResult("gamma", "bi_gamma", "S", 1, True),
        ]
        report = SuiteReport("gamma", 2, checks, elapsed=1.23456).sorted()
        assert [(c.family, c.n) for c in report.checks] == [("S", 1), ("S", 2), ("T", 2)]
        assert report.counts() == {"total": 3, "passed": 2, "failed": 1}
        assert not report.passed
        assert report.failures[0].detail == "bad"

    def test_timings_only_on_request(self):
        report = SuiteReport("roots", 1, [CheckResult("roots", "real_rooted", "P", 1, True)], 0.5)
        assert "elapsed_seconds" not in report.to_dict()
        assert report.to_dict(timings=True)["elapsed_seconds"] == 0.5
        assert report.to_dict()["checks"][0]["passed"] is True


class TestTruncSeries:
    def test_length_must_match_order(self):
        with pytest.raises(ValidationException, match="needs 3 coefficients"):
            TruncSeries(2, (1, 2))
