import io
import json

import pandas as pd
import pytest

from geri_choice.app.services.export_service import ExportService
from geri_choice.config.enums import OutputFormat
from geri_choice.core.models.experiment import AppendixColumn, SummaryStats
from geri_choice.core.models.solution import GeriSolution

# --- FIXTURES ---


@pytest.fixture
def stats():
    return SummaryStats(
        avg=[0.5, 0.3, 0.2],
        median=[0.5, 0.25, 0.15],
        std=[0.1, 0.05, 0.02],
        efficiency=0.4,
        avg_se=[0.01, 0.01, 0.005],
        efficiency_se=0.002,
        n_states=100,
        n_solved_states=500,
        n_replications=5,
        seed=42,
    )


@pytest.fixture
def solution():
    return GeriSolution(
        p0=[0.75, 0.0, 0.25],
        conditionals=[[0.9, 0.0, 0.1], [0.6, 0.0, 0.4]],
        info_cost=0.05,
        objective=2.5,
        consideration_set=[0, 2],
        iterations=12,
        residual=1e-12,
        labels=[1, 2, 3],
    )


# --- TESTS ---


class TestSummaryCsv:
    def test_body_and_footer(self, stats):
        text = ExportService.summary_to_csv(stats)
        lines = text.strip().splitlines()

        assert lines[0] == "option,avg,median,std,avg_se"
        assert lines[1] == "1,0.500000,0.500000,0.100000,0.010000"
        assert lines[4] == (
            "efficiency,efficiency_se,n_states,n_solved_states,"
            "n_replications,payoff_scale,seed"
        )
        assert lines[5] == "0.400000,0.002000,100,500,5,1.000000,42"

    def test_body_parses_as_table(self, stats):
        text = ExportService.summary_to_csv(stats)
        body = pd.read_csv(io.StringIO(text), nrows=3)
        assert body["avg"].sum() == pytest.approx(1.0)
        assert body["option"].tolist() == [1, 2, 3]

    def test_write_summary_creates_parents(self, stats, tmp_path):
        path = ExportService.write_summary(stats, tmp_path / "out" / "t.csv")
        assert path.read_text(encoding="utf-8") == ExportService.summary_to_csv(stats)


class TestSolutionExport:
    def test_json_is_deterministic(self, solution):
        first = ExportService.solution_to_json(solution)
        assert first == ExportService.solution_to_json(solution)
        data = json.loads(first)
        assert list(data) == sorted(data)
        assert data["consideration_set"] == [0, 2]

    def test_json_file_reads_back(self, solution, tmp_path):
        path = ExportService.write_solution(solution, tmp_path / "s.json")
        restored = ExportService.read_solution(path)

        assert restored.p0.values.tolist() == solution.p0.values.tolist()
        assert restored.labels == [1, 2, 3]
        assert restored.converged

    @pytest.mark.parametrize(
        "name, expected",
        [
            ("a.csv", OutputFormat.CSV),
            ("a.CSV", OutputFormat.CSV),
            ("a.json", OutputFormat.JSON),
            ("a", OutputFormat.JSON),
        ],
    )
    def test_output_format(self, name, expected):
        assert ExportService.output_format(name) == expected

    def test_csv_layout(self, solution, tmp_path):
        path = ExportService.write_solution(solution, tmp_path / "s.csv")
        frame = pd.read_csv(path, dtype={"state": str})

        assert frame.columns.tolist() == ["state", "option_1", "option_2", "option_3"]
        assert frame["state"].tolist() == ["0", "1", "p0"]
        assert frame.iloc[-1]["option_1"] == pytest.approx(0.75)


class TestAppendixFrame:
    def test_long_format(self, solution):
        columns = [AppendixColumn(model="shannon", choice_set=[1, 2, 3], solution=solution)]
        frame = ExportService.appendix_frame(columns)

        assert len(frame) == 3
        assert set(frame["choice_set"]) == {"{1,2,3}"}
        assert frame["considered"].tolist() == [True, False, True]
        assert frame["p0"].sum() == pytest.approx(1.0)

    def test_write_appendix(self, solution, tmp_path):
        columns = [AppendixColumn(model="shannon", choice_set=[1, 2, 3], solution=solution)]
        path = ExportService.write_appendix(columns, tmp_path / "appendix.csv")
        assert pd.read_csv(path)["option"].tolist() == [1, 2, 3]
