"""
Export Service.
Writes experiment summaries as CSV and solutions as JSON. Output is
deterministic: fixed float formatting and sorted, indented JSON.
"""

import json
from pathlib import Path

import pandas as pd

from geri_choice.config.enums import OutputFormat
from geri_choice.config.logging_config import log as logger
from geri_choice.core.models.experiment import AppendixColumn, SummaryStats
from geri_choice.core.models.solution import GeriSolution

FLOAT_FORMAT = "%.6f"


class ExportService:
    @staticmethod
    def summary_to_csv(stats: SummaryStats) -> str:
        """
        One row per option (option, avg, median, std, avg_se), followed by a
        footer header and row with efficiency, the draw and solve sizes, the payoff
        scale and seed.
        """
        body = stats.to_frame().to_csv(index=False, float_format=FLOAT_FORMAT)
        footer = pd.DataFrame(
            {
                "efficiency": [stats.efficiency],
                "efficiency_se": [stats.efficiency_se],
                "n_states": [stats.n_states],
                "n_solved_states": [stats.n_solved_states],
                "n_replications": [stats.n_replications],
                "payoff_scale": [stats.payoff_scale],
                "seed": ["" if stats.seed is None else stats.seed],
            }
        )
        return body + footer.to_csv(index=False, float_format=FLOAT_FORMAT)

    @staticmethod
    def write_summary(stats: SummaryStats, path: str | Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(ExportService.summary_to_csv(stats), encoding="utf-8")
        logger.info(f"Summary written to {path}")
        return path

    @staticmethod
    def solution_to_json(solution: GeriSolution) -> str:
        return json.dumps(solution.to_json_dict(), indent=2, sort_keys=True)

    @staticmethod
    def output_format(path: str | Path) -> OutputFormat:
        """CSV for a .csv suffix, JSON otherwise."""
        suffix = Path(path).suffix.lower().lstrip(".")
        if suffix == OutputFormat.CSV.value:
            return OutputFormat.CSV
        return OutputFormat.JSON

    @staticmethod
    def solution_frame(solution: GeriSolution) -> pd.DataFrame:
        """Conditional choice probabilities, one row per state and p0 last."""
        frame = pd.DataFrame(
            solution.conditionals,
            columns=[f"option_{label}" for label in solution.labels],
        )
        frame.insert(0, "state", [str(m) for m in range(len(frame))])
        p0 = pd.DataFrame([["p0", *solution.p0.values]], columns=frame.columns)
        return pd.concat([frame, p0], ignore_index=True)

    @staticmethod
    def write_solution(solution: GeriSolution, path: str | Path) -> Path:
        """Writes JSON, or the conditionals table when ``path`` ends in .csv."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        if ExportService.output_format(path) == OutputFormat.CSV:
            frame = ExportService.solution_frame(solution)
            frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
        else:
            text = ExportService.solution_to_json(solution) + "\n"
            path.write_text(text, encoding="utf-8")
        logger.info(f"Solution written to {path}")
        return path

    @staticmethod
    def read_solution(path: str | Path) -> GeriSolution:
        """Re-reads a solution file; all GeriSolution invariants are re-checked."""
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        return GeriSolution.from_json_dict(data)

    @staticmethod
    def appendix_frame(columns: list[AppendixColumn]) -> pd.DataFrame:
        """Long table: one row per model, choice set and option."""
        rows = []
        for column in columns:
            solution = column.solution
            for position, label in enumerate(solution.labels):
                rows.append(
                    {
                        "model": column.model,
                        "choice_set": "{" + ",".join(map(str, column.choice_set)) + "}",
                        "option": label,
                        "p0": float(solution.p0.values[position]),
                        "considered": label in solution.considered_options,
                        "objective": solution.objective,
                        "info_cost": solution.info_cost,
                    }
                )
        return pd.DataFrame(rows)

    @staticmethod
    def write_appendix(columns: list[AppendixColumn], path: str | Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        frame = ExportService.appendix_frame(columns)
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
        logger.info(f"Consideration-set table written to {path}")
        return path
