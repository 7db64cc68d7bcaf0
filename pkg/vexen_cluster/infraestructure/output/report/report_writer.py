"""CSV, JSON and plot-ready report files."""

import json
import logging
import math
from pathlib import Path
from typing import Any

import pandas as pd

from vexen_cluster.application.dto.bench_dto import (
	BenchmarkReport,
	ComplexityReport,
	ParetoRow,
	RankingRow,
)
from vexen_cluster.domain.entity.cluster_labels import ClusterLabels
from vexen_cluster.domain.entity.metrics_record import METRIC_NAMES
from vexen_cluster.domain.entity.run_record import RunRecord

logger = logging.getLogger(__name__)

RUN_COLUMNS = ["algorithm", "dataset", "seed", "n_clusters", *METRIC_NAMES, "error"]
RANKING_COLUMNS = ["algorithm", *METRIC_NAMES, "mean_across_metrics", "rank"]
COMPLEXITY_COLUMNS = ["algorithm", "d", "slope", "class"]
TIMING_COLUMNS = ["algorithm", "n", "d", "trial", "seconds"]


def _write_frame(frame: pd.DataFrame, path: Path) -> Path:
	path.parent.mkdir(parents=True, exist_ok=True)
	frame.to_csv(path, index=False, na_rep="", float_format="%.12g", lineterminator="\n")
	return path


def _json_safe(value: Any) -> Any:
	"""Replace non-finite floats with None, recursively"""
	if isinstance(value, float) and not math.isfinite(value):
		return None
	if isinstance(value, dict):
		return {k: _json_safe(v) for k, v in value.items()}
	if isinstance(value, list | tuple):
		return [_json_safe(v) for v in value]
	return value


def run_to_dict(run: RunRecord, include_time: bool = True) -> dict[str, Any]:
	row: dict[str, Any] = {
		"algorithm": run.algorithm,
		"dataset": run.dataset,
		"seed": run.seed,
		**run.metrics.to_dict(),
		"error": run.error,
	}
	if include_time:
		row["wall_time"] = run.wall_time
		row["session_id"] = run.session_id
	return row


def write_runs_csv(runs: list[RunRecord], path: Path, include_time: bool = False) -> Path:
	"""
	One row per run.

	Wall time is only written with ``include_time`` so that repeated
	benchmarks produce identical files.
	"""
	columns = RUN_COLUMNS + (["wall_time"] if include_time else [])
	frame = pd.DataFrame([run_to_dict(r) for r in runs], columns=columns)
	return _write_frame(frame, path)


def write_ranking_csv(ranking: list[RankingRow], path: Path) -> Path:
	return _write_frame(pd.DataFrame([r.to_dict() for r in ranking], columns=RANKING_COLUMNS), path)


def write_pareto_csv(rows: list[ParetoRow], path: Path) -> Path:
	objectives = list(max(rows, key=lambda r: len(r.objectives)).objectives) if rows else []
	columns = ["algorithm", *objectives, "pareto_optimal"]
	return _write_frame(pd.DataFrame([r.to_dict() for r in rows], columns=columns), path)


def write_complexity_csv(report: ComplexityReport, path: Path) -> Path:
	frame = pd.DataFrame([r.to_dict() for r in report.rows], columns=COMPLEXITY_COLUMNS)
	return _write_frame(frame, path)


def write_timings_csv(report: ComplexityReport, path: Path) -> Path:
	"""Raw trial durations, one row per trial"""
	frame = pd.DataFrame(
		[
			{"algorithm": s.algorithm, "n": s.n, "d": s.d, "trial": i, "seconds": t}
			for s in report.samples
			for i, t in enumerate(s.times)
		],
		columns=TIMING_COLUMNS,
	)
	return _write_frame(frame, path)


def write_series(report: ComplexityReport, out_dir: Path) -> list[Path]:
	"""
	Plot-ready ``complexity_<algorithm>_d<d>.dat`` files.

	Each line holds n and the median time, separated by a space.
	"""
	out_dir.mkdir(parents=True, exist_ok=True)
	series: dict[tuple[str, int], list[tuple[int, float]]] = {}
	for sample in report.samples:
		series.setdefault((sample.algorithm, sample.d), []).append((sample.n, sample.median))
	paths = []
	for (algorithm, d), points in series.items():
		path = out_dir / f"complexity_{algorithm}_d{d}.dat"
		lines = [f"{n} {median:.9g}" for n, median in sorted(points)]
		path.write_text("\n".join(lines) + "\n", encoding="utf-8")
		paths.append(path)
	return paths


def complexity_to_dict(report: ComplexityReport) -> dict[str, Any]:
	return {
		"rows": [r.to_dict() for r in report.rows],
		"aggregate": {
			name: {"slope": slope, "class": label}
			for name, (slope, label) in report.aggregate.items()
		},
		"samples": [
			{
				"algorithm": s.algorithm,
				"n": s.n,
				"d": s.d,
				"median": s.median,
				"times": list(s.times),
			}
			for s in report.samples
		],
	}


def report_to_dict(report: BenchmarkReport) -> dict[str, Any]:
	"""JSON tree with the keys runs, ranking, pareto, complexity and decision_logs"""
	return _json_safe(
		{
			"runs": [run_to_dict(r) for r in report.runs],
			"ranking": [r.to_dict() for r in report.ranking],
			"pareto": {
				"front": list(report.pareto),
				"table": [r.to_dict() for r in report.pareto_table],
			},
			"complexity": complexity_to_dict(report.complexity) if report.complexity else None,
			"decision_logs": report.decision_logs,
		}
	)


def write_json(document: dict[str, Any], path: Path) -> Path:
	path.parent.mkdir(parents=True, exist_ok=True)
	path.write_text(json.dumps(_json_safe(document), indent=2) + "\n", encoding="utf-8")
	return path


def write_labels_csv(labels: ClusterLabels, path: Path) -> Path:
	"""``row_index,label`` per observation"""
	frame = pd.DataFrame({"row_index": range(len(labels)), "label": labels.assignments})
	return _write_frame(frame, path)


class BenchmarkReportWriter:
	"""Writes every table of a benchmark report into one directory"""

	def __init__(self, out_dir: str | Path, include_time: bool = False):
		self.out_dir = Path(out_dir)
		self.include_time = include_time

	def write(self, report: BenchmarkReport) -> dict[str, Path]:
		"""
		Write runs.csv, ranking.csv, pareto.csv and report.json, plus the
		complexity tables when the report has them.

		Returns:
			Written paths by table name
		"""
		paths = {
			"runs": write_runs_csv(report.runs, self.out_dir / "runs.csv", self.include_time),
			"ranking": write_ranking_csv(report.ranking, self.out_dir / "ranking.csv"),
			"pareto": write_pareto_csv(report.pareto_table, self.out_dir / "pareto.csv"),
		}
		if report.complexity is not None:
			paths.update(self.write_complexity(report.complexity))
		paths["report"] = write_json(report_to_dict(report), self.out_dir / "report.json")
		logger.info("Wrote %d report files to %s", len(paths), self.out_dir)
		return paths

	def write_complexity(self, complexity: ComplexityReport) -> dict[str, Path]:
		"""Write complexity.csv, timings.csv and the series files"""
		paths = {
			"complexity": write_complexity_csv(complexity, self.out_dir / "complexity.csv"),
			"timings": write_timings_csv(complexity, self.out_dir / "timings.csv"),
		}
		for path in write_series(complexity, self.out_dir):
			paths[path.stem] = path
		return paths
