"""Ranking use case."""

import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from vexen_cluster.application.dto.bench_dto import RankingRow
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.metrics_record import METRIC_NAMES
from vexen_cluster.domain.entity.run_record import RunRecord

logger = logging.getLogger(__name__)

LOWER_IS_BETTER = frozenset({"davies_bouldin"})
# Means closer than this share a rank
TIE_TOLERANCE = 1e-12


def min_max_normalize(column: pd.Series, invert: bool = False) -> pd.Series:
	"""
	Rescale to [0, 1]; a zero range maps every defined value to 1.0.

	With ``invert`` the minimum maps to 1.
	"""
	low, high = column.min(), column.max()
	if high - low == 0:
		return column.where(column.isna(), 1.0)
	if invert:
		return (high - column) / (high - low)
	return (column - low) / (high - low)


def _optional(value: float) -> float | None:
	return None if pd.isna(value) else float(value)


def competition_ranks(scores: list[float]) -> list[int]:
	"""Descending 1-2-2-4 ranks"""
	return [1 + sum(1 for other in scores if other > score + TIE_TOLERANCE) for score in scores]


@dataclass
class NormalizeAndRankUseCase:
	"""Use case turning run records into the ranking table"""

	log: DecisionLog

	def normalized_frame(self, records: list[RunRecord]) -> pd.DataFrame:
		"""One row per record, metric columns min-max normalised (Davies-Bouldin inverted)"""
		frame = pd.DataFrame(
			[
				{
					"algorithm": r.algorithm,
					"dataset": r.dataset,
					"seed": r.seed,
					**{m: r.metrics.defined().get(m, np.nan) for m in METRIC_NAMES},
				}
				for r in records
			]
		)
		for metric in METRIC_NAMES:
			column = frame[metric].astype(np.float64)
			if column.isna().all():
				self.log.record(f"Metric {metric} is undefined for every run, excluded")
			frame[metric] = min_max_normalize(column, invert=metric in LOWER_IS_BETTER)
		return frame

	def __call__(self, records: list[RunRecord]) -> list[RankingRow]:
		"""
		Execute the ranking.

		Normalised values are averaged per (algorithm, dataset), then per
		algorithm. Mean Across Metrics averages the defined metric means;
		an algorithm with none scores 0.

		Returns:
			Rows ordered by rank, then algorithm name
		"""
		if not records:
			return []
		frame = self.normalized_frame(records)
		per_dataset = frame.groupby(["algorithm", "dataset"], sort=False)[list(METRIC_NAMES)].mean()
		per_algorithm = per_dataset.groupby(level="algorithm", sort=False).mean()

		names = list(per_algorithm.index)
		means: list[float] = []
		for name in names:
			row = per_algorithm.loc[name]
			defined = row.dropna()
			means.append(float(defined.mean()) if len(defined) else 0.0)
		ranks = competition_ranks(means)

		rows = [
			RankingRow(
				algorithm=name,
				metrics={m: _optional(per_algorithm.loc[name, m]) for m in METRIC_NAMES},
				mean_across_metrics=mean,
				rank=rank,
			)
			for name, mean, rank in zip(names, means, ranks, strict=True)
		]
		rows.sort(key=lambda r: (r.rank, r.algorithm))
		logger.info("Ranked %d algorithms", len(rows))
		return rows
