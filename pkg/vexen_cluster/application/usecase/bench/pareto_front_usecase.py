"""Pareto analysis use case."""

import statistics
from collections import defaultdict
from dataclasses import dataclass

from vexen_cluster.application.dto.bench_dto import ParetoRow, RankingRow
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.metrics_record import METRIC_NAMES
from vexen_cluster.domain.entity.run_record import RunRecord
from vexen_cluster.domain.service.pareto import pareto_front

TIME_OBJECTIVE = "neg_median_wall_time"


@dataclass
class ParetoFrontUseCase:
	"""Use case extracting the non-dominated algorithms from the ranking table"""

	log: DecisionLog

	def __call__(
		self,
		ranking: list[RankingRow],
		runs: list[RunRecord] | None = None,
		include_time: bool = False,
	) -> list[ParetoRow]:
		"""
		Execute the Pareto analysis.

		Objectives are the normalised metric means (Davies-Bouldin already
		inverted). Algorithms without any defined metric are never optimal
		and take no part in the comparison. Metrics undefined for any other
		algorithm are left out. With ``include_time`` the negated median wall
		time of successful runs joins as a further objective.

		Returns:
			One row per ranked algorithm, in ranking order
		"""
		scored = [row for row in ranking if any(v is not None for v in row.metrics.values())]
		for row in ranking:
			if row not in scored:
				self.log.record(f"Pareto analysis skips {row.algorithm}: no defined metric")
		if not scored:
			return [ParetoRow(row.algorithm, {}, False) for row in ranking]
		objectives = [
			m for m in METRIC_NAMES if all(row.metrics.get(m) is not None for row in scored)
		]
		dropped = [m for m in METRIC_NAMES if m not in objectives]
		if dropped:
			self.log.record(f"Pareto analysis skips partially undefined metrics: {dropped}")

		points = {row.algorithm: {m: float(row.metrics[m]) for m in objectives} for row in scored}
		if include_time and runs:
			times: dict[str, list[float]] = defaultdict(list)
			for run in runs:
				if not run.failed:
					times[run.algorithm].append(run.wall_time)
			for name, point in points.items():
				if times[name]:
					point[TIME_OBJECTIVE] = -statistics.median(times[name])
			if not all(TIME_OBJECTIVE in point for point in points.values()):
				self.log.record("Pareto analysis skips time: an algorithm has no successful run")
				for point in points.values():
					point.pop(TIME_OBJECTIVE, None)

		front = set(pareto_front({name: list(point.values()) for name, point in points.items()}))
		return [
			ParetoRow(row.algorithm, points.get(row.algorithm, {}), row.algorithm in front)
			for row in ranking
		]
