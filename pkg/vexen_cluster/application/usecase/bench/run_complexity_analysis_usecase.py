"""Complexity analysis use case."""

import logging
import statistics
from dataclasses import dataclass

from vexen_cluster.application.dto.bench_dto import ComplexityReport, ComplexityRow
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.run_record import TimingSample
from vexen_cluster.domain.provider.clustering_algorithm_port import IClusteringAlgorithmPort
from vexen_cluster.domain.service.complexity import classify_slope, estimate_complexity
from vexen_cluster.shared.exceptions import ComplexityInputError, ConfigurationError

from .measure_execution_time_usecase import MeasureExecutionTimeUseCase

logger = logging.getLogger(__name__)


@dataclass
class RunComplexityAnalysisUseCase:
	"""Use case timing algorithms over an (n, d) grid and fitting per-d slopes"""

	measure: MeasureExecutionTimeUseCase
	log: DecisionLog

	def _measure_grid(
		self,
		algorithm: IClusteringAlgorithmPort,
		sizes: list[int],
		dims: list[int],
		trials: int,
		seed: int,
	) -> list[TimingSample]:
		samples: list[TimingSample] = []
		for d in dims:
			for n in sizes:
				try:
					samples.append(self.measure(algorithm, n, d, trials, seed))
				except Exception as e:
					logger.warning("Timing %s at n=%d, d=%d failed: %s", algorithm.name, n, d, e)
					self.log.record(f"Timing cell {algorithm.name} n={n} d={d} failed: {e}")
		return samples

	def _fit_rows(
		self, name: str, samples: list[TimingSample], dims: list[int]
	) -> list[ComplexityRow]:
		rows: list[ComplexityRow] = []
		for d in dims:
			cells = sorted((s for s in samples if s.d == d), key=lambda s: s.n)
			try:
				slope, label = estimate_complexity([s.n for s in cells], [s.median for s in cells])
			except ComplexityInputError as e:
				self.log.record(f"No slope for {name} at d={d}: {e}")
				continue
			self.log.record(f"{name} at d={d}: slope {slope:.4f}, {label}")
			rows.append(ComplexityRow(name, d, slope, label))
		return rows

	def __call__(
		self,
		algorithms: list[IClusteringAlgorithmPort],
		sizes: list[int],
		dims: list[int],
		trials: int,
		seed: int = 0,
	) -> ComplexityReport:
		"""
		Execute the grid sequentially, one timing cell at a time.

		Failed cells are logged and skipped; a d whose surviving sizes are too
		few for a fit gets no row. The aggregate class of an algorithm is the
		class of its mean per-d slope.

		Raises:
			ConfigurationError: If no algorithm is given
		"""
		if not algorithms:
			raise ConfigurationError("Complexity analysis needs at least one algorithm")
		report = ComplexityReport()
		for algorithm in algorithms:
			samples = self._measure_grid(algorithm, sizes, dims, trials, seed)
			rows = self._fit_rows(algorithm.name, samples, dims)
			report.samples.extend(samples)
			report.rows.extend(rows)
			if rows:
				mean_slope = statistics.fmean(row.slope for row in rows)
				report.aggregate[algorithm.name] = (mean_slope, classify_slope(mean_slope))
		return report
