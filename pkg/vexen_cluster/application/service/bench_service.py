"""Bench service for orchestrating benchmark and complexity runs."""

import dataclasses
import logging
from dataclasses import dataclass, field

from uuid6 import uuid7

from vexen_cluster.application.dto.bench_dto import BenchConfig, BenchmarkReport, ComplexityReport
from vexen_cluster.application.usecase.bench import BenchUseCaseFactory
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.run_record import TimingSample
from vexen_cluster.domain.provider.clustering_algorithm_port import IClusteringAlgorithmPort
from vexen_cluster.domain.provider.dataset_source_port import IDatasetSourcePort
from vexen_cluster.domain.repository.result_cache_port import IResultCachePort
from vexen_cluster.domain.repository.run_repository_port import IRunRepositoryPort

logger = logging.getLogger(__name__)


@dataclass
class BenchService:
	"""Service for benchmark operations"""

	datasets: IDatasetSourcePort
	metrics_cache: IResultCachePort
	log: DecisionLog = field(default_factory=DecisionLog)
	run_repository: IRunRepositoryPort | None = None
	usecases: BenchUseCaseFactory = field(init=False)

	def __post_init__(self):
		"""Initialize use case factory"""
		self.usecases = BenchUseCaseFactory(
			datasets=self.datasets,
			metrics_cache=self.metrics_cache,
			log=self.log,
			run_repository=self.run_repository,
		)

	def run_benchmark(
		self, config: BenchConfig, algorithms: list[IClusteringAlgorithmPort]
	) -> BenchmarkReport:
		"""
		Run the sweep, then rank and extract the Pareto front.

		Args:
			config: Datasets, seeds and whether time is a Pareto objective
			algorithms: Algorithms to compare

		Returns:
			BenchmarkReport with a fresh time-ordered session id

		Example:
			>>> algorithms = build_algorithms(list(DESK_ALGORITHMS))
			>>> report = bench_service.run_benchmark(BenchConfig(), algorithms)
			>>> print(report.ranking[0].algorithm, report.pareto)
		"""
		session_id = str(uuid7())
		logger.info("Benchmark session %s started", session_id)
		self.usecases.run_benchmark.decision_logs.clear()
		runs = [
			dataclasses.replace(run, session_id=session_id)
			for run in self.usecases.run_benchmark(algorithms, config.datasets, config.seeds)
		]
		ranking = self.usecases.normalize_and_rank(runs)
		pareto_table = self.usecases.pareto_front(ranking, runs, config.include_time)
		return BenchmarkReport(
			session_id=session_id,
			runs=runs,
			ranking=ranking,
			pareto=[row.algorithm for row in pareto_table if row.optimal],
			pareto_table=pareto_table,
			decision_logs=dict(self.usecases.run_benchmark.decision_logs),
		)

	def measure_execution_time(
		self, algorithm: IClusteringAlgorithmPort, n: int, d: int, trials: int = 30, seed: int = 0
	) -> TimingSample:
		"""Time one algorithm on one (n, d) grid cell"""
		return self.usecases.measure_execution_time(algorithm, n, d, trials, seed)

	def run_complexity_analysis(
		self, config: BenchConfig, algorithms: list[IClusteringAlgorithmPort], seed: int = 0
	) -> ComplexityReport:
		"""Time every algorithm over the configured grid and fit per-d slopes"""
		return self.usecases.run_complexity_analysis(
			algorithms, config.sizes, config.dims, config.trials, seed
		)

	async def save(self, report: BenchmarkReport) -> int:
		"""
		Persist the runs of a report.

		Returns:
			Number of stored runs; 0 without a configured repository
		"""
		if self.usecases.save_runs is None:
			return 0
		return await self.usecases.save_runs(report.session_id, report.runs)
