"""Factory for benchmark use cases."""

from dataclasses import dataclass, field

from vexen_cluster.application.usecase.clustering.evaluate_usecase import EvaluateUseCase
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.provider.dataset_source_port import IDatasetSourcePort
from vexen_cluster.domain.repository.result_cache_port import IResultCachePort
from vexen_cluster.domain.repository.run_repository_port import IRunRepositoryPort

from .measure_execution_time_usecase import MeasureExecutionTimeUseCase
from .normalize_and_rank_usecase import NormalizeAndRankUseCase
from .pareto_front_usecase import ParetoFrontUseCase
from .run_benchmark_usecase import RunBenchmarkUseCase
from .run_complexity_analysis_usecase import RunComplexityAnalysisUseCase
from .save_runs_usecase import SaveRunsUseCase


@dataclass
class BenchUseCaseFactory:
	"""Factory for creating benchmark use cases"""

	datasets: IDatasetSourcePort
	metrics_cache: IResultCachePort
	log: DecisionLog
	run_repository: IRunRepositoryPort | None = None

	evaluate: EvaluateUseCase = field(init=False)
	run_benchmark: RunBenchmarkUseCase = field(init=False)
	normalize_and_rank: NormalizeAndRankUseCase = field(init=False)
	pareto_front: ParetoFrontUseCase = field(init=False)
	measure_execution_time: MeasureExecutionTimeUseCase = field(init=False)
	run_complexity_analysis: RunComplexityAnalysisUseCase = field(init=False)
	save_runs: SaveRunsUseCase | None = field(init=False)

	def __post_init__(self):
		"""Initialize all use cases"""
		self.evaluate = EvaluateUseCase(metrics_cache=self.metrics_cache, log=self.log)
		self.run_benchmark = RunBenchmarkUseCase(
			datasets=self.datasets, evaluate=self.evaluate, log=self.log
		)
		self.normalize_and_rank = NormalizeAndRankUseCase(log=self.log)
		self.pareto_front = ParetoFrontUseCase(log=self.log)
		self.measure_execution_time = MeasureExecutionTimeUseCase(datasets=self.datasets)
		self.run_complexity_analysis = RunComplexityAnalysisUseCase(
			measure=self.measure_execution_time, log=self.log
		)
		self.save_runs = (
			SaveRunsUseCase(repository=self.run_repository) if self.run_repository else None
		)
