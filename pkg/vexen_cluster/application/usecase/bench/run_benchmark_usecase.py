"""Benchmark sweep use case."""

import logging
import time
from dataclasses import dataclass, field

from vexen_cluster.application.usecase.clustering.evaluate_usecase import EvaluateUseCase
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.labeled_dataset import LabeledDataset
from vexen_cluster.domain.entity.metrics_record import MetricsRecord
from vexen_cluster.domain.entity.run_record import RunRecord
from vexen_cluster.domain.provider.clustering_algorithm_port import IClusteringAlgorithmPort
from vexen_cluster.domain.provider.dataset_source_port import IDatasetSourcePort
from vexen_cluster.shared.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

# Internal and external metrics, external ones only when truth is known
EVALUATION_TIER = 3


def run_key(algorithm: str, dataset: str, seed: int) -> str:
	return f"{algorithm}/{dataset}/{seed}"


@dataclass
class RunBenchmarkUseCase:
	"""Use case executing the algorithms x datasets x seeds cross product"""

	datasets: IDatasetSourcePort
	evaluate: EvaluateUseCase
	log: DecisionLog
	decision_logs: dict[str, list[str]] = field(default_factory=dict)

	def _run_one(
		self, algorithm: IClusteringAlgorithmPort, dataset: LabeledDataset, seed: int
	) -> RunRecord:
		try:
			start = time.perf_counter()
			labels = algorithm.fit_predict(dataset.x, seed, dataset.truth)
			elapsed = time.perf_counter() - start
			metrics = self.evaluate(
				dataset.x, labels, algorithm.name, EVALUATION_TIER, dataset.truth
			)
			record = RunRecord(algorithm.name, dataset.name, seed, metrics, elapsed)
		except Exception as e:
			logger.warning("%s failed on %s (seed=%d): %s", algorithm.name, dataset.name, seed, e)
			self.log.record(f"Run {run_key(algorithm.name, dataset.name, seed)} failed: {e}")
			record = RunRecord(
				algorithm.name,
				dataset.name,
				seed,
				MetricsRecord.undefined(),
				0.0,
				error=f"{type(e).__name__}: {e}",
			)
		run_log = getattr(algorithm, "last_log", None)
		if run_log is not None and not record.failed:
			self.decision_logs[run_key(algorithm.name, dataset.name, seed)] = run_log.messages()
		return record

	def __call__(
		self,
		algorithms: list[IClusteringAlgorithmPort],
		dataset_names: list[str],
		seeds: list[int],
	) -> list[RunRecord]:
		"""
		Execute the full sweep.

		Datasets are generated once per (dataset, seed). A failing run is
		recorded with every metric undefined and the sweep continues.

		Returns:
			Records ordered by dataset, seed, then algorithm

		Raises:
			ConfigurationError: If any input list is empty
		"""
		if not algorithms or not dataset_names or not seeds:
			raise ConfigurationError("Benchmark needs algorithms, datasets and seeds")
		records: list[RunRecord] = []
		for name in dataset_names:
			for seed in seeds:
				dataset = self.datasets.named(name, seed)
				for algorithm in algorithms:
					records.append(self._run_one(algorithm, dataset, seed))
		logger.info("Benchmark finished: %d runs", len(records))
		return records
