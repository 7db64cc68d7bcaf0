"""Execution timing use case."""

import time
from dataclasses import dataclass

from vexen_cluster.domain.entity.run_record import TimingSample
from vexen_cluster.domain.provider.clustering_algorithm_port import IClusteringAlgorithmPort
from vexen_cluster.domain.provider.dataset_source_port import IDatasetSourcePort

DEFAULT_TRIALS = 30


@dataclass
class MeasureExecutionTimeUseCase:
	"""Use case timing fit/predict on seeded blobs"""

	datasets: IDatasetSourcePort

	def __call__(
		self,
		algorithm: IClusteringAlgorithmPort,
		n: int,
		d: int,
		trials: int = DEFAULT_TRIALS,
		seed: int = 0,
	) -> TimingSample:
		"""
		Time ``trials`` runs on one (n, d) blob dataset.

		Each duration is clamped to the reportable floor by TimingSample.
		"""
		dataset = self.datasets.blobs(n, d, seed)
		times: list[float] = []
		for _ in range(trials):
			start = time.perf_counter()
			algorithm.fit_predict(dataset.x, seed)
			times.append(time.perf_counter() - start)
		return TimingSample(algorithm=algorithm.name, n=n, d=d, times=tuple(times))
