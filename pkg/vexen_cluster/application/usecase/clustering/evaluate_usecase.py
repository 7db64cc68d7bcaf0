"""Metric evaluation use case."""

from collections.abc import Callable
from dataclasses import dataclass

from vexen_cluster.domain.entity.cluster_labels import ClusterLabels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.metrics_record import MetricsRecord
from vexen_cluster.domain.repository.result_cache_port import IResultCachePort
from vexen_cluster.domain.service.hashing import fingerprint, fingerprint_array
from vexen_cluster.domain.service.metrics import (
	calinski_harabasz,
	completeness,
	davies_bouldin,
	homogeneity,
	silhouette,
	v_measure,
)

INTERNAL: dict[str, Callable[[DataMatrix, ClusterLabels], float]] = {
	"silhouette": silhouette,
	"calinski_harabasz": calinski_harabasz,
	"davies_bouldin": davies_bouldin,
}
EXTERNAL: dict[str, Callable[[ClusterLabels, ClusterLabels], float]] = {
	"homogeneity": homogeneity,
	"completeness": completeness,
	"v_measure": v_measure,
}


@dataclass
class EvaluateUseCase:
	"""Use case computing and caching the validation metrics of one labelling"""

	metrics_cache: IResultCachePort
	log: DecisionLog

	def __call__(
		self,
		x: DataMatrix,
		labels: ClusterLabels,
		method: str,
		tier: int = 1,
		ground_truth: ClusterLabels | None = None,
	) -> MetricsRecord:
		"""
		Execute the metric evaluation.

		Internal metrics need 1 < n_clusters < n and tier 1 or 3; external
		metrics need ground truth and tier 2 or 3. Metric failures are logged
		and leave the field undefined.

		Args:
			x: Observations the labels were computed for
			labels: Labels to evaluate
			method: Method name used in the cache key and log
			tier: Evaluation tier
			ground_truth: True labels, if known

		Returns:
			MetricsRecord, possibly with undefined fields
		"""
		truth_key = (
			fingerprint_array(ground_truth.assignments).digest if ground_truth is not None else None
		)
		key = (
			"metrics",
			fingerprint(x).digest,
			fingerprint_array(labels.assignments).digest,
			str(method),
			tier,
			truth_key,
		)
		cached = self.metrics_cache.get(key)
		if cached is not None:
			self.log.record(f"Metrics retrieved from cache for method {method}")
			return cached

		n_clusters = labels.n_clusters
		if not 1 < n_clusters < x.n_rows:
			self.log.record(
				f"Metrics undefined for method {method}: "
				f"{n_clusters} clusters for {x.n_rows} points"
			)
			record = MetricsRecord.undefined(n_clusters)
			self.metrics_cache.put(key, record)
			return record

		values: dict[str, float] = {}
		if tier in (1, 3):
			for name, metric in INTERNAL.items():
				try:
					values[name] = metric(x, labels)
				except Exception as e:
					self.log.record(f"Error calculating {name} for method {method}: {e}")
		if tier in (2, 3) and ground_truth is not None:
			for name, metric in EXTERNAL.items():
				try:
					values[name] = metric(ground_truth, labels)
				except Exception as e:
					self.log.record(f"Error calculating {name} for method {method}: {e}")

		record = MetricsRecord(n_clusters=n_clusters, **values)
		self.metrics_cache.put(key, record)
		self.log.record(f"Metrics computed and cached for method {method}")
		return record
