"""SPINEX variants as benchmark algorithms."""

import dataclasses
import logging

from vexen_cluster.application.dto.config_dto import SpinexConfig
from vexen_cluster.core import SpinexClustering
from vexen_cluster.domain.entity.cluster_labels import ClusterLabels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.provider.clustering_algorithm_port import IClusteringAlgorithmPort
from vexen_cluster.domain.vo.approximation_method import ApproximationMethod

logger = logging.getLogger(__name__)

# Variant name -> overrides applied on top of the base configuration
SPINEX_VARIANTS: dict[str, dict] = {
	"spinex": {},
	"spinex_t": {"use_pca": True},
	"spinex_multi_level": {"use_multi_level": True},
	"spinex_rs": {
		"use_approximation": True,
		"approximation_method": ApproximationMethod.RANDOM_SAMPLING,
		"sample_size": 0.5,
	},
	"spinex_pca": {
		"use_approximation": True,
		"approximation_method": ApproximationMethod.PCA,
	},
	"spinex_no_of_clusters": {"n_clusters": 4},
}


class SpinexProvider(IClusteringAlgorithmPort):
	"""
	Runs one SPINEX variant with a fresh facade per call.

	Each call gets its own caches, so runs stay independent and timings
	include the similarity computation. The decision log of the latest
	call is kept on ``last_log``.
	"""

	def __init__(self, variant: str = "spinex", base_config: SpinexConfig | None = None):
		if variant not in SPINEX_VARIANTS:
			raise KeyError(f"Unknown SPINEX variant: {variant}")
		self._name = variant
		self.base_config = base_config or SpinexConfig()
		self.last_log = DecisionLog()

	@property
	def name(self) -> str:
		return self._name

	def config_for(self, seed: int, truth: ClusterLabels | None = None) -> SpinexConfig:
		"""Variant configuration for one run; truth is only forwarded to tier-3 evaluation"""
		overrides = dict(SPINEX_VARIANTS[self._name], rng_seed=seed)
		overrides["ground_truth"] = truth if self.base_config.evaluation_tier == 3 else None
		return dataclasses.replace(self.base_config, **overrides)

	def fit_predict(
		self, x: DataMatrix, seed: int, truth: ClusterLabels | None = None
	) -> ClusterLabels:
		model = SpinexClustering(self.config_for(seed, truth))
		labels = model.fit_predict(x)
		self.last_log = model.decision_log
		logger.debug(
			"%s picked %s with %d clusters", self._name, model.best_method_, labels.n_clusters
		)
		return labels
