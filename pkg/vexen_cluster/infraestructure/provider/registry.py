"""Algorithm registry of the benchmark harness."""

from vexen_cluster.application.dto.bench_dto import BaselineConfig
from vexen_cluster.application.dto.config_dto import SpinexConfig
from vexen_cluster.domain.provider.clustering_algorithm_port import IClusteringAlgorithmPort
from vexen_cluster.infraestructure.provider.baseline_provider import (
	AgglomerativeProvider,
	DbscanProvider,
	KMeansProvider,
)
from vexen_cluster.infraestructure.provider.spinex_provider import SPINEX_VARIANTS, SpinexProvider
from vexen_cluster.shared.exceptions import ConfigurationError

BASELINES = ("kmeans", "dbscan", "agglomerative")


def algorithm_names() -> list[str]:
	return [*SPINEX_VARIANTS, *BASELINES]


def build_algorithm(
	name: str,
	spinex_config: SpinexConfig | None = None,
	baseline_config: BaselineConfig | None = None,
) -> IClusteringAlgorithmPort:
	"""
	Instantiate a registered algorithm.

	Raises:
		ConfigurationError: If the name is not registered
	"""
	if name in SPINEX_VARIANTS:
		return SpinexProvider(name, spinex_config)
	if name == "kmeans":
		return KMeansProvider(baseline_config)
	if name == "dbscan":
		return DbscanProvider(baseline_config)
	if name == "agglomerative":
		return AgglomerativeProvider(baseline_config)
	raise ConfigurationError(
		f"Unknown algorithm: {name}. Available: {', '.join(algorithm_names())}"
	)


def build_algorithms(
	names: list[str],
	spinex_config: SpinexConfig | None = None,
	baseline_config: BaselineConfig | None = None,
) -> list[IClusteringAlgorithmPort]:
	return [build_algorithm(name, spinex_config, baseline_config) for name in names]
