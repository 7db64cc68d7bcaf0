"""Configuration DTO for the SPINEX engine."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from vexen_cluster.domain.entity.cluster_labels import ClusterLabels, canonicalize_labels
from vexen_cluster.domain.vo.approximation_method import ApproximationMethod
from vexen_cluster.domain.vo.multi_level_params import MultiLevelParams
from vexen_cluster.domain.vo.similarity_method import ALL_METHODS, SimilarityMethod
from vexen_cluster.domain.vo.threshold_spec import ThresholdSpec
from vexen_cluster.shared.exceptions import ConfigurationError, InvalidMethodError


@dataclass
class SpinexConfig:
	"""
	Configuration for SpinexClustering.

	Textual forms are normalised on construction: ``threshold`` accepts
	"auto", "90%" or a number, methods accept their names and
	``multi_level_params`` accepts a mapping.
	"""

	# Merge threshold
	threshold: ThresholdSpec | str | float = "auto"
	n_clusters: int | None = None

	# Dimensionality reduction
	use_pca: bool = False
	n_components: int | float | None = None
	max_features: int = 100

	# Similarity and evaluation
	similarity_methods: tuple[SimilarityMethod, ...] | list[str] = ALL_METHODS
	evaluation_tier: int = 1
	ground_truth: ClusterLabels | list[int] | None = None

	# Approximation
	use_approximation: bool = False
	approximation_method: ApproximationMethod | str = ApproximationMethod.RANDOM_SAMPLING
	sample_size: float = 0.5

	# Parallelism (threads)
	use_parallel: bool = False
	parallel_threshold: int = 5000
	max_workers: int | None = None

	# Multi-level clustering
	use_multi_level: bool = False
	multi_level_params: MultiLevelParams | dict[str, Any] = field(default_factory=MultiLevelParams)

	# Explainability
	enable_similarity_analysis: bool = False
	enable_neighbor_analysis: bool = False
	n_neighbors: int = 5

	# Reproducibility
	rng_seed: int = 0

	def __post_init__(self):
		"""Normalise textual values and validate every field"""
		self.threshold = ThresholdSpec.parse(self.threshold)
		self._validate_counts()
		self._validate_methods()
		self._validate_approximation()
		if isinstance(self.multi_level_params, dict):
			unknown = set(self.multi_level_params) - {"levels", "initial_threshold"}
			if unknown:
				raise ConfigurationError(f"Unknown multi_level_params keys: {sorted(unknown)}")
			self.multi_level_params = MultiLevelParams(**self.multi_level_params)
		if self.ground_truth is not None and not isinstance(self.ground_truth, ClusterLabels):
			self.ground_truth = canonicalize_labels(np.asarray(self.ground_truth))

	def _validate_counts(self) -> None:
		if self.n_clusters is not None and self.n_clusters < 1:
			raise ConfigurationError(f"n_clusters must be positive, got {self.n_clusters}")
		if self.n_components is not None:
			value = self.n_components
			if isinstance(value, float) and not value.is_integer():
				if not 0 < value < 1:
					raise ConfigurationError(
						f"n_components fraction must lie in (0, 1), got {value}"
					)
			elif value < 1:
				raise ConfigurationError(f"n_components must be positive, got {value}")
			else:
				self.n_components = int(value)
		if self.max_features < 1:
			raise ConfigurationError(f"max_features must be positive, got {self.max_features}")
		if self.evaluation_tier not in (1, 2, 3):
			raise ConfigurationError(
				f"evaluation_tier must be 1, 2 or 3, got {self.evaluation_tier}"
			)
		if self.parallel_threshold < 1:
			raise ConfigurationError("parallel_threshold must be positive")
		if self.max_workers is not None and self.max_workers < 1:
			raise ConfigurationError("max_workers must be positive")
		if self.n_neighbors < 1:
			raise ConfigurationError("n_neighbors must be positive")
		if self.rng_seed < 0:
			raise ConfigurationError(f"rng_seed must be unsigned, got {self.rng_seed}")

	def _validate_methods(self) -> None:
		if isinstance(self.similarity_methods, str):
			raise ConfigurationError("similarity_methods must be a list of method names")
		try:
			methods = tuple(SimilarityMethod.parse(m) for m in self.similarity_methods)
		except InvalidMethodError as e:
			raise ConfigurationError(
				f"{e}. Choose from {', '.join(m.value for m in ALL_METHODS)}"
			) from None
		if not methods:
			raise ConfigurationError("similarity_methods cannot be empty")
		if len(set(methods)) != len(methods):
			raise ConfigurationError("similarity_methods contains duplicates")
		self.similarity_methods = methods

	def _validate_approximation(self) -> None:
		self.approximation_method = ApproximationMethod.parse(self.approximation_method)
		if not 0 < self.sample_size <= 1:
			raise ConfigurationError(f"sample_size must lie in (0, 1], got {self.sample_size}")

	@property
	def methods(self) -> tuple[SimilarityMethod, ...]:
		"""Configured similarity methods, typed"""
		return tuple(self.similarity_methods)  # type: ignore[arg-type]

	@property
	def multi_level(self) -> MultiLevelParams:
		return self.multi_level_params  # type: ignore[return-value]

	@property
	def threshold_spec(self) -> ThresholdSpec:
		return self.threshold  # type: ignore[return-value]

	@property
	def explainability_enabled(self) -> bool:
		return self.enable_similarity_analysis or self.enable_neighbor_analysis

	@property
	def truth(self) -> ClusterLabels | None:
		return self.ground_truth  # type: ignore[return-value]
