"""DTOs for the benchmark harness."""

from dataclasses import dataclass, field
from typing import Any

from vexen_cluster.domain.entity.run_record import RunRecord, TimingSample
from vexen_cluster.shared.exceptions import ConfigurationError

DESK_DATASETS: tuple[str, ...] = (
	"Blobs",
	"Simple Blobs",
	"Disjoint Clusters",
	"Anisotropic",
	"Moons",
	"Circles",
)
DESK_ALGORITHMS: tuple[str, ...] = (
	"spinex",
	"spinex_t",
	"spinex_multi_level",
	"kmeans",
	"dbscan",
	"agglomerative",
)


@dataclass
class BaselineConfig:
	"""
	Parameters of the reference algorithms.

	When ``k_from_truth`` is set, k-means and agglomerative use the true
	cluster count of labelled datasets and fall back to their own k otherwise.
	"""

	kmeans_k: int = 8
	kmeans_max_iter: int = 300
	kmeans_n_init: int = 10
	dbscan_eps: float = 0.5
	dbscan_min_samples: int = 5
	agglomerative_k: int = 2
	k_from_truth: bool = True

	def __post_init__(self):
		if self.kmeans_k < 1 or self.agglomerative_k < 1:
			raise ConfigurationError("Cluster counts must be positive")
		if self.kmeans_max_iter < 1 or self.kmeans_n_init < 1:
			raise ConfigurationError("kmeans_max_iter and kmeans_n_init must be positive")
		if self.dbscan_eps <= 0:
			raise ConfigurationError(f"dbscan_eps must be positive, got {self.dbscan_eps}")
		if self.dbscan_min_samples < 1:
			raise ConfigurationError("dbscan_min_samples must be >= 1")


@dataclass
class BenchConfig:
	"""Configuration of benchmark and complexity runs"""

	# Quality benchmark
	datasets: list[str] = field(default_factory=lambda: list(DESK_DATASETS))
	algorithms: list[str] = field(default_factory=lambda: list(DESK_ALGORITHMS))
	seeds: list[int] = field(default_factory=lambda: [0, 1, 2])
	include_time: bool = False

	# Complexity analysis
	complexity_algorithms: list[str] = field(default_factory=lambda: ["spinex"])
	sizes: list[int] = field(default_factory=lambda: [100, 400, 1600])
	dims: list[int] = field(default_factory=lambda: [8, 32])
	trials: int = 30

	# Outputs
	out_dir: str = "results"
	store_url: str | None = None

	def __post_init__(self):
		if not self.datasets:
			raise ConfigurationError("datasets cannot be empty")
		if not self.algorithms:
			raise ConfigurationError("algorithms cannot be empty")
		if not self.seeds or any(s < 0 for s in self.seeds):
			raise ConfigurationError("seeds must be a non-empty list of unsigned integers")
		if self.trials < 1:
			raise ConfigurationError("trials must be positive")
		if any(n < 1 for n in self.sizes) or any(d < 1 for d in self.dims):
			raise ConfigurationError("Grid sizes and dims must be positive")


@dataclass
class RankingRow:
	"""
	One algorithm in the ranking table.

	Attributes:
		algorithm: Algorithm name
		metrics: Mean normalised value per metric (None if never defined)
		mean_across_metrics: Mean of the defined normalised metric means
		rank: Competition rank (1, 2, 2, 4); ties share a rank
	"""

	algorithm: str
	metrics: dict[str, float | None]
	mean_across_metrics: float
	rank: int

	def to_dict(self) -> dict[str, Any]:
		return {
			"algorithm": self.algorithm,
			**self.metrics,
			"mean_across_metrics": self.mean_across_metrics,
			"rank": self.rank,
		}


@dataclass
class ComplexityRow:
	"""Fitted slope of one algorithm at one feature count"""

	algorithm: str
	d: int
	slope: float
	complexity_class: str

	def to_dict(self) -> dict[str, Any]:
		return {
			"algorithm": self.algorithm,
			"d": self.d,
			"slope": self.slope,
			"class": self.complexity_class,
		}


@dataclass
class ComplexityReport:
	"""
	Attributes:
		samples: Every measured grid cell
		rows: Per-(algorithm, d) slope fits
		aggregate: Per-algorithm class of the mean slope across d
	"""

	samples: list[TimingSample] = field(default_factory=list)
	rows: list[ComplexityRow] = field(default_factory=list)
	aggregate: dict[str, tuple[float, str]] = field(default_factory=dict)


@dataclass
class ParetoRow:
	"""
	Objectives of one algorithm in the Pareto analysis.

	Attributes:
		algorithm: Algorithm name
		objectives: Maximised objective values; execution time enters negated
		optimal: Whether no other algorithm dominates this one
	"""

	algorithm: str
	objectives: dict[str, float]
	optimal: bool

	def to_dict(self) -> dict[str, Any]:
		return {"algorithm": self.algorithm, **self.objectives, "pareto_optimal": self.optimal}


@dataclass
class BenchmarkReport:
	"""Everything one benchmark invocation produced"""

	session_id: str
	runs: list[RunRecord] = field(default_factory=list)
	ranking: list[RankingRow] = field(default_factory=list)
	pareto: list[str] = field(default_factory=list)
	pareto_table: list[ParetoRow] = field(default_factory=list)
	complexity: ComplexityReport | None = None
	decision_logs: dict[str, list[str]] = field(default_factory=dict)
