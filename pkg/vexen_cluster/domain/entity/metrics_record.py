"""Validation metrics record."""

import math
from dataclasses import asdict, dataclass, fields

INTERNAL_METRICS: tuple[str, ...] = ("silhouette", "calinski_harabasz", "davies_bouldin")
EXTERNAL_METRICS: tuple[str, ...] = ("homogeneity", "completeness", "v_measure")
METRIC_NAMES: tuple[str, ...] = INTERNAL_METRICS + EXTERNAL_METRICS


@dataclass(frozen=True)
class MetricsRecord:
	"""
	The six validation scores of one (data, labels) pair.

	Undefined metrics are None.
	"""

	n_clusters: int
	silhouette: float | None = None
	calinski_harabasz: float | None = None
	davies_bouldin: float | None = None
	homogeneity: float | None = None
	completeness: float | None = None
	v_measure: float | None = None

	@classmethod
	def undefined(cls, n_clusters: int = 0) -> "MetricsRecord":
		"""Record with every metric undefined"""
		return cls(n_clusters=n_clusters)

	def get(self, name: str) -> float | None:
		if name not in METRIC_NAMES:
			raise KeyError(name)
		return getattr(self, name)

	def defined(self) -> dict[str, float]:
		"""Defined metrics by name"""
		return {
			f.name: getattr(self, f.name)
			for f in fields(self)
			if f.name in METRIC_NAMES
			and getattr(self, f.name) is not None
			and math.isfinite(getattr(self, f.name))
		}

	def is_empty(self) -> bool:
		return not self.defined()

	def to_dict(self) -> dict[str, float | int | None]:
		return asdict(self)
