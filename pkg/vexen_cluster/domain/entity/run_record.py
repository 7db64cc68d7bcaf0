"""Benchmark run and timing entities."""

import statistics
from dataclasses import dataclass, field
from datetime import UTC, datetime

from vexen_cluster.domain.entity.metrics_record import MetricsRecord

# Durations below this are reported as this value
MIN_REPORTABLE_TIME = 1e-6


@dataclass(frozen=True)
class RunRecord:
	"""
	Outcome of one (algorithm, dataset, seed) benchmark cell.

	Attributes:
		algorithm: Algorithm name, e.g. ``spinex_t`` or ``kmeans``
		dataset: Dataset name
		seed: Seed of the dataset and the algorithm
		metrics: Validation metrics; all undefined when the run failed
		wall_time: Seconds spent in fit/predict
		error: Error message of a failed run
	"""

	algorithm: str
	dataset: str
	seed: int
	metrics: MetricsRecord
	wall_time: float
	error: str | None = None
	session_id: str | None = None
	created_at: datetime = field(default_factory=lambda: datetime.now(UTC), compare=False)

	def __post_init__(self):
		if self.wall_time < MIN_REPORTABLE_TIME:
			object.__setattr__(self, "wall_time", MIN_REPORTABLE_TIME)

	@property
	def failed(self) -> bool:
		return self.error is not None


@dataclass(frozen=True)
class TimingSample:
	"""
	Trial durations of one algorithm at one (n, d) grid cell.

	Attributes:
		algorithm: Algorithm name
		n: Number of observations
		d: Number of features
		times: Trial durations in seconds, each clamped to MIN_REPORTABLE_TIME
	"""

	algorithm: str
	n: int
	d: int
	times: tuple[float, ...]

	def __post_init__(self):
		object.__setattr__(
			self, "times", tuple(max(float(t), MIN_REPORTABLE_TIME) for t in self.times)
		)

	@property
	def median(self) -> float:
		return statistics.median(self.times)
