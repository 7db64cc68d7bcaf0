"""Multi-level clustering parameters."""

from dataclasses import dataclass

from vexen_cluster.shared.exceptions import ConfigurationError


@dataclass(frozen=True)
class MultiLevelParams:
	"""
	Attributes:
		levels: Number of merge rounds
		initial_threshold: Threshold of the first round, in (0, 1]
	"""

	levels: int = 3
	initial_threshold: float = 0.5

	def __post_init__(self):
		if self.levels < 1:
			raise ConfigurationError(f"levels must be >= 1, got {self.levels}")
		if not 0 < self.initial_threshold <= 1:
			raise ConfigurationError(
				f"initial_threshold must lie in (0, 1], got {self.initial_threshold}"
			)
