"""Approximation method value object."""

from enum import StrEnum

from vexen_cluster.shared.exceptions import ConfigurationError


class ApproximationMethod(StrEnum):
	"""Data reduction applied before clustering when approximation is enabled"""

	RANDOM_SAMPLING = "random_sampling"
	PCA = "pca"
	# reserved extension points, not implemented
	TSNE = "tsne"
	UMAP = "umap"

	@classmethod
	def parse(cls, value: "str | ApproximationMethod") -> "ApproximationMethod":
		if isinstance(value, cls):
			return value
		try:
			return cls(str(value).strip().lower())
		except ValueError:
			raise ConfigurationError(f"Unknown approximation method: {value}") from None
