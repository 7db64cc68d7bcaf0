"""Similarity method value object."""

from enum import StrEnum

from vexen_cluster.shared.exceptions import InvalidMethodError


class SimilarityMethod(StrEnum):
	"""Observation-level similarity measures"""

	CORRELATION = "correlation"
	SPEARMAN = "spearman"
	KERNEL = "kernel"
	COSINE = "cosine"

	@classmethod
	def parse(cls, value: "str | SimilarityMethod") -> "SimilarityMethod":
		"""
		Parse a method name.

		Raises:
			InvalidMethodError: If the name is not one of the four methods
		"""
		if isinstance(value, cls):
			return value
		try:
			return cls(str(value).strip().lower())
		except ValueError:
			raise InvalidMethodError(f"Invalid similarity method: {value}") from None


ALL_METHODS: tuple[SimilarityMethod, ...] = tuple(SimilarityMethod)
