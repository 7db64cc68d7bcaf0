"""Matrix fingerprint value object."""

import re
from dataclasses import dataclass

_HEX64 = re.compile(r"^[0-9a-f]{64}$")


@dataclass(frozen=True)
class MatrixFingerprint:
	"""SHA-256 digest of a matrix, as 64 lowercase hex characters"""

	digest: str

	def __post_init__(self):
		if not _HEX64.match(self.digest):
			raise ValueError(f"Not a SHA-256 hex digest: {self.digest!r}")

	def __str__(self) -> str:
		return self.digest
