"""Content hashing of matrices."""

import hashlib
import struct

import numpy as np
from numpy.typing import ArrayLike

from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.vo.fingerprint import MatrixFingerprint


def fingerprint_array(values: ArrayLike) -> MatrixFingerprint:
	"""
	Hash an array of reals.

	The byte stream is the 8-byte little-endian row count, the 8-byte
	little-endian column count, then every value as a little-endian
	IEEE-754 double in row-major order. 1-D input counts as one column.

	Args:
		values: 1-D or 2-D array

	Returns:
		SHA-256 fingerprint
	"""
	array = np.asarray(values, dtype=np.float64)
	if array.ndim == 1:
		array = array.reshape(-1, 1)
	n_rows, n_cols = array.shape
	digest = hashlib.sha256()
	digest.update(struct.pack("<QQ", n_rows, n_cols))
	digest.update(np.ascontiguousarray(array, dtype="<f8").tobytes(order="C"))
	return MatrixFingerprint(digest.hexdigest())


def fingerprint(matrix: DataMatrix) -> MatrixFingerprint:
	"""Hash a data matrix, see fingerprint_array"""
	return fingerprint_array(matrix.values)
