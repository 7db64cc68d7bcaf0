"""Per-observation feature contributions and nearest neighbours."""

import numpy as np
from numpy.typing import NDArray

from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix
from vexen_cluster.domain.service.similarity import pearson_similarity
from vexen_cluster.shared.exceptions import InvalidDataError, InvalidNeighborCountError

DEFAULT_NEIGHBORS = 5


def _check_index(x: DataMatrix, i: int) -> None:
	if not 0 <= i < x.n_rows:
		raise InvalidDataError(f"Observation index {i} out of range for {x.n_rows} rows")


def feature_differences(x: DataMatrix, i: int) -> NDArray[np.float64]:
	"""|x[j, f] - x[i, f]| for every row j, shape (n, d)"""
	_check_index(x, i)
	return np.abs(x.values - x.values[i])


def similarity_contribution(
	x: DataMatrix, i: int, s: SimilarityMatrix | None = None
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
	"""
	How each feature separates observation i from every other observation.

	Args:
		x: Observations
		i: Observation index
		s: Precomputed Pearson similarity; computed when omitted

	Returns:
		Tuple of (row i of the Pearson similarity matrix, contributions of
		shape (d, n) where contributions[f][j] = |x[j, f] - x[i, f]|)
	"""
	_check_index(x, i)
	similarities = (s if s is not None else pearson_similarity(x)).values[i]
	return similarities.copy(), feature_differences(x, i).T


def nearest_neighbors(
	x: DataMatrix, i: int, s: SimilarityMatrix, k: int = DEFAULT_NEIGHBORS
) -> tuple[list[int], NDArray[np.float64]]:
	"""
	The k most similar observations to i, excluding i.

	Ties go to the smaller index.

	Returns:
		Tuple of (neighbour indices, per-neighbour feature differences of shape (k, d))

	Raises:
		InvalidNeighborCountError: If k is not in [1, n - 1]
	"""
	_check_index(x, i)
	if not 1 <= k < x.n_rows:
		raise InvalidNeighborCountError(
			f"Number of neighbors must lie in [1, {x.n_rows - 1}], got {k}"
		)
	order = np.argsort(-s.values[i], kind="stable")
	neighbors = [int(j) for j in order if j != i][:k]
	return neighbors, feature_differences(x, i)[neighbors]
