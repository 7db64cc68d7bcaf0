"""Empirical time-complexity estimation from log-log slopes."""

import numpy as np
from numpy.typing import ArrayLike
from scipy.optimize import curve_fit

from vexen_cluster.shared.exceptions import ComplexityInputError

MIN_SIZE_POINTS = 3

# (upper slope bound, class label), checked in order
COMPLEXITY_CLASSES: tuple[tuple[float, str], ...] = (
	(0.1, "O(1)"),
	(0.5, "O(log n)"),
	(1.2, "O(n)"),
	(1.5, "O(n log n)"),
	(2.2, "O(n^2)"),
)


def _line(x: np.ndarray, slope: float, intercept: float) -> np.ndarray:
	return slope * x + intercept


def fit_log_log_slope(sizes: ArrayLike, times: ArrayLike) -> float:
	"""
	Least-squares slope of log(time) against log(n).

	Raises:
		ComplexityInputError: On fewer than three points, mismatched lengths
			or non-positive sizes or times
	"""
	n = np.asarray(sizes, dtype=np.float64)
	t = np.asarray(times, dtype=np.float64)
	if n.shape != t.shape or n.ndim != 1:
		raise ComplexityInputError("sizes and times must be 1-D sequences of equal length")
	if n.size < MIN_SIZE_POINTS:
		raise ComplexityInputError(
			f"Need at least {MIN_SIZE_POINTS} size points, got {n.size}"
		)
	if np.any(n <= 0) or np.any(t <= 0):
		raise ComplexityInputError("Sizes and times must be positive")
	log_n = np.log(n)
	if np.unique(log_n).size < 2:
		raise ComplexityInputError("Need at least two distinct sizes")
	(slope, _), _ = curve_fit(_line, log_n, np.log(t), p0=(1.0, 0.0))
	return float(slope)


def classify_slope(slope: float) -> str:
	"""Map a log-log slope onto a complexity class label"""
	for bound, label in COMPLEXITY_CLASSES:
		if slope <= bound:
			return label
	return f"O(n^{slope:.2f})"


def estimate_complexity(sizes: ArrayLike, times: ArrayLike) -> tuple[float, str]:
	"""
	Fit the log-log slope and classify it.

	Example:
		>>> estimate_complexity([100, 200, 400], [1.0, 4.0, 16.0])[1]
		'O(n^2)'
	"""
	slope = fit_log_log_slope(sizes, times)
	return slope, classify_slope(slope)
