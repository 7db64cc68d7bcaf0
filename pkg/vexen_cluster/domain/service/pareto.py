"""Pareto dominance over maximised objectives."""

from collections.abc import Mapping, Sequence

import numpy as np


def dominates(a: Sequence[float], b: Sequence[float]) -> bool:
	"""True if a is >= b in every objective and > in at least one"""
	left = np.asarray(a, dtype=np.float64)
	right = np.asarray(b, dtype=np.float64)
	return bool(np.all(left >= right) and np.any(left > right))


def pareto_front(points: Mapping[str, Sequence[float]]) -> list[str]:
	"""
	Names whose objective vectors no other vector dominates.

	All objectives are maximised. Names are returned in input order.
	"""
	names = list(points)
	return [
		name
		for name in names
		if not any(dominates(points[other], points[name]) for other in names if other != name)
	]
