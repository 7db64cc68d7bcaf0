"""Merge threshold selection."""

import numpy as np

from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix
from vexen_cluster.domain.vo.threshold_spec import ThresholdKind, ThresholdSpec


def set_threshold(s: SimilarityMatrix, spec: ThresholdSpec, log: DecisionLog) -> float:
	"""
	Choose the merge threshold for a similarity matrix.

	auto: median m of all entries plus the population standard deviation of
	the entries above m; the maximum entry when nothing lies above m.
	percentile: linearly interpolated percentile of all entries.
	fixed: the configured value.
	"""
	values = s.values.ravel()
	if spec.kind is ThresholdKind.AUTO:
		median = float(np.median(values))
		above = values[values > median]
		if above.size > 0:
			threshold = median + float(np.std(above))
		else:
			threshold = float(np.max(values))
		log.record(f"Adaptive threshold set using density-based approach: {threshold}")
	elif spec.kind is ThresholdKind.PERCENTILE:
		threshold = float(np.percentile(values, spec.value))
		log.record(f"Threshold set using percentile: {threshold}")
	else:
		threshold = float(spec.value)
		log.record(f"Threshold set using fixed value: {threshold}")
	return threshold
