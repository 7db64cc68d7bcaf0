"""Tiered composite score over squashed validation metrics."""

import math

from vexen_cluster.domain.entity.metrics_record import (
	EXTERNAL_METRICS,
	INTERNAL_METRICS,
	MetricsRecord,
)

UNSCORED = -math.inf

TIER_METRICS: dict[int, tuple[str, ...]] = {
	1: INTERNAL_METRICS,
	2: EXTERNAL_METRICS,
	3: INTERNAL_METRICS + EXTERNAL_METRICS,
}


def normalize_metric(name: str, value: float) -> float:
	"""
	Map a metric onto [0, 1] with higher meaning better.

	silhouette: (s + 1) / 2, calinski_harabasz: ch / (ch + 1),
	davies_bouldin: 1 / (1 + db); the external metrics are already in [0, 1].
	"""
	if name == "silhouette":
		return (value + 1.0) / 2.0
	if name == "calinski_harabasz":
		return 1.0 if math.isinf(value) else value / (value + 1.0)
	if name == "davies_bouldin":
		return 1.0 / (1.0 + value)
	return value


def composite_score(m: MetricsRecord, tier: int) -> float:
	"""
	Equal-weight mean of the defined, normalised metrics of a tier.

	Args:
		m: Metrics record
		tier: 1 internal, 2 external, 3 all six

	Returns:
		Score in [0, 1], or -inf when no metric of the tier is defined
	"""
	if tier not in TIER_METRICS:
		raise ValueError(f"evaluation tier must be 1, 2 or 3, got {tier}")
	defined = m.defined()
	components = [
		normalize_metric(name, defined[name]) for name in TIER_METRICS[tier] if name in defined
	]
	if not components:
		return UNSCORED
	return math.fsum(components) / len(components)
