import math

import numpy as np
import pytest

from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.metrics_record import MetricsRecord
from vexen_cluster.domain.service import metrics
from vexen_cluster.domain.service.scoring import composite_score, normalize_metric
from vexen_cluster.shared.exceptions import UndefinedMetricError

POINTS = DataMatrix(np.array([[0.0], [1.0], [10.0], [11.0]]))
LABELS = [0, 0, 1, 1]


def brute_silhouette(x: np.ndarray, labels: np.ndarray) -> float:
	n = len(labels)
	scores = []
	for i in range(n):
		own = [j for j in range(n) if labels[j] == labels[i] and j != i]
		if not own:
			scores.append(0.0)
			continue
		a = sum(np.linalg.norm(x[i] - x[j]) for j in own) / len(own)
		b = min(
			sum(np.linalg.norm(x[i] - x[j]) for j in range(n) if labels[j] == c)
			/ sum(1 for j in range(n) if labels[j] == c)
			for c in set(labels.tolist())
			if c != labels[i]
		)
		scores.append(0.0 if max(a, b) == 0 else (b - a) / max(a, b))
	return sum(scores) / n


def brute_calinski_harabasz(x: np.ndarray, labels: np.ndarray) -> float:
	n, clusters = len(labels), sorted(set(labels.tolist()))
	k = len(clusters)
	overall = x.mean(axis=0)
	between = within = 0.0
	for c in clusters:
		members = x[labels == c]
		centroid = members.mean(axis=0)
		between += len(members) * float(np.sum((centroid - overall) ** 2))
		within += float(np.sum((members - centroid) ** 2))
	return between / within * (n - k) / (k - 1)


def brute_davies_bouldin(x: np.ndarray, labels: np.ndarray) -> float:
	clusters = sorted(set(labels.tolist()))
	centroids = [x[labels == c].mean(axis=0) for c in clusters]
	scatter = [
		float(np.mean(np.linalg.norm(x[labels == c] - centroids[i], axis=1)))
		for i, c in enumerate(clusters)
	]
	worst = []
	for i in range(len(clusters)):
		worst.append(
			max(
				(scatter[i] + scatter[j]) / float(np.linalg.norm(centroids[i] - centroids[j]))
				for j in range(len(clusters))
				if j != i
			)
		)
	return sum(worst) / len(worst)


def brute_entropy(labels: list[int]) -> float:
	n = len(labels)
	return -sum(
		labels.count(c) / n * math.log(labels.count(c) / n) for c in set(labels)
	)


def brute_conditional_entropy(target: list[int], given: list[int]) -> float:
	n = len(target)
	total = 0.0
	for g in set(given):
		size = given.count(g)
		for t in set(target):
			joint = sum(1 for a, b in zip(target, given, strict=True) if a == t and b == g)
			if joint:
				total -= joint / n * math.log(joint / size)
	return total


def brute_external(truth: list[int], pred: list[int]) -> tuple[float, float, float]:
	h_c, h_k = brute_entropy(truth), brute_entropy(pred)
	h = 1.0 if h_c == 0 else 1.0 - brute_conditional_entropy(truth, pred) / h_c
	c = 1.0 if h_k == 0 else 1.0 - brute_conditional_entropy(pred, truth) / h_k
	v = 0.0 if h + c == 0 else 2 * h * c / (h + c)
	return h, c, v


def test_silhouette_fixture():
	assert metrics.silhouette(POINTS, LABELS) == pytest.approx(0.899749, abs=1e-6)


def test_calinski_harabasz_fixture():
	assert metrics.calinski_harabasz(POINTS, LABELS) == pytest.approx(200.0, abs=1e-9)


def test_davies_bouldin_fixture():
	assert metrics.davies_bouldin(POINTS, LABELS) == pytest.approx(0.1, abs=1e-9)


def test_internal_metrics_match_brute_force():
	rng = np.random.default_rng(2024)
	for _ in range(200):
		n = int(rng.integers(4, 31))
		d = int(rng.integers(1, 6))
		k = int(rng.integers(2, min(5, n - 1) + 1))
		labels = np.concatenate([np.arange(k), rng.integers(0, k, size=n - k)])
		rng.shuffle(labels)
		x = rng.normal(size=(n, d))
		data = DataMatrix(x)

		assert metrics.silhouette(data, labels) == pytest.approx(
			brute_silhouette(x, labels), abs=1e-9
		)
		assert metrics.calinski_harabasz(data, labels) == pytest.approx(
			brute_calinski_harabasz(x, labels), abs=1e-9, rel=1e-12
		)
		assert metrics.davies_bouldin(data, labels) == pytest.approx(
			brute_davies_bouldin(x, labels), abs=1e-9
		)


def test_external_metrics_match_brute_force():
	rng = np.random.default_rng(11)
	for _ in range(200):
		n = int(rng.integers(2, 31))
		truth = rng.integers(0, int(rng.integers(1, 5)), size=n).tolist()
		pred = rng.integers(0, int(rng.integers(1, 5)), size=n).tolist()
		h, c, v = brute_external(truth, pred)
		assert metrics.homogeneity(truth, pred) == pytest.approx(h, abs=1e-9)
		assert metrics.completeness(truth, pred) == pytest.approx(c, abs=1e-9)
		assert metrics.v_measure(truth, pred) == pytest.approx(v, abs=1e-9)


def test_perfect_labelling_scores_one():
	truth = [0, 0, 1, 1, 2]
	assert metrics.homogeneity(truth, [4, 4, 7, 7, 1]) == pytest.approx(1.0)
	assert metrics.completeness(truth, [4, 4, 7, 7, 1]) == pytest.approx(1.0)
	assert metrics.v_measure(truth, [4, 4, 7, 7, 1]) == pytest.approx(1.0)


def test_single_cluster_is_undefined_internally():
	with pytest.raises(UndefinedMetricError):
		metrics.silhouette(POINTS, [0, 0, 0, 0])
	with pytest.raises(UndefinedMetricError):
		metrics.calinski_harabasz(POINTS, [0, 1, 2, 3])


def test_coincident_centroids_make_davies_bouldin_undefined():
	x = DataMatrix(np.array([[-1.0], [1.0], [-2.0], [2.0]]))
	with pytest.raises(UndefinedMetricError):
		metrics.davies_bouldin(x, [0, 0, 1, 1])


def test_zero_within_scatter_makes_calinski_harabasz_undefined():
	x = DataMatrix(np.array([[0.0, 1.0], [0.0, 1.0], [3.0, 3.0], [3.0, 3.0]]))
	with pytest.raises(UndefinedMetricError, match="Within-cluster scatter is zero"):
		metrics.calinski_harabasz(x, [0, 0, 1, 1])


def test_davies_bouldin_is_inverted_when_normalised():
	assert normalize_metric("davies_bouldin", 0.1) > normalize_metric("davies_bouldin", 2.0)


def test_composite_score_prefers_better_silhouette():
	good = MetricsRecord(n_clusters=2, silhouette=0.9, calinski_harabasz=200.0, davies_bouldin=0.1)
	poor = MetricsRecord(n_clusters=2, silhouette=0.1, calinski_harabasz=200.0, davies_bouldin=0.1)
	assert composite_score(good, 1) > composite_score(poor, 1)
