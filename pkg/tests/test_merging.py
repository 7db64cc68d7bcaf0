import numpy as np
import pytest
from conftest import block_matrix, random_similarity

from vexen_cluster.domain.entity.cluster_labels import canonicalize_labels
from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix
from vexen_cluster.domain.service.merging import dynamic_threshold, merge_clusters, should_merge
from vexen_cluster.domain.service.threshold import set_threshold
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod
from vexen_cluster.domain.vo.threshold_spec import ThresholdSpec


def exhaustive_merge(values: np.ndarray, t: float) -> list[int]:
	"""Rescan every cluster pair from the start after each merge"""
	clusters = [[i] for i in range(values.shape[0])]
	merged = True
	while merged:
		merged = False
		for a in range(len(clusters)):
			for b in range(a + 1, len(clusters)):
				block = values[np.ix_(clusters[a], clusters[b])]
				if block.sum() / block.size > t:
					clusters[a] = sorted(clusters[a] + clusters[b])
					del clusters[b]
					merged = True
					break
			if merged:
				break
	labels = np.empty(values.shape[0], dtype=int)
	for label, members in enumerate(clusters):
		labels[members] = label
	return canonicalize_labels(labels).tolist()


def test_should_merge_single_pair_above_threshold():
	s = SimilarityMatrix(np.array([[1.0, 0.8], [0.8, 1.0]]), SimilarityMethod.COSINE)
	assert should_merge([0], [1], s, 0.5)


def test_should_merge_is_strict():
	s = SimilarityMatrix(np.array([[1.0, 0.5], [0.5, 1.0]]), SimilarityMethod.COSINE)
	assert not should_merge([0], [1], s, 0.5)


def test_should_merge_uses_mean_of_cross_pairs():
	values = np.eye(3)
	values[0, 2] = values[2, 0] = 0.9
	values[1, 2] = values[2, 1] = 0.1
	s = SimilarityMatrix(values, SimilarityMethod.COSINE)
	assert not should_merge([0, 1], [2], s, 0.5)


def test_merge_two_blocks(two_blocks):
	assert merge_clusters(two_blocks, 0.5).tolist() == [0, 0, 1, 1]


def test_merge_all_ones_gives_one_cluster():
	s = SimilarityMatrix(np.ones((5, 5)), SimilarityMethod.KERNEL)
	assert merge_clusters(s, 0.99).tolist() == [0] * 5


def test_merge_identity_gives_singletons():
	s = SimilarityMatrix(np.eye(5), SimilarityMethod.KERNEL)
	assert merge_clusters(s, 0.5).tolist() == [0, 1, 2, 3, 4]


def test_merge_takes_the_first_eligible_pair_not_the_most_similar():
	values = np.array([[1.0, 0.6, 0.1], [0.6, 1.0, 0.85], [0.1, 0.85, 1.0]])
	s = SimilarityMatrix(values, SimilarityMethod.KERNEL)
	# (0, 1) merges first; the merged pair then averages 0.475 against point 2
	assert merge_clusters(s, 0.5).tolist() == [0, 0, 1]
	assert merge_clusters(s, 0.6).tolist() == [0, 1, 1]


def test_merge_matches_exhaustive_scan():
	rng = np.random.default_rng(3)
	for _ in range(500):
		n = int(rng.integers(1, 9))
		s = random_similarity(rng, n)
		t = float(rng.uniform(0.0, 1.0))
		assert merge_clusters(s, t).tolist() == exhaustive_merge(s.values, t)


def test_merge_result_is_a_fixed_point():
	rng = np.random.default_rng(5)
	for _ in range(50):
		s = random_similarity(rng, 12)
		t = float(rng.uniform(0.2, 0.8))
		members = merge_clusters(s, t).members()
		for a in range(len(members)):
			for b in range(a + 1, len(members)):
				assert not should_merge(members[a], members[b], s, t)


def test_merge_extreme_thresholds():
	rng = np.random.default_rng(9)
	s = random_similarity(rng, 10)
	off = s.off_diagonal()
	assert merge_clusters(s, float(off.max())).n_clusters == 10
	assert merge_clusters(s, float(off.min()) - 1e-9).n_clusters == 1


def test_auto_threshold_rule(log):
	rng = np.random.default_rng(17)
	for _ in range(100):
		s = random_similarity(rng, int(rng.integers(2, 15)))
		values = s.values.ravel()
		median = np.median(values)
		above = values[values > median]
		expected = median + np.std(above) if above.size else values.max()
		assert set_threshold(s, ThresholdSpec.auto(), log) == pytest.approx(expected, abs=1e-12)


def test_auto_threshold_hand_example(log):
	s = SimilarityMatrix(np.array([[0.1, 0.2], [0.9, 1.0]]), SimilarityMethod.COSINE)
	assert set_threshold(s, ThresholdSpec.auto(), log) == pytest.approx(0.6)


def test_auto_threshold_constant_matrix_falls_back_to_max(log):
	s = SimilarityMatrix(np.full((3, 3), 0.7), SimilarityMethod.COSINE)
	assert set_threshold(s, ThresholdSpec.auto(), log) == pytest.approx(0.7)


def test_percentile_and_fixed_thresholds(log):
	s = SimilarityMatrix(np.array([[0.0, 1.0], [2.0, 3.0]]), SimilarityMethod.COSINE)
	assert set_threshold(s, ThresholdSpec.parse("50%"), log) == pytest.approx(1.5)
	assert set_threshold(s, ThresholdSpec.parse(0.42), log) == 0.42
	assert log.contains("Threshold set using percentile")
	assert log.contains("Threshold set using fixed value")


def test_dynamic_threshold_stable_two_blocks():
	s = block_matrix([3, 3], within=0.95, across=0.1)
	assert dynamic_threshold(s, 0.8, 0.9) == pytest.approx(0.72)


def test_dynamic_threshold_all_ones():
	s = SimilarityMatrix(np.ones((4, 4)), SimilarityMethod.KERNEL)
	assert dynamic_threshold(s, 0.5, 0.9) == pytest.approx(0.45)


def test_dynamic_threshold_single_iteration_returns_initial():
	s = SimilarityMatrix(np.eye(3), SimilarityMethod.KERNEL)
	assert dynamic_threshold(s, 0.6, 0.9, max_iterations=1) == 0.6


def test_dynamic_threshold_rejects_bad_decay(two_blocks):
	with pytest.raises(ValueError):
		dynamic_threshold(two_blocks, 0.5, 1.5)
