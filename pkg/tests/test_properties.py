import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from vexen_cluster.domain.entity.cluster_labels import ClusterLabels, canonicalize_labels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.service.similarity import compute_similarity
from vexen_cluster.domain.vo.similarity_method import ALL_METHODS
from vexen_cluster.domain.vo.threshold_spec import ThresholdKind, ThresholdSpec

label_lists = st.lists(st.integers(min_value=0, max_value=20), min_size=1, max_size=50)
matrices = arrays(
	np.float64,
	st.tuples(st.integers(2, 12), st.integers(1, 5)),
	elements=st.floats(-100, 100, allow_nan=False, allow_infinity=False, allow_subnormal=False),
)


@given(label_lists)
def test_canonical_labels_read_in_first_occurrence_order(raw):
	labels = canonicalize_labels(raw).tolist()
	seen: list[int] = []
	for value in labels:
		if value not in seen:
			assert value == len(seen)
			seen.append(value)


@given(label_lists)
def test_canonicalization_keeps_the_partition(raw):
	labels = canonicalize_labels(raw).tolist()
	for i in range(len(raw)):
		for j in range(len(raw)):
			assert (raw[i] == raw[j]) == (labels[i] == labels[j])


@given(label_lists)
def test_canonicalization_is_idempotent(raw):
	once = canonicalize_labels(raw)
	assert canonicalize_labels(once.assignments) == once


def test_members_cover_generator_ids():
	labels = ClusterLabels(np.array([2, 2, 5, 0, 5]))
	assert [m.tolist() for m in labels.members()] == [[3], [0, 1], [2, 4]]


@given(label_lists)
def test_members_partition_every_row(raw):
	members = ClusterLabels(np.array(raw)).members()
	assert len(members) == len(set(raw))
	assert sorted(i for m in members for i in m.tolist()) == list(range(len(raw)))
	for m in members:
		assert len({raw[i] for i in m.tolist()}) == 1


@settings(max_examples=50, deadline=None)
@given(matrices)
def test_similarities_are_square_symmetric_and_finite(values):
	x = DataMatrix(values)
	for method in ALL_METHODS:
		s = compute_similarity(x, method).values
		assert s.shape == (x.n_rows, x.n_rows)
		assert np.all(np.isfinite(s))
		assert np.allclose(s, s.T, atol=1e-12)


@given(st.floats(min_value=0.01, max_value=99.99))
def test_percentile_thresholds_parse(p):
	spec = ThresholdSpec.parse(f"{p!r}%")
	assert spec.kind is ThresholdKind.PERCENTILE
	assert spec.value == p
