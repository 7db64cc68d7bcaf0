"""Shared fixtures."""

import numpy as np
import pytest

from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.similarity_matrix import SimilarityMatrix
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod


def block_matrix(sizes: list[int], within: float = 0.9, across: float = 0.1) -> SimilarityMatrix:
	"""Block similarity matrix with a unit diagonal"""
	labels = np.repeat(np.arange(len(sizes)), sizes)
	values = np.where(labels[:, None] == labels[None, :], within, across)
	np.fill_diagonal(values, 1.0)
	return SimilarityMatrix(values, SimilarityMethod.CORRELATION)


def random_similarity(rng: np.random.Generator, n: int) -> SimilarityMatrix:
	upper = np.triu(rng.uniform(0.0, 1.0, size=(n, n)), k=1)
	values = upper + upper.T
	np.fill_diagonal(values, 1.0)
	return SimilarityMatrix(values, SimilarityMethod.CORRELATION)


@pytest.fixture
def log() -> DecisionLog:
	return DecisionLog()


@pytest.fixture
def two_blocks() -> SimilarityMatrix:
	return block_matrix([2, 2])


@pytest.fixture
def two_blobs() -> tuple[DataMatrix, np.ndarray]:
	"""Two tight, far-apart blobs of 20 points each"""
	rng = np.random.default_rng(7)
	first = rng.normal([-5.0, -5.0], 0.2, size=(20, 2))
	second = rng.normal([5.0, 5.0], 0.2, size=(20, 2))
	return DataMatrix(np.vstack([first, second])), np.repeat([0, 1], 20)
