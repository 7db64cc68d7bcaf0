import numpy as np
import pytest

from vexen_cluster.domain.service.complexity import (
	classify_slope,
	estimate_complexity,
	fit_log_log_slope,
)
from vexen_cluster.domain.service.pareto import dominates, pareto_front
from vexen_cluster.shared.exceptions import ComplexityInputError

SIZES = np.array([100, 200, 400, 800, 1600, 3200, 6400, 12800], dtype=float)


def brute_front(points: dict[str, list[float]]) -> list[str]:
	front = []
	for name, p in points.items():
		dominated = False
		for other, q in points.items():
			if other == name:
				continue
			if all(a >= b for a, b in zip(q, p, strict=True)) and any(
				a > b for a, b in zip(q, p, strict=True)
			):
				dominated = True
		if not dominated:
			front.append(name)
	return front


def test_dominates():
	assert dominates([1.0, 1.0], [1.0, 0.5])
	assert not dominates([1.0, 1.0], [1.0, 1.0])
	assert not dominates([1.0, 0.0], [0.0, 1.0])


def test_pareto_front_matches_brute_force():
	rng = np.random.default_rng(99)
	for _ in range(1000):
		n = int(rng.integers(1, 26))
		m = int(rng.integers(1, 5))
		# coarse grid so that ties and duplicates occur
		points = {f"alg{i}": rng.integers(0, 4, size=m).tolist() for i in range(n)}
		assert pareto_front(points) == brute_front(points)


def test_identical_points_are_both_optimal():
	assert pareto_front({"a": [0.5, 0.5], "b": [0.5, 0.5]}) == ["a", "b"]


@pytest.mark.parametrize("slope", [0.0, 1.0, 1.46, 2.0])
def test_recovers_planted_slope(slope):
	assert fit_log_log_slope(SIZES, SIZES**slope) == pytest.approx(slope, abs=0.05)


@pytest.mark.parametrize("slope", [0.0, 1.0, 1.46, 2.0])
def test_recovers_planted_slope_under_noise(slope):
	rng = np.random.default_rng(int(slope * 100))
	times = SIZES**slope * rng.uniform(0.9, 1.1, size=SIZES.size)
	assert fit_log_log_slope(SIZES, times) == pytest.approx(slope, abs=0.15)


@pytest.mark.parametrize(
	("slope", "label"),
	[
		(0.0, "O(1)"),
		(0.3, "O(log n)"),
		(1.0, "O(n)"),
		(1.46, "O(n log n)"),
		(2.0, "O(n^2)"),
		(3.1, "O(n^3.10)"),
	],
)
def test_classify_slope(slope, label):
	assert classify_slope(slope) == label


def test_quadratic_example():
	slope, label = estimate_complexity([100, 200, 400], [1.0, 4.0, 16.0])
	assert slope == pytest.approx(2.0)
	assert label == "O(n^2)"


@pytest.mark.parametrize(
	("sizes", "times"),
	[
		([100, 200], [1.0, 2.0]),
		([100, 200, 400], [1.0, 0.0, 2.0]),
		([100, 200, 400], [1.0, 2.0]),
		([100, 100, 100], [1.0, 2.0, 3.0]),
	],
)
def test_rejects_unusable_input(sizes, times):
	with pytest.raises(ComplexityInputError):
		fit_log_log_slope(sizes, times)
