import time

import numpy as np
import pytest

from vexen_cluster.application.dto.bench_dto import BaselineConfig, BenchConfig, RankingRow
from vexen_cluster.application.service.bench_service import BenchService
from vexen_cluster.application.usecase.bench.normalize_and_rank_usecase import (
	NormalizeAndRankUseCase,
	competition_ranks,
)
from vexen_cluster.application.usecase.bench.pareto_front_usecase import (
	TIME_OBJECTIVE,
	ParetoFrontUseCase,
)
from vexen_cluster.domain.entity.cluster_labels import ClusterLabels, canonicalize_labels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.decision_log import DecisionLog
from vexen_cluster.domain.entity.metrics_record import METRIC_NAMES, MetricsRecord
from vexen_cluster.domain.entity.run_record import RunRecord
from vexen_cluster.domain.provider.clustering_algorithm_port import IClusteringAlgorithmPort
from vexen_cluster.infraestructure.input.synthetic import SyntheticDatasetSource, make_named
from vexen_cluster.infraestructure.output.cache.memory import InMemoryResultCache
from vexen_cluster.infraestructure.output.report import BenchmarkReportWriter
from vexen_cluster.infraestructure.provider import build_algorithm, build_algorithms
from vexen_cluster.shared.exceptions import ConfigurationError


class TruthEcho(IClusteringAlgorithmPort):
	"""Returns the ground truth, or one cluster without it"""

	name = "truth_echo"

	def fit_predict(self, x: DataMatrix, seed: int, truth: ClusterLabels | None = None):
		if truth is None:
			return ClusterLabels(np.zeros(x.n_rows, dtype=np.int64))
		return canonicalize_labels(truth.assignments)


class Failing(IClusteringAlgorithmPort):
	name = "failing"

	def fit_predict(self, x: DataMatrix, seed: int, truth: ClusterLabels | None = None):
		raise RuntimeError("boom")


class QuadraticSleeper(IClusteringAlgorithmPort):
	"""Sleeps proportionally to n^2"""

	name = "quadratic"

	def fit_predict(self, x: DataMatrix, seed: int, truth: ClusterLabels | None = None):
		time.sleep(x.n_rows**2 * 1e-6)
		return ClusterLabels(np.zeros(x.n_rows, dtype=np.int64))


def record(algorithm: str, dataset: str = "d", **metrics) -> RunRecord:
	return RunRecord(algorithm, dataset, 0, MetricsRecord(n_clusters=2, **metrics), 0.01)


def service() -> BenchService:
	return BenchService(datasets=SyntheticDatasetSource(), metrics_cache=InMemoryResultCache())


GOOD = {
	"silhouette": 0.8,
	"calinski_harabasz": 300.0,
	"davies_bouldin": 0.2,
	"homogeneity": 1.0,
	"completeness": 1.0,
	"v_measure": 1.0,
}
POOR = {
	"silhouette": 0.1,
	"calinski_harabasz": 10.0,
	"davies_bouldin": 2.0,
	"homogeneity": 0.2,
	"completeness": 0.3,
	"v_measure": 0.25,
}


def test_competition_ranks():
	assert competition_ranks([0.9, 0.5, 0.5, 0.1]) == [1, 2, 2, 4]


def test_ranking_orders_by_mean_across_metrics():
	rows = NormalizeAndRankUseCase(DecisionLog())([record("b", **POOR), record("a", **GOOD)])
	assert [r.algorithm for r in rows] == ["a", "b"]
	assert rows[0].mean_across_metrics == pytest.approx(1.0)
	assert rows[1].mean_across_metrics == pytest.approx(0.0)
	assert rows[0].metrics["davies_bouldin"] == pytest.approx(1.0)


def test_identical_algorithms_share_a_rank():
	rows = NormalizeAndRankUseCase(DecisionLog())(
		[record("x", **GOOD), record("y", **GOOD), record("z", **POOR)]
	)
	assert [(r.algorithm, r.rank) for r in rows] == [("x", 1), ("y", 1), ("z", 3)]


def test_metric_undefined_everywhere_is_excluded():
	log = DecisionLog()
	internal = {k: GOOD[k] for k in ("silhouette", "calinski_harabasz", "davies_bouldin")}
	rows = NormalizeAndRankUseCase(log)([record("a", **internal), record("b", **internal)])
	assert all(r.metrics["homogeneity"] is None for r in rows)
	assert all(r.mean_across_metrics == pytest.approx(1.0) for r in rows)
	assert log.contains("Metric homogeneity is undefined for every run")


def test_datasets_weigh_equally():
	runs = [
		record("a", "d1", silhouette=1.0),
		record("a", "d1", silhouette=1.0),
		record("a", "d2", silhouette=0.0),
		record("b", "d1", silhouette=0.4),
		record("b", "d2", silhouette=0.4),
	]
	rows = {r.algorithm: r for r in NormalizeAndRankUseCase(DecisionLog())(runs)}
	assert rows["a"].metrics["silhouette"] == pytest.approx(0.5)
	assert rows["b"].metrics["silhouette"] == pytest.approx(0.4)


def ranking_row(name: str, values: list[float]) -> RankingRow:
	metrics = dict(zip(METRIC_NAMES, values, strict=True))
	return RankingRow(name, metrics, sum(values) / len(values), 1)


def test_pareto_front_flags_non_dominated_rows():
	ranking = [
		ranking_row("a", [1.0, 0.0, 1.0, 1.0, 1.0, 1.0]),
		ranking_row("b", [0.0, 1.0, 1.0, 1.0, 1.0, 1.0]),
		ranking_row("c", [0.0, 0.0, 1.0, 1.0, 1.0, 1.0]),
	]
	rows = ParetoFrontUseCase(DecisionLog())(ranking)
	assert [(r.algorithm, r.optimal) for r in rows] == [("a", True), ("b", True), ("c", False)]


def test_pareto_time_objective_is_negated_median():
	ranking = [ranking_row("a", [1.0] * 6), ranking_row("b", [1.0] * 6)]
	runs = [
		RunRecord("a", "d", 0, MetricsRecord(2), 2.0),
		RunRecord("b", "d", 0, MetricsRecord(2), 1.0),
	]
	rows = ParetoFrontUseCase(DecisionLog())(ranking, runs, include_time=True)
	assert rows[0].objectives[TIME_OBJECTIVE] == -2.0
	assert [r.optimal for r in rows] == [False, True]


def test_failed_run_is_recorded_and_sweep_continues():
	report = service().run_benchmark(
		BenchConfig(datasets=["Moons"], algorithms=["x"], seeds=[0, 1]),
		[Failing(), TruthEcho()],
	)
	assert len(report.runs) == 4
	failed = [r for r in report.runs if r.algorithm == "failing"]
	assert all(r.error == "RuntimeError: boom" for r in failed)
	assert all(r.metrics.defined() == {} for r in failed)
	echo = [r for r in report.runs if r.algorithm == "truth_echo"]
	assert all(r.metrics.v_measure == pytest.approx(1.0) for r in echo)
	assert report.ranking[0].algorithm == "truth_echo"
	assert report.pareto == ["truth_echo"]
	assert all(r.session_id == report.session_id for r in report.runs)


def test_runs_are_ordered_by_dataset_seed_algorithm():
	report = service().run_benchmark(
		BenchConfig(datasets=["Moons", "Circles"], algorithms=["x"], seeds=[0, 1]),
		[TruthEcho(), build_algorithm("kmeans")],
	)
	keys = [(r.dataset, r.seed, r.algorithm) for r in report.runs]
	assert keys[:4] == [
		("Moons", 0, "truth_echo"),
		("Moons", 0, "kmeans"),
		("Moons", 1, "truth_echo"),
		("Moons", 1, "kmeans"),
	]


def test_baselines_use_truth_cluster_count():
	dataset = make_named("Blobs", 0)
	labels = build_algorithm("kmeans", baseline_config=BaselineConfig()).fit_predict(
		dataset.x, 0, dataset.truth
	)
	assert labels.n_clusters == 4


def test_unknown_algorithm_is_rejected():
	with pytest.raises(ConfigurationError, match="Unknown algorithm"):
		build_algorithm("nope")


def test_execution_time_samples_are_clamped_to_the_floor():
	sample = service().measure_execution_time(TruthEcho(), n=50, d=3)
	assert (sample.algorithm, sample.n, sample.d) == ("truth_echo", 50, 3)
	assert len(sample.times) == 30
	assert min(sample.times) >= 1e-6


def test_complexity_of_quadratic_stub():
	report = service().run_complexity_analysis(
		BenchConfig(sizes=[100, 200, 400], dims=[2], trials=3), [QuadraticSleeper()]
	)
	assert len(report.rows) == 1
	assert report.rows[0].complexity_class == "O(n^2)"
	assert report.aggregate["quadratic"][1] == "O(n^2)"


def test_complexity_needs_an_algorithm():
	with pytest.raises(ConfigurationError):
		service().run_complexity_analysis(BenchConfig(), [])


@pytest.mark.slow
def test_benchmark_files_are_reproducible(tmp_path):
	config = BenchConfig(
		datasets=["Moons", "Disjoint Clusters"],
		algorithms=["spinex", "kmeans", "dbscan"],
		seeds=[0, 1],
	)
	contents = []
	for run in ("first", "second"):
		algorithms = build_algorithms(config.algorithms)
		report = service().run_benchmark(config, algorithms)
		paths = BenchmarkReportWriter(tmp_path / run).write(report)
		contents.append({t: paths[t].read_bytes() for t in ("runs", "ranking", "pareto")})
	assert contents[0] == contents[1]
