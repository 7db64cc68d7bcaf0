"""vexen-cluster command-line interface."""

import argparse
import asyncio
import logging
import re
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from vexen_cluster.application.dto.bench_dto import BenchConfig, BenchmarkReport
from vexen_cluster.application.service.bench_service import BenchService
from vexen_cluster.core import SpinexClustering
from vexen_cluster.domain.entity.metrics_record import METRIC_NAMES
from vexen_cluster.domain.vo.similarity_method import SimilarityMethod
from vexen_cluster.infraestructure.input.cli.config_file import CliConfigFile, load_config
from vexen_cluster.infraestructure.input.csv import load_csv, save_csv
from vexen_cluster.infraestructure.input.synthetic import (
	SyntheticDatasetSource,
	make_named,
	resolve_name,
)
from vexen_cluster.infraestructure.output.cache.memory import InMemoryResultCache
from vexen_cluster.infraestructure.output.report import (
	BenchmarkReportWriter,
	write_json,
	write_labels_csv,
)
from vexen_cluster.infraestructure.provider import build_algorithms
from vexen_cluster.shared.exceptions import ConfigurationError, SpinexError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2


def _csv_list(value: str) -> list[str]:
	return [item.strip() for item in value.split(",") if item.strip()]


def _int_list(value: str) -> list[int]:
	try:
		return [int(item) for item in _csv_list(value)]
	except ValueError as e:
		raise argparse.ArgumentTypeError(f"Expected comma-separated integers: {value}") from e


def _slug(name: str) -> str:
	return re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")


def _common_options() -> argparse.ArgumentParser:
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
	common.add_argument("--config", help="YAML configuration file")
	common.add_argument("--out-dir", help="Output directory (default: results)")
	common.add_argument(
		"--log-level",
		default="WARNING",
		choices=["DEBUG", "INFO", "WARNING", "ERROR"],
		help="Logging level (default: WARNING)",
	)
	return common


def _spinex_options(parser: argparse.ArgumentParser) -> None:
	parser.add_argument("--threshold", help='"auto", a percentile such as "90%%", or a number')
	parser.add_argument("--n-clusters", type=int)
	parser.add_argument("--tier", type=int, choices=[1, 2, 3], help="Evaluation tier")
	parser.add_argument("--methods", type=_csv_list, help="Comma-separated similarity methods")
	parser.add_argument("--pca", action="store_true", default=None, help="Reduce with PCA")
	parser.add_argument("--multi-level", action="store_true", default=None)
	parser.add_argument("--levels", type=int)
	parser.add_argument("--initial-threshold", type=float)
	parser.add_argument("--approximation", choices=["random_sampling", "pca"])
	parser.add_argument("--sample-size", type=float)
	parser.add_argument("--parallel", action="store_true", default=None)


def build_parser() -> argparse.ArgumentParser:
	common = _common_options()
	parser = argparse.ArgumentParser(
		prog="vexen-cluster", description="Similarity-based clustering and benchmarking"
	)
	commands = parser.add_subparsers(dest="command", required=True)

	generate = commands.add_parser("generate", parents=[common], help="Write a synthetic dataset")
	generate.add_argument("--name", required=True, help='Dataset name, e.g. "Moons"')
	generate.add_argument("--out", help="CSV path (default: <out-dir>/<name>.csv)")

	cluster = commands.add_parser("cluster", parents=[common], help="Cluster a CSV file")
	cluster.add_argument("--input", help="CSV file")
	cluster.add_argument("--label-column", help="Ground-truth column, excluded from features")
	cluster.add_argument("--standardize", action="store_true")
	cluster.add_argument("--out", help="Labels CSV (default: <out-dir>/labels.csv)")
	cluster.add_argument("--log", action="store_true", help="Print the decision log")
	_spinex_options(cluster)

	benchmark = commands.add_parser("benchmark", parents=[common], help="Run the benchmark")
	benchmark.add_argument("--algorithms", type=_csv_list)
	benchmark.add_argument("--datasets", type=_csv_list)
	benchmark.add_argument("--seeds", type=_int_list)
	benchmark.add_argument("--include-time", action="store_true", default=None)
	benchmark.add_argument("--store-url", help="Persist runs, e.g. sqlite+aiosqlite:///runs.db")

	explain = commands.add_parser("explain", parents=[common], help="Explain one observation")
	explain.add_argument("--input", help="CSV file")
	explain.add_argument("--label-column", help="Column excluded from features")
	explain.add_argument("--observation", type=int, default=0)
	explain.add_argument("-k", "--neighbors", type=int, default=5)
	explain.add_argument("--method", help="Only this similarity method")
	explain.add_argument("--out", help="JSON report (default: <out-dir>/explain_<i>.json)")

	complexity = commands.add_parser(
		"complexity", parents=[common], help="Estimate empirical complexity"
	)
	complexity.add_argument("--algorithms", type=_csv_list)
	complexity.add_argument("--sizes", type=_int_list)
	complexity.add_argument("--dims", type=_int_list)
	complexity.add_argument("--trials", type=int)
	return parser


def _spinex_overrides(args: argparse.Namespace) -> dict:
	multi_level = None
	if args.levels is not None or args.initial_threshold is not None:
		multi_level = {
			key: value
			for key, value in (
				("levels", args.levels),
				("initial_threshold", args.initial_threshold),
			)
			if value is not None
		}
	return {
		"threshold": args.threshold,
		"n_clusters": args.n_clusters,
		"evaluation_tier": args.tier,
		"similarity_methods": args.methods,
		"use_pca": args.pca,
		"use_multi_level": args.multi_level,
		"multi_level_params": multi_level,
		"use_approximation": True if args.approximation else None,
		"approximation_method": args.approximation,
		"sample_size": args.sample_size,
		"use_parallel": args.parallel,
		"rng_seed": args.seed,
	}


def _out_dir(args: argparse.Namespace, config: CliConfigFile) -> Path:
	return Path(config.paths_config(out_dir=args.out_dir).out_dir)


def cmd_generate(args: argparse.Namespace, config: CliConfigFile) -> int:
	dataset = make_named(args.name, args.seed)
	out = Path(args.out) if args.out else _out_dir(args, config) / f"{_slug(dataset.name)}.csv"
	save_csv(dataset, out)
	k = dataset.n_clusters if dataset.n_clusters is not None else "-"
	print(f"{dataset.name}: n={dataset.x.n_rows} d={dataset.x.n_cols} k={k} -> {out}")
	return EXIT_OK


def _input_path(args: argparse.Namespace, config: CliConfigFile) -> tuple[str, str | None]:
	paths = config.paths_config(input=args.input, label_column=args.label_column)
	if paths.input is None:
		raise ConfigurationError("No input file: pass --input or set paths.input")
	return paths.input, paths.label_column


def cmd_cluster(args: argparse.Namespace, config: CliConfigFile) -> int:
	path, label_column = _input_path(args, config)
	dataset = load_csv(path, label_column, args.standardize)
	overrides = _spinex_overrides(args)
	spinex = config.spinex_config(**overrides)
	if dataset.truth is not None and spinex.evaluation_tier in (2, 3):
		spinex = config.spinex_config(**overrides, ground_truth=dataset.truth)

	model = SpinexClustering(spinex)
	labels = model.fit_predict(dataset.x)
	out = Path(args.out) if args.out else _out_dir(args, config) / "labels.csv"
	write_labels_csv(labels, out)

	print(f"Best method: {model.best_method_}")
	print(f"Clusters: {labels.n_clusters}")
	if dataset.truth is not None:
		metrics = model.service.evaluate(dataset.x, labels, "final", 3, dataset.truth)
		for name in METRIC_NAMES:
			value = metrics.get(name)
			print(f"{name}: {'undefined' if value is None else f'{value:.6f}'}")
	if args.log:
		for message in model.get_decision_log():
			print(message)
	print(f"Labels written to {out}")
	return EXIT_OK


async def _persist(report: BenchmarkReport, store_url: str) -> int:
	from vexen_cluster.infraestructure.output.persistence.sqlalchemy import RunStore

	async with RunStore(store_url) as store:
		service = BenchService(
			datasets=SyntheticDatasetSource(),
			metrics_cache=InMemoryResultCache(),
			run_repository=store.repository,
		)
		saved = await service.save(report)
	return saved


def _bench_setup(
	args: argparse.Namespace, config: CliConfigFile, **overrides
) -> tuple[BenchConfig, BenchService]:
	bench = config.bench_config(out_dir=args.out_dir, **overrides)
	service = BenchService(datasets=SyntheticDatasetSource(), metrics_cache=InMemoryResultCache())
	return bench, service


def cmd_benchmark(args: argparse.Namespace, config: CliConfigFile) -> int:
	bench, service = _bench_setup(
		args,
		config,
		algorithms=args.algorithms,
		datasets=args.datasets,
		seeds=args.seeds,
		include_time=args.include_time,
		store_url=args.store_url,
	)
	bench.datasets = [resolve_name(name) for name in bench.datasets]
	algorithms = build_algorithms(
		bench.algorithms, config.spinex_config(), config.baseline_config()
	)
	report = service.run_benchmark(bench, algorithms)
	paths = BenchmarkReportWriter(bench.out_dir, bench.include_time).write(report)

	for row in report.ranking:
		print(f"{row.rank:>3}  {row.algorithm:<24} {row.mean_across_metrics:.4f}")
	print(f"Pareto front: {', '.join(report.pareto)}")
	if bench.store_url:
		saved = asyncio.run(_persist(report, bench.store_url))
		print(f"Stored {saved} runs for session {report.session_id}")
	print(f"Reports written to {paths['report'].parent}")
	return EXIT_OK


def cmd_explain(args: argparse.Namespace, config: CliConfigFile) -> int:
	path, label_column = _input_path(args, config)
	dataset = load_csv(path, label_column)
	n = dataset.x.n_rows
	if not 0 <= args.observation < n:
		raise ConfigurationError(f"Observation {args.observation} is out of range [0, {n})")
	if not 1 <= args.neighbors < n:
		raise ConfigurationError(f"Neighbour count must be in [1, {n - 1}], got {args.neighbors}")

	methods = [SimilarityMethod.parse(args.method)] if args.method else None
	spinex = config.spinex_config(
		similarity_methods=methods,
		enable_similarity_analysis=True,
		enable_neighbor_analysis=True,
		n_neighbors=args.neighbors,
		rng_seed=args.seed,
	)
	model = SpinexClustering(spinex)
	report = model.service.explain(dataset.x, [args.observation], all_methods=True)
	entry = report[args.observation]

	columns = [f"x{j}" for j in range(dataset.x.n_cols)]
	print(f"Observation {args.observation}")
	for method, analysis in entry.neighbor_analysis_by_method.items():
		print(f"method: {method}")
		print("  neighbor  " + "  ".join(f"{c:>10}" for c in columns))
		pairs = zip(analysis.nearest_neighbors, analysis.neighbor_contributions, strict=True)
		for j, diff in pairs:
			print(f"  {j:>8}  " + "  ".join(f"{v:>10.4f}" for v in diff))

	default = _out_dir(args, config) / f"explain_{args.observation}.json"
	out = Path(args.out) if args.out else default
	write_json(report.to_dict(), out)
	print(f"Report written to {out}")
	return EXIT_OK


def cmd_complexity(args: argparse.Namespace, config: CliConfigFile) -> int:
	if args.algorithms is not None and not args.algorithms:
		raise ConfigurationError("Complexity analysis needs at least one algorithm")
	bench, service = _bench_setup(
		args,
		config,
		complexity_algorithms=args.algorithms,
		sizes=args.sizes,
		dims=args.dims,
		trials=args.trials,
	)
	algorithms = build_algorithms(
		bench.complexity_algorithms, config.spinex_config(), config.baseline_config()
	)
	report = service.run_complexity_analysis(bench, algorithms, seed=args.seed)
	BenchmarkReportWriter(bench.out_dir).write_complexity(report)
	for row in report.rows:
		print(f"{row.algorithm:<24} d={row.d:<6} slope={row.slope:.3f}  {row.complexity_class}")
	for name, (slope, label) in report.aggregate.items():
		print(f"{name}: mean slope {slope:.3f}, {label}")
	return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace, CliConfigFile], int]] = {
	"generate": cmd_generate,
	"cluster": cmd_cluster,
	"benchmark": cmd_benchmark,
	"explain": cmd_explain,
	"complexity": cmd_complexity,
}


def main(argv: Sequence[str] | None = None) -> int:
	"""
	Run one command.

	Returns:
		0 on success, 2 on usage or validation errors, 1 on internal failures
	"""
	parser = build_parser()
	try:
		args = parser.parse_args(argv)
	except SystemExit as e:
		return EXIT_OK if e.code in (0, None) else EXIT_USAGE

	logging.basicConfig(
		level=getattr(logging, args.log_level),
		format="%(asctime)s %(levelname)s %(name)s: %(message)s",
	)
	try:
		config = load_config(args.config)
		return COMMANDS[args.command](args, config)
	except (SpinexError, ValueError, OSError) as e:
		print(f"error: {e}", file=sys.stderr)
		return EXIT_USAGE
	except Exception:
		logger.exception("Unexpected failure in %s", args.command)
		return EXIT_INTERNAL


def run() -> None:
	"""Console-script entry point"""
	sys.exit(main())
