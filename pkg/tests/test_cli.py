import json

import pytest

from vexen_cluster.infraestructure.input.cli import load_config, main
from vexen_cluster.shared.exceptions import ConfigurationError


@pytest.fixture
def blobs_csv(tmp_path):
	path = tmp_path / "blobs.csv"
	assert main(["generate", "--name", "Simple Blobs", "--seed", "1", "--out", str(path)]) == 0
	return path


def test_generate_writes_features_and_labels(tmp_path, capsys):
	path = tmp_path / "generated.csv"
	assert main(["generate", "--name", "Simple Blobs", "--seed", "1", "--out", str(path)]) == 0
	assert "n=300 d=2 k=4" in capsys.readouterr().out
	lines = path.read_text().splitlines()
	assert lines[0] == "x0,x1,label"
	assert len(lines) == 301


def test_generate_unknown_dataset_exits_2(tmp_path, capsys):
	assert main(["generate", "--name", "Nope", "--out-dir", str(tmp_path)]) == 2
	assert "Unknown dataset" in capsys.readouterr().err


def test_cluster_writes_labels_and_metrics(blobs_csv, tmp_path, capsys):
	out = tmp_path / "labels.csv"
	code = main(
		[
			"cluster",
			"--input",
			str(blobs_csv),
			"--label-column",
			"label",
			"--n-clusters",
			"4",
			"--methods",
			"kernel,cosine",
			"--out",
			str(out),
		]
	)
	assert code == 0
	lines = out.read_text().splitlines()
	assert lines[0] == "row_index,label"
	assert len(lines) == 301
	printed = capsys.readouterr().out
	assert "Clusters: 4" in printed
	assert "v_measure:" in printed


def test_cluster_without_input_exits_2(capsys):
	assert main(["cluster"]) == 2
	assert "No input file" in capsys.readouterr().err


def test_invalid_threshold_exits_2(blobs_csv):
	assert main(["cluster", "--input", str(blobs_csv), "--threshold", "abc"]) == 2


def test_unknown_subcommand_exits_2():
	assert main(["frobnicate"]) == 2


def test_explain_reports_neighbors(blobs_csv, tmp_path, capsys):
	out = tmp_path / "explain.json"
	code = main(
		[
			"explain",
			"--input",
			str(blobs_csv),
			"--label-column",
			"label",
			"--observation",
			"3",
			"-k",
			"2",
			"--out",
			str(out),
		]
	)
	assert code == 0
	report = json.loads(out.read_text())
	by_method = report["3"]["neighbor_analysis_by_method"]
	assert set(by_method) == {"correlation", "spearman", "kernel", "cosine"}
	assert all(len(m["nearest_neighbors"]) == 2 for m in by_method.values())
	assert "method: kernel" in capsys.readouterr().out


def test_explain_out_of_range_observation_exits_2(blobs_csv):
	assert main(["explain", "--input", str(blobs_csv), "--observation", "300"]) == 2


def test_benchmark_writes_reports(tmp_path, capsys):
	code = main(
		[
			"benchmark",
			"--algorithms",
			"kmeans,agglomerative",
			"--datasets",
			"moons",
			"--seeds",
			"0",
			"--out-dir",
			str(tmp_path),
			"--store-url",
			f"sqlite+aiosqlite:///{tmp_path / 'runs.db'}",
		]
	)
	assert code == 0
	for name in ("runs.csv", "ranking.csv", "pareto.csv", "report.json"):
		assert (tmp_path / name).is_file()
	header = (tmp_path / "runs.csv").read_text().splitlines()[0]
	assert "wall_time" not in header
	assert "Stored 2 runs" in capsys.readouterr().out


def test_benchmark_unknown_algorithm_exits_2(tmp_path):
	assert main(["benchmark", "--algorithms", "nope", "--out-dir", str(tmp_path)]) == 2


def test_complexity_with_empty_algorithm_list_exits_2(tmp_path):
	assert main(["complexity", "--algorithms", "", "--out-dir", str(tmp_path)]) == 2


def test_complexity_writes_series(tmp_path):
	code = main(
		[
			"complexity",
			"--algorithms",
			"kmeans",
			"--sizes",
			"20,40,80",
			"--dims",
			"2",
			"--trials",
			"2",
			"--out-dir",
			str(tmp_path),
		]
	)
	assert code == 0
	assert (tmp_path / "complexity.csv").is_file()
	assert (tmp_path / "timings.csv").read_text().count("\n") == 1 + 3 * 2
	assert len((tmp_path / "complexity_kmeans_d2.dat").read_text().splitlines()) == 3


def test_config_file_layers_under_flags(tmp_path, blobs_csv):
	config = tmp_path / "config.yaml"
	config.write_text(
		f"spinex:\n  threshold: '90%'\n  n_clusters: 3\npaths:\n  input: {blobs_csv}\n"
	)
	loaded = load_config(config)
	assert loaded.spinex_config().n_clusters == 3
	assert loaded.spinex_config(n_clusters=4).n_clusters == 4
	assert loaded.paths_config().input == str(blobs_csv)
	assert main(["cluster", "--config", str(config), "--out-dir", str(tmp_path)]) == 0
	assert (tmp_path / "labels.csv").is_file()


@pytest.mark.parametrize(
	"content",
	["spinex:\n  colour: red\n", "plotting:\n  dpi: 3\n", "- a\n- b\n", "spinex: [1\n"],
)
def test_bad_config_files_are_rejected(tmp_path, content):
	config = tmp_path / "config.yaml"
	config.write_text(content)
	with pytest.raises(ConfigurationError):
		load_config(config)


def test_missing_config_file_exits_2(tmp_path):
	assert main(["generate", "--name", "Moons", "--config", str(tmp_path / "none.yaml")]) == 2
