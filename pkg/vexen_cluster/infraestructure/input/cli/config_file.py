"""YAML configuration file of the command-line interface."""

import dataclasses
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from vexen_cluster.application.dto.bench_dto import BaselineConfig, BenchConfig
from vexen_cluster.application.dto.config_dto import SpinexConfig
from vexen_cluster.shared.exceptions import ConfigurationError


@dataclass
class PathsConfig:
	"""Input and output locations"""

	input: str | None = None
	output: str | None = None
	out_dir: str = "results"
	label_column: str | None = None


@dataclass
class CliConfigFile:
	"""
	Parsed configuration document.

	Sections are kept as raw mappings so that command-line flags can be
	layered on top before the typed configs are built.

	Example (YAML):
		spinex:
		  threshold: "90%"
		  n_clusters: 4
		baselines:
		  dbscan_eps: 0.3
		bench:
		  seeds: [0, 1, 2]
		paths:
		  out_dir: results
	"""

	spinex: dict[str, Any] = field(default_factory=dict)
	baselines: dict[str, Any] = field(default_factory=dict)
	bench: dict[str, Any] = field(default_factory=dict)
	paths: dict[str, Any] = field(default_factory=dict)

	def spinex_config(self, **overrides: Any) -> SpinexConfig:
		return _build(SpinexConfig, "spinex", {**self.spinex, **_given(overrides)})

	def baseline_config(self, **overrides: Any) -> BaselineConfig:
		return _build(BaselineConfig, "baselines", {**self.baselines, **_given(overrides)})

	def bench_config(self, **overrides: Any) -> BenchConfig:
		return _build(BenchConfig, "bench", {**self.bench, **_given(overrides)})

	def paths_config(self, **overrides: Any) -> PathsConfig:
		return _build(PathsConfig, "paths", {**self.paths, **_given(overrides)})


SECTIONS = {
	"spinex": SpinexConfig,
	"baselines": BaselineConfig,
	"bench": BenchConfig,
	"paths": PathsConfig,
}


def _given(overrides: dict[str, Any]) -> dict[str, Any]:
	"""Drop flags the user did not pass"""
	return {key: value for key, value in overrides.items() if value is not None}


def _check_keys(section: str, values: dict[str, Any]) -> None:
	known = {f.name for f in dataclasses.fields(SECTIONS[section]) if f.init}
	unknown = sorted(set(values) - known)
	if unknown:
		raise ConfigurationError(f"Unknown keys in section {section!r}: {unknown}")


def _build(cls: type, section: str, values: dict[str, Any]) -> Any:
	_check_keys(section, values)
	try:
		return cls(**values)
	except TypeError as e:
		raise ConfigurationError(f"Invalid {section} configuration: {e}") from e


def load_config(path: str | Path | None) -> CliConfigFile:
	"""
	Read and validate a configuration file.

	Args:
		path: YAML file; None gives an empty configuration

	Returns:
		CliConfigFile with every section checked for unknown keys

	Raises:
		ConfigurationError: Missing file, invalid YAML, unknown section or key
	"""
	if path is None:
		return CliConfigFile()
	path = Path(path)
	if not path.is_file():
		raise ConfigurationError(f"Config file not found: {path}")
	try:
		document = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
	except yaml.YAMLError as e:
		raise ConfigurationError(f"Invalid YAML in {path}: {e}") from e
	if not isinstance(document, dict):
		raise ConfigurationError(f"{path} must contain a mapping of sections")

	unknown = sorted(set(document) - set(SECTIONS))
	if unknown:
		raise ConfigurationError(f"Unknown sections in {path}: {unknown}")
	sections: dict[str, dict[str, Any]] = {}
	for name in SECTIONS:
		values = document.get(name) or {}
		if not isinstance(values, dict):
			raise ConfigurationError(f"Section {name!r} must be a mapping")
		_check_keys(name, values)
		sections[name] = values
	return CliConfigFile(**sections)
