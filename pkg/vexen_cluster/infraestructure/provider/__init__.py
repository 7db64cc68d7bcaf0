"""Clustering algorithm providers."""

from .baseline_provider import AgglomerativeProvider, DbscanProvider, KMeansProvider
from .registry import BASELINES, algorithm_names, build_algorithm, build_algorithms
from .spinex_provider import SPINEX_VARIANTS, SpinexProvider

__all__ = [
	"AgglomerativeProvider",
	"BASELINES",
	"DbscanProvider",
	"KMeansProvider",
	"SPINEX_VARIANTS",
	"SpinexProvider",
	"algorithm_names",
	"build_algorithm",
	"build_algorithms",
]
