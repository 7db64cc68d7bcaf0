"""VexenCluster - Explainable similarity-based clustering."""

from .application.dto import (
	BaselineConfig,
	BenchConfig,
	BenchmarkReport,
	ExplainabilityReport,
	FitPredictResult,
)
from .core import SpinexClustering, SpinexConfig

__all__ = [
	"SpinexClustering",
	"SpinexConfig",
	"FitPredictResult",
	"ExplainabilityReport",
	"BaselineConfig",
	"BenchConfig",
	"BenchmarkReport",
]
