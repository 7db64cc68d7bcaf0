"""Application DTOs."""

from .bench_dto import (
	DESK_ALGORITHMS,
	DESK_DATASETS,
	BaselineConfig,
	BenchConfig,
	BenchmarkReport,
	ComplexityReport,
	ComplexityRow,
	ParetoRow,
	RankingRow,
)
from .clustering_dto import BestClustering, FitPredictResult, MethodResult, ScoredMethod
from .config_dto import SpinexConfig
from .explain_dto import (
	ExplainabilityReport,
	NeighborAnalysis,
	ObservationReport,
	SimilarityAnalysis,
)

__all__ = [
	"DESK_ALGORITHMS",
	"DESK_DATASETS",
	"BaselineConfig",
	"BenchConfig",
	"BenchmarkReport",
	"BestClustering",
	"ComplexityReport",
	"ComplexityRow",
	"ExplainabilityReport",
	"FitPredictResult",
	"MethodResult",
	"NeighborAnalysis",
	"ObservationReport",
	"ParetoRow",
	"RankingRow",
	"ScoredMethod",
	"SimilarityAnalysis",
	"SpinexConfig",
]
