"""Clustering use cases."""

from .build_report_usecase import BuildReportUseCase
from .cluster_all_methods_usecase import ClusterAllMethodsUseCase
from .cluster_from_similarity_usecase import ClusterFromSimilarityUseCase
from .cluster_with_method_usecase import ClusterWithMethodUseCase
from .clustering_usecase_factory import ClusteringUseCaseFactory
from .evaluate_usecase import EvaluateUseCase
from .find_best_usecase import FindBestUseCase
from .fit_predict_usecase import FitPredictUseCase, assign_to_nearest

__all__ = [
	"BuildReportUseCase",
	"ClusterAllMethodsUseCase",
	"ClusterFromSimilarityUseCase",
	"ClusterWithMethodUseCase",
	"ClusteringUseCaseFactory",
	"EvaluateUseCase",
	"FindBestUseCase",
	"FitPredictUseCase",
	"assign_to_nearest",
]
