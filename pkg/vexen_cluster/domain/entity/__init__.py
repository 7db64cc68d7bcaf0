"""Domain entities."""

from .cluster_labels import ClusterLabels, canonicalize_labels
from .data_matrix import DataMatrix
from .decision_log import DecisionEntry, DecisionLog
from .labeled_dataset import LabeledDataset
from .metrics_record import EXTERNAL_METRICS, INTERNAL_METRICS, METRIC_NAMES, MetricsRecord
from .pca_model import PcaModel
from .run_record import MIN_REPORTABLE_TIME, RunRecord, TimingSample
from .similarity_matrix import SimilarityMatrix

__all__ = [
	"ClusterLabels",
	"canonicalize_labels",
	"DataMatrix",
	"DecisionEntry",
	"DecisionLog",
	"LabeledDataset",
	"MetricsRecord",
	"INTERNAL_METRICS",
	"EXTERNAL_METRICS",
	"METRIC_NAMES",
	"PcaModel",
	"RunRecord",
	"TimingSample",
	"MIN_REPORTABLE_TIME",
	"SimilarityMatrix",
]
