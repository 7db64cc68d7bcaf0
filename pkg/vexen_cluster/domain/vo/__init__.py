"""Domain value objects."""

from .approximation_method import ApproximationMethod
from .fingerprint import MatrixFingerprint
from .multi_level_params import MultiLevelParams
from .similarity_method import ALL_METHODS, SimilarityMethod
from .threshold_spec import ThresholdKind, ThresholdSpec

__all__ = [
	"ApproximationMethod",
	"MatrixFingerprint",
	"MultiLevelParams",
	"SimilarityMethod",
	"ALL_METHODS",
	"ThresholdKind",
	"ThresholdSpec",
]
