"""Domain services: the numerical core of the clustering engine."""

from .baselines import KMeansResult, agglomerative, dbscan, kmeans
from .complexity import classify_slope, estimate_complexity, fit_log_log_slope
from .explainability import nearest_neighbors, similarity_contribution
from .hashing import fingerprint, fingerprint_array
from .linkage import complete_linkage, linkage_cut, similarity_to_distance
from .merging import dynamic_threshold, merge_clusters, should_merge
from .metrics import (
	calinski_harabasz,
	completeness,
	davies_bouldin,
	homogeneity,
	silhouette,
	v_measure,
)
from .multi_level import LevelTrace, condense_similarity, multi_level_clustering
from .pareto import dominates, pareto_front
from .preprocessing import (
	apply_approximation,
	apply_pca,
	enforce_max_features,
	fit_pca,
	random_sample,
	standardize,
	transform_pca,
)
from .scoring import UNSCORED, composite_score, normalize_metric
from .similarity import compute_similarity, get_similarity
from .threshold import set_threshold

__all__ = [
	"KMeansResult",
	"LevelTrace",
	"UNSCORED",
	"agglomerative",
	"apply_approximation",
	"apply_pca",
	"calinski_harabasz",
	"classify_slope",
	"complete_linkage",
	"completeness",
	"composite_score",
	"compute_similarity",
	"condense_similarity",
	"davies_bouldin",
	"dbscan",
	"dominates",
	"dynamic_threshold",
	"enforce_max_features",
	"estimate_complexity",
	"fingerprint",
	"fingerprint_array",
	"fit_log_log_slope",
	"fit_pca",
	"get_similarity",
	"homogeneity",
	"kmeans",
	"linkage_cut",
	"merge_clusters",
	"multi_level_clustering",
	"nearest_neighbors",
	"normalize_metric",
	"pareto_front",
	"random_sample",
	"set_threshold",
	"should_merge",
	"silhouette",
	"similarity_contribution",
	"similarity_to_distance",
	"standardize",
	"transform_pca",
	"v_measure",
]
