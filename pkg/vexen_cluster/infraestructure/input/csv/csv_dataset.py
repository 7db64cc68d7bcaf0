"""CSV import and export of datasets."""

import logging
from pathlib import Path

import numpy as np
import pandas as pd

from vexen_cluster.domain.entity.cluster_labels import canonicalize_labels
from vexen_cluster.domain.entity.data_matrix import DataMatrix
from vexen_cluster.domain.entity.labeled_dataset import LabeledDataset
from vexen_cluster.domain.service.preprocessing import standardize as standardize_matrix
from vexen_cluster.shared.exceptions import DatasetError

logger = logging.getLogger(__name__)

LABEL_COLUMN = "label"


def _numeric_columns(frame: pd.DataFrame) -> list[str]:
	"""
	Columns holding numbers.

	A column with no parseable cell is treated as non-numeric and skipped;
	a column mixing numbers and text raises naming the first bad cell.
	"""
	numeric: list[str] = []
	for column in frame.columns:
		raw = frame[column]
		parsed = pd.to_numeric(raw, errors="coerce")
		if parsed.notna().sum() == 0 and raw.notna().any():
			logger.debug("Skipping non-numeric column %s", column)
			continue
		bad = parsed.isna() & raw.notna()
		if bad.any():
			row = int(np.flatnonzero(bad.to_numpy())[0])
			raise DatasetError(
				f"Non-numeric value {raw.iloc[row]!r} at row {row}, column {column!r}"
			)
		numeric.append(column)
	return numeric


def load_csv(
	path: str | Path,
	label_column: str | None = None,
	standardize: bool = False,
) -> LabeledDataset:
	"""
	Load a headed, comma-separated file.

	Args:
		path: CSV file
		label_column: Column holding ground-truth classes, excluded from the features
		standardize: Z-score the feature columns

	Returns:
		LabeledDataset named after the file stem; truth is encoded in
		first-occurrence order

	Raises:
		DatasetError: Missing file, unknown label column, non-numeric or missing feature cell
	"""
	path = Path(path)
	if not path.is_file():
		raise DatasetError(f"Dataset file not found: {path}")
	try:
		frame = pd.read_csv(path, encoding="utf-8", dtype=str, keep_default_na=False)
	except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
		raise DatasetError(f"Cannot parse {path}: {e}") from e
	frame = frame.replace("", np.nan)
	if frame.empty:
		raise DatasetError(f"{path} has no data rows")

	truth = None
	if label_column is not None:
		if label_column not in frame.columns:
			raise DatasetError(
				f"Unknown label column {label_column!r}; columns are {list(frame.columns)}"
			)
		labels = frame.pop(label_column)
		if labels.isna().any():
			row = int(np.flatnonzero(labels.isna().to_numpy())[0])
			raise DatasetError(f"Missing label at row {row}, column {label_column!r}")
		codes, _ = pd.factorize(labels, sort=False)
		truth = canonicalize_labels(codes)

	columns = _numeric_columns(frame)
	if not columns:
		raise DatasetError(f"{path} has no numeric feature columns")
	# exact inverse of the %.17g written by save_csv
	features = frame[columns].astype(np.float64)
	missing = features.isna().to_numpy()
	if missing.any():
		row, col = np.argwhere(missing)[0]
		raise DatasetError(f"Missing value at row {row}, column {columns[col]!r}")

	x = DataMatrix(features.to_numpy(dtype=np.float64))
	if standardize:
		x = standardize_matrix(x)
	logger.info("Loaded %s: %d rows, %d features", path, x.n_rows, x.n_cols)
	return LabeledDataset(
		name=path.stem,
		x=x,
		truth=truth,
		params={"path": str(path), "columns": columns, "standardize": standardize},
	)


def save_csv(dataset: LabeledDataset, path: str | Path) -> Path:
	"""
	Write features as x0..x{d-1} plus a ``label`` column when truth is known.

	Returns:
		The written path
	"""
	path = Path(path)
	path.parent.mkdir(parents=True, exist_ok=True)
	frame = pd.DataFrame(
		dataset.x.values, columns=[f"x{j}" for j in range(dataset.x.n_cols)]
	)
	if dataset.truth is not None:
		frame[LABEL_COLUMN] = dataset.truth.assignments
	frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")
	return path
