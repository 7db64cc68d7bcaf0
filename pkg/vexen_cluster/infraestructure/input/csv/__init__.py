"""CSV dataset adapters."""

from vexen_cluster.infraestructure.input.csv.csv_dataset import LABEL_COLUMN, load_csv, save_csv

__all__ = ["LABEL_COLUMN", "load_csv", "save_csv"]
