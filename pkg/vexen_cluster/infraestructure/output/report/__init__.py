"""Report writers."""

from .report_writer import (
	BenchmarkReportWriter,
	report_to_dict,
	write_json,
	write_labels_csv,
	write_runs_csv,
)

__all__ = [
	"BenchmarkReportWriter",
	"report_to_dict",
	"write_json",
	"write_labels_csv",
	"write_runs_csv",
]
