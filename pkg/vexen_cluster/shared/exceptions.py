"""Exceptions shared by every layer of vexen-cluster."""


class SpinexError(Exception):
	"""Base class for every error raised by vexen-cluster"""


class ConfigurationError(SpinexError, ValueError):
	"""Invalid configuration value or unknown configuration key"""


class InvalidDataError(SpinexError, ValueError):
	"""Input data violates the DataMatrix invariants"""


class InvalidMethodError(SpinexError, ValueError):
	"""Unknown or unconfigured similarity method"""


class InvalidTargetError(SpinexError, ValueError):
	"""PCA target cannot be satisfied by the data"""


class DegenerateSampleError(SpinexError, ValueError):
	"""Random sampling would keep no rows"""


class ApproximationNotAvailableError(SpinexError, NotImplementedError):
	"""Approximation method is reserved but not implemented"""


class UndefinedMetricError(SpinexError, ArithmeticError):
	"""A validation metric is undefined for the given labelling"""


class InvalidNeighborCountError(SpinexError, ValueError):
	"""Requested neighbour count is not smaller than the number of observations"""


class DatasetError(SpinexError, ValueError):
	"""Dataset cannot be generated or loaded"""


class ComplexityInputError(SpinexError, ValueError):
	"""Timing data cannot be fitted"""


__all__ = [
	"SpinexError",
	"ConfigurationError",
	"InvalidDataError",
	"InvalidMethodError",
	"InvalidTargetError",
	"DegenerateSampleError",
	"ApproximationNotAvailableError",
	"UndefinedMetricError",
	"InvalidNeighborCountError",
	"DatasetError",
	"ComplexityInputError",
]
