"""SQLAlchemy models."""

from .base import Base
from .run_record_model import RunRecordModel

__all__ = ["Base", "RunRecordModel"]
