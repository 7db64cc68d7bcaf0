"""Entity/model mappers."""

from .run_record_mapper import RunRecordMapper

__all__ = ["RunRecordMapper"]
