"""SQLAlchemy persistence layer."""

from .mappers import RunRecordMapper
from .models import Base, RunRecordModel
from .repositories import RunRepository
from .run_store import RunStore

__all__ = [
	"Base",
	"RunRecordMapper",
	"RunRecordModel",
	"RunRepository",
	"RunStore",
]
