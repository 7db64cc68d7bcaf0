"""SQLAlchemy implementation of run repository."""

from sqlalchemy import func, select
from sqlalchemy.ext.asyncio import AsyncSession

from vexen_cluster.domain.entity.run_record import RunRecord
from vexen_cluster.domain.repository.run_repository_port import IRunRepositoryPort
from vexen_cluster.infraestructure.output.persistence.sqlalchemy.mappers.run_record_mapper import (
	RunRecordMapper,
)
from vexen_cluster.infraestructure.output.persistence.sqlalchemy.models.run_record_model import (
	RunRecordModel,
)


class RunRepository(IRunRepositoryPort):
	"""SQLAlchemy implementation of run repository"""

	def __init__(self, session: AsyncSession):
		"""
		Initialize repository.

		Args:
			session: SQLAlchemy async session
		"""
		self.session = session

	async def save_runs(self, session_id: str, runs: list[RunRecord]) -> int:
		"""
		Save the runs of one benchmark session.

		Runs are appended after any already stored for the session.

		Args:
			session_id: Benchmark session id
			runs: Runs in report order

		Returns:
			Count of saved runs
		"""
		stmt = select(func.count()).where(RunRecordModel.session_id == session_id)
		offset = (await self.session.execute(stmt)).scalar_one()
		self.session.add_all(
			RunRecordMapper.to_model(run, session_id, offset + i) for i, run in enumerate(runs)
		)
		await self.session.flush()
		return len(runs)

	async def list_runs(self, session_id: str) -> list[RunRecord]:
		"""
		Get all runs of a session.

		Args:
			session_id: Benchmark session id

		Returns:
			List of RunRecord entities in insertion order
		"""
		stmt = (
			select(RunRecordModel)
			.where(RunRecordModel.session_id == session_id)
			.order_by(RunRecordModel.position)
		)
		result = await self.session.execute(stmt)
		return [RunRecordMapper.to_entity(model) for model in result.scalars().all()]

	async def list_sessions(self) -> list[str]:
		"""
		Get all stored session ids.

		Session ids are UUIDv7, so lexical order is creation order.

		Returns:
			Session ids, oldest first
		"""
		stmt = select(RunRecordModel.session_id).distinct().order_by(RunRecordModel.session_id)
		result = await self.session.execute(stmt)
		return list(result.scalars().all())
