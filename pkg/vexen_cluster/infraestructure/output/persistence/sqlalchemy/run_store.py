"""Async SQLAlchemy store for benchmark runs."""

import logging

from sqlalchemy.ext.asyncio import (
	AsyncEngine,
	AsyncSession,
	async_sessionmaker,
	create_async_engine,
)

from vexen_cluster.domain.repository.run_repository_port import IRunRepositoryPort

from .models import Base
from .repositories import RunRepository

logger = logging.getLogger(__name__)


class RunStore:
	"""
	Owns the engine and the single session behind a RunRepository.

	Leaving the ``async with`` block commits pending runs, or rolls them
	back when the block raised.

	Example:
		>>> async with RunStore("sqlite+aiosqlite:///runs.db") as store:
		...     await store.repository.save_runs(report.session_id, report.runs)
	"""

	def __init__(self, database_url: str, echo: bool = False):
		"""
		Args:
			database_url: Async SQLAlchemy URL, e.g. sqlite+aiosqlite:///runs.db
			echo: Log emitted SQL
		"""
		self.database_url = database_url
		self.echo = echo
		self._engine: AsyncEngine | None = None
		self._session: AsyncSession | None = None
		self._repository: RunRepository | None = None

	async def init(self) -> None:
		"""Open the engine, create missing tables and start a session"""
		self._engine = create_async_engine(self.database_url, echo=self.echo)
		async with self._engine.begin() as conn:
			await conn.run_sync(Base.metadata.create_all)
		self._session = async_sessionmaker(self._engine, expire_on_commit=False)()
		self._repository = RunRepository(self._session)
		logger.debug("Run store ready at %s", self.database_url)

	async def close(self) -> None:
		if self._session is not None:
			await self._session.close()
			self._session = None
		if self._engine is not None:
			await self._engine.dispose()
			self._engine = None
		self._repository = None

	async def __aenter__(self) -> "RunStore":
		await self.init()
		return self

	async def __aexit__(self, exc_type, exc_val, exc_tb):
		try:
			if exc_type is None:
				await self.commit()
			else:
				await self.rollback()
		finally:
			await self.close()

	@property
	def repository(self) -> IRunRepositoryPort:
		"""
		Raises:
			RuntimeError: Before init() or after close()
		"""
		if self._repository is None:
			raise RuntimeError("RunStore not initialized; call init() or use async with")
		return self._repository

	async def commit(self) -> None:
		if self._session is not None:
			await self._session.commit()

	async def rollback(self) -> None:
		if self._session is not None:
			await self._session.rollback()
