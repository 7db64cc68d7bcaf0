"""Run persistence use case."""

import logging
from dataclasses import dataclass

from vexen_cluster.domain.entity.run_record import RunRecord
from vexen_cluster.domain.repository.run_repository_port import IRunRepositoryPort

logger = logging.getLogger(__name__)


@dataclass
class SaveRunsUseCase:
	"""Use case for storing the runs of one benchmark session"""

	repository: IRunRepositoryPort

	async def __call__(self, session_id: str, runs: list[RunRecord]) -> int:
		"""
		Execute the save.

		Returns:
			Number of stored runs
		"""
		saved = await self.repository.save_runs(session_id, runs)
		logger.info("Stored %d runs for session %s", saved, session_id)
		return saved
