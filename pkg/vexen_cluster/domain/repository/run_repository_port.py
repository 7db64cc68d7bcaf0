"""Run repository port (interface)."""

from abc import ABC, abstractmethod

from vexen_cluster.domain.entity.run_record import RunRecord


class IRunRepositoryPort(ABC):
	"""Interface for benchmark run persistence"""

	@abstractmethod
	async def save_runs(self, session_id: str, runs: list[RunRecord]) -> int:
		"""Save the runs of one benchmark session, returns count of saved runs"""
		pass

	@abstractmethod
	async def list_runs(self, session_id: str) -> list[RunRecord]:
		"""Get all runs of a session in insertion order"""
		pass

	@abstractmethod
	async def list_sessions(self) -> list[str]:
		"""Get all stored session ids, oldest first"""
		pass
