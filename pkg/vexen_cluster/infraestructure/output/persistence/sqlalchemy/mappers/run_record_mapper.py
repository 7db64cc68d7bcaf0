"""Mapper for RunRecord entity and model."""

from datetime import UTC

from vexen_cluster.domain.entity.metrics_record import MetricsRecord
from vexen_cluster.domain.entity.run_record import RunRecord
from vexen_cluster.infraestructure.output.persistence.sqlalchemy.models.run_record_model import (
	RunRecordModel,
)


class RunRecordMapper:
	"""Maps between RunRecord entity and RunRecordModel"""

	@staticmethod
	def to_entity(model: RunRecordModel) -> RunRecord:
		"""
		Convert model to entity.

		Args:
			model: RunRecordModel instance

		Returns:
			RunRecord entity
		"""
		created_at = model.created_at
		if created_at.tzinfo is None:
			# SQLite drops the offset
			created_at = created_at.replace(tzinfo=UTC)
		return RunRecord(
			algorithm=model.algorithm,
			dataset=model.dataset,
			seed=model.seed,
			metrics=MetricsRecord(
				n_clusters=model.n_clusters,
				silhouette=model.silhouette,
				calinski_harabasz=model.calinski_harabasz,
				davies_bouldin=model.davies_bouldin,
				homogeneity=model.homogeneity,
				completeness=model.completeness,
				v_measure=model.v_measure,
			),
			wall_time=model.wall_time,
			error=model.error,
			session_id=model.session_id,
			created_at=created_at,
		)

	@staticmethod
	def to_model(entity: RunRecord, session_id: str, position: int) -> RunRecordModel:
		"""
		Convert entity to model.

		Args:
			entity: RunRecord entity
			session_id: Benchmark session the run belongs to
			position: Index of the run within its session

		Returns:
			RunRecordModel instance
		"""
		metrics = entity.metrics
		return RunRecordModel(
			session_id=session_id,
			position=position,
			algorithm=entity.algorithm,
			dataset=entity.dataset,
			seed=entity.seed,
			n_clusters=metrics.n_clusters,
			silhouette=metrics.silhouette,
			calinski_harabasz=metrics.calinski_harabasz,
			davies_bouldin=metrics.davies_bouldin,
			homogeneity=metrics.homogeneity,
			completeness=metrics.completeness,
			v_measure=metrics.v_measure,
			wall_time=entity.wall_time,
			error=entity.error,
			created_at=entity.created_at,
		)
