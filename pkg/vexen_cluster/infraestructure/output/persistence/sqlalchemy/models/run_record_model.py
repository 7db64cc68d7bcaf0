"""SQLAlchemy model for benchmark runs."""

from datetime import datetime

from sqlalchemy import DateTime, Float, Integer, String, Text
from sqlalchemy.orm import Mapped, mapped_column

from .base import Base


class RunRecordModel(Base):
	"""Benchmark run model for database"""

	__tablename__ = "benchmark_runs"

	id: Mapped[int] = mapped_column(Integer, primary_key=True, autoincrement=True)
	session_id: Mapped[str] = mapped_column(String(36), nullable=False, index=True)
	position: Mapped[int] = mapped_column(Integer, nullable=False)  # Order within the session
	algorithm: Mapped[str] = mapped_column(String(64), nullable=False)
	dataset: Mapped[str] = mapped_column(String(128), nullable=False)
	seed: Mapped[int] = mapped_column(Integer, nullable=False)
	n_clusters: Mapped[int] = mapped_column(Integer, nullable=False)
	silhouette: Mapped[float | None] = mapped_column(Float, nullable=True)
	calinski_harabasz: Mapped[float | None] = mapped_column(Float, nullable=True)
	davies_bouldin: Mapped[float | None] = mapped_column(Float, nullable=True)
	homogeneity: Mapped[float | None] = mapped_column(Float, nullable=True)
	completeness: Mapped[float | None] = mapped_column(Float, nullable=True)
	v_measure: Mapped[float | None] = mapped_column(Float, nullable=True)
	wall_time: Mapped[float] = mapped_column(Float, nullable=False)
	error: Mapped[str | None] = mapped_column(Text, nullable=True)
	created_at: Mapped[datetime] = mapped_column(DateTime(timezone=True), nullable=False)
