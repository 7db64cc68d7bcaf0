import pytest

from vexen_cluster.domain.entity.metrics_record import MetricsRecord
from vexen_cluster.domain.entity.run_record import RunRecord
from vexen_cluster.infraestructure.output.persistence.sqlalchemy import RunStore


@pytest.fixture
def url(tmp_path) -> str:
	return f"sqlite+aiosqlite:///{tmp_path / 'runs.db'}"


def runs(session_id: str) -> list[RunRecord]:
	return [
		RunRecord(
			"spinex",
			"Moons",
			0,
			MetricsRecord(2, silhouette=0.5, davies_bouldin=0.7),
			0.25,
			session_id=session_id,
		),
		RunRecord("kmeans", "Moons", 0, MetricsRecord.undefined(), 0.0, error="ValueError: k"),
	]


@pytest.mark.asyncio
async def test_runs_round_trip_in_order(url):
	async with RunStore(url) as store:
		saved = await store.repository.save_runs("s1", runs("s1"))
		await store.commit()
		loaded = await store.repository.list_runs("s1")

	assert saved == 2
	assert [r.algorithm for r in loaded] == ["spinex", "kmeans"]
	assert loaded[0].metrics == MetricsRecord(2, silhouette=0.5, davies_bouldin=0.7)
	assert loaded[0].wall_time == pytest.approx(0.25)
	assert loaded[1].error == "ValueError: k"
	assert loaded[1].metrics.defined() == {}
	assert all(r.session_id == "s1" for r in loaded)
	assert loaded[0].created_at.tzinfo is not None


@pytest.mark.asyncio
async def test_saving_twice_appends(url):
	async with RunStore(url) as store:
		await store.repository.save_runs("s1", runs("s1"))
		await store.repository.save_runs("s1", runs("s1")[:1])
		loaded = await store.repository.list_runs("s1")
	assert [r.algorithm for r in loaded] == ["spinex", "kmeans", "spinex"]


@pytest.mark.asyncio
async def test_sessions_are_listed_in_order(url):
	async with RunStore(url) as store:
		await store.repository.save_runs("0002", runs("0002"))
		await store.repository.save_runs("0001", runs("0001"))
		assert await store.repository.list_sessions() == ["0001", "0002"]
		assert await store.repository.list_runs("missing") == []


@pytest.mark.asyncio
async def test_repository_requires_init(url):
	store = RunStore(url)
	with pytest.raises(RuntimeError, match="not initialized"):
		_ = store.repository
