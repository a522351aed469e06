import pytest

from weakgeo.axioms import check_axiom
from weakgeo.plane import MetricModel
from weakgeo.sampling import chunked, parallel_map, random_point, random_unit, rng_for, worker_count

Q1 = MetricModel.parse("q:c=1")


def square(x):
    return x * x


def test_streams_depend_only_on_seed_and_index():
    a = [random_point(Q1, rng_for(3, i)) for i in range(5)]
    b = [random_point(Q1, rng_for(3, i)) for i in range(5)]
    assert a == b
    assert [random_point(Q1, rng_for(4, i)) for i in range(5)] != a


def test_unit_is_open_interval():
    rng = rng_for(0, 0)
    assert all(0 < random_unit(rng) < 1 for _ in range(500))


def test_parallel_map_preserves_order():
    items = list(range(37))
    assert parallel_map(square, items, workers=3) == [x * x for x in items]
    assert parallel_map(square, items, workers=1) == [x * x for x in items]


def test_chunked():
    assert chunked(range(5), 2) == [[0, 1], [2, 3], [4]]


def test_worker_count_from_environment(monkeypatch):
    monkeypatch.setenv("WEAKGEO_WORKERS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("WEAKGEO_WORKERS", "0")
    with pytest.raises(ValueError):
        worker_count()
    monkeypatch.delenv("WEAKGEO_WORKERS")
    assert worker_count() >= 1


@pytest.mark.parametrize("axiom", ["A4", "A9", "A12"])
def test_sampled_reports_do_not_depend_on_worker_count(axiom):
    one = check_axiom(axiom, Q1, samples=30, seed=5, workers=1).to_json(timing=False)
    three = check_axiom(axiom, Q1, samples=30, seed=5, workers=3).to_json(timing=False)
    assert one == three


def test_exhaustive_reports_do_not_depend_on_worker_count():
    g5 = MetricModel.parse("gf:5:c=2")
    one = check_axiom("A10", g5, exhaustive=True, workers=1).to_json(timing=False)
    two = check_axiom("A10", g5, exhaustive=True, workers=2).to_json(timing=False)
    assert one == two
