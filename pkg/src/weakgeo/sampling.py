"""Seeded generators and the worker pool used by sampled and exhaustive sweeps.

Every sample index gets its own stream derived from ``(seed, index)``, and
results are merged in index order, so output never depends on how many
workers ran.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Sequence, TypeVar

from .arith import Mod, PrimeField, Scalar
from .motion import Motion, compose, identity, line_reflection
from .plane import Line, MetricModel, Point, line_with_direction

DEFAULT_BOUND = 12

T = TypeVar("T")
R = TypeVar("R")


def rng_for(seed: int, index: int) -> random.Random:
    return random.Random(f"weakgeo/{seed}/{index}")


def random_scalar(m: MetricModel, rng: random.Random, bound: int = DEFAULT_BOUND) -> Scalar:
    if isinstance(m.field, PrimeField):
        return Mod(rng.randrange(m.field.p), m.field.p)
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_nonzero(m: MetricModel, rng: random.Random, bound: int = DEFAULT_BOUND) -> Scalar:
    while True:
        x = random_scalar(m, rng, bound)
        if x != 0:
            return x


def random_positive(rng: random.Random, bound: int = DEFAULT_BOUND) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def random_unit(rng: random.Random, bound: int = DEFAULT_BOUND) -> Fraction:
    """A rational strictly inside (0, 1)."""
    q = rng.randint(2, bound)
    return Fraction(rng.randint(1, q - 1), q)


def random_point(m: MetricModel, rng: random.Random, bound: int = DEFAULT_BOUND) -> Point:
    return Point(random_scalar(m, rng, bound), random_scalar(m, rng, bound))


def random_direction(m: MetricModel, rng: random.Random, bound: int = DEFAULT_BOUND) -> Point:
    while True:
        d = random_point(m, rng, bound)
        if not d.is_origin():
            return d


def random_line_through(m: MetricModel, rng: random.Random, p: Point, bound: int = DEFAULT_BOUND) -> Line:
    return line_with_direction(p, random_direction(m, rng, bound))


def random_line(m: MetricModel, rng: random.Random, bound: int = DEFAULT_BOUND) -> Line:
    return random_line_through(m, rng, random_point(m, rng, bound), bound)


def random_motion(m: MetricModel, rng: random.Random, bound: int = DEFAULT_BOUND) -> Motion:
    """Product of one to three reflections in random lines."""
    out = identity(m)
    for _ in range(rng.randint(1, 3)):
        out = compose(out, line_reflection(m, random_line(m, rng, bound)))
    return out


def worker_count() -> int:
    raw = os.environ.get("WEAKGEO_WORKERS")
    if raw:
        n = int(raw)
        if n < 1:
            raise ValueError(f"WEAKGEO_WORKERS must be positive, got {raw!r}")
        return n
    return os.cpu_count() or 1


def _run_chunk(args):
    fn, chunk = args
    return [fn(item) for item in chunk]


def parallel_map(fn: Callable[[T], R], items: Sequence[T], workers: int | None = None) -> list[R]:
    """Order-preserving map; ``fn`` must be picklable when more than one worker runs."""
    workers = worker_count() if workers is None else workers
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    size = max(1, -(-len(items) // (workers * 4)))
    chunks = [items[i:i + size] for i in range(0, len(items), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_run_chunk, [(fn, ch) for ch in chunks])
        return [r for part in parts for r in part]


def chunked(it: Iterable[T], size: int) -> list[list[T]]:
    out, cur = [], []
    for x in it:
        cur.append(x)
        if len(cur) == size:
            out.append(cur)
            cur = []
    if cur:
        out.append(cur)
    return out
