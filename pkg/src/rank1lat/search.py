"""Exhaustive scans for the generator with the longest shortest vector.

Strict mode scans ``(1, b, c)`` with ``1 < b < c < N`` (any generator with
a unit leading entry can be rescaled to this form). Relaxed mode scans all
``0 < a < b < c < N`` with ``gcd(N, a, b, c) = 1``. Work is split into one
batch per leading free parameter (``b`` or ``a``); batches are merged by
maximal ``lambda^2`` then lexicographically smallest generator, so the
result does not depend on scheduling.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable

from . import kernels
from .svp import normalized_length

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchRecord:
    N: int
    best_gen: tuple[int, ...]
    lambda_sq: int
    normalized: float
    relaxed: bool
    candidates_scanned: int
    dim: int = 3

    def to_dict(self) -> dict:
        d = asdict(self)
        d["best_gen"] = list(self.best_gen)
        return d


def _batches(N: int, relaxed: bool) -> list[int]:
    if relaxed:
        return list(range(1, N - 2))
    return list(range(2, N - 1))


def _run_batch(args):
    N, lead, relaxed = args
    if relaxed:
        lam, b, c, scanned = kernels.scan_relaxed_a(N, lead)
        return lam, (lead, b, c), scanned
    lam, c, scanned = kernels.scan_strict_b(N, lead)
    return lam, (1, lead, c), scanned


def _merge(N: int, relaxed: bool, results: Iterable) -> SearchRecord:
    best_lam, best_gen, total = -1, None, 0
    for lam, gen, scanned in results:
        total += scanned
        if scanned == 0:
            continue
        if lam > best_lam or (lam == best_lam and gen < best_gen):
            best_lam, best_gen = lam, gen
    if best_gen is None:
        raise ValueError(f"no candidate generators for N={N}")
    return SearchRecord(
        N=N,
        best_gen=best_gen,
        lambda_sq=best_lam,
        normalized=normalized_length(best_lam, N * N, 3),
        relaxed=relaxed,
        candidates_scanned=total,
    )


def _check_args(N: int, dim: int):
    if dim != 3:
        raise ValueError(f"search supports dim=3 only, got {dim}")
    if N < 4:
        raise ValueError(f"search needs N >= 4, got {N}")


def best_for_N(N: int, dim: int = 3, relaxed: bool = False, jobs: int = 1) -> SearchRecord:
    """Generator maximising ``lambda_1^2`` for one modulus."""
    _check_args(N, dim)
    tasks = [(N, lead, relaxed) for lead in _batches(N, relaxed)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_batch, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = map(_run_batch, tasks)
    return _merge(N, relaxed, results)


def _best_for_N_serial(args):
    N, relaxed = args
    return best_for_N(N, relaxed=relaxed)


def scan_range(
    n_min: int,
    n_max: int,
    dim: int = 3,
    relaxed: bool = False,
    jobs: int = 1,
    cache=None,
    progress: Callable[[SearchRecord], None] | None = None,
) -> list[SearchRecord]:
    """One :class:`SearchRecord` per ``N`` in ``[n_min, n_max]``, ordered by ``N``.

    Records already in ``cache`` are reused; new ones are written back.
    ``progress`` is called once per record as it becomes available.
    """
    if n_min > n_max:
        raise ValueError(f"empty range [{n_min}, {n_max}]")
    for N in (n_min, n_max):
        _check_args(N, dim)
    found: dict[int, SearchRecord] = {}
    todo = []
    for N in range(n_min, n_max + 1):
        rec = cache.get(N, dim, relaxed) if cache is not None else None
        if rec is not None:
            found[N] = rec
            if progress:
                progress(rec)
        else:
            todo.append(N)
    logger.info("scan %d..%d: %d cached, %d to compute", n_min, n_max, len(found), len(todo))

    fresh = []
    if jobs > 1 and todo:
        # largest N first keeps the pool busy until the end
        order = sorted(todo, reverse=True)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for rec in pool.map(_best_for_N_serial, [(N, relaxed) for N in order]):
                found[rec.N] = rec
                fresh.append(rec)
                if progress:
                    progress(rec)
    else:
        for N in todo:
            rec = best_for_N(N, dim, relaxed)
            found[N] = rec
            fresh.append(rec)
            if progress:
                progress(rec)
    if cache is not None and fresh:
        cache.put_many(fresh)
    return [found[N] for N in range(n_min, n_max + 1)]
