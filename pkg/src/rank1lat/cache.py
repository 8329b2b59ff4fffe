"""Newline-delimited JSON cache of search records.

One object per line::

    {"schema_version": 1, "N": 244, "dim": 3, "relaxed": false,
     "best_gen": [1, 13, 75], "lambda_sq": "1891",
     "normalized": 1.11365980957548, "candidates_scanned": 29161}

``lambda_sq`` is a decimal string so it stays exact for any reader. Writes
replace the whole file atomically; lines that fail to parse or carry a
different schema version are skipped.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

from .exceptions import CorruptRecord, IoFailure
from .search import SearchRecord

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
ENV_CACHE_DIR = "RANK1LAT_CACHE_DIR"
CACHE_FILENAME = "search-cache.jsonl"


def default_cache_path() -> Path:
    base = os.environ.get(ENV_CACHE_DIR)
    if base:
        return Path(base) / CACHE_FILENAME
    xdg = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(xdg) / "rank1lat" / CACHE_FILENAME


def record_to_line(rec: SearchRecord) -> str:
    return json.dumps({
        "schema_version": SCHEMA_VERSION,
        "N": rec.N,
        "dim": rec.dim,
        "relaxed": rec.relaxed,
        "best_gen": list(rec.best_gen),
        "lambda_sq": str(rec.lambda_sq),
        "normalized": rec.normalized,
        "candidates_scanned": rec.candidates_scanned,
    }, sort_keys=True)


def record_from_line(line: str) -> SearchRecord | None:
    """Parse one line; ``None`` for a stale schema, :class:`CorruptRecord` if malformed."""
    try:
        obj = json.loads(line)
        if obj.get("schema_version") != SCHEMA_VERSION:
            return None
        return SearchRecord(
            N=int(obj["N"]),
            dim=int(obj["dim"]),
            relaxed=bool(obj["relaxed"]),
            best_gen=tuple(int(a) for a in obj["best_gen"]),
            lambda_sq=int(obj["lambda_sq"]),
            normalized=float(obj["normalized"]),
            candidates_scanned=int(obj["candidates_scanned"]),
        )
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise CorruptRecord(f"bad cache line: {line[:80]!r}") from exc


class ResultCache:
    """Search records keyed by ``(N, dim, relaxed)``."""

    def __init__(self, path):
        self.path = Path(path)
        self._records: dict[tuple, SearchRecord] | None = None

    def _load(self) -> dict:
        if self._records is not None:
            return self._records
        records = {}
        try:
            text = self.path.read_text(encoding="utf-8")
        except FileNotFoundError:
            text = ""
        except OSError as exc:
            raise IoFailure(f"cannot read cache {self.path}: {exc}") from exc
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                rec = record_from_line(line)
            except CorruptRecord:
                logger.warning("skipping corrupt cache line %d in %s", lineno, self.path)
                continue
            if rec is not None:
                records[(rec.N, rec.dim, rec.relaxed)] = rec
        self._records = records
        return records

    def get(self, N: int, dim: int = 3, relaxed: bool = False) -> SearchRecord | None:
        return self._load().get((N, dim, relaxed))

    def put(self, record: SearchRecord) -> None:
        self.put_many([record])

    def put_many(self, records) -> None:
        current = self._load()
        for rec in records:
            current[(rec.N, rec.dim, rec.relaxed)] = rec
        self._write(current)

    def _write(self, records: dict) -> None:
        body = "".join(record_to_line(r) + "\n" for _, r in sorted(records.items()))
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".cache-", suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(body)
            os.replace(tmp, self.path)
        except OSError as exc:
            raise IoFailure(f"cannot write cache {self.path}: {exc}") from exc

    def __len__(self):
        return len(self._load())


def cache_put(cache: ResultCache, record: SearchRecord) -> None:
    cache.put(record)


def cache_get(cache: ResultCache, N: int, dim: int = 3, relaxed: bool = False):
    return cache.get(N, dim, relaxed)
