"""
The persistent value cache behind `--cache`.

The file is one JSON document:

    {"schema_version": 1, "entries": {"<canonical key>": [re, im, abs_err]}}

Entries may carry a fourth field, the `accelerated` flag. A file that
cannot be read, or that was written by another schema version, is ignored
with a warning and replaced on the next store.
"""

from __future__ import annotations

import json
import logging
import math
import os
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path

from .._utils import _get_unique_name

__all__ = [
    "CACHE_ENV",
    "DEFAULT_CACHE",
    "SCHEMA_VERSION",
    "CacheFile",
    "cache_load",
    "cache_path",
    "cache_store",
]

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
CACHE_ENV = "EULERSUM_CACHE"
DEFAULT_CACHE = ".eulersum-cache.json"


@dataclass
class CacheFile:
    schema_version: int = SCHEMA_VERSION
    entries: dict[str, list[float]] = field(default_factory=dict)


def cache_path(flag: str | os.PathLike | None = None) -> Path:
    """`flag` if given, else `$EULERSUM_CACHE`, else the working directory."""
    if flag is not None:
        return Path(flag)
    return Path(os.environ.get(CACHE_ENV) or DEFAULT_CACHE)


def _valid_entries(entries: object) -> bool:
    if not isinstance(entries, Mapping):
        return False
    for key, row in entries.items():
        if not isinstance(key, str) or not isinstance(row, list):
            return False
        if not 3 <= len(row) <= 4:
            return False
        if not all(
            isinstance(c, (int, float))
            and not isinstance(c, bool)
            and math.isfinite(c)
            for c in row
        ):
            return False
    return True


def cache_load(path: str | os.PathLike) -> CacheFile:
    """
    Read a cache file; an absent or unusable file gives an empty cache.

    Never raises on bad contents: a corrupt file logs a warning and the run
    starts cold.
    """
    path = Path(path)
    if not path.exists():
        logger.debug("no cache at %s, starting cold", path)
        return CacheFile()
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        logger.warning("ignoring unreadable cache %s: %s", path, exc)
        return CacheFile()
    if not isinstance(doc, dict):
        logger.warning("ignoring malformed cache %s", path)
        return CacheFile()
    if doc.get("schema_version") != SCHEMA_VERSION:
        logger.warning(
            "ignoring cache %s with schema version %r (expected %d)",
            path,
            doc.get("schema_version"),
            SCHEMA_VERSION,
        )
        return CacheFile()
    entries = doc.get("entries")
    if not _valid_entries(entries):
        logger.warning("ignoring malformed cache %s", path)
        return CacheFile()
    logger.debug("loaded %d cache entries from %s", len(entries), path)
    return CacheFile(SCHEMA_VERSION, dict(entries))


def cache_store(path: str | os.PathLike, cache: CacheFile) -> None:
    """
    Write a cache file atomically.

    The document goes to a uniquely named sibling first and is renamed
    over `path`, so readers see the old file or the new one.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {
        "schema_version": cache.schema_version,
        "entries": dict(sorted(cache.entries.items())),
    }
    tmp = path.with_name(f".{path.name}.{_get_unique_name()}.tmp")
    try:
        tmp.write_text(
            json.dumps(doc, indent=1, sort_keys=True) + "\n",
            encoding="utf-8",
        )
        os.replace(tmp, path)
    finally:
        tmp.unlink(missing_ok=True)
    logger.debug("stored %d cache entries in %s", len(cache.entries), path)
