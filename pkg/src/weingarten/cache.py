"""On-disk JSON cache for character and zonal tables.

The cache is off unless a directory is configured, either with
:func:`set_cache_dir` or through the ``WG_CACHE_DIR`` environment variable.
Each file carries a hash of :data:`GENERATOR_VERSION`; files with another
hash, or that fail to parse, are treated as missing and rewritten.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

log = logging.getLogger(__name__)

GENERATOR_VERSION = "weingarten-tables/1 (murnaghan-nakayama, literal H_n average)"
ENV_VAR = "WG_CACHE_DIR"
DEFAULT_CLI_DIR = ".wg-cache"

_explicit_dir: Path | None = None
_disabled = False


def version_hash() -> str:
    return hashlib.sha256(GENERATOR_VERSION.encode()).hexdigest()[:16]


def set_cache_dir(path: str | os.PathLike | None) -> None:
    """Use ``path`` for table files; ``None`` falls back to ``WG_CACHE_DIR``."""
    global _explicit_dir, _disabled
    _explicit_dir = Path(path) if path is not None else None
    _disabled = False


def disable_cache() -> None:
    global _explicit_dir, _disabled
    _explicit_dir = None
    _disabled = True


def cache_dir() -> Path | None:
    if _disabled:
        return None
    if _explicit_dir is not None:
        return _explicit_dir
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def table_path(kind: str, n: int) -> Path | None:
    root = cache_dir()
    return None if root is None else root / f"{kind}-{n}.json"


def load_table(kind: str, n: int) -> dict | None:
    path = table_path(kind, n)
    if path is None or not path.exists():
        return None
    try:
        payload = json.loads(path.read_text())
        if payload["version"] != version_hash() or payload["kind"] != kind or payload["n"] != n:
            log.info("stale cache file %s, recomputing", path)
            return None
        table = payload["table"]
        if not isinstance(table, dict):
            raise TypeError("table is not a mapping")
        return table
    except (ValueError, KeyError, TypeError) as exc:
        log.warning("unreadable cache file %s (%s), recomputing", path, exc)
        return None


def store_table(kind: str, n: int, table: dict) -> None:
    path = table_path(kind, n)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {"version": version_hash(), "kind": kind, "n": n, "table": table}
    # write-then-rename so concurrent writers of identical content race benignly
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(payload, fh, sort_keys=True, indent=1)
    os.replace(tmp, path)
