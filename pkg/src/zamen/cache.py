"""Content-addressed character table cache.

Tables are stored one JSON document per group under a cache directory,
keyed by the group's content hash (a hash of its multiplication structure,
so relabeled copies of the same group share an entry).  The directory is
resolved from, in order: an explicit argument, the ZAMEN_CACHE_DIR
environment variable, and the default ``.zamen-cache`` under the current
directory.  Writes go through a temp file and rename, so a cache file is
always a complete document.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .characters import CharacterTable, character_table
from .groups import ConjugacyStructure, FiniteGroup, conjugacy_structure
from .specio import SpecError, character_table_payload, load_character_table, stable_json

__all__ = ["DEFAULT_CACHE_DIRNAME", "CACHE_ENV_VAR", "resolve_cache_dir", "cached_character_table"]

DEFAULT_CACHE_DIRNAME = ".zamen-cache"
CACHE_ENV_VAR = "ZAMEN_CACHE_DIR"


def resolve_cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.cwd() / DEFAULT_CACHE_DIRNAME


def cached_character_table(
    group: FiniteGroup,
    cs: ConjugacyStructure | None = None,
    cache_dir: str | os.PathLike | None = None,
    **table_kwargs,
) -> tuple[CharacterTable, bool]:
    """Return the group's character table and whether it came from cache.

    A readable entry that fails validation (different group, truncated
    file) is recomputed and overwritten rather than trusted.
    """
    cs = cs or conjugacy_structure(group)
    directory = resolve_cache_dir(cache_dir)
    path = directory / f"{group.content_hash}.json"
    if path.exists():
        try:
            payload = json.loads(path.read_text())
            return load_character_table(payload, cs), True
        except (json.JSONDecodeError, SpecError, KeyError, TypeError, ValueError):
            pass
    table = character_table(group, cs, **table_kwargs)
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(stable_json(character_table_payload(table)))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return table, False
