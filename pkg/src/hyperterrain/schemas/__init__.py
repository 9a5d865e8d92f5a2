"""JSON schemas of the ``--format json`` outputs, one per subcommand."""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

__all__ = ["SCHEMA_NAMES", "load_schema"]

SCHEMA_NAMES = ("gen", "stats", "ecc", "terrain", "convexity", "verify")


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    if name not in SCHEMA_NAMES:
        raise KeyError(f"no schema named {name!r}")
    text = resources.files(__name__).joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)
