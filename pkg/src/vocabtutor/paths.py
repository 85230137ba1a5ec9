"""Locations of the data files bundled with the package."""
from __future__ import annotations

from importlib import resources
from pathlib import Path


def _data_path(name: str) -> Path:
    return Path(resources.files("vocabtutor").joinpath("data", name))


def bundled_lexicon_path() -> Path:
    return _data_path("lexicon.json")


def bundled_embeddings_path() -> Path:
    return _data_path("embeddings.txt")
