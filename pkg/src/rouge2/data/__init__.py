"""Bundled resources: the reference stopword list and the phone-review fixture."""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def data_path(*parts: str) -> Path:
    root = resources.files(__name__)
    return Path(str(root.joinpath(*parts)))
