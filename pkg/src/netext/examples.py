"""Access to the shipped example corpus (decomposition and factor files)."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

_PACKAGE = "netext.data.examples"


def example_names() -> list[str]:
    """Stems of every shipped example file."""
    root = resources.files(_PACKAGE)
    return sorted(
        entry.name[: -len(".json")]
        for entry in root.iterdir()
        if entry.name.endswith(".json")
    )


def example_path(name: str) -> Path:
    """Filesystem path of a shipped example, by stem or filename."""
    if not name.endswith(".json"):
        name += ".json"
    candidate = resources.files(_PACKAGE).joinpath(name)
    if not candidate.is_file():
        raise FileNotFoundError(f"no shipped example named {name!r}; see example_names()")
    return Path(str(candidate))
