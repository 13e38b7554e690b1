"""Hand-encoded classification tables and the comparison report.

Each table lists one entry per diagram of the corresponding catalog: the
positive-boundary spheres with up to four punctures, the tori with up to two
punctures, and the unpunctured genus-2 case.  Entries live in JSON data
files so a drift in the catalog is fixed by editing data, not code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .bodies import CanonicalKey, VpBody, canonical_form
from .enumeration import EnumSpec
from .fileio import FileFormatError, parse_body

TABLE_NAMES = ("sphere", "torus", "genus2")

#: Enumeration ranges the tables cover.
TABLE_SPECS = {
    "sphere": EnumSpec(plus_genus=0, max_punctures=4),
    "torus": EnumSpec(plus_genus=1, max_punctures=2),
    "genus2": EnumSpec(plus_genus=2, max_punctures=0),
}


@dataclass(frozen=True, slots=True)
class TableEntry:
    label: str
    family: str
    body: VpBody
    key: CanonicalKey


@dataclass(frozen=True, slots=True)
class ClassificationTable:
    name: str
    legend: str
    entries: tuple[TableEntry, ...]

    def keys(self) -> set[CanonicalKey]:
        return {e.key for e in self.entries}

    def by_family(self) -> dict[str, list[TableEntry]]:
        grouped: dict[str, list[TableEntry]] = {}
        for entry in self.entries:
            grouped.setdefault(entry.family, []).append(entry)
        return grouped

    def label_of(self, key: CanonicalKey) -> str | None:
        for entry in self.entries:
            if entry.key == key:
                return entry.label
        return None


def load_table(name: str) -> ClassificationTable:
    if name not in TABLE_NAMES:
        raise ValueError(f"unknown table {name!r}; pick one of {TABLE_NAMES}")
    text = (
        resources.files("netext.data.tables").joinpath(f"{name}.json").read_text("utf-8")
    )
    data = json.loads(text)
    entries = []
    seen: set[CanonicalKey] = set()
    for i, raw in enumerate(data["entries"]):
        body, _ = parse_body(raw["body"], where=f"table {name} entry #{i}")
        key = canonical_form(body)
        if key in seen:
            raise FileFormatError(f"table {name}: duplicate key for entry {raw['label']}")
        seen.add(key)
        entries.append(TableEntry(raw["label"], raw["family"], body, key))
    return ClassificationTable(name, data.get("legend", ""), tuple(entries))


def table_for_genus(genus: int) -> ClassificationTable:
    return load_table({0: "sphere", 1: "torus", 2: "genus2"}[genus])


@dataclass(frozen=True, slots=True)
class DiffReport:
    table: str
    legend: str
    missing: tuple[TableEntry, ...]
    unexpected: tuple[CanonicalKey, ...]

    @property
    def empty(self) -> bool:
        return not self.missing and not self.unexpected

    def render(self) -> str:
        lines = [f"comparison against table '{self.table}':"]
        if self.empty:
            lines.append("  exact match (no missing, no unexpected types)")
        for entry in self.missing:
            lines.append(f"  missing:    {entry.label}  ({entry.key})")
        for key in self.unexpected:
            lines.append(f"  unexpected: {key}")
        if self.legend:
            lines.append(f"  legend: {self.legend}")
        return "\n".join(lines)


def compare(found: set[CanonicalKey], table: ClassificationTable) -> DiffReport:
    """Set difference between an enumeration and a hand-encoded table."""
    expected = table.keys()
    missing = tuple(e for e in table.entries if e.key not in found)
    unexpected = tuple(sorted(found - expected))
    return DiffReport(table.name, table.legend, missing, unexpected)
