"""Exhaustive generation of admissible bodies up to isomorphism.

The search enumerates negative-boundary multisets, ghost-arc multigraphs on
them, and arc inventories within a puncture budget, validates every
candidate, and deduplicates admissible ones by canonical key.  Bounds are
generous enough that the in-scope ranges saturate; ``is_saturated`` rechecks
this by widening every bound by one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bodies import (
    CanonicalKey,
    Role,
    ValidationReport,
    VPClass,
    VpBody,
    canonical_form,
    classify_delta_zero,
    delta,
    validate,
)

# Negative-boundary vertex menu: punctured spheres stand in for graph
# vertices, tori and genus-2 components for thin-side surfaces.  Using a
# fixed role per genus keeps the catalog free of role-only duplicates.
_VERTEX_KINDS = (
    (0, Role.VERTEX_SPHERE),
    (1, Role.THIN),
    (2, Role.THIN),
)

_REJECTION_SAMPLE_CAP = 400


@dataclass(frozen=True, slots=True)
class EnumSpec:
    """Search bounds for one enumeration run."""

    plus_genus: int
    max_punctures: int
    max_neg_components: int = 4
    max_ghost_arcs: int = 4
    allow_core_loops: bool = True

    def __post_init__(self) -> None:
        if self.plus_genus not in (0, 1, 2):
            raise ValueError(f"plus_genus must be 0, 1 or 2, got {self.plus_genus}")
        if self.max_punctures < 0 or self.max_punctures > 4:
            raise ValueError("max_punctures must be between 0 and 4")
        if self.max_neg_components < 0 or self.max_ghost_arcs < 0:
            raise ValueError("search bounds must be >= 0")

    def widened(self) -> EnumSpec:
        return EnumSpec(
            self.plus_genus,
            self.max_punctures,
            self.max_neg_components + 1,
            self.max_ghost_arcs + 1,
            self.allow_core_loops,
        )


@dataclass(frozen=True, slots=True)
class Rejection:
    body: VpBody
    report: ValidationReport


@dataclass(slots=True)
class EnumerationResult:
    spec: EnumSpec
    bodies: dict[CanonicalKey, VpBody]
    rejections: list[Rejection] = field(default_factory=list)
    rejection_counts: dict[str, int] = field(default_factory=dict)

    def keys(self) -> list[CanonicalKey]:
        return sorted(self.bodies)

    def by_punctures(self) -> dict[int, list[CanonicalKey]]:
        grouped: dict[int, list[CanonicalKey]] = {}
        for key in self.keys():
            grouped.setdefault(key.data[1], []).append(key)
        return grouped

    def __len__(self) -> int:
        return len(self.bodies)


def enumerate_bodies(spec: EnumSpec) -> EnumerationResult:
    """All admissible bodies within the spec bounds, keyed canonically."""
    found: dict[CanonicalKey, VpBody] = {}
    result = EnumerationResult(spec, found)
    for body in _candidates(spec):
        report = validate(body)
        if not report.ok:
            result.rejection_counts.update(
                {
                    code: result.rejection_counts.get(code, 0) + 1
                    for code in set(report.codes)
                }
            )
            if len(result.rejections) < _REJECTION_SAMPLE_CAP:
                result.rejections.append(Rejection(body, report))
            continue
        key = canonical_form(body)
        if key not in found:
            found[key] = body
    result.bodies = dict(sorted(found.items()))
    return result


def _candidates(spec: EnumSpec):
    budget = spec.max_punctures
    max_loops = spec.plus_genus if spec.allow_core_loops else 0
    for n in range(0, spec.max_neg_components + 1):
        for kinds in itertools.combinations_with_replacement(_VERTEX_KINDS, n):
            if sum(g for g, _ in kinds) > spec.plus_genus:
                continue
            genus_room = spec.plus_genus - sum(g for g, _ in kinds)
            for edges in _edge_multisets(n, spec.max_ghost_arcs, genus_room):
                # Core loops are explored even where they cannot be legal, so
                # the rejection log exercises the core-loop invariant.
                loop_range = range(0, max_loops + 1) if n == 0 else range(0, min(1, max_loops) + 1)
                for bridge in range(0, budget // 2 + 1):
                    va_budget = budget - 2 * bridge
                    for va in _vertical_splits(n, va_budget):
                        for loops in loop_range:
                            yield VpBody.assemble(
                                spec.plus_genus,
                                neg=kinds,
                                edges=edges,
                                vertical=va,
                                bridge_arcs=bridge,
                                core_loops=loops,
                            )


def _edge_multisets(n: int, max_edges: int, genus_room: int):
    """Edge multisets whose cycle rank never exceeds the genus room.

    Rank only grows as edges are added, so the bound prunes the recursion.
    """
    pairs = [(i, j) for i in range(n) for j in range(i, n)]

    def rank_of(edges: list[tuple[int, int]]) -> int:
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rank = 0
        for a, b in edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                rank += 1
            else:
                parent[ra] = rb
        return rank

    def extend(start: int, chosen: list[tuple[int, int]]):
        yield tuple(chosen)
        if len(chosen) >= max_edges:
            return
        for idx in range(start, len(pairs)):
            chosen.append(pairs[idx])
            if rank_of(chosen) <= genus_room:
                yield from extend(idx, chosen)
            chosen.pop()

    yield from extend(0, [])


def _vertical_splits(n: int, budget: int):
    if n == 0:
        yield ()
        return
    for total in range(0, budget + 1):
        for cut in itertools.combinations_with_replacement(range(n), total):
            counts = [0] * n
            for c in cut:
                counts[c] += 1
            yield tuple(counts)


def enumerate_delta_zero(spec: EnumSpec) -> list[tuple[CanonicalKey, VPClass]]:
    """Zero-index bodies in the range, with their classification.

    Cross-checks that the zero-index subset and the classifier-positive
    subset coincide; a mismatch would be a modeling bug.
    """
    result = enumerate_bodies(spec)
    by_index = {key for key, body in result.bodies.items() if delta(body) == 0}
    classified = {
        key: classify_delta_zero(body) for key, body in result.bodies.items()
    }
    by_class = {key for key, cls in classified.items() if cls is not VPClass.NOT_DELTA_ZERO}
    if by_index != by_class:
        raise AssertionError(
            "zero-index set and classifier-positive set disagree: "
            f"{sorted(by_index ^ by_class)}"
        )
    return sorted((key, classified[key]) for key in by_index)


def is_saturated(spec: EnumSpec) -> bool:
    """True when widening every search bound by one finds no new types."""
    base = set(enumerate_bodies(spec).bodies)
    wide = set(enumerate_bodies(spec.widened()).bodies)
    return base == wide
