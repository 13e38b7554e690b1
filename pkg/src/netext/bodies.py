"""Combinatorial compressionbodies.

A ``VpBody`` records one building block of a decomposition: the positive
boundary surface, the graph of ghost arcs spanning the negative boundary
components, per-component vertical-arc counts, and counts of bridge arcs
and core loops.  Everything downstream (index arithmetic, the exhaustive
classifier, decomposition bookkeeping) works with this abstraction; no
embedding data is kept.

Validation invariants
---------------------
* ``plus-accounting``: punctures of the positive boundary equal
  2*(bridge arcs) + (total vertical arcs).
* ``neg-accounting``: each negative component's punctures equal its ghost-arc
  degree (loops counted twice) plus its vertical-arc count.
* ``genus-bound``: summed over connected pieces of the ghost-arc graph,
  (total genus + cycle rank) cannot exceed the positive-boundary genus.
* ``core-loops``: core loops only occur in bodies with no negative boundary
  and no arcs, and never outnumber the positive-boundary genus.  Every
  admissible configuration carrying a core loop is of this shape.
* sphere rules: vertex spheres need genus 0 and >= 3 punctures; spheres in
  the ambient boundary need >= 3 punctures; other negative spheres need
  >= ``thin_sphere_min`` punctures (3 standalone; decompositions relax this
  to 2 so that connected-sum spheres can appear as thin surfaces).
* ``plus-sphere``: an unpunctured positive sphere is rejected.

A body whose report is empty is called *admissible*.  For admissible bodies
the index is automatically a non-negative integer; see :func:`delta`.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .halfint import HalfInt
from .surfaces import Role, SurfaceComponent, extent, extent_set


class InadmissibleBodyError(ValueError):
    """Raised when an operation requires an admissible body."""

    def __init__(self, report: "ValidationReport"):
        super().__init__(f"inadmissible body: {report}")
        self.report = report


@dataclass(frozen=True, slots=True)
class Violation:
    code: str
    detail: str

    def __str__(self) -> str:
        return f"[{self.code}] {self.detail}"


@dataclass(frozen=True, slots=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def codes(self) -> tuple[str, ...]:
        return tuple(v.code for v in self.violations)

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(str(v) for v in self.violations)


@dataclass(frozen=True, slots=True)
class GhostArcGraph:
    """Multigraph of ghost arcs on the negative boundary components.

    Vertices are the negative boundary components; edges are unordered index
    pairs.  Loops and parallel edges are allowed.
    """

    vertices: tuple[SurfaceComponent, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = len(self.vertices)
        norm = []
        for a, b in self.edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a},{b}) references a missing vertex")
            norm.append((a, b) if a <= b else (b, a))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        d = 0
        for a, b in self.edges:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def component_partition(self) -> list[set[int]]:
        """Connected pieces, isolated vertices included."""
        parent = list(range(self.n_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        groups: dict[int, set[int]] = {}
        for v in range(self.n_vertices):
            groups.setdefault(find(v), set()).add(v)
        return list(groups.values())

    def cycle_rank(self) -> int:
        """Edges - vertices + components, summed over connected pieces."""
        return self.n_edges - self.n_vertices + len(self.component_partition())

    def is_connected_nonempty(self) -> bool:
        return self.n_vertices > 0 and len(self.component_partition()) == 1


@dataclass(frozen=True, slots=True)
class VpBody:
    """One compressionbody: positive boundary plus its arc inventory."""

    plus: SurfaceComponent
    gag: GhostArcGraph
    vertical: tuple[int, ...]
    bridge_arcs: int
    core_loops: int

    def __post_init__(self) -> None:
        if len(self.vertical) != self.gag.n_vertices:
            raise ValueError("one vertical-arc count is required per negative component")
        if any(v < 0 for v in self.vertical):
            raise ValueError("vertical-arc counts must be >= 0")
        if self.bridge_arcs < 0 or self.core_loops < 0:
            raise ValueError("arc counts must be >= 0")

    @classmethod
    def assemble(
        cls,
        plus_genus: int,
        neg: Sequence[tuple[int, Role]] = (),
        edges: Sequence[tuple[int, int]] = (),
        vertical: Sequence[int] = (),
        bridge_arcs: int = 0,
        core_loops: int = 0,
    ) -> VpBody:
        """Build a body with puncture counts derived from the arc data.

        ``neg`` lists (genus, role) pairs; each component's punctures are its
        ghost-arc degree plus its vertical-arc count, and the positive
        boundary gets 2*bridge + total vertical punctures.
        """
        va = tuple(vertical) if vertical else (0,) * len(neg)
        if len(va) != len(neg):
            raise ValueError("vertical must align with neg")
        probe = GhostArcGraph(
            tuple(SurfaceComponent(g, 0, role) for g, role in neg), tuple(edges)
        )
        comps = tuple(
            SurfaceComponent(g, probe.degree(i) + va[i], role)
            for i, (g, role) in enumerate(neg)
        )
        plus = SurfaceComponent(plus_genus, 2 * bridge_arcs + sum(va), Role.THICK)
        return cls(plus, GhostArcGraph(comps, probe.edges), va, bridge_arcs, core_loops)

    @property
    def neg(self) -> tuple[SurfaceComponent, ...]:
        return self.gag.vertices

    def total_vertical(self) -> int:
        return sum(self.vertical)

    def __str__(self) -> str:
        negs = ", ".join(
            f"{s}+{v}v" for s, v in zip(self.gag.vertices, self.vertical)
        )
        return (
            f"VpBody(plus={self.plus}, bridge={self.bridge_arcs}, "
            f"core={self.core_loops}, neg=[{negs}], ghosts={list(self.gag.edges)})"
        )


def validate(body: VpBody, *, thin_sphere_min: int = 3) -> ValidationReport:
    """Check every invariant and report each failure by name."""
    bad: list[Violation] = []

    if body.plus.role is not Role.THICK:
        bad.append(Violation("plus-role", f"positive boundary has role {body.plus.role.value}"))
    expected_plus = 2 * body.bridge_arcs + body.total_vertical()
    if body.plus.punctures != expected_plus:
        bad.append(
            Violation(
                "plus-accounting",
                f"positive boundary has {body.plus.punctures} punctures, "
                f"arc inventory implies {expected_plus}",
            )
        )
    for i, comp in enumerate(body.neg):
        expected = body.gag.degree(i) + body.vertical[i]
        if comp.punctures != expected:
            bad.append(
                Violation(
                    "neg-accounting",
                    f"negative component #{i} has {comp.punctures} punctures, "
                    f"arc inventory implies {expected}",
                )
            )
        if comp.role not in (Role.THIN, Role.BOUNDARY, Role.VERTEX_SPHERE):
            bad.append(Violation("neg-role", f"negative component #{i} has role {comp.role.value}"))
        if comp.role is Role.VERTEX_SPHERE and (comp.genus != 0 or comp.punctures < 3):
            bad.append(
                Violation(
                    "vertex-sphere",
                    f"vertex sphere #{i} must be a sphere with >= 3 punctures, "
                    f"got genus {comp.genus} with {comp.punctures}",
                )
            )
        elif comp.role is Role.BOUNDARY and comp.is_sphere and comp.punctures < 3:
            bad.append(
                Violation(
                    "boundary-sphere",
                    f"boundary sphere #{i} meets the graph in {comp.punctures} <= 2 points",
                )
            )
        elif comp.role is Role.THIN and comp.is_sphere and comp.punctures < thin_sphere_min:
            bad.append(
                Violation(
                    "neg-sphere-punctures",
                    f"sphere negative component #{i} has only {comp.punctures} punctures "
                    f"(needs >= {thin_sphere_min})",
                )
            )

    spine_load = _spine_load(body)
    if spine_load > body.plus.genus:
        bad.append(
            Violation(
                "genus-bound",
                f"ghost-arc graph needs genus {spine_load} but positive boundary "
                f"has genus {body.plus.genus}",
            )
        )

    if body.core_loops > 0:
        if body.gag.n_vertices > 0 or body.bridge_arcs > 0:
            bad.append(
                Violation(
                    "core-loops",
                    "core loops only occur in bodies with no negative boundary and no arcs",
                )
            )
        elif body.core_loops > body.plus.genus:
            bad.append(
                Violation(
                    "core-loops",
                    f"{body.core_loops} core loops exceed positive-boundary genus "
                    f"{body.plus.genus}",
                )
            )

    if body.plus.is_sphere and body.plus.punctures == 0:
        bad.append(Violation("plus-sphere", "positive boundary is an unpunctured sphere"))

    return ValidationReport(tuple(bad))


def _spine_load(body: VpBody) -> int:
    """Total genus of the ghost-arc graph's thickening: sum of vertex genera
    plus the cycle rank, over all connected pieces."""
    return sum(s.genus for s in body.neg) + body.gag.cycle_rank()


def admissible(body: VpBody, *, thin_sphere_min: int = 3) -> bool:
    return validate(body, thin_sphere_min=thin_sphere_min).ok


def _require_admissible(body: VpBody) -> None:
    # Index arithmetic tolerates twice-punctured thin spheres (surgery along
    # connected-sum spheres needs them); everything else must hold.
    report = validate(body, thin_sphere_min=2)
    if not report.ok:
        raise InadmissibleBodyError(report)


def delta(body: VpBody) -> HalfInt:
    """Index of the body: extent of the positive boundary minus the extent
    of the negative boundary.  Non-negative and integral for admissible
    bodies (both facts follow from the accounting and genus invariants)."""
    _require_admissible(body)
    value = extent(body.plus) - extent_set(body.neg)
    if value < 0:
        raise AssertionError(f"negative index on an admissible body: {body}")
    return value


class VPClass(enum.Enum):
    """Classification of zero-index bodies (plus a rejection bucket)."""

    VP1 = "VP1"  # ball with a single bridge arc
    VP2 = "VP2"  # solid torus, empty graph
    VP3 = "VP3"  # solid torus with its core loop
    VP4 = "VP4"  # spine type: ghost arcs + negative boundary carry the genus
    NOT_DELTA_ZERO = "not-delta-zero"


def classify_delta_zero(body: VpBody) -> VPClass:
    """Sort an admissible body into the zero-index catalog.

    VP4 is recognised combinatorially: no bridge arcs or core loops, a
    connected nonempty ghost-arc graph, and the spine equality (total genus
    plus cycle rank of the graph equals the positive-boundary genus).
    """
    _require_admissible(body)
    if body.gag.n_vertices == 0:
        if body.plus.genus == 0 and body.bridge_arcs == 1 and body.core_loops == 0:
            return VPClass.VP1
        if body.plus.genus == 1 and body.bridge_arcs == 0:
            if body.core_loops == 0:
                return VPClass.VP2
            if body.core_loops == 1:
                return VPClass.VP3
        return VPClass.NOT_DELTA_ZERO
    if (
        body.bridge_arcs == 0
        and body.core_loops == 0
        and body.gag.is_connected_nonempty()
        and _spine_load(body) == body.plus.genus
        and delta(body) == 0
    ):
        return VPClass.VP4
    return VPClass.NOT_DELTA_ZERO


_ROLE_ORDER = {Role.THIN: 0, Role.BOUNDARY: 1, Role.VERTEX_SPHERE: 2, Role.THICK: 3}


@dataclass(frozen=True, order=True, slots=True)
class CanonicalKey:
    """Isomorphism-invariant fingerprint of a body.

    Two bodies get equal keys exactly when a relabelling of negative
    components preserving (genus, role, vertical-arc count) matches their
    ghost-arc multigraphs and the plus/bridge/core data agree.
    """

    data: tuple = field(repr=False)

    def __str__(self) -> str:
        (pg, pp, b, c, verts, edges) = self.data
        vtxt = " ".join(f"(g{g},p{p},{role},va{va})" for g, p, role, va in verts)
        etxt = ",".join(f"{a}-{bb}" for a, bb in edges)
        return (
            f"plus=(g{pg},p{pp}) bridge={b} core={c}"
            f" neg=[{vtxt}] ghosts=[{etxt}]"
        )


def canonical_form(body: VpBody) -> CanonicalKey:
    """Lexicographically minimal labelling over all vertex orderings.

    Negative-component counts stay tiny in every in-scope enumeration, so
    brute-force minimisation over permutations is fine.  This is a pure
    structural key; it does not require admissibility.
    """
    n = body.gag.n_vertices
    vert_data = [
        (s.genus, s.punctures, s.role.value, body.vertical[i])
        for i, s in enumerate(body.neg)
    ]
    best: tuple | None = None
    for perm in itertools.permutations(range(n)):
        # perm maps old index -> new index
        verts = tuple(vert_data[old] for old in _inverse(perm))
        edges = tuple(
            sorted(tuple(sorted((perm[a], perm[b]))) for a, b in body.gag.edges)
        )
        cand = (verts, edges)
        if best is None or cand < best:
            best = cand
    verts, edges = best if best is not None else ((), ())
    return CanonicalKey(
        (
            body.plus.genus,
            body.plus.punctures,
            body.bridge_arcs,
            body.core_loops,
            verts,
            edges,
        )
    )


def _inverse(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for old, new in enumerate(perm):
        inv[new] = old
    return inv


def relabel(body: VpBody, perm: Iterable[int]) -> VpBody:
    """Body with negative components re-indexed by ``perm`` (old -> new)."""
    perm = list(perm)
    inv = _inverse(perm)
    verts = tuple(body.neg[old] for old in inv)
    vertical = tuple(body.vertical[old] for old in inv)
    edges = tuple((perm[a], perm[b]) for a, b in body.gag.edges)
    return VpBody(body.plus, GhostArcGraph(verts, edges), vertical, body.bridge_arcs, body.core_loops)
