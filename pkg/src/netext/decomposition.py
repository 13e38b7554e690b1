"""Decompositions: bodies glued along thick and thin surfaces.

A decomposition is an oriented dual digraph.  Vertices are bodies; edges are
the glued surfaces carrying a normal direction (the body the normal points
into).  Thick surfaces identify the positive boundaries of exactly two
bodies, thin surfaces identify negative-boundary slots of two bodies, and
unglued negative slots belong to the ambient boundary or are vertex spheres.

The orientation rule is per body: if the thick edge points into a body, all
of its thin edges point out, and conversely.  Together with acyclicity this
makes the digraph bipartite (bodies whose thick edge points in versus out),
which is what forces the integrality of net extent for links.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, replace

from .bodies import (
    GhostArcGraph,
    ValidationReport,
    Violation,
    VpBody,
    delta,
    validate,
)
from .halfint import HalfInt, hsum
from .surfaces import (
    Role,
    SurfaceComponent,
    SurfaceSet,
    euler_char,
    extent,
)


class InvalidDecompositionError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__(f"invalid decomposition: {report}")
        self.report = report


class GraphKind(enum.Enum):
    LINK = "link"
    THETA = "theta"
    HANDCUFF = "handcuff"
    BOUQUET = "bouquet"
    OTHER = "other"


@dataclass(frozen=True, slots=True)
class Ambient:
    """What the formulas need to know about the ambient pair.

    ``graph_euler_char`` counts boundary endpoints of the graph as vertices;
    a knot or link has 0, every genus-2 graph has -1.
    """

    closed: bool
    boundary: SurfaceSet
    graph_euler_char: int
    kind: GraphKind

    @classmethod
    def closed_pair(cls, graph_euler_char: int, kind: GraphKind) -> Ambient:
        return cls(True, SurfaceSet(()), graph_euler_char, kind)


@dataclass(frozen=True, slots=True)
class ThickGluing:
    left: int
    right: int
    into: int  # which incident body the normal points into


@dataclass(frozen=True, slots=True)
class ThinGluing:
    left: int
    left_slot: int
    right: int
    right_slot: int
    into: int


@dataclass(frozen=True, slots=True)
class Decomposition:
    bodies: tuple[VpBody, ...]
    thick: tuple[ThickGluing, ...]
    thin: tuple[ThinGluing, ...]
    ambient: Ambient

    def thick_surface(self, g: ThickGluing) -> SurfaceComponent:
        return self.bodies[g.left].plus

    def thin_surface(self, g: ThinGluing) -> SurfaceComponent:
        return self.bodies[g.left].neg[g.left_slot]

    def unglued_slots(self) -> list[tuple[int, int]]:
        used = {(g.left, g.left_slot) for g in self.thin}
        used |= {(g.right, g.right_slot) for g in self.thin}
        return [
            (b, s)
            for b, body in enumerate(self.bodies)
            for s in range(len(body.neg))
            if (b, s) not in used
        ]

    def require_valid(self) -> None:
        report = validate_decomposition(self)
        if not report.ok:
            raise InvalidDecompositionError(report)


def validate_decomposition(d: Decomposition) -> ValidationReport:
    bad: list[Violation] = []
    n = len(d.bodies)

    for i, body in enumerate(d.bodies):
        sub = validate(body, thin_sphere_min=2)
        bad.extend(Violation(v.code, f"body {i}: {v.detail}") for v in sub.violations)

    # Thick surfaces: every body has its positive boundary in exactly one gluing.
    seen = [0] * n
    for g in d.thick:
        if not (0 <= g.left < n and 0 <= g.right < n) or g.left == g.right:
            bad.append(Violation("thick-arity", f"bad thick gluing {g}"))
            continue
        seen[g.left] += 1
        seen[g.right] += 1
        if g.into not in (g.left, g.right):
            bad.append(Violation("orientation-target", f"thick normal {g.into} is not incident"))
        if not d.bodies[g.left].plus.matches(d.bodies[g.right].plus):
            bad.append(
                Violation(
                    "thick-match",
                    f"bodies {g.left} and {g.right} glue mismatched positive boundaries "
                    f"{d.bodies[g.left].plus} vs {d.bodies[g.right].plus}",
                )
            )
    for i, count in enumerate(seen):
        if count != 1:
            bad.append(
                Violation(
                    "thick-arity",
                    f"body {i} appears in {count} thick gluings (needs exactly 1)",
                )
            )

    # Thin surfaces: slots exist, are used once, match, and carry the thin role.
    slot_use: dict[tuple[int, int], int] = {}
    for g in d.thin:
        ends = ((g.left, g.left_slot), (g.right, g.right_slot))
        ok_ends = True
        for b, s in ends:
            if not (0 <= b < n) or not (0 <= s < len(d.bodies[b].neg)):
                bad.append(Violation("thin-slot", f"thin gluing {g} references a missing slot"))
                ok_ends = False
                continue
            slot_use[(b, s)] = slot_use.get((b, s), 0) + 1
        if not ok_ends:
            continue
        if g.left == g.right:
            bad.append(Violation("orientation", f"thin gluing {g} joins a body to itself"))
        if g.into not in (g.left, g.right):
            bad.append(Violation("orientation-target", f"thin normal {g.into} is not incident"))
        left_surface = d.bodies[g.left].neg[g.left_slot]
        right_surface = d.bodies[g.right].neg[g.right_slot]
        if not left_surface.matches(right_surface):
            bad.append(
                Violation(
                    "thin-match",
                    f"thin gluing {g} joins {left_surface} to {right_surface}",
                )
            )
        for b, s in ends:
            if d.bodies[b].neg[s].role is not Role.THIN:
                bad.append(
                    Violation(
                        "thin-role",
                        f"glued slot {s} of body {b} has role "
                        f"{d.bodies[b].neg[s].role.value}",
                    )
                )
    for (b, s), count in slot_use.items():
        if count > 1:
            bad.append(Violation("thin-arity", f"slot {s} of body {b} is glued {count} times"))

    for b, s in d.unglued_slots():
        if d.bodies[b].neg[s].role is Role.THIN:
            bad.append(Violation("unglued-thin", f"slot {s} of body {b} is thin but unglued"))

    # Orientation rule and acyclicity of the dual digraph.
    thick_into: dict[int, bool] = {}
    for g in d.thick:
        if 0 <= g.left < n and 0 <= g.right < n and g.into in (g.left, g.right):
            thick_into[g.left] = g.into == g.left
            thick_into[g.right] = g.into == g.right
    for g in d.thin:
        for b in (g.left, g.right):
            if b in thick_into and g.into in (g.left, g.right) and g.left != g.right:
                into_b = g.into == b
                if into_b == thick_into[b]:
                    bad.append(
                        Violation(
                            "orientation",
                            f"body {b}: thin normal and thick normal point the same way",
                        )
                    )
    cycle = _find_cycle(d)
    if cycle is not None:
        bad.append(Violation("digraph-cycle", "dual digraph has a directed cycle: " + "->".join(map(str, cycle))))

    # Unpunctured-sphere sanity on the glued surfaces.
    for g in d.thick:
        s = d.bodies[g.left].plus
        if s.is_sphere and s.punctures == 0:
            bad.append(Violation("unpunctured-sphere", f"thick surface of bodies {g.left},{g.right}"))
    for g in d.thin:
        if 0 <= g.left < n and 0 <= g.left_slot < len(d.bodies[g.left].neg):
            s = d.bodies[g.left].neg[g.left_slot]
            if s.is_sphere and s.punctures == 0:
                bad.append(Violation("unpunctured-sphere", f"thin surface {g}"))

    # Ambient record consistency.
    boundary_slots = sorted(
        (d.bodies[b].neg[s].genus, d.bodies[b].neg[s].punctures)
        for b, s in d.unglued_slots()
        if d.bodies[b].neg[s].role is Role.BOUNDARY
    )
    declared = sorted((c.genus, c.punctures) for c in d.ambient.boundary)
    if boundary_slots != declared:
        bad.append(
            Violation(
                "ambient-boundary",
                f"declared boundary {declared} but bodies expose {boundary_slots}",
            )
        )
    if d.ambient.closed != (not declared):
        bad.append(Violation("ambient-closed", "closed flag disagrees with boundary list"))

    vertex_spheres = [
        d.bodies[b].neg[s]
        for b, s in d.unglued_slots()
        if d.bodies[b].neg[s].role is Role.VERTEX_SPHERE
    ]
    kind = d.ambient.kind
    if kind is GraphKind.LINK:
        if vertex_spheres:
            bad.append(Violation("ambient-kind", "a link decomposition cannot carry vertex spheres"))
        if d.ambient.graph_euler_char != 0:
            bad.append(Violation("ambient-kind", "a link has Euler characteristic 0"))
        if any(c.punctures != 0 for c in d.ambient.boundary):
            bad.append(Violation("ambient-kind", "a link never meets the ambient boundary"))
    elif kind in (GraphKind.THETA, GraphKind.HANDCUFF):
        sig = sorted((c.genus, c.punctures) for c in vertex_spheres)
        if sig != [(0, 3), (0, 3)]:
            bad.append(
                Violation(
                    "ambient-kind",
                    f"{kind.value} needs exactly two degree-3 vertices, got {sig}",
                )
            )
        if d.ambient.graph_euler_char != -1:
            bad.append(Violation("ambient-kind", f"{kind.value} has Euler characteristic -1"))
    elif kind is GraphKind.BOUQUET:
        sig = sorted((c.genus, c.punctures) for c in vertex_spheres)
        if sig != [(0, 4)]:
            bad.append(
                Violation("ambient-kind", f"bouquet needs exactly one degree-4 vertex, got {sig}")
            )
        if d.ambient.graph_euler_char != -1:
            bad.append(Violation("ambient-kind", "bouquet has Euler characteristic -1"))

    return ValidationReport(tuple(bad))


def _digraph_edges(d: Decomposition, skip_thin: int | None = None) -> list[tuple[int, int]]:
    edges = []
    for g in d.thick:
        src = g.right if g.into == g.left else g.left
        edges.append((src, g.into))
    for idx, g in enumerate(d.thin):
        if idx == skip_thin:
            continue
        src = g.right if g.into == g.left else g.left
        edges.append((src, g.into))
    return edges


def _find_cycle(d: Decomposition) -> list[int] | None:
    n = len(d.bodies)
    edges = [e for e in _digraph_edges(d) if 0 <= e[0] < n and 0 <= e[1] < n]
    indegree = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        out[a].append(b)
        indegree[b] += 1
    queue = deque(i for i in range(n) if indegree[i] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in out[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                queue.append(w)
    if seen == n:
        return None
    return [i for i in range(n) if indegree[i] > 0]


def topological_order(d: Decomposition) -> list[int]:
    """Body indices in an order compatible with the normal directions."""
    d.require_valid()
    n = len(d.bodies)
    edges = _digraph_edges(d)
    indegree = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        out[a].append(b)
        indegree[b] += 1
    queue = deque(sorted(i for i in range(n) if indegree[i] == 0))
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in sorted(out[v]):
            indegree[w] -= 1
            if indegree[w] == 0:
                queue.append(w)
    return order


def netext(d: Decomposition) -> HalfInt:
    """Extent of the thick surfaces minus extent of the thin surfaces."""
    d.require_valid()
    return _netext_raw(d)


def _netext_raw(d: Decomposition) -> HalfInt:
    thick = hsum(extent(d.thick_surface(g)) for g in d.thick)
    thin = hsum(extent(d.thin_surface(g)) for g in d.thin)
    return thick - thin


def netchi(d: Decomposition) -> int:
    """Negative Euler characteristic of thick plus Euler characteristic of thin."""
    d.require_valid()
    return _netchi_raw(d)


def _netchi_raw(d: Decomposition) -> int:
    thick = sum(-euler_char(d.thick_surface(g)) for g in d.thick)
    thin = sum(euler_char(d.thin_surface(g)) for g in d.thin)
    return thick + thin


def capital_delta(d: Decomposition) -> HalfInt:
    """Twice the net extent, corrected by the ambient boundary and the
    graph's Euler characteristic.  For a closed ambient manifold this is
    2*netext + graph_euler_char."""
    d.require_valid()
    boundary = d.ambient.boundary
    correction = (
        hsum(extent(c) for c in boundary)
        + HalfInt(boundary.total_punctures)
        - d.ambient.graph_euler_char
    )
    return netext(d) * 2 - correction


def check_delta_identity(d: Decomposition) -> bool:
    """True iff the global correction equals the sum of body indices.

    This holds for every valid decomposition; it is exposed as a test
    oracle, and a failure signals a modeling bug.
    """
    d.require_valid()
    total = hsum(delta(b) for b in d.bodies)
    return capital_delta(d) == total


def link_parity(d: Decomposition) -> bool:
    """For link decompositions: whether the net extent is an integer."""
    d.require_valid()
    if d.ambient.kind is not GraphKind.LINK:
        raise ValueError("link_parity only applies to link decompositions")
    return netext(d).is_integer()


@dataclass(frozen=True, slots=True)
class SurgeryReport:
    punctures: int
    correction: HalfInt
    parent_netext: HalfInt
    parent_netchi: int
    child_netext: tuple[HalfInt, HalfInt]
    child_netchi: tuple[int, int]

    @property
    def netchi_identity(self) -> bool:
        return self.parent_netchi == self.child_netchi[0] + self.child_netchi[1] + 2

    @property
    def netext_identity(self) -> bool:
        return (
            self.parent_netext
            == self.child_netext[0] + self.child_netext[1] - self.correction
        )

    def __str__(self) -> str:
        return (
            f"surgery along a {self.punctures}-punctured sphere: "
            f"netext {self.parent_netext} = {self.child_netext[0]} + "
            f"{self.child_netext[1]} - {self.correction} "
            f"[{'ok' if self.netext_identity else 'FAIL'}]; "
            f"netchi {self.parent_netchi} = {self.child_netchi[0]} + "
            f"{self.child_netchi[1]} + 2 "
            f"[{'ok' if self.netchi_identity else 'FAIL'}]"
        )


def surger(
    d: Decomposition, thin_index: int
) -> tuple[Decomposition, Decomposition, SurgeryReport]:
    """Split a decomposition along a separating thin sphere.

    The sphere is removed from the thin surfaces; on each side its slot
    becomes a vertex sphere (>= 3 punctures) or, for a twice-punctured
    sphere, is absorbed by merging the two arcs that met it.
    """
    if not (0 <= thin_index < len(d.thin)):
        raise ValueError(f"no thin surface with index {thin_index}")
    gluing = d.thin[thin_index]
    surface = d.thin_surface(gluing)
    if not surface.is_sphere:
        raise ValueError(f"thin surface {thin_index} is not a sphere: {surface}")
    p = surface.punctures
    if p < 2:
        raise ValueError("surgery needs at least two punctures")

    sides = _split_sides(d, thin_index)
    if sides is None:
        raise ValueError(f"thin surface {thin_index} is not separating")
    left_side, right_side = sides

    child_left = _build_side(d, thin_index, left_side, gluing.left, gluing.left_slot)
    child_right = _build_side(d, thin_index, right_side, gluing.right, gluing.right_slot)

    report = SurgeryReport(
        punctures=p,
        correction=HalfInt(p - 2),
        parent_netext=_netext_raw(d),
        parent_netchi=_netchi_raw(d),
        child_netext=(_netext_raw(child_left), _netext_raw(child_right)),
        child_netchi=(_netchi_raw(child_left), _netchi_raw(child_right)),
    )
    return child_left, child_right, report


def _split_sides(d: Decomposition, thin_index: int) -> tuple[set[int], set[int]] | None:
    n = len(d.bodies)
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for a, b in _digraph_edges(d, skip_thin=thin_index):
        adjacency[a].add(b)
        adjacency[b].add(a)
    start = d.thin[thin_index].left
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if d.thin[thin_index].right in seen:
        return None
    return seen, set(range(n)) - seen


def _absorb_slot(body: VpBody, slot: int) -> VpBody:
    """Remove a twice-punctured slot by splicing its two arc ends together."""
    va = body.vertical[slot]
    incident = [e for e in body.gag.edges if slot in e]
    deg = sum((1 if a == slot else 0) + (1 if b == slot else 0) for a, b in incident)
    if va + deg != 2:
        raise ValueError("absorption needs a twice-punctured slot")
    new_edges = [e for e in body.gag.edges if slot not in e]
    bridge = body.bridge_arcs
    core = body.core_loops
    extra_vertical: dict[int, int] = {}
    if va == 2:
        bridge += 1
    elif va == 1:
        (a, b) = incident[0]
        other = b if a == slot else a
        extra_vertical[other] = 1
    else:
        if len(incident) == 1:  # a loop at the slot closes into a core loop
            core += 1
        else:
            (a1, b1), (a2, b2) = incident
            u = b1 if a1 == slot else a1
            w = b2 if a2 == slot else a2
            new_edges.append((u, w))

    keep = [i for i in range(len(body.neg)) if i != slot]
    remap = {old: new for new, old in enumerate(keep)}
    verts = tuple(body.neg[i] for i in keep)
    vertical = tuple(body.vertical[i] + extra_vertical.get(i, 0) for i in keep)
    edges = tuple((remap[a], remap[b]) for a, b in new_edges)
    return VpBody(body.plus, GhostArcGraph(verts, edges), vertical, bridge, core)


def _crush_slot(body: VpBody, slot: int) -> VpBody:
    comp = body.neg[slot].with_role(Role.VERTEX_SPHERE)
    verts = tuple(
        comp if i == slot else s for i, s in enumerate(body.neg)
    )
    return VpBody(
        body.plus,
        GhostArcGraph(verts, body.gag.edges),
        body.vertical,
        body.bridge_arcs,
        body.core_loops,
    )


def _build_side(
    d: Decomposition,
    thin_index: int,
    side: set[int],
    incident_body: int,
    incident_slot: int,
) -> Decomposition:
    p = d.thin_surface(d.thin[thin_index]).punctures
    order = sorted(side)
    remap = {old: new for new, old in enumerate(order)}
    bodies = []
    for old in order:
        body = d.bodies[old]
        if old == incident_body:
            body = _crush_slot(body, incident_slot) if p >= 3 else _absorb_slot(body, incident_slot)
        bodies.append(body)

    def fix_slot(old_body: int, old_slot: int) -> int:
        if p == 2 and old_body == incident_body and old_slot > incident_slot:
            return old_slot - 1
        return old_slot

    thick = tuple(
        ThickGluing(remap[g.left], remap[g.right], remap[g.into])
        for g in d.thick
        if g.left in side
    )
    thin = tuple(
        ThinGluing(
            remap[g.left],
            fix_slot(g.left, g.left_slot),
            remap[g.right],
            fix_slot(g.right, g.right_slot),
            remap[g.into],
        )
        for i, g in enumerate(d.thin)
        if i != thin_index and g.left in side
    )

    boundary = []
    n_vertices = 0
    vertex_degree_sum = 0
    for body in bodies:
        for comp in body.neg:
            if comp.role is Role.BOUNDARY:
                boundary.append(comp)
            elif comp.role is Role.VERTEX_SPHERE:
                n_vertices += 1
                vertex_degree_sum += comp.punctures
    boundary_punctures = sum(c.punctures for c in boundary)
    doubled_chi = 2 * n_vertices + boundary_punctures - vertex_degree_sum
    if doubled_chi % 2 != 0:
        raise AssertionError("graph data of a surgered side is inconsistent")
    chi = doubled_chi // 2
    kind = GraphKind.LINK if n_vertices == 0 and chi == 0 else GraphKind.OTHER
    ambient = Ambient(
        closed=not boundary,
        boundary=SurfaceSet(tuple(boundary)),
        graph_euler_char=chi,
        kind=kind,
    )
    return Decomposition(tuple(bodies), thick, thin, ambient)


def relabel_bodies(d: Decomposition, perm: list[int]) -> Decomposition:
    """Decomposition with bodies re-indexed by ``perm`` (old -> new)."""
    inv = [0] * len(perm)
    for old, new in enumerate(perm):
        inv[new] = old
    bodies = tuple(d.bodies[old] for old in inv)
    thick = tuple(
        ThickGluing(perm[g.left], perm[g.right], perm[g.into]) for g in d.thick
    )
    thin = tuple(
        ThinGluing(perm[g.left], g.left_slot, perm[g.right], g.right_slot, perm[g.into])
        for g in d.thin
    )
    return Decomposition(bodies, thick, thin, d.ambient)


def reverse_orientations(d: Decomposition) -> Decomposition:
    """Flip every normal direction simultaneously."""
    thick = tuple(
        replace(g, into=g.left if g.into == g.right else g.right) for g in d.thick
    )
    thin = tuple(
        replace(g, into=g.left if g.into == g.right else g.right) for g in d.thin
    )
    return Decomposition(d.bodies, thick, thin, d.ambient)
