"""Seeded random generators for property tests and the verification suite.

Decompositions grow as trees of thick-glued body pairs: an open thin slot is
either capped by a pass-through pair or extended by a random kit piece whose
own slots go back on the worklist.  Tree growth keeps the dual digraph
acyclic, and the top/bottom bookkeeping keeps every normal direction legal,
so everything produced here is valid by construction; tests re-validate.

The link kit never uses vertex spheres and only even-punctured surfaces;
the graph kit adds vertex-carrying pieces in parity-safe combinations.
"""

from __future__ import annotations

import random
from collections import deque

from .bodies import VpBody, admissible
from .decomposition import (
    Ambient,
    Decomposition,
    GraphKind,
    ThickGluing,
    ThinGluing,
)
from .surfaces import Role, SurfaceSet

_T = Role.THIN
_V = Role.VERTEX_SPHERE

Piece = tuple[VpBody, tuple[int, ...]]  # body plus its open thin-slot indices


def _piece(body: VpBody) -> Piece:
    slots = tuple(i for i, c in enumerate(body.neg) if c.role is _T)
    return body, slots


def _leaf(plus_genus: int, punctures: int, core_loops: int = 0) -> Piece:
    return _piece(
        VpBody.assemble(plus_genus, bridge_arcs=punctures // 2, core_loops=core_loops)
    )


def _product(genus: int, punctures: int) -> Piece:
    return _piece(
        VpBody.assemble(genus, neg=[(genus, _T)], vertical=[punctures])
    )


def _link_pieces() -> list[Piece]:
    return [
        _leaf(0, 2),
        _leaf(0, 4),
        _leaf(1, 0),
        _leaf(1, 0, core_loops=1),
        _leaf(1, 2),
        _leaf(2, 0),
        _leaf(2, 0, core_loops=1),
        _leaf(2, 0, core_loops=2),
        _leaf(2, 2),
        _product(0, 2),
        _product(0, 4),
        _product(1, 0),
        _product(1, 2),
        _product(2, 0),
        _product(2, 2),
        # branching / genus-shifting pieces
        _piece(VpBody.assemble(0, neg=[(0, _T), (0, _T)], vertical=[2, 2])),
        _piece(VpBody.assemble(1, neg=[(0, _T)], edges=[(0, 0)], vertical=[2])),
        _piece(VpBody.assemble(1, neg=[(0, _T)], edges=[(0, 0)])),
        _piece(VpBody.assemble(1, neg=[(1, _T)], bridge_arcs=1)),
        _piece(VpBody.assemble(2, neg=[(1, _T)], edges=[(0, 0)])),
        _piece(VpBody.assemble(2, neg=[(0, _T)], edges=[(0, 0), (0, 0)])),
    ]


def _graph_pieces() -> list[Piece]:
    return _link_pieces() + [
        # vertex-carrying sides; vertex degrees stay even per piece or come
        # in matched odd pairs, so the assembled graph always closes up.
        _piece(VpBody.assemble(0, neg=[(0, _V)], vertical=[4])),
        _piece(VpBody.assemble(0, neg=[(0, _V), (0, _V)], edges=[(0, 1)], vertical=[2, 2])),
        _piece(VpBody.assemble(1, neg=[(0, _V)], edges=[(0, 0)], vertical=[2])),
        _piece(
            VpBody.assemble(1, neg=[(0, _V), (0, _V)], edges=[(0, 1), (0, 1)], vertical=[1, 1])
        ),
        _piece(
            VpBody.assemble(1, neg=[(0, _V), (0, _V)], edges=[(0, 1), (1, 1)], vertical=[2, 0])
        ),
        _piece(VpBody.assemble(2, neg=[(0, _V), (0, _V)], edges=[(0, 1)] * 3)),
        _piece(VpBody.assemble(2, neg=[(0, _V), (0, _V)], edges=[(0, 0), (0, 1), (1, 1)])),
        _piece(VpBody.assemble(2, neg=[(0, _V)], edges=[(0, 0), (0, 0)])),
        # odd-puncture sphere chain pieces (always vertex-terminated)
        _piece(VpBody.assemble(0, neg=[(0, _V)], vertical=[3])),
        _product(0, 3),
    ]


class _Kit:
    def __init__(self, pieces: list[Piece]):
        self.by_plus: dict[tuple[int, int], list[Piece]] = {}
        self.by_slot: dict[tuple[int, int], list[tuple[VpBody, tuple[int, ...], int]]] = {}
        for body, slots in pieces:
            self.by_plus.setdefault((body.plus.genus, body.plus.punctures), []).append(
                (body, slots)
            )
            for s in slots:
                surf = (body.neg[s].genus, body.neg[s].punctures)
                self.by_slot.setdefault(surf, []).append((body, slots, s))

    def cap(self, surf: tuple[int, int]) -> tuple[VpBody, tuple[int, ...], int]:
        for body, slots, conn in self.by_slot[surf]:
            if len(slots) == 1:
                return body, slots, conn
        raise AssertionError(f"kit has no cap for slot surface {surf}")

    def slotless(self, plus: tuple[int, int], rng: random.Random) -> Piece:
        options = [p for p in self.by_plus[plus] if not p[1]]
        if not options:
            raise AssertionError(f"kit has no slotless partner for {plus}")
        return rng.choice(options)


def _grow(rng: random.Random, kit: _Kit, thick_menu, max_bodies: int):
    bodies: list[VpBody] = []
    thick: list[ThickGluing] = []
    thin: list[ThinGluing] = []
    work: deque[tuple[int, int, bool]] = deque()

    def add(body: VpBody) -> int:
        bodies.append(body)
        return len(bodies) - 1

    def push(idx: int, slots, emits: bool) -> None:
        for s in slots:
            work.append((idx, s, emits))

    surf = rng.choice(thick_menu)
    top_body, top_slots = rng.choice(kit.by_plus[surf])
    bottom_body, bottom_slots = rng.choice(kit.by_plus[surf])
    ti, bi = add(top_body), add(bottom_body)
    thick.append(ThickGluing(ti, bi, into=ti))
    push(ti, top_slots, True)
    push(bi, bottom_slots, False)

    while work:
        b, s, emits = work.popleft()
        slot_surface = (bodies[b].neg[s].genus, bodies[b].neg[s].punctures)
        room = len(bodies) + 2 + 2 * len(work) <= max_bodies
        if room and rng.random() < 0.6:
            glue_body, glue_slots, conn = rng.choice(kit.by_slot[slot_surface])
            partner_body, partner_slots = rng.choice(
                kit.by_plus[(glue_body.plus.genus, glue_body.plus.punctures)]
            )
        else:
            glue_body, glue_slots, conn = kit.cap(slot_surface)
            partner_body, partner_slots = kit.slotless(
                (glue_body.plus.genus, glue_body.plus.punctures), rng
            )
        gi = add(glue_body)
        pi = add(partner_body)
        extras = [x for x in glue_slots if x != conn]
        if emits:
            # the new gluing body receives, so it sits at the bottom of its pair
            thick.append(ThickGluing(pi, gi, into=pi))
            thin.append(ThinGluing(b, s, gi, conn, into=gi))
            push(gi, extras, False)
            push(pi, partner_slots, True)
        else:
            thick.append(ThickGluing(gi, pi, into=gi))
            thin.append(ThinGluing(b, s, gi, conn, into=b))
            push(gi, extras, True)
            push(pi, partner_slots, False)

    return bodies, thick, thin


_LINK_THICK_MENU = ((0, 2), (0, 4), (1, 0), (1, 2), (2, 0), (2, 2))
_GRAPH_THICK_MENU = _LINK_THICK_MENU + ((0, 3),)


def random_link_decomposition(rng: random.Random, max_bodies: int = 14) -> Decomposition:
    kit = _Kit(_link_pieces())
    bodies, thick, thin = _grow(rng, kit, _LINK_THICK_MENU, max_bodies)
    ambient = Ambient.closed_pair(0, GraphKind.LINK)
    return Decomposition(tuple(bodies), tuple(thick), tuple(thin), ambient)


def random_graph_decomposition(rng: random.Random, max_bodies: int = 14) -> Decomposition:
    kit = _Kit(_graph_pieces())
    bodies, thick, thin = _grow(rng, kit, _GRAPH_THICK_MENU, max_bodies)
    n_vertices = 0
    degree_sum = 0
    for body in bodies:
        for comp in body.neg:
            if comp.role is _V:
                n_vertices += 1
                degree_sum += comp.punctures
    if degree_sum % 2 != 0:
        raise AssertionError("graph kit produced an odd total vertex degree")
    chi = n_vertices - degree_sum // 2
    ambient = Ambient(True, SurfaceSet(()), chi, GraphKind.OTHER)
    return Decomposition(tuple(bodies), tuple(thick), tuple(thin), ambient)


def random_decomposition(rng: random.Random, max_bodies: int = 14) -> Decomposition:
    if rng.random() < 0.5:
        return random_link_decomposition(rng, max_bodies)
    return random_graph_decomposition(rng, max_bodies)


def random_admissible_body(rng: random.Random) -> VpBody:
    """Rejection-sample an admissible body (strict sphere rules)."""
    while True:
        plus_genus = rng.randint(0, 3)
        n = rng.randint(0, 3)
        neg = []
        for _ in range(n):
            genus = rng.choice((0, 0, 1, 2))
            role = _V if genus == 0 and rng.random() < 0.7 else _T
            neg.append((genus, role))
        edges = []
        for _ in range(rng.randint(0, 4)):
            if not neg:
                break
            a = rng.randrange(len(neg))
            b = rng.randrange(len(neg))
            edges.append((min(a, b), max(a, b)))
        vertical = [rng.randint(0, 3) for _ in neg]
        bridge = rng.randint(0, 3)
        loops = 0
        if not neg and bridge == 0 and plus_genus > 0 and rng.random() < 0.4:
            loops = rng.randint(0, plus_genus)
        body = VpBody.assemble(
            plus_genus,
            neg=neg,
            edges=edges,
            vertical=vertical,
            bridge_arcs=bridge,
            core_loops=loops,
        )
        if admissible(body):
            return body
