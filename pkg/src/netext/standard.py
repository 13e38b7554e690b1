"""Ready-made decompositions for the low-complexity spatial graph types.

Each constructor returns a valid decomposition realising the standard
surface of one catalog type: bridge spheres, once-punctured and
twice-punctured tori, unpunctured genus-2 splittings, chained slinky
surfaces, and the two propeller surfaces.
"""

from __future__ import annotations

from .bodies import VpBody
from .decomposition import (
    Ambient,
    Decomposition,
    GraphKind,
    ThickGluing,
    ThinGluing,
)
from .surfaces import Role

_V = Role.VERTEX_SPHERE
_T = Role.THIN


def _pair(top: VpBody, bottom: VpBody, ambient: Ambient) -> Decomposition:
    return Decomposition((top, bottom), (ThickGluing(0, 1, into=0),), (), ambient)


def unknot_bridge_sphere() -> Decomposition:
    ball = VpBody.assemble(0, bridge_arcs=1)
    return _pair(ball, ball, Ambient.closed_pair(0, GraphKind.LINK))


def trivial_theta_bridge_sphere() -> Decomposition:
    side = VpBody.assemble(0, neg=[(0, _V)], vertical=[3])
    return _pair(side, side, Ambient.closed_pair(-1, GraphKind.THETA))


def two_bridge(kind: str = "theta") -> Decomposition:
    """Four-punctured bridge sphere; ``kind`` picks what lives on the far side."""
    arcs = VpBody.assemble(0, bridge_arcs=2)
    if kind == "knot":
        return _pair(arcs, arcs, Ambient.closed_pair(0, GraphKind.LINK))
    if kind in ("theta", "handcuff"):
        vertex_side = VpBody.assemble(
            0, neg=[(0, _V), (0, _V)], edges=[(0, 1)], vertical=[2, 2]
        )
        graph_kind = GraphKind.THETA if kind == "theta" else GraphKind.HANDCUFF
        return _pair(arcs, vertex_side, Ambient.closed_pair(-1, graph_kind))
    if kind == "bouquet":
        vertex_side = VpBody.assemble(0, neg=[(0, _V)], vertical=[4])
        return _pair(arcs, vertex_side, Ambient.closed_pair(-1, GraphKind.BOUQUET))
    raise ValueError(f"unknown two-bridge kind {kind!r}")


def one_bridge_torus(kind: str = "theta") -> Decomposition:
    """Twice-punctured torus splitting with one bridge arc on the far side."""
    bridge_side = VpBody.assemble(1, bridge_arcs=1)
    if kind == "knot":
        return _pair(bridge_side, bridge_side, Ambient.closed_pair(0, GraphKind.LINK))
    if kind == "theta":
        vertex_side = VpBody.assemble(
            1, neg=[(0, _V), (0, _V)], edges=[(0, 1), (0, 1)], vertical=[1, 1]
        )
        return _pair(bridge_side, vertex_side, Ambient.closed_pair(-1, GraphKind.THETA))
    if kind == "handcuff":
        vertex_side = VpBody.assemble(
            1, neg=[(0, _V), (0, _V)], edges=[(0, 0), (0, 1)], vertical=[0, 2]
        )
        return _pair(bridge_side, vertex_side, Ambient.closed_pair(-1, GraphKind.HANDCUFF))
    if kind == "bouquet":
        vertex_side = VpBody.assemble(1, neg=[(0, _V)], edges=[(0, 0)], vertical=[2])
        return _pair(bridge_side, vertex_side, Ambient.closed_pair(-1, GraphKind.BOUQUET))
    raise ValueError(f"unknown one-bridge-torus kind {kind!r}")


def genus2_heegaard(kind: str = "theta") -> Decomposition:
    """Unpunctured genus-2 splitting; the graph sits in a spine on one side."""
    handlebody = VpBody.assemble(2)
    if kind == "knot":
        return _pair(
            VpBody.assemble(2, core_loops=1), handlebody, Ambient.closed_pair(0, GraphKind.LINK)
        )
    if kind == "two-component-link":
        return _pair(
            VpBody.assemble(2, core_loops=2), handlebody, Ambient.closed_pair(0, GraphKind.LINK)
        )
    if kind == "theta":
        spine = VpBody.assemble(2, neg=[(0, _V), (0, _V)], edges=[(0, 1)] * 3)
        return _pair(spine, handlebody, Ambient.closed_pair(-1, GraphKind.THETA))
    if kind == "handcuff":
        spine = VpBody.assemble(2, neg=[(0, _V), (0, _V)], edges=[(0, 0), (0, 1), (1, 1)])
        return _pair(spine, handlebody, Ambient.closed_pair(-1, GraphKind.HANDCUFF))
    if kind == "bouquet":
        spine = VpBody.assemble(2, neg=[(0, _V)], edges=[(0, 0), (0, 0)])
        return _pair(spine, handlebody, Ambient.closed_pair(-1, GraphKind.BOUQUET))
    raise ValueError(f"unknown genus-2 splitting kind {kind!r}")


def lens_core_torus() -> Decomposition:
    """Unpunctured Heegaard torus with the knot as a core loop on one side."""
    return _pair(
        VpBody.assemble(1, core_loops=1),
        VpBody.assemble(1),
        Ambient.closed_pair(0, GraphKind.LINK),
    )


def hopf_graph_torus() -> Decomposition:
    """Once-punctured torus; each side holds one vertex with its loop."""
    side = VpBody.assemble(1, neg=[(0, _V)], edges=[(0, 0)], vertical=[1])
    return _pair(side, side, Ambient.closed_pair(-1, GraphKind.HANDCUFF))


def propeller(style: str = "torus") -> Decomposition:
    """Two genus-2 thick surfaces around a thin torus (or two thin tori)."""
    leaf = VpBody.assemble(2)
    if style == "torus":
        middle = VpBody.assemble(2, neg=[(1, _T)], edges=[(0, 0)])
        thin = (ThinGluing(1, 0, 2, 0, into=1),)
    elif style == "two-tori":
        middle = VpBody.assemble(2, neg=[(1, _T), (1, _T)], edges=[(0, 1)])
        thin = (ThinGluing(1, 0, 2, 0, into=1), ThinGluing(1, 1, 2, 1, into=1))
    else:
        raise ValueError(f"unknown propeller style {style!r}")
    bodies = (leaf, middle, middle, leaf)
    thick = (ThickGluing(0, 1, into=0), ThickGluing(2, 3, into=2))
    return Decomposition(bodies, thick, thin, Ambient.closed_pair(0, GraphKind.LINK))


_SLINKY_FIRST = ("hopfified-theta", "hopfified-handcuff", "ringlet", "bouquet-11", "bouquet-20")
_SLINKY_LAST = ("bouquet-11", "bouquet-20")


def _ringlet_half() -> VpBody:
    return VpBody.assemble(1, neg=[(0, _T)], edges=[(0, 0)], vertical=[2])


def _slinky_end_bodies(end: str) -> tuple[VpBody, VpBody]:
    """(far leaf-side body, chain-side body with the open sphere slot)."""
    if end == "hopfified-theta":
        far = VpBody.assemble(1, neg=[(0, _V), (0, _V)], edges=[(0, 1), (0, 1)], vertical=[1, 1])
        return far, _ringlet_half()
    if end == "hopfified-handcuff":
        far = VpBody.assemble(1, neg=[(0, _V), (0, _V)], edges=[(0, 1), (1, 1)], vertical=[2, 0])
        return far, _ringlet_half()
    if end == "ringlet":
        far = VpBody.assemble(1, neg=[(0, _V)], edges=[(0, 0)], vertical=[2])
        return far, _ringlet_half()
    if end == "bouquet-11":
        return VpBody.assemble(1, bridge_arcs=1), _ringlet_half()
    if end == "bouquet-20":
        near = VpBody.assemble(2, neg=[(0, _T)], edges=[(0, 0), (0, 0)])
        return VpBody.assemble(2), near
    raise ValueError(f"unknown slinky end {end!r}")


def slinky(length: int, first_end: str = "hopfified-theta", last_end: str = "bouquet-11") -> Decomposition:
    """Chain of four-punctured thin spheres realising a slinky surface.

    ``length`` is the resulting net Euler characteristic (even, >= 2); the
    end types determine how many chained factors that requires.
    """
    if first_end not in _SLINKY_FIRST:
        raise ValueError(f"first end must be one of {_SLINKY_FIRST}")
    if last_end not in _SLINKY_LAST:
        raise ValueError(f"last end must be one of {_SLINKY_LAST}")
    if length < 2 or length % 2 != 0:
        raise ValueError("length must be an even integer >= 2")
    genus2_ends = (first_end == "bouquet-20") + (last_end == "bouquet-20")
    doubled_factors = length + 2 - 2 * genus2_ends
    if doubled_factors % 2 != 0 or doubled_factors < 4:
        raise ValueError(
            f"length {length} is not realisable with ends ({first_end}, {last_end})"
        )
    factors = doubled_factors // 2

    first_far, first_near = _slinky_end_bodies(first_end)
    last_far, last_near = _slinky_end_bodies(last_end)

    bodies: list[VpBody] = [first_far, first_near]
    for _ in range(factors - 2):
        bodies.extend((_ringlet_half(), _ringlet_half()))
    bodies.extend((last_near, last_far))

    thick = tuple(ThickGluing(i, i + 1, into=i + 1) for i in range(0, len(bodies), 2))
    thin = tuple(
        ThinGluing(2 * i + 1, 0, 2 * i + 2, 0, into=2 * i + 2)
        for i in range(factors - 1)
    )

    if first_end == "hopfified-theta":
        ambient = Ambient.closed_pair(-1, GraphKind.THETA)
    elif first_end == "hopfified-handcuff":
        ambient = Ambient.closed_pair(-1, GraphKind.HANDCUFF)
    elif first_end == "ringlet":
        ambient = Ambient.closed_pair(-1, GraphKind.BOUQUET)
    else:
        ambient = Ambient.closed_pair(0, GraphKind.LINK)
    return Decomposition(tuple(bodies), thick, thin, ambient)


def standard_surfaces() -> dict[str, Decomposition]:
    """The whole shipped menagerie, keyed by a stable name."""
    return {
        "unknot-bridge-sphere": unknot_bridge_sphere(),
        "trivial-theta-bridge-sphere": trivial_theta_bridge_sphere(),
        "two-bridge-theta": two_bridge("theta"),
        "two-bridge-handcuff": two_bridge("handcuff"),
        "two-bridge-knot": two_bridge("knot"),
        "two-bridge-bouquet": two_bridge("bouquet"),
        "one-bridge-torus-theta": one_bridge_torus("theta"),
        "one-bridge-torus-handcuff": one_bridge_torus("handcuff"),
        "one-bridge-torus-bouquet": one_bridge_torus("bouquet"),
        "one-bridge-torus-knot": one_bridge_torus("knot"),
        "genus2-heegaard-theta": genus2_heegaard("theta"),
        "genus2-heegaard-handcuff": genus2_heegaard("handcuff"),
        "genus2-heegaard-bouquet": genus2_heegaard("bouquet"),
        "genus2-heegaard-knot": genus2_heegaard("knot"),
        "lens-core-torus": lens_core_torus(),
        "hopf-graph-torus": hopf_graph_torus(),
        "slinky-length-2": slinky(2),
        "slinky-length-4": slinky(4),
        "slinky-length-6": slinky(6),
        "propeller-standard": propeller("torus"),
        "propeller-two-tori": propeller("two-tori"),
    }
