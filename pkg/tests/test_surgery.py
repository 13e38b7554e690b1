"""Surgery along thin spheres: the two crushing identities, exactly."""

from __future__ import annotations

import pytest

from netext import (
    Ambient,
    Decomposition,
    GraphKind,
    HalfInt,
    Role,
    ThickGluing,
    ThinGluing,
    VpBody,
    netchi,
    netext,
    surger,
    validate_decomposition,
)
from netext.standard import propeller, slinky

_T = Role.THIN
_V = Role.VERTEX_SPHERE


def test_slinky_surgery_all_thin_spheres():
    for length in (2, 4, 6):
        d = slinky(length)
        for i in range(len(d.thin)):
            left, right, report = surger(d, i)
            assert report.punctures == 4
            assert report.correction == HalfInt(2)
            assert report.netext_identity
            assert report.netchi_identity
            assert validate_decomposition(left).ok
            assert validate_decomposition(right).ok


def test_slinky_child_shapes():
    d = slinky(4)
    left, right, _ = surger(d, 1)
    # left keeps the chained tori; right is the solid-torus end
    assert netchi(left) == 2 and netext(left) == 1
    assert netchi(right) == 0 and netext(right) == 1
    # the crushed slot became a degree-4 vertex
    crushed = [
        c
        for body in left.bodies
        for c in body.neg
        if c.role is Role.VERTEX_SPHERE and c.punctures == 4
    ]
    assert crushed


def _two_punctured_chain() -> Decomposition:
    ball = VpBody.assemble(0, bridge_arcs=1)
    pass_body = VpBody.assemble(0, neg=[(0, _T)], vertical=[2])
    return Decomposition(
        (ball, pass_body, pass_body, ball),
        (ThickGluing(0, 1, into=0), ThickGluing(2, 3, into=2)),
        (ThinGluing(1, 0, 2, 0, into=1),),
        Ambient.closed_pair(0, GraphKind.LINK),
    )


def test_two_punctured_sphere_absorbs():
    d = _two_punctured_chain()
    assert validate_decomposition(d).ok
    left, right, report = surger(d, 0)
    assert report.correction == HalfInt(0)
    assert report.netext_identity and report.netchi_identity
    assert netchi(d) == netchi(left) + netchi(right) + 2
    for child in (left, right):
        assert validate_decomposition(child).ok
        # the absorbed slot fused the two vertical arcs into a bridge arc
        assert sum(b.bridge_arcs for b in child.bodies) == 2
        assert all(not b.neg for b in child.bodies)


def _vertex_sum_chain() -> Decomposition:
    vertex_side = VpBody.assemble(0, neg=[(0, _V)], vertical=[3])
    pass_side = VpBody.assemble(0, neg=[(0, _T)], vertical=[3])
    return Decomposition(
        (vertex_side, pass_side, pass_side, vertex_side),
        (ThickGluing(0, 1, into=0), ThickGluing(2, 3, into=2)),
        (ThinGluing(1, 0, 2, 0, into=1),),
        Ambient.closed_pair(-1, GraphKind.THETA),
    )


def test_thrice_punctured_sphere_correction():
    d = _vertex_sum_chain()
    assert validate_decomposition(d).ok
    assert netext(d) == HalfInt(1)
    left, right, report = surger(d, 0)
    assert report.correction == HalfInt(1)
    assert report.netext_identity and report.netchi_identity
    for child in (left, right):
        assert validate_decomposition(child).ok
        assert netext(child) == HalfInt(1)
        assert child.ambient.graph_euler_char == -1


def test_ghost_loop_absorbs_to_core_loop():
    # a twice-punctured slot carrying a ghost loop closes into a core loop
    loop_side = VpBody.assemble(1, neg=[(0, _T)], edges=[(0, 0)])
    torus_leaf = VpBody.assemble(1)
    pass_body = VpBody.assemble(0, neg=[(0, _T)], vertical=[2])
    ball = VpBody.assemble(0, bridge_arcs=1)
    d = Decomposition(
        (torus_leaf, loop_side, pass_body, ball),
        (ThickGluing(0, 1, into=0), ThickGluing(2, 3, into=2)),
        (ThinGluing(1, 0, 2, 0, into=1),),
        Ambient.closed_pair(0, GraphKind.LINK),
    )
    assert validate_decomposition(d).ok
    left, right, report = surger(d, 0)
    assert report.netext_identity and report.netchi_identity
    loop_child = left if any(b.core_loops for b in left.bodies) else right
    assert any(b.core_loops == 1 and not b.neg for b in loop_child.bodies)
    assert validate_decomposition(loop_child).ok


def test_ghost_chain_absorbs_to_merged_arc():
    # a twice-punctured slot met by a ghost arc and a vertical arc splices
    # them into a longer vertical arc at the ghost arc's other endpoint
    chain_side = VpBody.assemble(
        1, neg=[(0, _T), (0, _V)], edges=[(0, 1)], vertical=[1, 2]
    )
    partner = VpBody.assemble(1, neg=[(0, _V)], vertical=[3])
    pass_body = VpBody.assemble(0, neg=[(0, _T)], vertical=[2])
    ball = VpBody.assemble(0, bridge_arcs=1)
    d = Decomposition(
        (partner, chain_side, pass_body, ball),
        (ThickGluing(0, 1, into=0), ThickGluing(2, 3, into=2)),
        (ThinGluing(1, 0, 2, 0, into=1),),
        Ambient.closed_pair(-1, GraphKind.OTHER),
    )
    assert validate_decomposition(d).ok
    left, right, report = surger(d, 0)
    assert report.netext_identity and report.netchi_identity
    spliced = left if len(left.bodies) == 2 else right
    target = [b for b in spliced.bodies if b.gag.n_edges == 0 and len(b.neg) == 1]
    assert target and all(b.vertical == (3,) for b in target)
    for child in (left, right):
        assert validate_decomposition(child).ok


def test_non_separating_thin_sphere_rejected():
    # two parallel thin spheres between the same pair of wings: removing one
    # leaves the dual graph connected
    wing = VpBody.assemble(0, neg=[(0, _T), (0, _T)], edges=[(0, 1)], vertical=[2, 2])
    leaf = VpBody.assemble(0, bridge_arcs=2)
    d = Decomposition(
        (wing, leaf, wing, leaf),
        (ThickGluing(0, 1, into=0), ThickGluing(2, 3, into=3)),
        (ThinGluing(0, 0, 2, 0, into=2), ThinGluing(0, 1, 2, 1, into=2)),
        Ambient.closed_pair(0, GraphKind.OTHER),
    )
    assert validate_decomposition(d).ok
    with pytest.raises(ValueError, match="not separating"):
        surger(d, 0)


def test_non_sphere_thin_surface_rejected():
    d = propeller("torus")
    with pytest.raises(ValueError, match="not a sphere"):
        surger(d, 0)


def test_bad_index_rejected():
    with pytest.raises(ValueError):
        surger(slinky(2), 5)
