"""Compressionbody validation, index, classification, canonical keys."""

from __future__ import annotations

import random

import pytest

from netext import (
    InadmissibleBodyError,
    Role,
    VPClass,
    VpBody,
    admissible,
    canonical_form,
    classify_delta_zero,
    delta,
    validate,
)
from netext.bodies import relabel

_V = Role.VERTEX_SPHERE
_T = Role.THIN

TRIVIAL_BALL = VpBody.assemble(0, bridge_arcs=1)


def test_trivial_ball_admissible():
    assert validate(TRIVIAL_BALL).ok


def test_two_vertex_ghost_body_admissible():
    body = VpBody.assemble(0, neg=[(0, _V), (0, _V)], edges=[(0, 1)], vertical=[2, 2])
    assert validate(body).ok
    assert body.plus.punctures == 4
    assert all(c.punctures == 3 for c in body.neg)


def test_small_vertex_sphere_rejected():
    body = VpBody.assemble(0, neg=[(0, _V)], vertical=[2], bridge_arcs=1)
    report = validate(body)
    assert not report.ok
    assert "vertex-sphere" in report.codes


def test_degree_two_sphere_cycle_rejected():
    body = VpBody.assemble(1, neg=[(0, _V), (0, _V)], edges=[(0, 1), (0, 1)])
    report = validate(body)
    assert not report.ok
    assert "vertex-sphere" in report.codes  # each cycle vertex has only 2 punctures


def test_genus_bound_violation_reported():
    body = VpBody.assemble(0, neg=[(1, _T)], vertical=[3])
    assert "genus-bound" in validate(body).codes


def test_accounting_violations_reported():
    from netext import GhostArcGraph, SurfaceComponent

    plus = SurfaceComponent(0, 3, Role.THICK)  # inventory implies 2
    body = VpBody(plus, GhostArcGraph((), ()), (), 1, 0)
    assert "plus-accounting" in validate(body).codes

    neg = SurfaceComponent(0, 4, _V)  # inventory implies 3
    body = VpBody(
        SurfaceComponent(0, 3, Role.THICK),
        GhostArcGraph((neg,), ()),
        (3,),
        0,
        0,
    )
    assert "neg-accounting" in validate(body).codes


def test_core_loop_isolation():
    assert "core-loops" in validate(
        VpBody.assemble(1, bridge_arcs=1, core_loops=1)
    ).codes
    assert "core-loops" in validate(
        VpBody.assemble(2, neg=[(1, _T)], core_loops=1)
    ).codes
    assert "core-loops" in validate(VpBody.assemble(1, core_loops=2)).codes
    assert validate(VpBody.assemble(2, core_loops=2)).ok


def test_unpunctured_sphere_plus_rejected():
    assert "plus-sphere" in validate(VpBody.assemble(0)).codes


def test_thin_sphere_strictness_is_contextual():
    body = VpBody.assemble(0, neg=[(0, _T)], vertical=[2])
    assert "neg-sphere-punctures" in validate(body).codes
    assert validate(body, thin_sphere_min=2).ok


# --- index ----------------------------------------------------------------


def test_delta_values():
    assert delta(TRIVIAL_BALL) == 0
    assert delta(VpBody.assemble(1, bridge_arcs=1)) == 1
    two_vertex = VpBody.assemble(0, neg=[(0, _V), (0, _V)], edges=[(0, 1)], vertical=[2, 2])
    assert delta(two_vertex) == 0
    assert delta(VpBody.assemble(2, core_loops=1)) == 1


def test_delta_requires_admissible():
    bad = VpBody.assemble(0, neg=[(0, _V)], vertical=[2], bridge_arcs=1)
    with pytest.raises(InadmissibleBodyError):
        delta(bad)
    with pytest.raises(InadmissibleBodyError):
        classify_delta_zero(bad)


# --- zero-index classification ---------------------------------------------


def test_classify_examples():
    assert classify_delta_zero(TRIVIAL_BALL) is VPClass.VP1
    assert classify_delta_zero(VpBody.assemble(1)) is VPClass.VP2
    assert classify_delta_zero(VpBody.assemble(1, core_loops=1)) is VPClass.VP3
    chain = VpBody.assemble(1, neg=[(1, _T), (0, _V)], edges=[(0, 1)], vertical=[0, 2])
    assert classify_delta_zero(chain) is VPClass.VP4
    assert classify_delta_zero(VpBody.assemble(1, bridge_arcs=1)) is VPClass.NOT_DELTA_ZERO


def test_trivial_product_is_vp4():
    product = VpBody.assemble(0, neg=[(0, _V)], vertical=[3])
    assert delta(product) == 0
    assert classify_delta_zero(product) is VPClass.VP4


# --- canonical keys ---------------------------------------------------------


def test_canonical_key_ignores_relabelling():
    body = VpBody.assemble(0, neg=[(0, _V), (0, _V)], edges=[(0, 1)], vertical=[2, 2])
    swapped = relabel(body, [1, 0])
    assert canonical_form(body) == canonical_form(swapped)


def test_canonical_key_distinguishes_structures():
    double_arc = VpBody.assemble(
        1, neg=[(0, _V), (0, _V)], edges=[(0, 1), (0, 1)], vertical=[1, 1]
    )
    arc_and_loop = VpBody.assemble(
        1, neg=[(0, _V), (0, _V)], edges=[(0, 1), (1, 1)], vertical=[2, 0]
    )
    assert canonical_form(double_arc) != canonical_form(arc_and_loop)


def test_canonical_key_sees_negative_boundary_count():
    # structural keys exist even for inadmissible bodies
    ball_with_slot = VpBody.assemble(0, neg=[(0, _V)], vertical=[2])
    assert canonical_form(TRIVIAL_BALL) != canonical_form(ball_with_slot)


def test_canonical_key_random_relabellings():
    rng = random.Random(7)
    body = VpBody.assemble(
        2,
        neg=[(0, _V), (0, _V), (1, _T)],
        edges=[(0, 1), (1, 2)],
        vertical=[2, 1, 1],
    )
    key = canonical_form(body)
    for _ in range(20):
        perm = list(range(3))
        rng.shuffle(perm)
        assert canonical_form(relabel(body, perm)) == key


def test_relabel_preserves_admissibility():
    body = VpBody.assemble(
        2, neg=[(0, _V), (0, _V)], edges=[(0, 0), (0, 1), (1, 1)]
    )
    assert admissible(body)
    assert admissible(relabel(body, [1, 0]))
