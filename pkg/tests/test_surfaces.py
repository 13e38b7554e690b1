"""Surface bookkeeping: Euler characteristic and extent."""

from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from netext import (
    HALF,
    Role,
    SurfaceComponent,
    euler_char,
    extent,
    extent_set,
    sphere,
    torus,
    vertex_sphere,
)

genera = st.integers(min_value=0, max_value=6)
puncture_counts = st.integers(min_value=0, max_value=12)


def test_euler_char_values():
    assert euler_char(sphere(0)) == 2
    assert euler_char(torus()) == 0
    assert euler_char(SurfaceComponent(2, 0, Role.THICK)) == -2


def test_extent_values():
    assert extent(sphere(4)) == 1
    assert extent(torus(0)) == 0
    assert extent(sphere(3)) == HALF
    assert extent(torus(2)) == 1


def test_extent_set_additive():
    assert extent_set(()) == 0
    assert extent_set((sphere(3), sphere(3))) == 1
    assert extent_set((torus(0), sphere(4))) == 1


@given(genera, puncture_counts)
def test_extent_definitional_identity(g, p):
    s = SurfaceComponent(g, p, Role.THIN)
    assert extent(s) * 2 == -euler_char(s) + p


@given(genera, puncture_counts)
def test_extent_monotone(g, p):
    s = SurfaceComponent(g, p, Role.THIN)
    assert extent(SurfaceComponent(g + 1, p, Role.THIN)) == extent(s) + 1
    assert extent(SurfaceComponent(g, p + 1, Role.THIN)) == extent(s) + HALF


@given(genera, puncture_counts)
def test_extent_lower_bounds(g, p):
    s = SurfaceComponent(g, p, Role.THIN)
    assert extent(s) >= -1
    if g >= 1 or p >= 2:
        assert extent(s) >= 0


def test_allowed_thin_and_vertex_components_have_positive_extent():
    # the admissible sphere components (>= 3 punctures) all have extent >= 1/2
    for p in range(3, 8):
        assert extent(vertex_sphere(p)) >= HALF
        assert extent(sphere(p, Role.THIN)) >= HALF


def test_component_construction_guards():
    import pytest

    with pytest.raises(ValueError):
        SurfaceComponent(-1, 0, Role.THIN)
    with pytest.raises(ValueError):
        SurfaceComponent(0, -2, Role.THIN)
    # transiently-illegal components are constructible; validators flag them
    assert vertex_sphere(2).punctures == 2
