"""The random generators only ever produce valid objects."""

from __future__ import annotations

import random

from netext import (
    GraphKind,
    admissible,
    check_delta_identity,
    delta,
    link_parity,
    validate_decomposition,
)
from netext.randomgen import (
    random_admissible_body,
    random_decomposition,
    random_graph_decomposition,
    random_link_decomposition,
)


def test_link_decompositions_valid_and_integral():
    rng = random.Random(101)
    for _ in range(150):
        d = random_link_decomposition(rng)
        report = validate_decomposition(d)
        assert report.ok, report
        assert d.ambient.kind is GraphKind.LINK
        assert link_parity(d)
        assert check_delta_identity(d)


def test_graph_decompositions_valid_with_identity():
    rng = random.Random(202)
    for _ in range(150):
        d = random_graph_decomposition(rng)
        report = validate_decomposition(d)
        assert report.ok, report
        assert check_delta_identity(d)


def test_mixed_generator_deterministic_for_fixed_seed():
    a = random_decomposition(random.Random(7))
    b = random_decomposition(random.Random(7))
    assert a == b


def test_random_bodies_admissible_with_integral_index():
    rng = random.Random(303)
    for _ in range(200):
        body = random_admissible_body(rng)
        assert admissible(body)
        value = delta(body)
        assert value >= 0
        assert value.is_integer()
