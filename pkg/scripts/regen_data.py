#!/usr/bin/env python3
"""Regenerate the shipped JSON data (classification tables, example corpus).

The JSON files are the source of truth at runtime; this script exists so the
data can be rebuilt consistently after a schema change.  Run from the repo
root:  python scripts/regen_data.py
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from netext.bodies import VpBody  # noqa: E402
from netext.factors import (  # noqa: E402
    curve_0_2,
    curve_1_1,
    generic_graph,
    generic_knot,
)
from netext.factors import Factorization  # noqa: E402
from netext.fileio import (  # noqa: E402
    FactorDocument,
    FactorFlags,
    body_to_dict,
    decomposition_to_dict,
    dump_json,
    factor_document_to_dict,
)
from netext.standard import standard_surfaces  # noqa: E402
from netext.surfaces import Role  # noqa: E402

_V = Role.VERTEX_SPHERE
_T = Role.THIN

TABLE_DIR = ROOT / "src" / "netext" / "data" / "tables"
EXAMPLE_DIR = ROOT / "src" / "netext" / "data" / "examples"


def sphere_table() -> dict:
    entries = [
        ("sphere-p2-trivial-ball", "trivial-ball", VpBody.assemble(0, bridge_arcs=1)),
        (
            "sphere-p3-vertex-product",
            "vertex-product",
            VpBody.assemble(0, neg=[(0, _V)], vertical=[3]),
        ),
        ("sphere-p4-two-bridge-arcs", "two-bridge-arcs", VpBody.assemble(0, bridge_arcs=2)),
        (
            "sphere-p4-vertex-product",
            "vertex-product",
            VpBody.assemble(0, neg=[(0, _V)], vertical=[4]),
        ),
        (
            "sphere-p4-two-vertices-ghost-arc",
            "two-vertex-ghost",
            VpBody.assemble(0, neg=[(0, _V), (0, _V)], edges=[(0, 1)], vertical=[2, 2]),
        ),
    ]
    legend = (
        "positive-boundary spheres with at most four punctures; "
        "sphere negative components are recorded as graph vertices"
    )
    return _table("sphere", legend, entries)


def torus_table() -> dict:
    entries = [
        (
            "torus-product-0-vertical",
            "torus-product",
            VpBody.assemble(1, neg=[(1, _T)]),
        ),
        (
            "torus-product-1-vertical",
            "torus-product",
            VpBody.assemble(1, neg=[(1, _T)], vertical=[1]),
        ),
        (
            "torus-product-2-vertical",
            "torus-product",
            VpBody.assemble(1, neg=[(1, _T)], vertical=[2]),
        ),
        (
            "torus-product-bridge-arc",
            "torus-product-bridge",
            VpBody.assemble(1, neg=[(1, _T)], bridge_arcs=1),
        ),
        (
            "torus-vertex-ghost-chain",
            "torus-vertex-chain",
            VpBody.assemble(1, neg=[(1, _T), (0, _V)], edges=[(0, 1)], vertical=[0, 2]),
        ),
        ("solid-torus-bridge-arc", "solid-torus-bridge", VpBody.assemble(1, bridge_arcs=1)),
        ("solid-torus-empty", "solid-torus", VpBody.assemble(1)),
        ("solid-torus-core-loop", "solid-torus", VpBody.assemble(1, core_loops=1)),
        (
            "one-vertex-loop-1-vertical",
            "one-vertex-loop",
            VpBody.assemble(1, neg=[(0, _V)], edges=[(0, 0)], vertical=[1]),
        ),
        (
            "one-vertex-loop-2-vertical",
            "one-vertex-loop",
            VpBody.assemble(1, neg=[(0, _V)], edges=[(0, 0)], vertical=[2]),
        ),
        (
            "two-vertex-double-arc",
            "two-vertex-double-arc",
            VpBody.assemble(1, neg=[(0, _V), (0, _V)], edges=[(0, 1), (0, 1)], vertical=[1, 1]),
        ),
        (
            "two-vertex-arc-and-loop",
            "two-vertex-arc-loop",
            VpBody.assemble(1, neg=[(0, _V), (0, _V)], edges=[(0, 1), (1, 1)], vertical=[2, 0]),
        ),
    ]
    legend = (
        "positive-boundary tori with at most two punctures; twelve types, "
        "counted per family as 3,1,1,1,2,2,1,1"
    )
    return _table("torus", legend, entries)


def genus2_table() -> dict:
    entries = [
        ("genus2-handlebody-empty", "handlebody", VpBody.assemble(2)),
        ("genus2-handlebody-one-core", "handlebody", VpBody.assemble(2, core_loops=1)),
        ("genus2-handlebody-two-cores", "handlebody", VpBody.assemble(2, core_loops=2)),
        (
            "genus2-theta-spine",
            "vertex-spine",
            VpBody.assemble(2, neg=[(0, _V), (0, _V)], edges=[(0, 1)] * 3),
        ),
        (
            "genus2-handcuff-spine",
            "vertex-spine",
            VpBody.assemble(2, neg=[(0, _V), (0, _V)], edges=[(0, 0), (0, 1), (1, 1)]),
        ),
        (
            "genus2-bouquet-spine",
            "vertex-spine",
            VpBody.assemble(2, neg=[(0, _V)], edges=[(0, 0), (0, 0)]),
        ),
        ("genus2-torus-empty", "torus-boundary", VpBody.assemble(2, neg=[(1, _T)])),
        (
            "genus2-torus-ghost-loop",
            "torus-boundary",
            VpBody.assemble(2, neg=[(1, _T)], edges=[(0, 0)]),
        ),
        (
            "genus2-torus-and-vertex",
            "torus-and-vertex",
            VpBody.assemble(2, neg=[(1, _T), (0, _V)], edges=[(0, 1), (1, 1)]),
        ),
        ("genus2-two-tori-empty", "two-tori", VpBody.assemble(2, neg=[(1, _T), (1, _T)])),
        (
            "genus2-two-tori-ghost-arc",
            "two-tori",
            VpBody.assemble(2, neg=[(1, _T), (1, _T)], edges=[(0, 1)]),
        ),
        ("genus2-product", "product", VpBody.assemble(2, neg=[(2, _T)])),
    ]
    legend = (
        "unpunctured genus-2 positive boundary, compared at the "
        "negative-boundary configuration level (which surfaces, which ghost "
        "arcs, arc counts); fillings of the empty handlebody are recorded as "
        "core-loop counts 0, 1 or 2, so the loop-free handlebody is listed "
        "alongside the knot and two-component-link cases"
    )
    return _table("genus2", legend, entries)


def _table(name: str, legend: str, entries) -> dict:
    return {
        "schema": 1,
        "table": name,
        "legend": legend,
        "entries": [
            {"label": label, "family": family, "body": body_to_dict(body)}
            for label, family, body in entries
        ],
    }


def factor_files() -> dict[str, FactorDocument]:
    s3 = FactorFlags(ambient_s3=True)
    return {
        "three_theta_vertex_sum": FactorDocument(
            Factorization.of(*[curve_1_1(False)] * 3), s3
        ),
        "five_theta_vertex_sum": FactorDocument(
            Factorization.of(*[curve_1_1(False)] * 5), s3
        ),
        "seven_theta_vertex_sum": FactorDocument(
            Factorization.of(*[curve_1_1(False)] * 7), s3
        ),
        "theta_plus_knot": FactorDocument(
            Factorization.of(curve_1_1(False), generic_knot(1)), s3
        ),
        "two_bridge_pair": FactorDocument(
            Factorization.of(curve_0_2(False), curve_0_2(False)), s3
        ),
        "brunnian_theta": FactorDocument(
            Factorization.of(generic_graph("3/2")),
            FactorFlags(ambient_s3=True, brunnian=True),
        ),
        "msmall_pair": FactorDocument(
            Factorization.of(curve_1_1(False), curve_1_1(False)),
            FactorFlags(ambient_s3=True, m_small_tunnels=(1, 1)),
        ),
    }


def main() -> None:
    TABLE_DIR.mkdir(parents=True, exist_ok=True)
    EXAMPLE_DIR.mkdir(parents=True, exist_ok=True)
    for builder in (sphere_table, torus_table, genus2_table):
        data = builder()
        dump_json(data, TABLE_DIR / f"{data['table']}.json")
        print(f"wrote table {data['table']} ({len(data['entries'])} entries)")
    for name, d in sorted(standard_surfaces().items()):
        filename = name.replace("-", "_") + ".json"
        dump_json(decomposition_to_dict(d), EXAMPLE_DIR / filename)
        print(f"wrote example {filename}")
    for name, doc in sorted(factor_files().items()):
        dump_json(factor_document_to_dict(doc), EXAMPLE_DIR / f"{name}.json")
        print(f"wrote example {name}.json")


if __name__ == "__main__":
    main()
