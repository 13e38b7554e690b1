"""Acceptance suite: one test per criterion, each printing a pass line.

Run with ``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the
per-criterion lines).  Every tolerance is exact: all arithmetic is integer
or half-integer, so equality checks are literal.
"""

from __future__ import annotations

import json
import random
import time

from netext import (
    EnumSpec,
    GraphKind,
    HalfInt,
    VPClass,
    admissible,
    check_delta_identity,
    classify_delta_zero,
    delta,
    enumerate_bodies,
    link_parity,
    netchi,
    netext,
    surger,
    validate_decomposition,
)
from netext.cli import main
from netext.examples import example_path
from netext.randomgen import (
    random_admissible_body,
    random_decomposition,
    random_link_decomposition,
)
from netext.searches import distribution_counterexamples, tunnel_tight_theta_multisets
from netext.standard import slinky, standard_surfaces
from netext.tables import load_table

RANDOM_COUNT = 1000


def _report(criterion: int, ok: bool, detail: str) -> None:
    print(f"[acceptance] criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def _run_cli(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_criterion_1_sphere_table(capsys):
    start = time.perf_counter()
    code, out = _run_cli(
        capsys, "enumerate", "--genus", "0", "--max-punctures", "4", "--compare",
        "--format", "json",
    )
    elapsed = time.perf_counter() - start
    payload = json.loads(out)
    counts = {int(p): len(keys) for p, keys in payload["types"].items()}
    ok = (
        code == 0
        and counts == {2: 1, 3: 1, 4: 3}
        and payload["compare"]["empty"]
        and elapsed < 1.0
    )
    _report(1, ok, f"counts {counts}, empty diff, {elapsed:.2f}s < 1s, exit {code}")


def test_criterion_2_torus_table(capsys):
    start = time.perf_counter()
    code, out = _run_cli(
        capsys, "enumerate", "--genus", "1", "--max-punctures", "2", "--compare",
        "--format", "json",
    )
    elapsed = time.perf_counter() - start
    payload = json.loads(out)
    table = load_table("torus")
    family_sizes = sorted(len(v) for v in table.by_family().values())
    ok = (
        code == 0
        and payload["total"] == 12
        and payload["compare"]["empty"]
        and family_sizes == sorted([3, 1, 1, 1, 2, 2, 1, 1])
        and elapsed < 5.0
    )
    _report(
        2,
        ok,
        f"12 types, sub-variant counts {family_sizes}, empty diff, {elapsed:.2f}s < 5s",
    )


def test_criterion_3_zero_index_classification():
    mismatches = 0
    total = 0
    for genus in (0, 1, 2):
        result = enumerate_bodies(EnumSpec(plus_genus=genus, max_punctures=4))
        for body in result.bodies.values():
            total += 1
            zero = delta(body) == 0
            positive = classify_delta_zero(body) is not VPClass.NOT_DELTA_ZERO
            if zero != positive:
                mismatches += 1
    _report(3, mismatches == 0, f"{total} types over genus <= 2, punctures <= 4; "
            f"{mismatches} classification mismatches")


def test_criterion_4_delta_identity_and_standard_values():
    rng = random.Random(20260810)
    failures = 0
    for _ in range(RANDOM_COUNT):
        if not check_delta_identity(random_decomposition(rng)):
            failures += 1
    surfaces = standard_surfaces()
    for name, d in surfaces.items():
        if not check_delta_identity(d):
            failures += 1
    expected = {
        "two-bridge-theta": (HalfInt.whole(1), -2),
        "one-bridge-torus-theta": (HalfInt.whole(1), 0),
        "genus2-heegaard-theta": (HalfInt.whole(1), 2),
        "propeller-standard": (HalfInt.whole(1), 4),
    }
    value_ok = all(
        netext(surfaces[k]) == ne and netchi(surfaces[k]) == nc
        for k, (ne, nc) in expected.items()
    )
    _report(
        4,
        failures == 0 and value_ok,
        f"{RANDOM_COUNT} random + {len(surfaces)} standard decompositions, "
        f"{failures} identity failures; standard values "
        "(1,-2) (1,0) (1,2) (1,4) as expected" if value_ok else "standard values wrong",
    )


def test_criterion_5_surgery_arithmetic():
    checked = 0
    exact = True
    for length in (2, 4, 6):
        d = slinky(length)
        for i in range(len(d.thin)):
            p = d.thin_surface(d.thin[i]).punctures
            left, right, report = surger(d, i)
            checked += 1
            exact = exact and report.netchi_identity and report.netext_identity
            exact = exact and report.correction == HalfInt(p - 2)
            exact = exact and validate_decomposition(left).ok
            exact = exact and validate_decomposition(right).ok
    _report(5, exact and checked == 6, f"{checked} thin spheres surgered exactly")


def test_criterion_6_sharpness_fixtures(capsys):
    ok = True
    details = []
    code, out = _run_cli(capsys, "bounds", str(example_path("three_theta_vertex_sum")))
    ok = ok and code == 0 and "tunnel lower bound: 1" in out
    details.append("3 factors -> 1")
    for n, name in ((2, "five_theta_vertex_sum"), (3, "seven_theta_vertex_sum")):
        code, out = _run_cli(capsys, "bounds", str(example_path(name)))
        ok = ok and code == 0 and f"tunnel lower bound: {n}" in out
        details.append(f"{2 * n + 1} factors -> {n}")
    code, out = _run_cli(capsys, "bounds", str(example_path("brunnian_theta")))
    ok = ok and code == 0 and "bridge >= 5/2" in out
    details.append("brunnian m=1 -> bridge 5/2")
    _report(6, ok, "; ".join(details))


def test_criterion_7_tight_search():
    start = time.perf_counter()
    results = tunnel_tight_theta_multisets(8)
    elapsed = time.perf_counter() - start
    ok = (
        len(results) == 1
        and results[0].n == 3
        and all(str(f) == "Curve_1_1(graph)" for f in results[0].factors)
        and elapsed < 60.0
    )
    _report(7, ok, f"unique solution three (1,1)-graphs in {elapsed:.2f}s < 60s")


def test_criterion_8_distribution_sweep():
    start = time.perf_counter()
    bad = distribution_counterexamples(8)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60.0
    _report(8, ok, f"0 counterexamples among feasible multisets (n <= 8) in "
            f"{elapsed:.2f}s < 60s")


def test_criterion_9_parity_suite():
    rng = random.Random(424242)
    parity_failures = sum(
        0 if link_parity(random_link_decomposition(rng)) else 1
        for _ in range(RANDOM_COUNT)
    )
    rng = random.Random(515151)
    body_failures = 0
    for _ in range(RANDOM_COUNT):
        body = random_admissible_body(rng)
        value = delta(body)
        if not (admissible(body) and value >= 0 and value.is_integer()):
            body_failures += 1
    _report(
        9,
        parity_failures == 0 and body_failures == 0,
        f"{RANDOM_COUNT} link decompositions all integral; "
        f"{RANDOM_COUNT} bodies all with non-negative integral index",
    )


def test_all_link_standard_surfaces_have_link_kind():
    # sanity companion to criterion 9: shipped link surfaces satisfy parity too
    for name, d in standard_surfaces().items():
        if d.ambient.kind is GraphKind.LINK:
            assert link_parity(d), name
