"""Command-line front end.

Subcommands: ``enumerate``, ``bounds``, ``ledger``, ``check``,
``verify-lemmas``.  Exit codes: 0 success, 1 failed informational check
(nonempty comparison diff, infeasible ledger under --strict, failed
verification), 2 usage or parse error, 3 semantic error in an input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Sequence

from . import __version__
from .bodies import classify_delta_zero, delta
from .bounds import (
    BoundsError,
    bridge_lower,
    brunnian_lower,
    distribution_check,
    equality_ledger,
    morimoto_lower,
    netext_lower,
    tunnel_lower,
    tunnel_lower_int,
)
from .decomposition import (
    capital_delta,
    check_delta_identity,
    netchi,
    netext,
    surger,
    validate_decomposition,
)
from .enumeration import EnumSpec, enumerate_bodies, is_saturated
from .factors import FactorKind
from .fileio import (
    FileFormatError,
    decomposition_to_dict,
    load_decomposition_file,
    load_factor_file,
)
from .randomgen import random_decomposition, random_link_decomposition
from .searches import distribution_counterexamples, tunnel_tight_theta_multisets
from .standard import slinky, standard_surfaces
from .tables import TABLE_SPECS, compare, load_table, table_for_genus
from .bodies import VPClass
from .decomposition import link_parity

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_SEMANTIC = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netext",
        description="Combinatorial calculus for surface decompositions of "
        "spatial graphs: exhaustive type enumeration, net-extent arithmetic, "
        "and tunnel/bridge lower bounds over prime factorizations.",
    )
    parser.add_argument("--version", action="version", version=f"netext {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser(
        "enumerate", help="enumerate admissible compressionbody types"
    )
    p_enum.add_argument("--genus", type=int, choices=(0, 1, 2), required=True)
    p_enum.add_argument("--max-punctures", type=int, default=None)
    p_enum.add_argument("--max-neg", type=int, default=4)
    p_enum.add_argument("--max-ghost", type=int, default=4)
    p_enum.add_argument("--no-core-loops", action="store_true")
    p_enum.add_argument(
        "--compare",
        action="store_true",
        help="diff the result against the built-in classification table",
    )
    p_enum.add_argument("--format", choices=("text", "json"), default="text")

    p_bounds = sub.add_parser("bounds", help="lower bounds from a factor file")
    p_bounds.add_argument("file")
    p_bounds.add_argument("--format", choices=("text", "json"), default="text")
    p_bounds.add_argument(
        "--strict",
        action="store_true",
        help="exit 1 when the equality ledger is infeasible",
    )

    p_ledger = sub.add_parser("ledger", help="equality ledger for a factor file")
    p_ledger.add_argument("file")
    p_ledger.add_argument("--format", choices=("text", "json"), default="text")
    p_ledger.add_argument("--strict", action="store_true")

    p_check = sub.add_parser("check", help="validate and measure a decomposition file")
    p_check.add_argument("file")
    p_check.add_argument("--surger", metavar="THIN_ID", default=None)
    p_check.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser(
        "verify-lemmas", help="run the full classification/identity/search suite"
    )
    p_verify.add_argument("--random-count", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=20260810)
    p_verify.add_argument("--max-factors", type=int, default=8)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "enumerate": _cmd_enumerate,
        "bounds": _cmd_bounds,
        "ledger": _cmd_ledger,
        "check": _cmd_check,
        "verify-lemmas": _cmd_verify,
    }[args.command]
    return handler(args)


def entry() -> None:
    raise SystemExit(main())


# --------------------------------------------------------------------------
# enumerate


def _cmd_enumerate(args: argparse.Namespace) -> int:
    table = table_for_genus(args.genus) if args.compare else None
    max_punctures = args.max_punctures
    if max_punctures is None:
        max_punctures = TABLE_SPECS[{0: "sphere", 1: "torus", 2: "genus2"}[args.genus]].max_punctures
    try:
        spec = EnumSpec(
            plus_genus=args.genus,
            max_punctures=max_punctures,
            max_neg_components=args.max_neg,
            max_ghost_arcs=args.max_ghost,
            allow_core_loops=not args.no_core_loops,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = enumerate_bodies(spec)
    grouped = result.by_punctures()
    diff = compare(set(result.bodies), table) if table else None

    if args.format == "json":
        payload = {
            "schema": 1,
            "command": "enumerate",
            "plus_genus": spec.plus_genus,
            "max_punctures": spec.max_punctures,
            "total": len(result),
            "types": {str(p): [str(k) for k in keys] for p, keys in grouped.items()},
        }
        if diff is not None:
            payload["compare"] = {
                "table": diff.table,
                "empty": diff.empty,
                "missing": [e.label for e in diff.missing],
                "unexpected": [str(k) for k in diff.unexpected],
            }
        print(json.dumps(payload, indent=2))
    else:
        print(f"enumeration: plus genus {spec.plus_genus}, punctures <= {spec.max_punctures}")
        for p, keys in grouped.items():
            print(f"  punctures {p}: {len(keys)} type(s)")
            for key in keys:
                print(f"    {key}")
        print(f"total: {len(result)} type(s)")
        if diff is not None:
            print(diff.render())
    if diff is not None and not diff.empty:
        return EXIT_CHECK_FAILED
    return EXIT_OK


# --------------------------------------------------------------------------
# bounds / ledger


def _load_factors(path: str):
    try:
        return load_factor_file(path)
    except FileFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return None


def _semantic_s3_violation(doc) -> str | None:
    kinds = {f.kind for f in doc.factorization.factors}
    if doc.flags.ambient_s3 and FactorKind.HOPF_GRAPH in kinds:
        return "a spatial graph in the 3-sphere never has a Hopf graph factor"
    if doc.flags.ambient_s3 and FactorKind.LENS_CORE in kinds:
        return "a spatial graph in the 3-sphere never has a lens-space core factor"
    return None


def _cmd_bounds(args: argparse.Namespace) -> int:
    doc = _load_factors(args.file)
    if doc is None:
        return EXIT_USAGE
    violation = _semantic_s3_violation(doc)
    if violation:
        print(f"semantic error: {violation}", file=sys.stderr)
        return EXIT_SEMANTIC
    f = doc.factorization
    payload: dict = {"schema": 1, "command": "bounds", "factors": [str(x) for x in f.factors]}
    lines = [f"factors ({f.n}): {f}"]

    if f.graph_factors:
        ne = netext_lower(f)
        payload["netext_lower"] = str(ne.value)
        lines.append(f"net extent lower bound: {ne.value}")
        lines.extend(f"  - {t}" for t in ne.trace)
    else:
        lines.append("net extent lower bound: n/a (no genus-2 graph factor)")

    if f.composite:
        t = tunnel_lower(f)
        payload["tunnel_lower"] = str(t.value)
        payload["tunnel_lower_int"] = tunnel_lower_int(f)
        lines.append(
            f"tunnel lower bound: {t.value} (integer round-up: {tunnel_lower_int(f)})"
        )
        lines.extend(f"  - {x}" for x in t.trace)
        if doc.flags.ambient_s3:
            try:
                b = bridge_lower(f)
            except BoundsError as exc:
                print(f"semantic error: {exc}", file=sys.stderr)
                return EXIT_SEMANTIC
            payload["bridge_lower"] = str(b.value)
            payload["bridge_equality_eligible"] = b.equality_eligible
            lines.append(f"bridge lower bound: {b.value}")
            lines.extend(f"  - {x}" for x in b.trace)
    else:
        lines.append("tunnel/bridge bounds: n/a (single factor; not composite)")

    if doc.flags.brunnian:
        bb = brunnian_lower(f.n)
        payload["brunnian"] = {"tunnel": bb.tunnel, "bridge": str(bb.bridge)}
        lines.append(
            f"brunnian bounds (m={f.n}): tunnel >= {bb.tunnel}; bridge >= {bb.bridge}"
        )
    if doc.flags.m_small_tunnels is not None:
        total = morimoto_lower(list(doc.flags.m_small_tunnels))
        payload["m_small_lower"] = total
        lines.append(
            "m-small additivity bound: tunnel >= "
            f"{' + '.join(map(str, doc.flags.m_small_tunnels))} = {total}"
        )

    strict_failure = False
    if not f.has_generic and f.composite:
        ledger = equality_ledger(f)
        payload["ledger"] = {"lhs": ledger.lhs, "rhs": ledger.rhs, "feasible": ledger.feasible}
        lines.append(f"equality ledger: {ledger}")
        dist = distribution_check(f)
        if dist.applicable:
            assert dist.checks is not None
            payload["distribution"] = list(dist.checks)
            lines.append(
                "distribution checks: "
                + " ".join(
                    f"({i}) {'pass' if ok else 'FAIL'}" for i, ok in enumerate(dist.checks, 1)
                )
            )
        else:
            payload["distribution"] = None
            lines.append("distribution checks: not applicable (ledger infeasible)")
        strict_failure = args.strict and not ledger.feasible
    else:
        lines.append("equality ledger: n/a (needs a composite, all-catalog factor list)")

    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_CHECK_FAILED if strict_failure else EXIT_OK


def _cmd_ledger(args: argparse.Namespace) -> int:
    doc = _load_factors(args.file)
    if doc is None:
        return EXIT_USAGE
    violation = _semantic_s3_violation(doc)
    if violation:
        print(f"semantic error: {violation}", file=sys.stderr)
        return EXIT_SEMANTIC
    f = doc.factorization
    try:
        ledger = equality_ledger(f)
    except BoundsError as exc:
        print(f"semantic error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    dist = distribution_check(f)
    if args.format == "json":
        payload = {
            "schema": 1,
            "command": "ledger",
            "lhs": ledger.lhs,
            "rhs": ledger.rhs,
            "feasible": ledger.feasible,
            "tight": ledger.tight,
            "distribution": list(dist.checks) if dist.applicable and dist.checks else None,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"factors ({f.n}): {f}")
        print(f"equality ledger: {ledger}")
        for t in ledger.trace:
            print(f"  - {t}")
        if dist.applicable and dist.checks is not None:
            print(
                "distribution checks: "
                + " ".join(
                    f"({i}) {'pass' if ok else 'FAIL'}" for i, ok in enumerate(dist.checks, 1)
                )
            )
        else:
            print("distribution checks: not applicable (ledger infeasible)")
    if args.strict and not ledger.feasible:
        return EXIT_CHECK_FAILED
    return EXIT_OK


# --------------------------------------------------------------------------
# check


def _cmd_check(args: argparse.Namespace) -> int:
    try:
        doc = load_decomposition_file(args.file)
    except FileFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    d = doc.decomposition
    report = validate_decomposition(d)
    if not report.ok:
        print("invalid decomposition:", file=sys.stderr)
        for v in report.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_SEMANTIC

    ne, nc = netext(d), netchi(d)
    cd = capital_delta(d)
    identity = check_delta_identity(d)
    body_rows = []
    for i, body in enumerate(d.bodies):
        body_rows.append(
            {
                "id": doc.body_ids[i],
                "delta": str(delta(body)),
                "class": classify_delta_zero(body).value,
            }
        )

    payload: dict = {
        "schema": 1,
        "command": "check",
        "valid": True,
        "netext": str(ne),
        "netchi": nc,
        "capital_delta": str(cd),
        "delta_identity": identity,
        "bodies": body_rows,
    }
    lines = [
        f"decomposition: {len(d.bodies)} bodies, {len(d.thick)} thick, "
        f"{len(d.thin)} thin surface(s)",
        "validation: ok",
        f"net extent: {ne}",
        f"net Euler characteristic: {nc}",
        f"index sum: Delta = {cd} "
        + ("= sum of body indices [ok]" if identity else "!= sum of body indices [FAIL]"),
        "per-body indices:",
    ]
    lines.extend(f"  {row['id']}: delta={row['delta']} class={row['class']}" for row in body_rows)

    if args.surger is not None:
        try:
            idx = doc.thin_index(args.surger)
        except KeyError as exc:
            print(f"semantic error: {exc}", file=sys.stderr)
            return EXIT_SEMANTIC
        try:
            left, right, surgery = surger(d, idx)
        except ValueError as exc:
            print(f"semantic error: {exc}", file=sys.stderr)
            return EXIT_SEMANTIC
        lines.append(f"surgery along {args.surger}: {surgery}")
        for tag, child in (("first", left), ("second", right)):
            ok = validate_decomposition(child).ok
            lines.append(
                f"  {tag} child: {len(child.bodies)} bodies, netext {netext(child)}, "
                f"netchi {netchi(child)}, valid={'yes' if ok else 'NO'}"
            )
        payload["surgery"] = {
            "thin": args.surger,
            "punctures": surgery.punctures,
            "correction": str(surgery.correction),
            "netext_identity": surgery.netext_identity,
            "netchi_identity": surgery.netchi_identity,
            "children": [decomposition_to_dict(left), decomposition_to_dict(right)],
        }

    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_OK


# --------------------------------------------------------------------------
# verify-lemmas


def _cmd_verify(args: argparse.Namespace) -> int:
    rows: list[tuple[str, bool, str]] = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        rows.append((name, ok, detail))

    start = time.perf_counter()
    for name in ("sphere", "torus", "genus2"):
        spec = TABLE_SPECS[name]
        result = enumerate_bodies(spec)
        diff = compare(set(result.bodies), load_table(name))
        record(
            f"{name} classification table",
            diff.empty,
            f"{len(result)} types",
        )
        record(f"{name} search saturation", is_saturated(spec), "bounds +1 add nothing")

    mismatches = 0
    total = 0
    for genus in (0, 1, 2):
        spec = EnumSpec(plus_genus=genus, max_punctures=4)
        result = enumerate_bodies(spec)
        for body in result.bodies.values():
            total += 1
            zero = delta(body) == 0
            classed = classify_delta_zero(body) is not VPClass.NOT_DELTA_ZERO
            if zero != classed:
                mismatches += 1
    record(
        "zero-index classification",
        mismatches == 0,
        f"{total} types checked, {mismatches} mismatches",
    )

    surfaces = standard_surfaces()
    all_valid = all(validate_decomposition(d).ok for d in surfaces.values())
    all_identity = all(check_delta_identity(d) for d in surfaces.values())
    record("standard surfaces valid", all_valid, f"{len(surfaces)} decompositions")
    record("standard surfaces index identity", all_identity)

    crush_ok = True
    for length in (2, 4, 6):
        d = slinky(length)
        for i in range(len(d.thin)):
            _, _, surgery = surger(d, i)
            crush_ok = crush_ok and surgery.netext_identity and surgery.netchi_identity
    record("surgery arithmetic on slinkies", crush_ok, "lengths 2, 4, 6")

    rng = random.Random(args.seed)
    identity_ok = all(
        check_delta_identity(random_decomposition(rng)) for _ in range(args.random_count)
    )
    record(
        "index identity on random decompositions",
        identity_ok,
        f"{args.random_count} samples",
    )
    rng = random.Random(args.seed + 1)
    parity_ok = all(
        link_parity(random_link_decomposition(rng)) for _ in range(args.random_count)
    )
    record("integer net extent for links", parity_ok, f"{args.random_count} samples")

    tight = tunnel_tight_theta_multisets(args.max_factors)
    expected = (
        len(tight) == 1
        and len(tight[0].factors) == 3
        and all(str(x) == "Curve_1_1(graph)" for x in tight[0].factors)
    )
    record(
        "tunnel-tight vertex-sum search",
        expected,
        f"{len(tight)} qualifying multiset(s)",
    )

    bad = distribution_counterexamples(args.max_factors)
    record(
        "distribution sweep",
        not bad,
        f"{len(bad)} counterexample(s) among feasible multisets",
    )

    elapsed = time.perf_counter() - start
    width = max(len(name) for name, _, _ in rows)
    for name, ok, detail in rows:
        status = "PASS" if ok else "FAIL"
        suffix = f"  ({detail})" if detail else ""
        print(f"{status}  {name.ljust(width)}{suffix}")
    failures = sum(1 for _, ok, _ in rows if not ok)
    print(f"{len(rows) - failures}/{len(rows)} checks passed in {elapsed:.1f}s")
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILED


if __name__ == "__main__":
    entry()
