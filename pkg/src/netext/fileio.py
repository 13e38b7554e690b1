"""JSON schemas: factor lists, bodies, and whole decompositions.

Half-integers travel as strings ("3/2", "2") so nothing ever becomes a
float.  Decomposition files name every body, slot and glued surface; the
loaders hand back the name maps so reports can speak the file's language.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .bodies import GhostArcGraph, VpBody
from .decomposition import (
    Ambient,
    Decomposition,
    GraphKind,
    ThickGluing,
    ThinGluing,
)
from .factors import Factor, FactorKind, Factorization
from .halfint import HalfInt
from .surfaces import Role, SurfaceComponent, SurfaceSet

SCHEMA_VERSION = 1

_ROLE_NAMES = {
    Role.THIN: "thin",
    Role.BOUNDARY: "boundary",
    Role.VERTEX_SPHERE: "vertex",
}
_ROLE_BY_NAME = {v: k for k, v in _ROLE_NAMES.items()}


class FileFormatError(ValueError):
    """Structurally bad input: wrong types, unknown names, missing fields."""


def _need(mapping: dict, key: str, where: str) -> Any:
    if not isinstance(mapping, dict) or key not in mapping:
        raise FileFormatError(f"{where}: missing field {key!r}")
    return mapping[key]


def _int_field(mapping: dict, key: str, where: str, default: int | None = None) -> int:
    if key not in mapping and default is not None:
        return default
    value = _need(mapping, key, where)
    if not isinstance(value, int) or isinstance(value, bool):
        raise FileFormatError(f"{where}: field {key!r} must be an integer")
    return value


# --------------------------------------------------------------------------
# factor files


@dataclass(frozen=True, slots=True)
class FactorFlags:
    ambient_s3: bool = False
    brunnian: bool = False
    m_small_tunnels: tuple[int, ...] | None = None


@dataclass(frozen=True, slots=True)
class FactorDocument:
    factorization: Factorization
    flags: FactorFlags


def parse_factor(entry: dict, where: str = "factor") -> Factor:
    kind_name = _need(entry, "kind", where)
    try:
        kind = FactorKind(kind_name)
    except ValueError:
        raise FileFormatError(f"{where}: unknown factor kind {kind_name!r}") from None
    is_knot = entry.get("is_knot")
    if is_knot is None:
        is_knot = kind in (
            FactorKind.LENS_CORE,
            FactorKind.PROPELLER_KNOT,
            FactorKind.GENERIC_KNOT,
        )
    if not isinstance(is_knot, bool):
        raise FileFormatError(f"{where}: is_knot must be a boolean")
    length = entry.get("length")
    if length is not None and (not isinstance(length, int) or isinstance(length, bool)):
        raise FileFormatError(f"{where}: length must be an integer")
    netext_value = None
    if "netext" in entry:
        raw = entry["netext"]
        if not isinstance(raw, str):
            raise FileFormatError(f"{where}: netext must be a half-integer string")
        try:
            netext_value = HalfInt.parse(raw)
        except ValueError as exc:
            raise FileFormatError(f"{where}: {exc}") from None
    try:
        return Factor(kind, is_knot=is_knot, length=length, netext_value=netext_value)
    except ValueError as exc:
        raise FileFormatError(f"{where}: {exc}") from None


def factor_to_dict(f: Factor) -> dict:
    entry: dict[str, Any] = {"kind": f.kind.value, "is_knot": f.is_knot}
    if f.length is not None:
        entry["length"] = f.length
    if f.netext_value is not None:
        entry["netext"] = str(f.netext_value)
    return entry


def parse_factor_document(data: dict) -> FactorDocument:
    raw_factors = _need(data, "factors", "factor file")
    if not isinstance(raw_factors, list) or not raw_factors:
        raise FileFormatError("factor file: 'factors' must be a non-empty list")
    factors = tuple(
        parse_factor(entry, where=f"factor #{i}") for i, entry in enumerate(raw_factors)
    )
    raw_flags = data.get("flags", {})
    if not isinstance(raw_flags, dict):
        raise FileFormatError("factor file: 'flags' must be an object")
    tunnels = raw_flags.get("m_small_tunnels")
    if tunnels is not None:
        if not isinstance(tunnels, list) or not all(
            isinstance(t, int) and not isinstance(t, bool) for t in tunnels
        ):
            raise FileFormatError("factor file: m_small_tunnels must be a list of integers")
        tunnels = tuple(tunnels)
    flags = FactorFlags(
        ambient_s3=bool(raw_flags.get("ambient_s3", False)),
        brunnian=bool(raw_flags.get("brunnian", False)),
        m_small_tunnels=tunnels,
    )
    try:
        factorization = Factorization(factors)
    except ValueError as exc:
        raise FileFormatError(f"factor file: {exc}") from None
    return FactorDocument(factorization, flags)


def load_factor_file(path: str | Path) -> FactorDocument:
    return parse_factor_document(_load_json(path))


def factor_document_to_dict(doc: FactorDocument) -> dict:
    flags: dict[str, Any] = {}
    if doc.flags.ambient_s3:
        flags["ambient_s3"] = True
    if doc.flags.brunnian:
        flags["brunnian"] = True
    if doc.flags.m_small_tunnels is not None:
        flags["m_small_tunnels"] = list(doc.flags.m_small_tunnels)
    return {
        "schema": SCHEMA_VERSION,
        "factors": [factor_to_dict(f) for f in doc.factorization.factors],
        "flags": flags,
    }


# --------------------------------------------------------------------------
# bodies


def body_to_dict(body: VpBody, neg_ids: list[str] | None = None) -> dict:
    ids = neg_ids or [f"s{i}" for i in range(len(body.neg))]
    if len(ids) != len(body.neg):
        raise ValueError("one id per negative component")
    entry: dict[str, Any] = {
        "plus": {"genus": body.plus.genus, "punctures": body.plus.punctures},
        "neg": [
            {
                "id": ids[i],
                "genus": comp.genus,
                "punctures": comp.punctures,
                "role": _ROLE_NAMES[comp.role],
            }
            for i, comp in enumerate(body.neg)
        ],
        "ghost_arcs": [[ids[a], ids[b]] for a, b in body.gag.edges],
        "vertical_arcs": {ids[i]: v for i, v in enumerate(body.vertical) if v},
        "bridge_arcs": body.bridge_arcs,
        "core_loops": body.core_loops,
    }
    return entry


def parse_body(entry: dict, where: str = "body") -> tuple[VpBody, list[str]]:
    plus_raw = _need(entry, "plus", where)
    plus = SurfaceComponent(
        _int_field(plus_raw, "genus", f"{where}.plus"),
        _int_field(plus_raw, "punctures", f"{where}.plus"),
        Role.THICK,
    )
    neg_raw = entry.get("neg", [])
    if not isinstance(neg_raw, list):
        raise FileFormatError(f"{where}: 'neg' must be a list")
    ids: list[str] = []
    comps: list[SurfaceComponent] = []
    for i, comp_raw in enumerate(neg_raw):
        comp_where = f"{where}.neg[{i}]"
        name = comp_raw.get("id", f"s{i}")
        if not isinstance(name, str):
            raise FileFormatError(f"{comp_where}: id must be a string")
        if name in ids:
            raise FileFormatError(f"{comp_where}: duplicate id {name!r}")
        role_name = _need(comp_raw, "role", comp_where)
        if role_name not in _ROLE_BY_NAME:
            raise FileFormatError(f"{comp_where}: unknown role {role_name!r}")
        ids.append(name)
        comps.append(
            SurfaceComponent(
                _int_field(comp_raw, "genus", comp_where),
                _int_field(comp_raw, "punctures", comp_where),
                _ROLE_BY_NAME[role_name],
            )
        )
    index = {name: i for i, name in enumerate(ids)}
    edges = []
    for j, pair in enumerate(entry.get("ghost_arcs", [])):
        if not isinstance(pair, list) or len(pair) != 2:
            raise FileFormatError(f"{where}.ghost_arcs[{j}]: expected a pair of ids")
        try:
            edges.append((index[pair[0]], index[pair[1]]))
        except KeyError as missing:
            raise FileFormatError(
                f"{where}.ghost_arcs[{j}]: unknown component id {missing}"
            ) from None
    vertical = [0] * len(ids)
    raw_vertical = entry.get("vertical_arcs", {})
    if not isinstance(raw_vertical, dict):
        raise FileFormatError(f"{where}: vertical_arcs must be an object")
    for name, count in raw_vertical.items():
        if name not in index:
            raise FileFormatError(f"{where}.vertical_arcs: unknown component id {name!r}")
        if not isinstance(count, int) or isinstance(count, bool) or count < 0:
            raise FileFormatError(f"{where}.vertical_arcs[{name}]: bad count")
        vertical[index[name]] = count
    try:
        body = VpBody(
            plus,
            GhostArcGraph(tuple(comps), tuple(edges)),
            tuple(vertical),
            _int_field(entry, "bridge_arcs", where, default=0),
            _int_field(entry, "core_loops", where, default=0),
        )
    except ValueError as exc:
        raise FileFormatError(f"{where}: {exc}") from None
    return body, ids


# --------------------------------------------------------------------------
# decompositions


@dataclass(slots=True)
class DecompositionDocument:
    decomposition: Decomposition
    body_ids: list[str] = field(default_factory=list)
    slot_ids: list[list[str]] = field(default_factory=list)
    thick_ids: list[str] = field(default_factory=list)
    thin_ids: list[str] = field(default_factory=list)

    def thin_index(self, name: str) -> int:
        try:
            return self.thin_ids.index(name)
        except ValueError:
            raise KeyError(f"no thin surface named {name!r}") from None


def decomposition_to_dict(d: Decomposition, doc: DecompositionDocument | None = None) -> dict:
    body_ids = doc.body_ids if doc else [f"B{i}" for i in range(len(d.bodies))]
    slot_ids = doc.slot_ids if doc else [
        [f"s{i}" for i in range(len(b.neg))] for b in d.bodies
    ]
    thick_ids = doc.thick_ids if doc else [f"H{i}" for i in range(len(d.thick))]
    thin_ids = doc.thin_ids if doc else [f"F{i}" for i in range(len(d.thin))]
    return {
        "schema": SCHEMA_VERSION,
        "bodies": [
            {"id": body_ids[i], **body_to_dict(b, slot_ids[i])}
            for i, b in enumerate(d.bodies)
        ],
        "thick_glue": [
            {
                "surface": thick_ids[i],
                "bodies": [body_ids[g.left], body_ids[g.right]],
                "into": body_ids[g.into],
            }
            for i, g in enumerate(d.thick)
        ],
        "thin_glue": [
            {
                "surface": thin_ids[i],
                "ends": [
                    [body_ids[g.left], slot_ids[g.left][g.left_slot]],
                    [body_ids[g.right], slot_ids[g.right][g.right_slot]],
                ],
                "into": body_ids[g.into],
            }
            for i, g in enumerate(d.thin)
        ],
        "ambient": {
            "closed": d.ambient.closed,
            "boundary": [
                {"genus": c.genus, "punctures": c.punctures}
                for c in d.ambient.boundary
            ],
            "graph_euler_char": d.ambient.graph_euler_char,
            "graph_kind": d.ambient.kind.value,
        },
    }


def parse_decomposition_document(data: dict) -> DecompositionDocument:
    raw_bodies = _need(data, "bodies", "decomposition file")
    if not isinstance(raw_bodies, list) or not raw_bodies:
        raise FileFormatError("decomposition file: 'bodies' must be a non-empty list")
    bodies: list[VpBody] = []
    body_ids: list[str] = []
    slot_ids: list[list[str]] = []
    for i, entry in enumerate(raw_bodies):
        name = entry.get("id", f"B{i}")
        if not isinstance(name, str) or name in body_ids:
            raise FileFormatError(f"body #{i}: bad or duplicate id {name!r}")
        body, ids = parse_body(entry, where=f"body {name}")
        bodies.append(body)
        body_ids.append(name)
        slot_ids.append(ids)
    body_index = {name: i for i, name in enumerate(body_ids)}

    def body_ref(name: Any, where: str) -> int:
        if not isinstance(name, str) or name not in body_index:
            raise FileFormatError(f"{where}: unknown body {name!r}")
        return body_index[name]

    thick: list[ThickGluing] = []
    thick_ids: list[str] = []
    for i, entry in enumerate(data.get("thick_glue", [])):
        where = f"thick_glue[{i}]"
        pair = _need(entry, "bodies", where)
        if not isinstance(pair, list) or len(pair) != 2:
            raise FileFormatError(f"{where}: 'bodies' must list two body ids")
        left, right = (body_ref(x, where) for x in pair)
        into = body_ref(_need(entry, "into", where), where)
        thick.append(ThickGluing(left, right, into))
        thick_ids.append(str(entry.get("surface", f"H{i}")))

    thin: list[ThinGluing] = []
    thin_ids: list[str] = []
    for i, entry in enumerate(data.get("thin_glue", [])):
        where = f"thin_glue[{i}]"
        ends = _need(entry, "ends", where)
        if (
            not isinstance(ends, list)
            or len(ends) != 2
            or not all(isinstance(e, list) and len(e) == 2 for e in ends)
        ):
            raise FileFormatError(f"{where}: 'ends' must list two [body, slot] pairs")
        (lb, ls), (rb, rs) = ends
        left = body_ref(lb, where)
        right = body_ref(rb, where)
        try:
            left_slot = slot_ids[left].index(ls)
            right_slot = slot_ids[right].index(rs)
        except ValueError:
            raise FileFormatError(f"{where}: unknown slot id") from None
        into = body_ref(_need(entry, "into", where), where)
        thin.append(ThinGluing(left, left_slot, right, right_slot, into))
        thin_ids.append(str(entry.get("surface", f"F{i}")))

    raw_ambient = _need(data, "ambient", "decomposition file")
    kind_name = _need(raw_ambient, "graph_kind", "ambient")
    try:
        kind = GraphKind(kind_name)
    except ValueError:
        raise FileFormatError(f"ambient: unknown graph_kind {kind_name!r}") from None
    boundary = []
    for i, comp_raw in enumerate(raw_ambient.get("boundary", [])):
        boundary.append(
            SurfaceComponent(
                _int_field(comp_raw, "genus", f"ambient.boundary[{i}]"),
                _int_field(comp_raw, "punctures", f"ambient.boundary[{i}]"),
                Role.BOUNDARY,
            )
        )
    ambient = Ambient(
        closed=bool(raw_ambient.get("closed", not boundary)),
        boundary=SurfaceSet(tuple(boundary)),
        graph_euler_char=_int_field(raw_ambient, "graph_euler_char", "ambient"),
        kind=kind,
    )
    decomposition = Decomposition(tuple(bodies), tuple(thick), tuple(thin), ambient)
    return DecompositionDocument(decomposition, body_ids, slot_ids, thick_ids, thin_ids)


def load_decomposition_file(path: str | Path) -> DecompositionDocument:
    return parse_decomposition_document(_load_json(path))


def _load_json(path: str | Path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise FileFormatError(f"{path}: top level must be a JSON object")
    return data


def dump_json(data: dict, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(data, handle, indent=2, sort_keys=False)
        handle.write("\n")
