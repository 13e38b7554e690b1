"""Lower bounds and the equality ledger over prime factorizations.

Every bound is returned exactly, together with a human-readable derivation
trace.  The ledger tests whether a catalog multiset is compatible with the
tunnel bound being attained; the distribution checks evaluate the three
factor-proportion inequalities that follow from a feasible ledger.
"""

from __future__ import annotations

from dataclasses import dataclass

from .factors import FactorKind, Factorization
from .halfint import HALF, HalfInt, ONE, ZERO, hsum


class BoundsError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class BoundResult:
    value: HalfInt
    trace: tuple[str, ...]

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True, slots=True)
class BridgeBound:
    value: HalfInt
    equality_eligible: bool
    trace: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class BrunnianBound:
    tunnel: int
    bridge: HalfInt


@dataclass(frozen=True, slots=True)
class LedgerReport:
    lhs: int
    rhs: int
    trace: tuple[str, ...]

    @property
    def feasible(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self) -> str:
        verdict = "feasible" if self.feasible else "infeasible"
        if self.tight:
            verdict += " (tight)"
        return f"ledger {self.lhs} <= {self.rhs}: {verdict}"


@dataclass(frozen=True, slots=True)
class DistributionReport:
    applicable: bool
    checks: tuple[bool, bool, bool] | None
    counts: tuple[int, int, int] | None
    thresholds_doubled: tuple[tuple[int, int], ...] | None

    def all_hold(self) -> bool:
        return self.applicable and self.checks is not None and all(self.checks)


@dataclass(frozen=True, slots=True)
class NetextClassification:
    value: HalfInt
    is_knot: bool
    kinds: frozenset[FactorKind]
    notes: tuple[str, ...]


def netext_lower(f: Factorization) -> BoundResult:
    """Additivity lower bound for the net extent of a composite genus-2 pair:
    1/2 plus the graph-factor contributions (each shifted down by 1/2) plus
    the knot-factor contributions."""
    if not f.graph_factors:
        raise BoundsError("the composite pair must have a genus-2 graph factor")
    graph_part = hsum(fac.netext_infinity - HALF for fac in f.graph_factors)
    knot_part = hsum(fac.netext_infinity for fac in f.knot_factors)
    value = HALF + graph_part + knot_part
    trace = (
        f"net extent >= 1/2 + sum over {len(f.graph_factors)} graph factors of "
        f"(netext - 1/2) + sum over {len(f.knot_factors)} knot factors of netext",
        f"graph part {graph_part}, knot part {knot_part} -> {value}",
    )
    return BoundResult(value, trace)


def tunnel_lower(f: Factorization) -> BoundResult:
    """Tunnel-number bound (m-1)/2 + k, with m the genus-2 graph factors other
    than trivial thetas and Hopf graphs and k the knots other than cores."""
    if not f.composite:
        raise BoundsError("the tunnel bound applies to composite pairs")
    m, k = f.m_tunnel, f.k_tunnel
    value = HalfInt(m - 1) + k
    trace = (
        f"vertex-sum tunnel bound: (m - 1)/2 + k with m={m} "
        "(genus-2 graph factors, excluding trivial thetas and Hopf graphs) "
        f"and k={k} (knot factors, excluding lens-space cores)",
        f"tunnel number >= {value}",
    )
    return BoundResult(value, trace)


def tunnel_lower_int(f: Factorization) -> int:
    """Integer round-up of the tunnel bound (tunnel numbers are integers).

    Exposed separately; nothing applies the round-up silently.
    """
    return tunnel_lower(f).value.ceil()


def bridge_lower(f: Factorization) -> BridgeBound:
    """Bridge-number bound (m+3)/2 + k over the 3-sphere, with m the genus-2
    graph factors other than trivial thetas and k all knot factors.  Equality
    forces every factor into {(0,2)-curve, trivial theta, trivial 2-bouquet}."""
    if not f.composite:
        raise BoundsError("the bridge bound applies to composite pairs")
    if any(fac.kind is FactorKind.LENS_CORE for fac in f.factors):
        raise BoundsError("a lens-space core cannot occur in the 3-sphere")
    m, k = f.m_bridge, f.k_all
    value = HalfInt(m + 3) + k
    eligible_kinds = {
        FactorKind.CURVE_0_2,
        FactorKind.TRIVIAL_THETA,
        FactorKind.TRIVIAL_TWO_BOUQUET,
    }
    eligible = all(fac.kind in eligible_kinds for fac in f.factors)
    trace = (
        f"bridge sphere bound: (m + 3)/2 + k with m={m} "
        f"(genus-2 graph factors, excluding trivial thetas) and k={k} (all knots)",
        f"bridge number >= {value}; equality "
        + ("possible (all factors 2-bridge-or-trivial)" if eligible else "ruled out"),
    )
    return BridgeBound(value, eligible, trace)


def brunnian_lower(m: int) -> BrunnianBound:
    """Bounds for a Brunnian theta-curve with ``m`` prime factors: tunnel
    number at least m, bridge number at least m + 3/2."""
    if m < 1:
        raise BoundsError("need at least one factor")
    return BrunnianBound(tunnel=m, bridge=HalfInt(2 * m + 3))


def morimoto_lower(tunnels: list[int]) -> int:
    """Additivity bound when every factor is m-small: the sum of the factor
    tunnel numbers."""
    if any(t < 0 for t in tunnels):
        raise BoundsError("tunnel numbers are >= 0")
    return sum(tunnels)


def _require_catalog(f: Factorization) -> None:
    if f.has_generic:
        raise BoundsError("the equality ledger needs catalog factors only")
    if not f.composite:
        raise BoundsError("the equality ledger applies to composite pairs")


def equality_ledger(f: Factorization) -> LedgerReport:
    """Necessary inequality for the tunnel bound to be attained.

    Left side: weighted count of the expensive factor types, including
    length + 1 per graph slinky and length + 0 per knot slinky.  Right side:
    3 plus credit for trivial 2-bouquets and (0,2)-curves.
    """
    _require_catalog(f)
    n_g = lambda kind: f.count(kind, is_knot=False)
    n_k = lambda kind: f.count(kind, is_knot=True)
    slinky_term = sum(
        (fac.length or 0) + (0 if fac.is_knot else 1) for fac in f.slinkies
    )
    lhs = (
        n_g(FactorKind.CURVE_1_1)
        + 2 * f.count(FactorKind.LENS_CORE)
        + 2 * f.count(FactorKind.HOPF_GRAPH)
        + 3 * n_g(FactorKind.CURVE_2_0)
        + 2 * n_k(FactorKind.CURVE_2_0)
        + 4 * f.count(FactorKind.PROPELLER_KNOT)
        + slinky_term
    )
    rhs = (
        3
        + f.count(FactorKind.TRIVIAL_TWO_BOUQUET)
        + n_g(FactorKind.CURVE_0_2)
        + 2 * n_k(FactorKind.CURVE_0_2)
    )
    trace = (
        "ledger left side: N_g(1,1) + 2N(1,0) + 2N(Hopf) + 3N_g(2,0) + 2N_k(2,0)"
        " + 4N(propeller) + sum over slinkies of (length + [graph])",
        "ledger right side: 3 + N(trivial 2-bouquet) + N_g(0,2) + 2N_k(0,2)",
        f"lhs={lhs}, rhs={rhs}",
    )
    return LedgerReport(lhs, rhs, trace)


def distribution_check(f: Factorization) -> DistributionReport:
    """The three factor-proportion conclusions for a tunnel-tight multiset.

    Returns not-applicable when the ledger is infeasible (the tunnel bound
    cannot be attained, so the hypotheses are vacuous).
    """
    ledger = equality_ledger(f)
    if not ledger.feasible:
        return DistributionReport(False, None, None, None)
    n = f.n

    low_complexity = {
        FactorKind.LENS_CORE,
        FactorKind.CURVE_0_2,
        FactorKind.CURVE_1_1,
        FactorKind.CURVE_2_0,
    }
    count1 = sum(
        1
        for fac in f.factors
        if fac.kind
        in {FactorKind.TRIVIAL_THETA, FactorKind.TRIVIAL_TWO_BOUQUET, FactorKind.HOPF_GRAPH}
        | low_complexity
        or (fac.kind is FactorKind.HOPF_SLINKY and fac.length == 2)
    )
    count2 = sum(
        1
        for fac in f.factors
        if fac.kind
        in {
            FactorKind.TRIVIAL_THETA,
            FactorKind.TRIVIAL_TWO_BOUQUET,
            FactorKind.CURVE_0_2,
            FactorKind.LENS_CORE,
            FactorKind.HOPF_GRAPH,
            FactorKind.CURVE_1_1,
        }
    )
    count3 = sum(
        1
        for fac in f.factors
        if fac.kind
        in {FactorKind.TRIVIAL_THETA, FactorKind.TRIVIAL_TWO_BOUQUET, FactorKind.CURVE_0_2}
        or (fac.kind is FactorKind.CURVE_1_1 and fac.is_knot)
    )
    # count >= (a*n - 3)/b, evaluated exactly as b*count >= a*n - 3.
    checks = (
        6 * count1 >= 4 * n - 3,
        4 * count2 >= 2 * n - 3,
        3 * count3 >= n - 3,
    )
    thresholds = ((4 * n - 3, 6), (2 * n - 3, 4), (n - 3, 3))
    return DistributionReport(True, checks, (count1, count2, count3), thresholds)


_NETEXT_TABLE: dict[tuple[HalfInt, bool], tuple[frozenset[FactorKind], tuple[str, ...]]] = {
    (ZERO, True): (
        frozenset({FactorKind.LENS_CORE}),
        ("the trivial knot also has net extent 0 but never occurs as a factor",),
    ),
    (ZERO, False): (
        frozenset(),
        ("no genus-2 graph has net extent 0",),
    ),
    (HALF, False): (
        frozenset({FactorKind.TRIVIAL_THETA, FactorKind.HOPF_GRAPH}),
        (),
    ),
    (HALF, True): (
        frozenset(),
        ("no knot has net extent 1/2 (knot net extent is an integer)",),
    ),
    (ONE, False): (
        frozenset(
            {
                FactorKind.CURVE_0_2,
                FactorKind.CURVE_1_1,
                FactorKind.CURVE_2_0,
                FactorKind.HOPF_SLINKY,
                FactorKind.TRIVIAL_TWO_BOUQUET,
            }
        ),
        (),
    ),
    (ONE, True): (
        frozenset(
            {
                FactorKind.LENS_CORE,
                FactorKind.CURVE_0_2,
                FactorKind.CURVE_1_1,
                FactorKind.CURVE_2_0,
                FactorKind.PROPELLER_KNOT,
                FactorKind.HOPF_SLINKY,
            }
        ),
        (
            "lens-space cores appear because the knotted-of-low-complexity class "
            "includes them, even though their limiting net extent is 0",
        ),
    ),
}


def classify_by_netext(value: HalfInt, is_knot: bool) -> NetextClassification:
    """Which factor types realize a given net extent value (0, 1/2 or 1)."""
    if isinstance(value, int):
        value = HalfInt.whole(value)
    key = (value, is_knot)
    if key not in _NETEXT_TABLE:
        raise BoundsError(f"net extent {value} is above the classification range")
    kinds, notes = _NETEXT_TABLE[key]
    return NetextClassification(value, is_knot, kinds, notes)
