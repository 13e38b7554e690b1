"""Prime-factor catalog for composite spatial graph pairs.

A factorization is a multiset of factor records: the named low-complexity
types (trivial graphs, Hopf graph, lens-space core, the (g,b)-curves,
slinkies, propeller knots) plus generic knot/graph factors carrying a
caller-supplied limiting net extent.  All derived counts are recomputed
from the multiset on demand.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .halfint import HALF, HalfInt, ONE, ZERO


class FactorKind(enum.Enum):
    TRIVIAL_THETA = "TrivialTheta"
    TRIVIAL_TWO_BOUQUET = "TrivialTwoBouquet"
    HOPF_GRAPH = "HopfGraph"
    LENS_CORE = "LensCore_1_0"
    CURVE_0_2 = "Curve_0_2"
    CURVE_1_1 = "Curve_1_1"
    CURVE_2_0 = "Curve_2_0"
    HOPF_SLINKY = "HopfSlinky"
    PROPELLER_KNOT = "PropellerKnot"
    GENERIC_KNOT = "GenericKnot"
    GENERIC_GRAPH = "GenericGraph"


_KNOT_ONLY = {FactorKind.LENS_CORE, FactorKind.PROPELLER_KNOT, FactorKind.GENERIC_KNOT}
_GRAPH_ONLY = {
    FactorKind.TRIVIAL_THETA,
    FactorKind.TRIVIAL_TWO_BOUQUET,
    FactorKind.HOPF_GRAPH,
    FactorKind.GENERIC_GRAPH,
}
_FLEXIBLE = {
    FactorKind.CURVE_0_2,
    FactorKind.CURVE_1_1,
    FactorKind.CURVE_2_0,
    FactorKind.HOPF_SLINKY,
}

# Limiting net extent of each catalog type.
_CATALOG_NETEXT = {
    FactorKind.LENS_CORE: ZERO,
    FactorKind.TRIVIAL_THETA: HALF,
    FactorKind.HOPF_GRAPH: HALF,
    FactorKind.TRIVIAL_TWO_BOUQUET: ONE,
    FactorKind.CURVE_0_2: ONE,
    FactorKind.CURVE_1_1: ONE,
    FactorKind.CURVE_2_0: ONE,
    FactorKind.HOPF_SLINKY: ONE,
    FactorKind.PROPELLER_KNOT: ONE,
}


@dataclass(frozen=True, slots=True)
class Factor:
    kind: FactorKind
    is_knot: bool
    length: int | None = None  # slinkies only
    netext_value: HalfInt | None = None  # generic factors only

    def __post_init__(self) -> None:
        if self.kind in _KNOT_ONLY and not self.is_knot:
            raise ValueError(f"{self.kind.value} factors are knots")
        if self.kind in _GRAPH_ONLY and self.is_knot:
            raise ValueError(f"{self.kind.value} factors are genus-2 graphs")
        if self.kind is FactorKind.HOPF_SLINKY:
            if self.length is None or self.length < 2 or self.length % 2 != 0:
                raise ValueError("slinky length must be an even integer >= 2")
        elif self.length is not None:
            raise ValueError("only slinkies carry a length")
        if self.kind in (FactorKind.GENERIC_KNOT, FactorKind.GENERIC_GRAPH):
            if self.netext_value is None or self.netext_value < 0:
                raise ValueError("generic factors need a net extent >= 0")
            if self.kind is FactorKind.GENERIC_KNOT and not self.netext_value.is_integer():
                raise ValueError("a knot's net extent is an integer")
        elif self.netext_value is not None:
            raise ValueError("catalog factors have fixed net extent")

    @property
    def is_genus2_graph(self) -> bool:
        return not self.is_knot

    @property
    def is_generic(self) -> bool:
        return self.kind in (FactorKind.GENERIC_KNOT, FactorKind.GENERIC_GRAPH)

    @property
    def netext_infinity(self) -> HalfInt:
        if self.is_generic:
            assert self.netext_value is not None
            return self.netext_value
        return _CATALOG_NETEXT[self.kind]

    def slinky_consistent_with(self, factor_count: int) -> bool:
        """Length bound for a minimal slinky factorisation with ``factor_count`` pieces."""
        if self.kind is not FactorKind.HOPF_SLINKY or self.length is None:
            return True
        return 2 * factor_count - 2 <= self.length <= 2 * factor_count + 2

    def __str__(self) -> str:
        tag = self.kind.value
        if self.kind is FactorKind.HOPF_SLINKY:
            tag += f"(len={self.length},{'knot' if self.is_knot else 'graph'})"
        elif self.kind in _FLEXIBLE:
            tag += f"({'knot' if self.is_knot else 'graph'})"
        elif self.is_generic:
            tag += f"(netext={self.netext_value})"
        return tag


def trivial_theta() -> Factor:
    return Factor(FactorKind.TRIVIAL_THETA, is_knot=False)


def trivial_two_bouquet() -> Factor:
    return Factor(FactorKind.TRIVIAL_TWO_BOUQUET, is_knot=False)


def hopf_graph() -> Factor:
    return Factor(FactorKind.HOPF_GRAPH, is_knot=False)


def lens_core() -> Factor:
    return Factor(FactorKind.LENS_CORE, is_knot=True)


def curve_0_2(is_knot: bool = False) -> Factor:
    return Factor(FactorKind.CURVE_0_2, is_knot=is_knot)


def curve_1_1(is_knot: bool = False) -> Factor:
    return Factor(FactorKind.CURVE_1_1, is_knot=is_knot)


def curve_2_0(is_knot: bool = False) -> Factor:
    return Factor(FactorKind.CURVE_2_0, is_knot=is_knot)


def hopf_slinky(length: int, is_knot: bool = False) -> Factor:
    return Factor(FactorKind.HOPF_SLINKY, is_knot=is_knot, length=length)


def propeller_knot() -> Factor:
    return Factor(FactorKind.PROPELLER_KNOT, is_knot=True)


def _as_halfint(value: HalfInt | int | str) -> HalfInt:
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, str):
        return HalfInt.parse(value)
    return HalfInt.whole(value)


def generic_knot(netext_value: HalfInt | int | str) -> Factor:
    return Factor(FactorKind.GENERIC_KNOT, is_knot=True, netext_value=_as_halfint(netext_value))


def generic_graph(netext_value: HalfInt | int | str) -> Factor:
    return Factor(FactorKind.GENERIC_GRAPH, is_knot=False, netext_value=_as_halfint(netext_value))


class FactorizationError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Factorization:
    """A multiset of factors; derived counts are always recomputed."""

    factors: tuple[Factor, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise FactorizationError("a factorization needs at least one factor")
        trivial = sum(
            1
            for f in self.factors
            if f.kind in (FactorKind.TRIVIAL_THETA, FactorKind.TRIVIAL_TWO_BOUQUET)
        )
        if trivial > 1:
            raise FactorizationError("at most one trivial factor is allowed")

    @classmethod
    def of(cls, *factors: Factor) -> Factorization:
        return cls(tuple(factors))

    @property
    def n(self) -> int:
        return len(self.factors)

    @property
    def composite(self) -> bool:
        return self.n >= 2

    def count(self, kind: FactorKind, is_knot: bool | None = None) -> int:
        return sum(
            1
            for f in self.factors
            if f.kind is kind and (is_knot is None or f.is_knot == is_knot)
        )

    @property
    def graph_factors(self) -> tuple[Factor, ...]:
        return tuple(f for f in self.factors if f.is_genus2_graph)

    @property
    def knot_factors(self) -> tuple[Factor, ...]:
        return tuple(f for f in self.factors if f.is_knot)

    @property
    def m_tunnel(self) -> int:
        """Genus-2 graph factors, not counting trivial thetas or Hopf graphs."""
        return sum(
            1
            for f in self.graph_factors
            if f.kind not in (FactorKind.TRIVIAL_THETA, FactorKind.HOPF_GRAPH)
        )

    @property
    def m_bridge(self) -> int:
        """Genus-2 graph factors, not counting trivial thetas."""
        return sum(1 for f in self.graph_factors if f.kind is not FactorKind.TRIVIAL_THETA)

    @property
    def k_tunnel(self) -> int:
        """Knot factors that are not lens-space cores."""
        return sum(1 for f in self.knot_factors if f.kind is not FactorKind.LENS_CORE)

    @property
    def k_all(self) -> int:
        return len(self.knot_factors)

    @property
    def p3(self) -> int:
        """Trivalent summing spheres: one fewer than the genus-2 graph factors."""
        return max(0, len(self.graph_factors) - 1)

    @property
    def slinkies(self) -> tuple[Factor, ...]:
        return tuple(f for f in self.factors if f.kind is FactorKind.HOPF_SLINKY)

    @property
    def has_generic(self) -> bool:
        return any(f.is_generic for f in self.factors)

    def __str__(self) -> str:
        return " + ".join(str(f) for f in self.factors)
