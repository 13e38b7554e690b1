"""Closed orientable surface components and their extent arithmetic.

A surface is recorded by genus and puncture count only; puncture positions
never matter for any quantity computed here.  The ``role`` tag says how a
component sits inside a decomposition (thick side, thin side, piece of the
ambient manifold boundary, or the sphere around an internal graph vertex).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .halfint import HalfInt, hsum


class Role(enum.Enum):
    THICK = "thick"
    THIN = "thin"
    BOUNDARY = "boundary"
    VERTEX_SPHERE = "vertex"


@dataclass(frozen=True, slots=True)
class SurfaceComponent:
    """A closed orientable surface with marked puncture count and role.

    Constructing a component only requires the counts to be non-negative;
    role-dependent puncture rules (vertex spheres need >= 3 punctures, etc.)
    are enforced by the validators, because some operations need to build
    transiently-illegal components in order to report them.
    """

    genus: int
    punctures: int
    role: Role

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        if self.punctures < 0:
            raise ValueError(f"punctures must be >= 0, got {self.punctures}")

    @property
    def is_sphere(self) -> bool:
        return self.genus == 0

    def with_role(self, role: Role) -> SurfaceComponent:
        return SurfaceComponent(self.genus, self.punctures, role)

    def matches(self, other: SurfaceComponent) -> bool:
        """Same underlying surface (genus and punctures), roles ignored."""
        return self.genus == other.genus and self.punctures == other.punctures

    def __str__(self) -> str:
        return f"(g{self.genus},p{self.punctures},{self.role.value})"


def sphere(punctures: int, role: Role = Role.THIN) -> SurfaceComponent:
    return SurfaceComponent(0, punctures, role)


def torus(punctures: int = 0, role: Role = Role.THIN) -> SurfaceComponent:
    return SurfaceComponent(1, punctures, role)


def vertex_sphere(punctures: int) -> SurfaceComponent:
    return SurfaceComponent(0, punctures, Role.VERTEX_SPHERE)


def euler_char(s: SurfaceComponent) -> int:
    """Euler characteristic of the closed component: 2 - 2g."""
    return 2 - 2 * s.genus


def extent(s: SurfaceComponent) -> HalfInt:
    """Half of (-Euler characteristic + punctures), exactly."""
    return HalfInt(2 * s.genus - 2 + s.punctures)


@dataclass(frozen=True, slots=True)
class SurfaceSet:
    """A disjoint union of surface components."""

    components: tuple[SurfaceComponent, ...]

    @classmethod
    def of(cls, components) -> SurfaceSet:
        return cls(tuple(components))

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    @property
    def total_punctures(self) -> int:
        return sum(s.punctures for s in self.components)


def extent_set(ss: SurfaceSet | tuple[SurfaceComponent, ...] | list) -> HalfInt:
    """Extent is additive over disjoint unions; the empty set has extent 0."""
    return hsum(extent(s) for s in ss)


def euler_char_set(ss: SurfaceSet | tuple[SurfaceComponent, ...] | list) -> int:
    return sum(euler_char(s) for s in ss)
