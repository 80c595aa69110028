"""
Catalog of analytic eigenstates and their world-volume conventions.

Lengths are in whatever unit the caller uses; the oscillator's hbar, mass and
frequency enter only through ``A0 = sqrt(hbar / (m omega))``.
"""

import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from .errors import DomainError
from .numerics import box_sine

CLASSICAL = "classical"
PREFACTOR = "normalization-prefactor"

_PI_QUARTER = math.pi ** -0.25


def _positive(name, value):
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise ValueError(f"{name} must be a positive finite number, got {value!r}")


def _quantum(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")


@dataclass(frozen=True)
class Well1D:
    length: float
    n: int

    def __post_init__(self):
        _positive("length", self.length)
        _quantum("n", self.n, 1)

    dimension = 1


@dataclass(frozen=True)
class Well2D:
    """Square box [0, L]^2 in the separable state (n, m)."""

    length: float
    n: int
    m: int

    def __post_init__(self):
        _positive("length", self.length)
        _quantum("n", self.n, 1)
        _quantum("m", self.m, 1)

    dimension = 2


@dataclass(frozen=True)
class Oscillator1D:
    amplitude_scale: float
    n: int

    def __post_init__(self):
        _positive("amplitude_scale", self.amplitude_scale)
        _quantum("n", self.n, 0)

    dimension = 1


@dataclass(frozen=True)
class HydrogenS:
    """Radial s-state (1s or 2s); the coordinate is r >= 0."""

    level: int
    bohr_radius: float

    def __post_init__(self):
        if self.level not in (1, 2) or isinstance(self.level, bool):
            raise ValueError(f"hydrogen level must be 1 or 2, got {self.level!r}")
        _positive("bohr_radius", self.bohr_radius)

    dimension = 1


EigenstateSpec = Union[Well1D, Well2D, Oscillator1D, HydrogenS]
Point = Union[float, Sequence[float]]


@dataclass(frozen=True)
class VolumeConvention:
    """How the world volume Vol(v) is chosen.

    ``classical`` uses the box size, the oscillator's classical amplitude or
    the Bohr-radius ball. ``normalization-prefactor`` takes
    ``scale / prefactor**2`` where ``prefactor`` multiplies the eigenstate.
    """

    mode: str = CLASSICAL
    scale: float = 1.0

    def __post_init__(self):
        if self.mode not in (CLASSICAL, PREFACTOR):
            raise ValueError(f"unknown volume convention {self.mode!r}")
        _positive("scale", self.scale)


def as_point(spec, x) -> Tuple[float, ...]:
    """Normalize ``x`` to a coordinate tuple of the spec's dimension."""
    if isinstance(x, (int, float)):
        coords = (float(x),)
    else:
        coords = tuple(float(c) for c in x)
    if len(coords) != spec.dimension:
        raise DomainError(f"expected a {spec.dimension}-D point, got {x!r}")
    return coords


def _check_box(x, length):
    if not 0.0 <= x <= length:
        raise DomainError(f"x={x} outside the well [0, {length}]")


def _oscillator_function(n, t):
    """Normalized Hermite function phi_n(t) via the stable orthonormal recurrence."""
    prev = 0.0
    cur = _PI_QUARTER * math.exp(-0.5 * t * t)
    for k in range(n):
        prev, cur = cur, math.sqrt(2.0 / (k + 1)) * t * cur - math.sqrt(k / (k + 1)) * prev
    return cur


def psi(spec: EigenstateSpec, x: Point) -> float:
    """Real stationary amplitude of ``spec`` at ``x``."""
    if isinstance(spec, Well1D):
        (x0,) = as_point(spec, x)
        _check_box(x0, spec.length)
        return math.sqrt(2.0 / spec.length) * box_sine(spec.n, x0, spec.length)
    if isinstance(spec, Well2D):
        x0, y0 = as_point(spec, x)
        _check_box(x0, spec.length)
        _check_box(y0, spec.length)
        L = spec.length
        return (2.0 / L) * box_sine(spec.n, x0, L) * box_sine(spec.m, y0, L)
    if isinstance(spec, Oscillator1D):
        (x0,) = as_point(spec, x)
        a0 = spec.amplitude_scale
        return _oscillator_function(spec.n, x0 / a0) / math.sqrt(a0)
    if isinstance(spec, HydrogenS):
        (r,) = as_point(spec, x)
        if r < 0:
            raise DomainError(f"radius must be non-negative, got {r}")
        a0 = spec.bohr_radius
        if spec.level == 1:
            return math.exp(-r / a0) / math.sqrt(math.pi * a0 ** 3)
        return (1.0 - r / (2.0 * a0)) * math.exp(-r / (2.0 * a0)) / math.sqrt(8.0 * math.pi * a0 ** 3)
    raise TypeError(f"not a catalog eigenstate: {spec!r}")


def density(spec: EigenstateSpec, x: Point) -> float:
    p = psi(spec, x)
    return p * p


def classical_amplitude(spec: Oscillator1D) -> float:
    """Turning-point amplitude A_n = A0 sqrt(2n + 1)."""
    if not isinstance(spec, Oscillator1D):
        raise TypeError(f"classical amplitude needs an Oscillator1D, got {type(spec).__name__}")
    return spec.amplitude_scale * math.sqrt(2 * spec.n + 1)


def bohr_level_radius(spec: HydrogenS) -> float:
    return spec.level ** 2 * spec.bohr_radius


def prefactor_squared(spec: EigenstateSpec) -> float:
    """Square of the constant multiplying the eigenstate's functional form."""
    if isinstance(spec, Well1D):
        return 2.0 / spec.length
    if isinstance(spec, Well2D):
        return 4.0 / spec.length ** 2
    if isinstance(spec, Oscillator1D):
        return 1.0 / (2.0 ** spec.n * math.factorial(spec.n) * math.sqrt(math.pi) * spec.amplitude_scale)
    if isinstance(spec, HydrogenS):
        a3 = spec.bohr_radius ** 3
        return 1.0 / (math.pi * a3) if spec.level == 1 else 1.0 / (8.0 * math.pi * a3)
    raise TypeError(f"not a catalog eigenstate: {spec!r}")


def world_volume(spec: EigenstateSpec, convention: VolumeConvention = VolumeConvention()) -> float:
    if convention.mode == PREFACTOR:
        return convention.scale / prefactor_squared(spec)
    if isinstance(spec, Well1D):
        return spec.length
    if isinstance(spec, Well2D):
        return spec.length ** 2
    if isinstance(spec, Oscillator1D):
        # A_n rather than 2 A_n: this is what yields the sqrt(pi) prefactor
        # of the ground-state distance integrand.
        return classical_amplitude(spec)
    if isinstance(spec, HydrogenS):
        return 4.0 * math.pi / 3.0 * bohr_level_radius(spec) ** 3
    raise TypeError(f"not a catalog eigenstate: {spec!r}")


def support(spec: EigenstateSpec) -> Tuple[Tuple[float, float], ...]:
    """Per-axis support interval."""
    if isinstance(spec, Well1D):
        return ((0.0, spec.length),)
    if isinstance(spec, Well2D):
        return ((0.0, spec.length), (0.0, spec.length))
    if isinstance(spec, Oscillator1D):
        return ((-math.inf, math.inf),)
    if isinstance(spec, HydrogenS):
        return ((0.0, math.inf),)
    raise TypeError(f"not a catalog eigenstate: {spec!r}")


def length_scale(spec: EigenstateSpec) -> float:
    """Characteristic length used where a domain has no finite width."""
    if isinstance(spec, (Well1D, Well2D)):
        return spec.length
    if isinstance(spec, Oscillator1D):
        return classical_amplitude(spec)
    return bohr_level_radius(spec)
