"""Zero loci, domain decomposition and partial volumes."""

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

from . import models
from .errors import NumericalError
from .models import EigenstateSpec, HydrogenS, Oscillator1D, VolumeConvention, Well1D, Well2D
from .numerics import (QuadratureConfig, QuadratureResult, hermite_roots, integrate,
                       integrate_semi_infinite)

Interval = Tuple[float, float]


@dataclass(frozen=True)
class Domain:
    index: int
    bounds: Tuple[Interval, ...]
    probability_mass: float
    partial_volume: float

    @property
    def widths(self) -> Tuple[float, ...]:
        return tuple(hi - lo for lo, hi in self.bounds)

    def contains(self, point: Sequence[float]) -> bool:
        """Closed-bounds membership; points on a node are caught later by the node guard."""
        return all(lo <= c <= hi for c, (lo, hi) in zip(point, self.bounds))


@dataclass(frozen=True)
class Partition:
    """Domains cut out by the zero locus of a state, with their volumes.

    ``nodes`` holds the interior zeros per axis; ``walls`` holds support
    boundaries where the density also vanishes (the box walls). ``density``
    is the function distances are integrated against. ``degenerate`` flags
    nodes where the density touches zero without the amplitude changing sign
    (only produced for time-dependent states).
    """

    spec: object
    convention: VolumeConvention
    world_volume: float
    nodes: Tuple[Tuple[float, ...], ...]
    walls: Tuple[Tuple[float, ...], ...]
    domains: Tuple[Domain, ...]
    length_scale: float
    density: Callable = field(compare=False, repr=False)
    degenerate: Tuple[bool, ...] = ()

    @property
    def N(self) -> int:
        return len(self.domains)

    @property
    def D(self) -> int:
        return len(self.nodes)


def zero_locus(spec: EigenstateSpec) -> Tuple[Tuple[float, ...], ...]:
    """Sorted interior zeros of the eigenstate, one tuple per axis."""
    if isinstance(spec, Well1D):
        return (_box_nodes(spec.length, spec.n),)
    if isinstance(spec, Well2D):
        return (_box_nodes(spec.length, spec.n), _box_nodes(spec.length, spec.m))
    if isinstance(spec, Oscillator1D):
        if spec.n == 0:
            return ((),)
        return (tuple(spec.amplitude_scale * t for t in hermite_roots(spec.n)),)
    if isinstance(spec, HydrogenS):
        return ((2.0 * spec.bohr_radius,) if spec.level == 2 else (),)
    raise TypeError(f"not a catalog eigenstate: {spec!r}")


def _box_nodes(length, n):
    return tuple(k * length / n for k in range(1, n))


def integrate_interval(f: Callable[[float], float], lo: float, hi: float,
                       config: QuadratureConfig = QuadratureConfig()) -> QuadratureResult:
    """Integrate over an interval whose ends may be infinite."""
    if math.isinf(lo) and math.isinf(hi):
        left = integrate_semi_infinite(lambda x: f(-x), 0.0, config)
        right = integrate_semi_infinite(f, 0.0, config)
        status = left.status if left.status != "converged" else right.status
        return QuadratureResult(left.value + right.value,
                                left.error_estimate + right.error_estimate, status)
    if math.isinf(hi):
        return integrate_semi_infinite(f, lo, config)
    if math.isinf(lo):
        return integrate_semi_infinite(lambda x: f(-x), -hi, config)
    return integrate(f, lo, hi, config)


def _checked(result: QuadratureResult, what: str) -> float:
    if not result.converged:
        raise NumericalError(f"{what}: quadrature ended with status {result.status}")
    return result.value


def interval_masses(line_density: Callable[[float], float], edges: Sequence[float],
                    config: QuadratureConfig = QuadratureConfig()) -> Tuple[float, ...]:
    """Probability mass of a 1-D density between consecutive ``edges``."""
    return tuple(
        _checked(integrate_interval(line_density, lo, hi, config), f"mass on [{lo}, {hi}]")
        for lo, hi in zip(edges[:-1], edges[1:])
    )


def partition_1d(spec, convention, volume, line_density, mass_density, lo, hi,
                 nodes, walls, scale, config=QuadratureConfig(), degenerate=()) -> Partition:
    """Assemble a one-axis partition from a density and its sorted interior nodes."""
    edges = (lo,) + tuple(nodes) + (hi,)
    masses = interval_masses(mass_density, edges, config)
    domains = tuple(
        Domain(i, ((edges[i], edges[i + 1]),), mass, volume * mass)
        for i, mass in enumerate(masses)
    )
    return Partition(spec, convention, volume, (tuple(nodes),), (tuple(walls),), domains,
                     scale, line_density, tuple(degenerate))


def build_partition(spec: EigenstateSpec, convention: VolumeConvention = VolumeConvention(),
                    config: QuadratureConfig = QuadratureConfig()) -> Partition:
    """Split the support of ``spec`` into domains and attach Vol(v_i) = Vol(v) * mass_i."""
    volume = models.world_volume(spec, convention)
    nodes = zero_locus(spec)
    scale = models.length_scale(spec)
    dens = lambda x: models.density(spec, x)

    if isinstance(spec, Well2D):
        L = spec.length
        axis_masses = [
            interval_masses(lambda x, k=k: models.density(Well1D(L, k), x),
                            (0.0,) + axis_nodes + (L,), config)
            for k, axis_nodes in zip((spec.n, spec.m), nodes)
        ]
        x_edges = (0.0,) + nodes[0] + (L,)
        y_edges = (0.0,) + nodes[1] + (L,)
        domains = []
        # row-major: x-cell outer, y-cell inner
        for idx, (i, j) in enumerate(itertools.product(range(spec.n), range(spec.m))):
            mass = axis_masses[0][i] * axis_masses[1][j]
            bounds = ((x_edges[i], x_edges[i + 1]), (y_edges[j], y_edges[j + 1]))
            domains.append(Domain(idx, bounds, mass, volume * mass))
        return Partition(spec, convention, volume, nodes, ((0.0, L), (0.0, L)),
                         tuple(domains), scale, dens)

    ((lo, hi),) = models.support(spec)
    if isinstance(spec, Well1D):
        walls = (lo, hi)
    else:
        walls = ()
    if isinstance(spec, HydrogenS):
        mass_density = lambda r: 4.0 * math.pi * r * r * models.density(spec, r)
    else:
        mass_density = dens
    return partition_1d(spec, convention, volume, dens, mass_density, lo, hi,
                        nodes[0], walls, scale, config)


def locate(partition: Partition, point: Sequence[float]) -> Optional[int]:
    """Index of the first domain whose closed bounds contain ``point``."""
    for domain in partition.domains:
        if domain.contains(point):
            return domain.index
    return None
