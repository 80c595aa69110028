"""
Superpositions of 1-D box eigenstates and their time-dependent metric.

The density |sum_k c_k exp(-i E_k t) psi_k(x)|^2 vanishes only where the real
and imaginary parts of the amplitude vanish together. Each snapshot rotates
the amplitude by the global phase that makes it as real as possible, scans
the real part for sign changes, and keeps a root only if the imaginary
remainder also vanishes there. Generic mixtures therefore have nodes only at
the instants when the relative phases line up.
"""

import cmath
import math
from dataclasses import dataclass
from functools import reduce
from typing import List, Sequence, Tuple

from scipy.optimize import minimize_scalar

from . import models
from .errors import DomainError, TopologyChangeError
from .metric import DistanceResult, DomainPointSet, distance
from .models import VolumeConvention, Well1D
from .numerics import QuadratureConfig, box_sine, find_root
from .partition import Partition, build_partition, partition_1d

GRID_PER_QUANTUM = 64
NODE_TOL = 1e-9


@dataclass(frozen=True)
class SuperpositionState:
    length: float
    components: Tuple[Tuple[int, complex], ...]
    energy_scale: float = 1.0

    def __post_init__(self):
        comps = tuple((int(n), complex(c)) for n, c in self.components)
        object.__setattr__(self, "components", comps)
        Well1D(self.length, 1)
        if self.energy_scale <= 0:
            raise ValueError("energy_scale must be positive")
        if len(comps) < 2:
            raise ValueError("a superposition needs at least two components")
        ns = [n for n, _ in comps]
        if min(ns) < 1 or len(set(ns)) != len(ns):
            raise ValueError(f"quantum numbers must be distinct positive integers, got {ns}")
        norm = math.fsum(abs(c) ** 2 for _, c in comps)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"coefficients must satisfy sum |c|^2 = 1, got {norm!r}")

    @classmethod
    def equal_mix(cls, length, ns, energy_scale=1.0):
        c = 1.0 / math.sqrt(len(ns))
        return cls(length, tuple((n, c) for n in ns), energy_scale)

    def energy(self, n):
        return self.energy_scale * n * n

    @property
    def active(self):
        return tuple((n, c) for n, c in self.components if c != 0)

    @property
    def stationary(self):
        return len(self.active) == 1


def _phases(state, t):
    return [(n, c * cmath.exp(-1j * state.energy(n) * t)) for n, c in state.active]


def amplitude(state: SuperpositionState, x: float, t: float) -> complex:
    L = state.length
    if not 0.0 <= x <= L:
        raise DomainError(f"x={x} outside the well [0, {L}]")
    pref = math.sqrt(2.0 / L)
    return sum(z * pref * box_sine(n, x, L) for n, z in _phases(state, t))


def density_at(state: SuperpositionState, x: float, t: float) -> float:
    if state.stationary:
        n, _ = state.active[0]
        return models.density(Well1D(state.length, n), x)
    z = amplitude(state, x, t)
    return z.real * z.real + z.imag * z.imag


def beat_period(state: SuperpositionState) -> float:
    """Recurrence time of the density: 2 pi / (energy_scale * gcd of n_j^2 - n_k^2)."""
    ns = [n for n, _ in state.active]
    if len(ns) < 2:
        return math.inf
    gaps = [abs(n * n - ns[0] * ns[0]) for n in ns[1:]]
    return 2.0 * math.pi / (state.energy_scale * reduce(math.gcd, gaps))


def _resolved(state, t):
    """Real and imaginary parts of the phase-rotated amplitude, as callables."""
    zs = _phases(state, t)
    theta = 0.5 * cmath.phase(sum(z * z for _, z in zs))
    rot = cmath.exp(-1j * theta)
    coeffs = [(n, z * rot) for n, z in zs]
    L = state.length
    pref = math.sqrt(2.0 / L)

    def part(x, imag):
        return sum((z.imag if imag else z.real) * pref * box_sine(n, x, L)
                   for n, z in coeffs)

    scale = pref * sum(abs(z) for _, z in zs)
    return (lambda x: part(x, False)), (lambda x: part(x, True)), scale


def find_nodes(state: SuperpositionState, t: float) -> List[Tuple[float, bool]]:
    """Interior zeros of the density at time ``t`` as (position, degenerate) pairs."""
    L = state.length
    if state.stationary:
        n, _ = state.active[0]
        return [(k * L / n, False) for k in range(1, n)]
    real, imag, scale = _resolved(state, t)
    nmax = max(n for n, _ in state.active)
    m = GRID_PER_QUANTUM * nmax
    xs = [L * k / m for k in range(1, m)]
    rs = [real(x) for x in xs]
    sign = lambda v: (v > 0) - (v < 0)
    found = []
    for k in range(len(xs)):
        r0 = rs[k]
        left = rs[k - 1] if k > 0 else None
        right = rs[k + 1] if k + 1 < len(xs) else None
        if r0 == 0.0:
            if abs(imag(xs[k])) <= NODE_TOL * scale:
                crossing = left is not None and right is not None and sign(left) * sign(right) < 0
                found.append((xs[k], not crossing))
        elif right is not None and right != 0.0 and sign(r0) != sign(right):
            x0 = find_root(real, xs[k], xs[k + 1], tol=1e-15)
            if abs(imag(x0)) <= NODE_TOL * scale:
                found.append((x0, False))
        elif (left is not None and right is not None and left != 0.0 and right != 0.0
              and sign(left) == sign(r0) == sign(right)
              and abs(r0) < abs(left) and abs(r0) <= abs(right)):
            # |real| dips without changing sign: possible touching zero.
            # Strict on the left so a symmetric pair of samples searches once.
            opt = minimize_scalar(lambda x: real(x) ** 2 + imag(x) ** 2,
                                  bounds=(xs[k - 1], xs[k + 1]), method="bounded",
                                  options={"xatol": 1e-13})
            if math.sqrt(max(opt.fun, 0.0)) <= 1e-7 * scale:
                found.append((float(opt.x), True))
    found.sort()
    return found


def snapshot_partition(state: SuperpositionState, t: float,
                       convention: VolumeConvention = VolumeConvention(),
                       config: QuadratureConfig = QuadratureConfig()) -> Partition:
    """Partition of the box by the instantaneous zeros of the density."""
    L = state.length
    if state.stationary:
        n, _ = state.active[0]
        return build_partition(Well1D(L, n), convention, config)
    nodes = find_nodes(state, t)
    volume = models.world_volume(Well1D(L, 1), convention)
    dens = lambda x: density_at(state, x, t)
    return partition_1d((state, t), convention, volume, dens, dens, 0.0, L,
                        [x for x, _ in nodes], (0.0, L), L, config,
                        degenerate=[d for _, d in nodes])


def distance_at(state: SuperpositionState, t: float, A: Sequence, B: Sequence,
                config: QuadratureConfig = QuadratureConfig(),
                convention: VolumeConvention = VolumeConvention()) -> DistanceResult:
    """Distance between per-domain point lists measured against the density at ``t``."""
    part = snapshot_partition(state, t, convention, config)
    sets = []
    for pts in (A, B):
        if len(pts) != part.N:
            raise TopologyChangeError(
                f"t={t}: state has {part.N} domains but {len(pts)} points were given", t)
        for i, p in enumerate(pts):
            if not part.domains[i].contains((float(p),)):
                raise TopologyChangeError(
                    f"t={t}: point {p} left domain {i} {part.domains[i].bounds[0]}", t, i)
        sets.append(DomainPointSet(part, pts))
    return distance(part, sets[0], sets[1], config)


@dataclass(frozen=True)
class TraceRow:
    time: float
    nodes: Tuple[float, ...]
    degenerate: Tuple[bool, ...]
    n_domains: int
    result: DistanceResult


def pair_distance(part: Partition, a: float, b: float,
                  config: QuadratureConfig = QuadratureConfig()) -> DistanceResult:
    """Distance for a single point pair, other domains held fixed at their midpoints.

    A pair separated by a node is infinitely far apart.
    """
    sa = _containing(part, a)
    sb = _containing(part, b)
    if not sa or not sb:
        raise DomainError(f"points {a}, {b} must lie inside the support")
    common = sa & sb
    if not common:
        return DistanceResult.diverged(sorted(sa | sb))
    ia = min(common)
    rest = [0.5 * (lo + hi) for ((lo, hi),) in (d.bounds for d in part.domains)]
    A = list(rest)
    B = list(rest)
    A[ia] = a
    B[ia] = b
    return distance(part, DomainPointSet(part, A), DomainPointSet(part, B), config)


def _containing(part: Partition, x: float):
    return {d.index for d in part.domains if d.contains((x,))}


def trace(state: SuperpositionState, times: Sequence[float], a: float, b: float,
          config: QuadratureConfig = QuadratureConfig(),
          convention: VolumeConvention = VolumeConvention()) -> List[TraceRow]:
    """Nodes and pair distance at each sampled time."""
    rows = []
    for t in times:
        part = snapshot_partition(state, t, convention, config)
        nodes = part.nodes[0]
        degenerate = part.degenerate or (False,) * len(nodes)
        rows.append(TraceRow(t, nodes, degenerate, part.N,
                             pair_distance(part, a, b, config)))
    return rows
