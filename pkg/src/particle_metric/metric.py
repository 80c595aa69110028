"""
Distances in the particle world.

Within one domain the distance is the straight-segment integral of the
reciprocal density divided by the domain's partial volume. Across domains the
per-domain distances combine as a Euclidean norm.
"""

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from . import models
from .errors import DomainError, NumericalError
from .models import EigenstateSpec, VolumeConvention
from .numerics import DIVERGENT, QuadratureConfig, erfi, integrate
from .partition import Partition

NODE_GUARD = 1e-9

FINITE = "finite"


@dataclass(frozen=True)
class DistanceResult:
    kind: str
    value: float
    error_estimate: float
    divergent_domains: Tuple[int, ...] = ()
    components: Tuple[float, ...] = ()

    @property
    def divergent(self) -> bool:
        return self.kind == DIVERGENT

    @classmethod
    def diverged(cls, domains, components=()):
        return cls(DIVERGENT, math.inf, math.inf, tuple(domains), tuple(components))


@dataclass(frozen=True)
class DomainPointSet:
    """One point per domain: the particle's location in its own world."""

    partition: Partition
    points: Tuple[Tuple[float, ...], ...]

    def __init__(self, partition: Partition, points):
        pts = tuple(_as_point(partition, p) for p in points)
        if len(pts) != partition.N:
            raise ValueError(f"need exactly {partition.N} points (one per domain), got {len(pts)}")
        for i, p in enumerate(pts):
            if not partition.domains[i].contains(p):
                raise DomainError(f"point {p} is not inside domain {i} {partition.domains[i].bounds}")
        object.__setattr__(self, "partition", partition)
        object.__setattr__(self, "points", pts)

    def moved(self, index: int, point) -> "DomainPointSet":
        pts = list(self.points)
        pts[index] = point
        return DomainPointSet(self.partition, pts)


def _as_point(partition, p):
    if isinstance(p, (int, float)):
        p = (float(p),)
    else:
        p = tuple(float(c) for c in p)
    if len(p) != partition.D:
        raise DomainError(f"expected a {partition.D}-D point, got {p!r}")
    return p


def integrand(spec: EigenstateSpec, convention: VolumeConvention, x) -> float:
    """Saturated local gradient bound 1 / (Vol(v) |psi(x)|^2); +inf on a node."""
    rho = models.density(spec, x)
    if rho == 0.0:
        return math.inf
    return 1.0 / (models.world_volume(spec, convention) * rho)


def _near_node(partition: Partition, index: int, point) -> bool:
    domain = partition.domains[index]
    for axis, c in enumerate(point):
        width = domain.widths[axis]
        if not math.isfinite(width):
            width = partition.length_scale
        guard = NODE_GUARD * width
        for z in partition.nodes[axis] + partition.walls[axis]:
            if abs(c - z) < guard:
                return True
    return False


def distance_in_domain(partition: Partition, domain_index: int, a, b,
                       config: QuadratureConfig = QuadratureConfig()) -> DistanceResult:
    """Distance between two points of one domain, normalized by Vol(v_i)."""
    if not 0 <= domain_index < partition.N:
        raise IndexError(f"domain index {domain_index} out of range for N={partition.N}")
    a = _as_point(partition, a)
    b = _as_point(partition, b)
    domain = partition.domains[domain_index]
    for p in (a, b):
        if not domain.contains(p):
            raise DomainError(f"point {p} is not inside domain {domain_index} {domain.bounds}")
    if a == b:
        return DistanceResult(FINITE, 0.0, 0.0, components=(0.0,))
    # the guard alone decides endpoint divergence; large finite samples are integrated
    if _near_node(partition, domain_index, a) or _near_node(partition, domain_index, b):
        return DistanceResult.diverged([domain_index])
    # canonical order makes the result exactly symmetric
    a, b = min(a, b), max(a, b)
    volume = domain.partial_volume
    rho = partition.density

    if partition.D == 1:
        f = lambda x: _reciprocal(rho(x), volume)
        result = integrate(f, a[0], b[0], config, sample_cap=math.inf)
    else:
        diff = [bi - ai for ai, bi in zip(a, b)]
        length = math.hypot(*diff)
        unit = [d / length for d in diff]
        f = lambda s: _reciprocal(rho(tuple(ai + s * ui for ai, ui in zip(a, unit))), volume)
        result = integrate(f, 0.0, length, config, sample_cap=math.inf)

    if result.divergent:
        return DistanceResult.diverged([domain_index])
    if not result.converged:
        raise NumericalError(f"domain {domain_index}: quadrature ended with status {result.status}")
    return DistanceResult(FINITE, abs(result.value), result.error_estimate,
                          components=(abs(result.value),))


def _reciprocal(rho, volume):
    if rho == 0.0:
        return math.inf
    return 1.0 / (volume * rho)


def distance(partition: Partition, A: DomainPointSet, B: DomainPointSet,
             config: QuadratureConfig = QuadratureConfig()) -> DistanceResult:
    """Pythagorean combination of the per-domain distances between A and B."""
    if A.partition != partition or B.partition != partition:
        raise ValueError("point sets must be built on the partition being measured")
    n = partition.N
    # tighten per-domain tolerances so the combined estimate meets the caller's
    sub = config if n == 1 else config.scaled(1.0 / (2.0 * math.sqrt(n)))
    parts = [distance_in_domain(partition, i, A.points[i], B.points[i], sub) for i in range(n)]
    values = tuple(p.value for p in parts)
    bad = [i for i, p in enumerate(parts) if p.divergent]
    if bad:
        return DistanceResult.diverged(bad, values)
    total = math.sqrt(math.fsum(v * v for v in values))
    if total > 0:
        err = math.fsum(v * p.error_estimate for v, p in zip(values, parts)) / total
    else:
        err = max(p.error_estimate for p in parts)
    return DistanceResult(FINITE, total, err, components=values)


def well1d_oracle(L: float, n: int, pairs: Sequence[Tuple[float, float]]) -> float:
    """Closed-form N-domain distance for the 1-D box; ``math.inf`` if an endpoint sits on a node."""
    if len(pairs) != n:
        raise ValueError(f"need {n} endpoint pairs, got {len(pairs)}")
    total = 0.0
    for i, (a, b) in enumerate(pairs):
        lo, hi = i * L / n, (i + 1) * L / n
        guard = NODE_GUARD * (hi - lo)
        for x in (a, b):
            if not lo <= x <= hi:
                raise DomainError(f"endpoint {x} outside zone {i} ({lo}, {hi})")
            if x - lo < guard or hi - x < guard:
                return math.inf
        total += (_cot_mode(n, b, L) - _cot_mode(n, a, L)) ** 2
    return L / (2.0 * math.pi) * math.sqrt(total)


def _cot_mode(n, x, L):
    # cot has period pi, so measure x from the nearest node to keep precision there
    j = round(n * x / L)
    return 1.0 / math.tan(math.pi * n * ((x - j * L / n) / L))


def oscillator0_oracle(A0: float, a: float, b: float) -> float:
    """Ground-state oscillator distance (pi/2) A0 |erfi(b/A0) - erfi(a/A0)|."""
    return 0.5 * math.pi * A0 * abs(erfi(b / A0) - erfi(a / A0))


def hydrogen_oracle(level: int, a0: float, first, second,
                    config: QuadratureConfig = QuadratureConfig()) -> float:
    """Hydrogen s-state distance along one radius.

    Level 1 takes two radii and uses the exponential closed form. Level 2
    takes (inner, outer) radius pairs and integrates |phi_2s|^-2 directly,
    normalizing by the inner and outer volumes (256 pi / 3) a0^3 (1 - 7/e^2)
    and (256 pi / 3) a0^3 7/e^2.
    """
    if level == 1:
        r1, r2 = float(first), float(second)
        if r1 < 0 or r2 < 0:
            raise DomainError("radii must be non-negative")
        return 0.375 * abs(math.exp(2 * r2 / a0) - math.exp(2 * r1 / a0)) * a0
    if level != 2:
        raise ValueError(f"hydrogen level must be 1 or 2, got {level}")
    (x1, x2), (y1, y2) = first, second
    node = 2.0 * a0
    for r in (x1, y1):
        if not 0 <= r < node:
            raise DomainError(f"inner radius {r} must lie in [0, {node})")
    for r in (x2, y2):
        if not r > node:
            raise DomainError(f"outer radius {r} must exceed {node}")
    base = 256.0 * math.pi / 3.0 * a0 ** 3
    outer_share = 7.0 / math.e ** 2
    volumes = (base * (1.0 - outer_share), base * outer_share)
    norm = 8.0 * math.pi * a0 ** 3

    def inv_sq(r):
        phi_sq = (1.0 - r / (2.0 * a0)) ** 2 * math.exp(-r / a0) / norm
        return math.inf if phi_sq == 0.0 else 1.0 / phi_sq

    total = 0.0
    for (p, q), vol in zip(((x1, y1), (x2, y2)), volumes):
        lo, hi = min(p, q), max(p, q)
        res = integrate(inv_sq, lo, hi, config)
        if res.divergent:
            return math.inf
        total += (res.value / vol) ** 2
    return math.sqrt(total)


def distance_curve(partition: Partition, anchor: DomainPointSet, domain_index: int = 0,
                   axis: int = 0, samples: int = 101, span=None,
                   config: QuadratureConfig = QuadratureConfig()) -> List[Tuple[float, DistanceResult]]:
    """Distance from ``anchor`` as one domain's point sweeps along ``axis``.

    All other domain points stay at the anchor. ``span`` defaults to the
    domain's extent along the axis; samples on or next to a node come back
    as divergent results rather than being dropped.
    """
    if samples < 2:
        raise ValueError("a curve needs at least 2 samples")
    if anchor.partition != partition:
        raise ValueError("anchor must be built on the partition being swept")
    lo, hi = span if span is not None else partition.domains[domain_index].bounds[axis]
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError("an explicit finite span is required for an unbounded domain")
    rows = []
    base = anchor.points[domain_index]
    for k in range(samples):
        c = lo + (hi - lo) * k / (samples - 1)
        moving = tuple(c if j == axis else v for j, v in enumerate(base))
        target = anchor.moved(domain_index, moving)
        rows.append((c, distance(partition, anchor, target, config)))
    return rows
