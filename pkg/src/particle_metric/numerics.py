"""
Numerical kernels: adaptive quadrature with divergence detection, bracketed
root finding, Hermite polynomials and their roots, and the imaginary error
function.
"""

import heapq
import math
from dataclasses import dataclass
from typing import Callable, List, Optional

from scipy.optimize import brentq

from .errors import BracketError, EvaluationError, UnsupportedOrderError

MAX_HERMITE_ORDER = 30
ERFI_MAX_ARG = 6.0

CONVERGED = "converged"
DIVERGENT = "divergent"
MAX_DEPTH = "max-depth"

# Gauss-Kronrod 7/15 pair (nodes on [-1, 1], non-negative half).
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
# Gauss weights for _XGK[1], _XGK[3], _XGK[5], _XGK[7].
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

_EPS = 2.220446049250313e-16
_MAX_PANELS = 20000


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    max_depth: int = 60
    divergence_cap: float = 1e12

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0 and self.divergence_cap > 0):
            raise ValueError("tolerances and divergence cap must be positive")
        if int(self.max_depth) != self.max_depth or self.max_depth < 10:
            raise ValueError("max_depth must be an integer >= 10")

    def scaled(self, factor):
        """Copy with both tolerances multiplied by ``factor``."""
        return QuadratureConfig(self.rel_tol * factor, self.abs_tol * factor,
                                self.max_depth, self.divergence_cap)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    status: str

    @property
    def converged(self):
        return self.status == CONVERGED

    @property
    def divergent(self):
        return self.status == DIVERGENT


class _Divergence(Exception):
    pass


def _gk15(f, a, b, cap):
    """Kronrod value, error estimate and |f| integral on one panel."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = _sample(f, center, cap)
    res_k = fc * _WGK[7]
    res_g = fc * _WG[3]
    res_abs = abs(res_k)
    for j in range(7):
        dx = half * _XGK[j]
        f1 = _sample(f, center - dx, cap)
        f2 = _sample(f, center + dx, cap)
        res_k += _WGK[j] * (f1 + f2)
        res_abs += _WGK[j] * (abs(f1) + abs(f2))
        if j % 2 == 1:
            res_g += _WG[j // 2] * (f1 + f2)
    res_k *= half
    res_g *= half
    res_abs *= abs(half)
    err = abs(res_k - res_g)
    # roundoff floor
    err = max(err, 50.0 * _EPS * res_abs)
    return res_k, err


def _sample(f, x, cap):
    y = f(x)
    if y != y:
        raise EvaluationError(x)
    if abs(y) > cap or y in (math.inf, -math.inf):
        raise _Divergence
    return y


def integrate(f: Callable[[float], float], a: float, b: float,
              config: QuadratureConfig = QuadratureConfig(), *,
              sample_cap: Optional[float] = None) -> QuadratureResult:
    """Globally adaptive Gauss-Kronrod (7/15) quadrature of ``f`` over [a, b].

    The integrand is never evaluated at ``a`` or ``b``, so integrable endpoint
    singularities are tolerated. The integral is reported as divergent when an
    integrand sample, or the running total, exceeds ``config.divergence_cap``
    (this is how non-integrable blow-ups at an endpoint show up). Callers that
    decide endpoint divergence themselves can raise the per-sample threshold
    with ``sample_cap``; infinite samples are always divergent. When panels
    can no longer be split, because of ``max_depth`` or the panel budget, the
    status is ``max-depth``.

    Raises
    ------
    EvaluationError
        If ``f`` returns NaN; the offending abscissa is attached.
    """
    if not a <= b:
        raise ValueError(f"integration bounds must satisfy a <= b, got [{a}, {b}]")
    if a == b:
        return QuadratureResult(0.0, 0.0, CONVERGED)
    cap = config.divergence_cap
    f_cap = cap if sample_cap is None else sample_cap
    try:
        value, err = _gk15(f, a, b, f_cap)
        heap = [(-err, a, b, value, err, 0)]
        frozen_value = 0.0
        frozen_err = 0.0
        total = value
        total_err = err
        panels = 1
        while True:
            if abs(total) > cap:
                return QuadratureResult(total, total_err, DIVERGENT)
            if total_err <= max(config.abs_tol, config.rel_tol * abs(total)):
                return QuadratureResult(total, total_err, CONVERGED)
            if not heap or panels >= _MAX_PANELS:
                return QuadratureResult(total, total_err, MAX_DEPTH)
            _, lo, hi, v, e, depth = heapq.heappop(heap)
            mid = 0.5 * (lo + hi)
            if depth >= config.max_depth or not lo < mid < hi:
                frozen_value += v
                frozen_err += e
                continue
            v1, e1 = _gk15(f, lo, mid, f_cap)
            v2, e2 = _gk15(f, mid, hi, f_cap)
            heapq.heappush(heap, (-e1, lo, mid, v1, e1, depth + 1))
            heapq.heappush(heap, (-e2, mid, hi, v2, e2, depth + 1))
            panels += 1
            total += (v1 + v2) - v
            total_err += (e1 + e2) - e
            if total_err <= max(config.abs_tol, config.rel_tol * abs(total)):
                # confirm with an exact re-sum before accepting
                total = frozen_value + math.fsum(p[3] for p in heap)
                total_err = frozen_err + math.fsum(p[4] for p in heap)
    except _Divergence:
        return QuadratureResult(math.inf, math.inf, DIVERGENT)


def integrate_semi_infinite(f: Callable[[float], float], a: float,
                            config: QuadratureConfig = QuadratureConfig()) -> QuadratureResult:
    """Integrate ``f`` over [a, inf) via x = a + t / (1 - t), t in [0, 1)."""

    def mapped(t):
        s = 1.0 - t
        return f(a + t / s) / (s * s)

    return integrate(mapped, 0.0, 1.0, config)


def find_root(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-14) -> float:
    """Bracketed root of ``f`` in [lo, hi] (Brent's method)."""
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f={flo!r}, {fhi!r}")
    return brentq(f, lo, hi, xtol=tol, rtol=4 * _EPS, maxiter=200)


def hermite(n: int, t: float) -> float:
    """Physicists' Hermite polynomial H_n(t) by the three-term recurrence."""
    if n < 0 or n > MAX_HERMITE_ORDER:
        raise UnsupportedOrderError(f"Hermite order must be in [0, {MAX_HERMITE_ORDER}], got {n}")
    h_prev, h = 0.0, 1.0
    for k in range(n):
        h_prev, h = h, 2.0 * t * h - 2.0 * k * h_prev
    return h


def hermite_roots(n: int) -> List[float]:
    """All real roots of H_n, ascending and exactly symmetric about zero.

    Roots of H_{k-1} interlace those of H_k, so each level supplies the
    brackets for the next. Every root of H_n lies inside |t| < sqrt(2n + 1).
    """
    if n < 1 or n > MAX_HERMITE_ORDER:
        raise UnsupportedOrderError(f"Hermite root order must be in [1, {MAX_HERMITE_ORDER}], got {n}")
    roots = [0.0]
    for k in range(2, n + 1):
        bound = math.sqrt(2.0 * k + 1.0)
        edges = [-bound] + roots + [bound]
        h_k = lambda t, k=k: hermite(k, t)
        roots = [find_root(h_k, edges[i], edges[i + 1], tol=1e-15) for i in range(k)]
    # enforce exact mirror symmetry
    sym = [0.5 * (roots[i] - roots[n - 1 - i]) for i in range(n)]
    if n % 2 == 1:
        sym[n // 2] = 0.0
    return sym


def box_sine(n: int, x: float, length: float) -> float:
    """sin(n pi x / length), evaluated as an offset from the nearest node.

    The nodes sit at ``k * length / n``, computed exactly as written. Near one
    of them ``x - node`` is exact, so the result vanishes at the node and keeps
    full relative precision beside it, where ``math.sin`` of the product would
    lose digits to the rounding of its argument.
    """
    k = round(n * x / length)
    s = math.sin(math.pi * n * ((x - k * length / n) / length))
    return -s if k % 2 else s


def erfi(x: float) -> float:
    """Imaginary error function, erfi(x) = -i erf(ix), by its Maclaurin series."""
    if abs(x) > ERFI_MAX_ARG:
        raise UnsupportedOrderError(f"erfi argument must satisfy |x| <= {ERFI_MAX_ARG}, got {x}")
    if x == 0.0:
        return 0.0
    x2 = x * x
    power = x  # x^(2k+1) / k!
    total = x
    k = 0
    while True:
        k += 1
        power *= x2 / k
        term = power / (2 * k + 1)
        total += term
        if abs(term) <= 1e-16 * abs(total):
            break
    return 2.0 / math.sqrt(math.pi) * total
