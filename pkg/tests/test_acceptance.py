"""Acceptance criteria, each checked at its stated tolerance and runtime budget.

Every test prints one PASS/FAIL line; the lines are repeated in the terminal
summary under "acceptance criteria".
"""
import itertools
import math
import random
import time

from scipy import integrate as sp_integrate

from particle_metric.evolve import SuperpositionState, beat_period, find_nodes, trace
from particle_metric.metric import (DomainPointSet, distance, distance_curve, distance_in_domain,
                                    hydrogen_oracle, oscillator0_oracle, well1d_oracle)
from particle_metric.models import HydrogenS, Oscillator1D, Well1D, Well2D
from particle_metric.numerics import QuadratureConfig, erfi, hermite, hermite_roots
from particle_metric.partition import build_partition


def run_criterion(log, number, title, budget, check):
    start = time.perf_counter()
    failure = None
    try:
        check()
    except AssertionError as exc:
        failure = str(exc).splitlines()[0] if str(exc) else "assertion failed"
    elapsed = time.perf_counter() - start
    if failure is None and elapsed >= budget:
        failure = f"runtime {elapsed:.2f}s exceeds {budget}s"
    status = "PASS" if failure is None else "FAIL"
    line = f"[{status}] criterion {number:2d}: {title} ({elapsed:.2f}s / {budget}s)"
    if failure:
        line += f" :: {failure}"
    print(line)
    log.append((number, line))
    assert failure is None, line


def rel_err(got, want):
    return abs(got - want) / abs(want) if want else abs(got)


# 1 -------------------------------------------------------------------------

def test_criterion_01_hydrogen_volume_split(acceptance_log):
    def check():
        for a0 in (1.0, 0.529):
            p = build_partition(HydrogenS(2, a0))
            share = 7 * math.exp(-2)
            masses = [d.probability_mass for d in p.domains]
            assert abs(masses[0] - (1 - share)) <= 1e-8, masses
            assert abs(masses[1] - share) <= 1e-8, masses
            base = 256 * math.pi / 3 * a0 ** 3
            for d in p.domains:
                assert rel_err(d.partial_volume, base * d.probability_mass) <= 1e-8
    run_criterion(acceptance_log, 1, "hydrogen 2s volume split", 1.0, check)


# 2 -------------------------------------------------------------------------

def _zone_point(rng, i, L, n):
    width = L / n
    margin = 1e-6 * width
    return i * width + margin + rng.random() * (width - 2 * margin)


def test_criterion_02_well_oracle(acceptance_log):
    def check():
        rng = random.Random(20261016)
        worst = 0.0
        for n, L in itertools.product(range(1, 5), (1.0, 2.5)):
            p = build_partition(Well1D(L, n))
            for _ in range(500):
                A = [_zone_point(rng, i, L, n) for i in range(n)]
                B = [_zone_point(rng, i, L, n) for i in range(n)]
                got = distance(p, DomainPointSet(p, A), DomainPointSet(p, B))
                want = well1d_oracle(L, n, list(zip(A, B)))
                assert not got.divergent
                worst = max(worst, rel_err(got.value, want))
        assert worst <= 1e-7, f"worst relative error {worst:.3g}"
    run_criterion(acceptance_log, 2, "well distance vs cotangent oracle", 10.0, check)


# 3 -------------------------------------------------------------------------

def test_criterion_03_oscillator_oracle(acceptance_log):
    def check():
        rng = random.Random(3)
        worst = 0.0
        for k in range(200):
            A0 = (0.5, 1.0, 2.0)[k % 3]
            p = build_partition(Oscillator1D(A0, 0))
            a, b = (rng.uniform(-2 * A0, 2 * A0) for _ in range(2))
            got = distance(p, DomainPointSet(p, [a]), DomainPointSet(p, [b]))
            want = oscillator0_oracle(A0, a, b)
            worst = max(worst, rel_err(got.value, want))
        assert worst <= 1e-7, f"worst relative error {worst:.3g}"
    run_criterion(acceptance_log, 3, "oscillator ground state vs erfi oracle", 5.0, check)


# 4 -------------------------------------------------------------------------

def test_criterion_04_hydrogen_oracle(acceptance_log):
    def check():
        rng = random.Random(4)
        worst = 0.0
        for k in range(200):
            a0 = (1.0, 0.529)[k % 2]
            p = build_partition(HydrogenS(1, a0))
            r1, r2 = (rng.uniform(0, 3 * a0) for _ in range(2))
            got = distance(p, DomainPointSet(p, [r1]), DomainPointSet(p, [r2]))
            want = hydrogen_oracle(1, a0, r1, r2)
            worst = max(worst, rel_err(got.value, want))
        assert worst <= 1e-7, f"worst relative error {worst:.3g}"
    run_criterion(acceptance_log, 4, "hydrogen 1s vs exponential oracle", 5.0, check)


# 5 -------------------------------------------------------------------------

def test_criterion_05_well_ground_state_curves(acceptance_log):
    def check():
        L = 1.0
        p = build_partition(Well1D(L, 1))
        centre = distance_curve(p, DomainPointSet(p, [0.5 * L]), samples=201)
        assert centre[0][1].divergent and centre[-1][1].divergent
        inner = [(x, r.value) for x, r in centre[1:-1]]
        assert all(math.isfinite(v) for _, v in inner)
        vals = [v for _, v in inner]
        for u, v in zip(vals, vals[::-1]):
            assert abs(u - v) <= 1e-9 * max(abs(u), 1e-300) or u == v == 0.0
        mid = len(vals) // 2
        assert vals[mid] == 0.0
        assert all(x > y for x, y in zip(vals[:mid], vals[1:mid + 1]))
        assert all(x < y for x, y in zip(vals[mid:], vals[mid + 1:]))

        off = distance_curve(p, DomainPointSet(p, [0.9 * L]), samples=201)
        assert off[0][1].divergent and off[-1][1].divergent
        assert all(not r.divergent for _, r in off[1:-1])
        # just outside the node guard on either wall is still finite
        anchor = DomainPointSet(p, [0.9 * L])
        for x in (2e-9 * L, L - 2e-9 * L):
            assert not distance(p, anchor, DomainPointSet(p, [x])).divergent
        for x in (0.0, 5e-10 * L, L - 5e-10 * L, L):
            assert distance(p, anchor, DomainPointSet(p, [x])).divergent
        left = [r.value for x, r in off[1:-1] if x < 0.9 * L]
        right = [r.value for x, r in off[1:-1] if x >= 0.9 * L]
        assert all(u > v for u, v in zip(left, left[1:]))
        assert all(u < v for u, v in zip(right, right[1:]))
    run_criterion(acceptance_log, 5, "well n=1 curves from 0.5L and 0.9L", 2.0, check)


# 6 -------------------------------------------------------------------------

def test_criterion_06_oscillator_ground_state_curves(acceptance_log):
    def check():
        A0 = 1.0
        p = build_partition(Oscillator1D(A0, 0))
        samples = 401
        h = 4 * A0 / (samples - 1)
        lipschitz = math.sqrt(math.pi) * math.exp(4.0)  # max of 1/(V rho) on [-2A0, 2A0]
        for anchor in (0.0, 0.8 * A0, 1.2 * A0):
            curve = distance_curve(p, DomainPointSet(p, [anchor]), span=(-2 * A0, 2 * A0),
                                   samples=samples)
            assert len(curve) == samples
            xs = [x for x, _ in curve]
            vals = [r.value for _, r in curve]
            assert all(math.isfinite(v) for v in vals)
            # continuity: no jump larger than the integrand bound allows
            for u, v in zip(vals, vals[1:]):
                assert abs(u - v) <= lipschitz * h * (1 + 1e-9)
            # distance grows with |b - anchor| on both sides
            left = [v for x, v in zip(xs, vals) if x <= anchor]
            right = [v for x, v in zip(xs, vals) if x >= anchor]
            assert all(u > v for u, v in zip(left, left[1:]))
            assert all(u < v for u, v in zip(right, right[1:]))
            if anchor == 0.0:
                signed = [math.copysign(v, x) for x, v in zip(xs, vals)]
                for s, t in zip(signed, signed[::-1]):
                    assert abs(s + t) <= 1e-9 * max(abs(s), 1e-300)
    run_criterion(acceptance_log, 6, "oscillator n=0 curves from 0, 0.8A0, 1.2A0", 2.0, check)


# 7 -------------------------------------------------------------------------

def _catalog(max_q=6):
    specs = [Well1D(L, n) for L in (1.0, 2.5) for n in range(1, max_q + 1)]
    specs += [Well2D(1.0, n, m) for n, m in itertools.product(range(1, max_q + 1), repeat=2)]
    specs += [Oscillator1D(A0, n) for A0 in (1.0, 0.7) for n in range(0, max_q + 1)]
    specs += [HydrogenS(level, a0) for level in (1, 2) for a0 in (1.0, 0.529)]
    return specs


def test_criterion_07_conservation(acceptance_log):
    def check():
        for spec in _catalog():
            p = build_partition(spec)
            mass = math.fsum(d.probability_mass for d in p.domains)
            vol = math.fsum(d.partial_volume for d in p.domains)
            assert abs(mass - 1.0) <= 1e-8, (spec, mass)
            assert abs(vol - p.world_volume) <= 1e-8 * p.world_volume, (spec, vol)
    run_criterion(acceptance_log, 7, "mass and volume conservation over the catalog", 10.0, check)


# 8 -------------------------------------------------------------------------

def test_criterion_08_hermite_roots(acceptance_log):
    def check():
        previous = []
        for n in range(1, 11):
            roots = hermite_roots(n)
            assert len(roots) == n
            for r, s in zip(roots, roots[::-1]):
                assert r == -s
            for k, q in enumerate(previous):
                assert roots[k] < q < roots[k + 1]
            # polynomial scale over a window just wider than the roots
            top = roots[-1] + 1.0
            scale = max(abs(hermite(n, -top + 2 * top * j / 1000)) for j in range(1001))
            for r in roots:
                assert abs(hermite(n, r)) < 1e-9 * scale
            previous = roots
        r2 = hermite_roots(2)
        assert abs(r2[0] + 1 / math.sqrt(2)) <= 1e-12 and abs(r2[1] - 1 / math.sqrt(2)) <= 1e-12
    run_criterion(acceptance_log, 8, "Hermite roots for n <= 10", 1.0, check)


# 9 -------------------------------------------------------------------------

def test_criterion_09_erfi(acceptance_log):
    def check():
        h = 1e-5
        for k in range(61):
            x = -3 + 0.1 * k
            fd = (erfi(x + h) - erfi(x - h)) / (2 * h)
            exact = 2 / math.sqrt(math.pi) * math.exp(x * x)
            assert rel_err(fd, exact) <= 1e-6, (x, fd, exact)
        ref, _ = sp_integrate.quad(lambda t: 2 / math.sqrt(math.pi) * math.exp(t * t), 0.0, 1.0,
                                   epsabs=1e-14, epsrel=1e-13)
        assert abs(erfi(1.0) - ref) <= 1e-10
    run_criterion(acceptance_log, 9, "erfi derivative and defining integral", 1.0, check)


# 10 ------------------------------------------------------------------------

def test_criterion_10_pythagorean(acceptance_log):
    tight = QuadratureConfig(rel_tol=1e-13, abs_tol=1e-15)

    def random_points(rng, p):
        pts = []
        for d in p.domains:
            pts.append(tuple(lo + (0.05 + 0.9 * rng.random()) * (hi - lo) for lo, hi in d.bounds))
        return pts

    def check():
        rng = random.Random(10)
        for spec in (Well1D(1.0, 2), Well2D(1.0, 2, 3)):
            p = build_partition(spec)
            expected_n = 2 if isinstance(spec, Well1D) else 6
            assert p.N == expected_n
            for _ in range(25):
                A, B = random_points(rng, p), random_points(rng, p)
                total = distance(p, DomainPointSet(p, A), DomainPointSet(p, B))
                parts = [distance_in_domain(p, i, A[i], B[i], tight).value for i in range(p.N)]
                rss = math.sqrt(math.fsum(v * v for v in parts))
                assert rel_err(total.value, rss) <= 1e-10, (spec, total.value, rss)
    run_criterion(acceptance_log, 10, "Pythagorean composition, Well1D n=2 and Well2D (2,3)", 5.0, check)


# 11 ------------------------------------------------------------------------

def test_criterion_11_superposition(acceptance_log):
    def check():
        state = SuperpositionState.equal_mix(1.0, [1, 2])
        nodes = find_nodes(state, 0.0)
        assert len(nodes) == 1 and abs(nodes[0][0] - 2 / 3) <= 1e-10, nodes
        T = beat_period(state)
        times = [T * k / 24 for k in range(25)]
        first = trace(state, times, 0.1, 0.3)
        second = trace(state, [t + T for t in times], 0.1, 0.3)
        for r, s in zip(first, second):
            assert r.n_domains == s.n_domains
            for x, y in zip(r.nodes, s.nodes):
                assert abs(x - y) <= 1e-8
            assert rel_err(s.result.value, r.result.value) <= 1e-8, (r.time, r.result, s.result)
        # closing the period reproduces the start
        assert first[-1].n_domains == first[0].n_domains
        assert rel_err(first[-1].result.value, first[0].result.value) <= 1e-8
    run_criterion(acceptance_log, 11, "superposition node at 2L/3 and periodic trace", 5.0, check)
