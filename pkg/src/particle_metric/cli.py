"""Command-line interface emitting CSV for the partition, distance, curve and evolve commands.

Exit codes: 0 on success (divergent results included), 2 on bad arguments,
3 when a numerical procedure fails.
"""

import argparse
import csv
import io
import math
import sys

from . import __version__
from .errors import NumericalError
from .evolve import SuperpositionState, trace
from .metric import DomainPointSet, distance, distance_curve
from .models import CLASSICAL, PREFACTOR, HydrogenS, Oscillator1D, VolumeConvention, Well1D, Well2D
from .numerics import QuadratureConfig
from .partition import build_partition

DIVERGENT_TOKEN = "divergent"
TOPOLOGY_TOKEN = "topology-change"


class UsageError(Exception):
    pass


def fmt(value):
    if isinstance(value, float):
        if math.isinf(value):
            return DIVERGENT_TOKEN
        return f"{value:.9g}"
    return str(value)


def _spec_from_args(args):
    system = args.system
    if system == "well1d":
        _require(args, "L", "n")
        return Well1D(args.L, args.n)
    if system == "well2d":
        _require(args, "L", "n", "m")
        return Well2D(args.L, args.n, args.m)
    if system == "oscillator":
        _require(args, "A0", "n")
        return Oscillator1D(args.A0, args.n)
    _require(args, "level", "a0")
    return HydrogenS(args.level, args.a0)


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--system {args.system} requires {', '.join(missing)}")


def _convention(args):
    mode = PREFACTOR if args.convention == "prefactor" else CLASSICAL
    return VolumeConvention(mode, args.scale)


def _config(args):
    return QuadratureConfig(args.rel_tol, args.abs_tol, args.max_depth)


def _point(text):
    try:
        return tuple(float(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a point: {text!r}")


def _component(text):
    try:
        n, c = text.split(":", 1)
        return int(n), complex(c.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"component must look like N:COEFF, got {text!r}")


def _metadata(args, extra=()):
    keys = ["command", "system", "L", "n", "m", "A0", "level", "a0",
            "convention", "scale", "rel_tol", "abs_tol", "max_depth"]
    lines = []
    for key in keys:
        value = getattr(args, key, None)
        if value is not None:
            lines.append(f"# {key}={value}")
    lines.extend(f"# {k}={v}" for k, v in extra)
    return lines


def _write(args, meta, header, rows):
    buf = io.StringIO()
    for line in meta:
        buf.write(line + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_partition(args):
    spec = _spec_from_args(args)
    part = build_partition(spec, _convention(args), _config(args))
    rows = []
    for d in part.domains:
        bounds = d.bounds
        if len(bounds) == 1:
            lower, upper = bounds[0]
        else:
            lower = ";".join(fmt(lo) for lo, _ in bounds)
            upper = ";".join(fmt(hi) for _, hi in bounds)
        rows.append([d.index, _edge(lower), _edge(upper), d.probability_mass, d.partial_volume])
    rows.append(["total", "", "", math.fsum(d.probability_mass for d in part.domains),
                 math.fsum(d.partial_volume for d in part.domains)])
    meta = _metadata(args, [("world_volume", fmt(part.world_volume)), ("N", part.N), ("D", part.D)])
    _write(args, meta, ["domain_index", "lower", "upper", "probability_mass", "partial_volume"], rows)


def _edge(value):
    # bounds may legitimately be infinite; keep them distinct from the divergence token
    if isinstance(value, float) and math.isinf(value):
        return "-inf" if value < 0 else "inf"
    return value


def _point_sets(part, a_pts, b_pts):
    if len(a_pts) != part.N or len(b_pts) != part.N:
        raise UsageError(f"this state has N={part.N} domains: give --a and --b once per domain "
                         f"(got {len(a_pts)} and {len(b_pts)})")
    return DomainPointSet(part, a_pts), DomainPointSet(part, b_pts)


def cmd_distance(args):
    spec = _spec_from_args(args)
    part = build_partition(spec, _convention(args), _config(args))
    A, B = _point_sets(part, args.a or [], args.b or [])
    res = distance(part, A, B, _config(args))
    value = DIVERGENT_TOKEN if res.divergent else res.value
    err = "" if res.divergent else res.error_estimate
    header = ["value", "error_estimate"] + [f"d_{i}" for i in range(part.N)]
    meta = _metadata(args, [("N", part.N)])
    _write(args, meta, header, [[value, err, *res.components]])


def cmd_curve(args):
    spec = _spec_from_args(args)
    part = build_partition(spec, _convention(args), _config(args))
    anchor_pts = args.anchor or []
    if len(anchor_pts) != part.N:
        raise UsageError(f"this state has N={part.N} domains: give --anchor once per domain")
    anchor = DomainPointSet(part, anchor_pts)
    if not 0 <= args.domain < part.N:
        raise UsageError(f"--domain must be in [0, {part.N})")
    if not 0 <= args.axis < part.D:
        raise UsageError(f"--axis must be in [0, {part.D})")
    if (args.lo is None) != (args.hi is None):
        raise UsageError("--lo and --hi go together")
    span = None if args.lo is None else (args.lo, args.hi)
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    rows = []
    origin = anchor.points[args.domain][args.axis]
    for c, res in distance_curve(part, anchor, args.domain, args.axis, args.samples, span,
                                 _config(args)):
        if res.divergent:
            rows.append([c, DIVERGENT_TOKEN, DIVERGENT_TOKEN, ""])
        else:
            signed = math.copysign(res.value, c - origin) if c != origin else 0.0
            rows.append([c, res.value, signed, res.error_estimate])
    meta = _metadata(args, [("anchor", ";".join(",".join(fmt(c) for c in p) for p in anchor.points)),
                            ("domain", args.domain), ("axis", args.axis), ("samples", args.samples)])
    _write(args, meta, ["coordinate", "distance", "signed_distance", "error_estimate"], rows)


def cmd_evolve(args):
    comps = args.component or []
    if len(comps) < 2:
        raise UsageError("give at least two --component N:COEFF entries")
    norm = math.sqrt(math.fsum(abs(c) ** 2 for _, c in comps))
    if norm == 0:
        raise UsageError("coefficients are all zero")
    state = SuperpositionState(args.L, tuple((n, c / norm) for n, c in comps), args.energy_scale)
    if args.steps < 1:
        raise UsageError("--steps must be at least 1")
    times = [args.t0 + (args.t1 - args.t0) * k / args.steps for k in range(args.steps + 1)]
    rows = []
    previous = None
    for row in trace(state, times, args.a, args.b, _config(args), _convention(args)):
        nodes = ";".join(fmt(x) + ("*" if deg else "") for x, deg in zip(row.nodes, row.degenerate))
        event = TOPOLOGY_TOKEN if previous is not None and row.n_domains != previous else ""
        if row.result.divergent:
            value, err = DIVERGENT_TOKEN, ""
        else:
            value, err = row.result.value, row.result.error_estimate
        previous = row.n_domains
        rows.append([row.time, row.n_domains - 1, nodes, value, err, event])
    meta = _metadata(args, [("components", ";".join(f"{n}:{c / norm}" for n, c in comps)),
                            ("energy_scale", args.energy_scale), ("a", args.a), ("b", args.b),
                            ("degenerate_marker", "*")])
    _write(args, meta, ["t", "node_count", "nodes", "distance", "error_estimate", "event"], rows)


def build_parser():
    parser = argparse.ArgumentParser(prog="particle-metric", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--convention", choices=["classical", "prefactor"], default="classical")
    common.add_argument("--scale", type=float, default=1.0,
                        help="arbitrary scale for the prefactor convention")
    common.add_argument("--rel-tol", dest="rel_tol", type=float, default=1e-9)
    common.add_argument("--abs-tol", dest="abs_tol", type=float, default=1e-12)
    common.add_argument("--max-depth", dest="max_depth", type=int, default=60)
    common.add_argument("--out", help="write CSV here instead of standard output")

    system = argparse.ArgumentParser(add_help=False)
    system.add_argument("--system", required=True, choices=["well1d", "well2d", "oscillator", "hydrogen"])
    system.add_argument("--L", type=float)
    system.add_argument("--n", type=int)
    system.add_argument("--m", type=int)
    system.add_argument("--A0", type=float)
    system.add_argument("--level", type=int)
    system.add_argument("--a0", type=float)

    p = sub.add_parser("partition", parents=[common, system], help="domains, masses and partial volumes")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("distance", parents=[common, system], help="N-domain distance between two point sets")
    p.add_argument("--a", type=_point, action="append", help="point in domain i (repeat per domain; x or x,y)")
    p.add_argument("--b", type=_point, action="append")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("curve", parents=[common, system], help="distance from an anchor along one axis")
    p.add_argument("--anchor", type=_point, action="append", help="anchor point per domain")
    p.add_argument("--domain", type=int, default=0, help="index of the domain whose point moves")
    p.add_argument("--axis", type=int, default=0)
    p.add_argument("--lo", type=float)
    p.add_argument("--hi", type=float)
    p.add_argument("--samples", type=int, default=101)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("evolve", parents=[common], help="nodes and pair distance over time for a superposition")
    p.add_argument("--L", type=float, default=1.0)
    p.add_argument("--energy-scale", dest="energy_scale", type=float, default=1.0)
    p.add_argument("--component", type=_component, action="append",
                   help="N:COEFF, e.g. 2:0.5+0.5j (coefficients are normalized)")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, required=True)
    p.add_argument("--steps", type=int, default=32)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.set_defaults(func=cmd_evolve)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (UsageError, ValueError, IndexError, TypeError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (NumericalError, ArithmeticError) as exc:
        print(f"{parser.prog} {args.command}: numeric failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
