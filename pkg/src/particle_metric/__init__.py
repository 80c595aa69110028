"""Distances induced on configuration space by a quantum eigenstate's density."""

__version__ = "0.1.0"

from .errors import (BracketError, DomainError, EvaluationError, NumericalError,
                     TopologyChangeError, UnsupportedOrderError)
from .evolve import SuperpositionState, beat_period, density_at, distance_at, snapshot_partition
from .metric import (DistanceResult, DomainPointSet, distance, distance_curve, distance_in_domain,
                     hydrogen_oracle, integrand, oscillator0_oracle, well1d_oracle)
from .models import (HydrogenS, Oscillator1D, VolumeConvention, Well1D, Well2D,
                     classical_amplitude, density, psi, world_volume)
from .numerics import (QuadratureConfig, QuadratureResult, box_sine, erfi, find_root, hermite,
                       hermite_roots, integrate, integrate_semi_infinite)
from .partition import Domain, Partition, build_partition, zero_locus
