"""Exact homomorphism-distance toolkit for Max H-Col approximability."""

__version__ = "0.1.0"

from .graphs import (Graph, complete, cycle, parse_spec, path, petersen,
                     rational_complete, turan, wheel)
from .homomorphism import (VertexMap, find_homomorphism, hom_equivalent,
                           verify_homomorphism)
from .symmetry import (Automorphism, OrbitPartition, automorphisms,
                       edge_orbits, is_edge_transitive)
from .oracle import (SymmetricWeightFunction, WeightFunction,
                     bipartite_density, induced_weight, mc, measure,
                     solution_vectors, symmetrize)
from .lp import LpSolution, OrbitLp, format_orbit_lp, solve_orbit_lp, verify_solution
from .distance import (DistanceReport, SValue, check_metric_axioms, distance,
                       s_value, sandwich_bounds)
from .bounds import (GuaranteeReport, alpha_gw, alpha_k, family_sweep,
                     hastad_bound, inapprox_transfer, transfer_guarantee)

__all__ = [name for name in dir() if not name.startswith("_")]
