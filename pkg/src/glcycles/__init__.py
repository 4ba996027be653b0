"""Group-labelled graphs at desk scale.

Construction kits (walls, handles, obstruction families), exact solvers for
avoiding-cycle packing and hitting, and the verification suites that sweep
the supporting lemmas over small instances.
"""

from .errors import BoundExceeded, GlcyclesError, PropertyViolation, ValidationError
from .graphs import (Graph, canonical_cycle, canonical_edge, cycle_edges,
                     enumerate_a_paths, enumerate_cycles, path_edges)
from .groups import (AvoidSets, GroupElement, GroupSpec, Subgroup,
                     is_good_sequence, omega_avoiding_coefficients,
                     ramsey_homogeneous_subset, vector_sum_select)
from .labelling import (CycleFamily, LabelledGraph, NormalizationResult,
                        VertexEncoding, normalize_on_subdivision, shift,
                        vertex_to_edge_labelling)
from .obstructions import (ObstructionInstance, canonical_complete_instance,
                           escher_wall, generate, grid_obstruction,
                           modular_grid_obstruction, regenerate,
                           stacked_interval_instance,
                           verify_complete_obstruction, verify_escher,
                           verify_grid_obstruction, verify_modular_grid)
from .packing import (DualityReport, HittingSolution, PackingProblem,
                      PackingSolution, TangleReport, a_path_duality,
                      duality_report, max_packing, min_hitting_set,
                      tangle_from_hitting_set)
from .suites import SUITES, SuiteResult, run_suite
from .walls import Wall, elementary_wall, link_handles

__version__ = "0.1.0"

__all__ = [
    "AvoidSets", "BoundExceeded", "CycleFamily", "DualityReport",
    "GlcyclesError", "Graph", "GroupElement", "GroupSpec", "HittingSolution",
    "LabelledGraph", "NormalizationResult", "ObstructionInstance",
    "PackingProblem", "PackingSolution", "PropertyViolation", "SUITES",
    "Subgroup", "SuiteResult", "TangleReport", "ValidationError",
    "VertexEncoding", "Wall", "a_path_duality", "canonical_complete_instance",
    "canonical_cycle", "canonical_edge", "cycle_edges", "duality_report",
    "elementary_wall", "enumerate_a_paths", "enumerate_cycles", "escher_wall",
    "generate", "grid_obstruction", "is_good_sequence", "link_handles",
    "max_packing", "min_hitting_set", "modular_grid_obstruction",
    "normalize_on_subdivision", "omega_avoiding_coefficients", "path_edges",
    "ramsey_homogeneous_subset", "regenerate", "run_suite", "shift",
    "stacked_interval_instance", "tangle_from_hitting_set",
    "vector_sum_select", "verify_complete_obstruction", "verify_escher",
    "verify_grid_obstruction", "verify_modular_grid",
    "vertex_to_edge_labelling",
]
