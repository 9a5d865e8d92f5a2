"""Eccentricity terrain of delta-hyperbolic graphs.

Exact and approximate eccentricities, terrain segmentation of shortest
paths, pseudoconvexity checks and a verification harness that tests every
implemented bound against an exact oracle.
"""
__version__ = "0.1.0"

from .approx import (ApproxEccentricities, approx_pair_left, approx_tree_fast,
                     approx_tree_middle, center_enclosure, radius_diameter_estimates)
from .convexity import (check_disk_pseudoconvexity, check_layer_pseudoconvexity,
                        pseudoconvexity_beta, quasiconvexity_eps)
from .exact import eccentricity_profile, hyperbolicity_exact, locality_map
from .exceptions import HyperterrainError, InputError
from .generators import gen_family, gen_fig3
from .graph import Graph, build_graph, read_edgelist
from .sweeps import beam, mutually_distant_pair
from .terrain import classify_path_kind, segment_path
from .verify import reverify_witness, run_corpus, run_suite

__all__ = [
    "__version__",
    "Graph", "build_graph", "read_edgelist", "gen_family", "gen_fig3",
    "eccentricity_profile", "hyperbolicity_exact", "locality_map",
    "mutually_distant_pair", "beam",
    "ApproxEccentricities", "approx_pair_left", "approx_tree_middle", "approx_tree_fast",
    "center_enclosure", "radius_diameter_estimates",
    "segment_path", "classify_path_kind",
    "pseudoconvexity_beta", "quasiconvexity_eps",
    "check_layer_pseudoconvexity", "check_disk_pseudoconvexity",
    "run_suite", "run_corpus", "reverify_witness",
    "ExactEccentricity", "PairEccentricity", "TreeEccentricity", "Hyperbolicity",
    "check_graph", "HyperterrainError", "InputError",
]

_ESTIMATORS = {"ExactEccentricity", "PairEccentricity", "TreeEccentricity", "Hyperbolicity",
               "check_graph"}


def __getattr__(name):
    # scikit-learn is slow to import; load the estimators only when asked for
    if name in _ESTIMATORS:
        from . import estimators
        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
