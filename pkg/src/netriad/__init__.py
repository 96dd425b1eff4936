"""netriad: does a third network mediate, suppress, or ignore the
similarity between two others?

Given three unweighted networks on one node set, the package measures the
edge-overlap ratio of two of them, the same ratio conditioned on the
third (restricted to pairs the third lacks), and their net difference,
whose sign separates independence, mediation/confounding, and
suppression. Generative benchmark models with an exact per-pair
probability oracle, selective-rewiring null models with normalized
indices, and multiplex edge-list ingestion round out the toolkit.
"""

__version__ = "0.1.0"

from .errors import NetriadError
from .generators import (GenParams, PairExpectation, gen_interpolated,
                         gen_mediated, gen_suppression, gen_uncorrelated,
                         generate, joint_pmf, pair_expectation)
from .ingest import (MultiplexDataset, WindowSpec, binarize_layer,
                     extract_triplet, parse_multiplex, serialize_multiplex,
                     weight_windows, window_spec, write_multiplex)
from .netcore import EdgeSet, NodeUniverse, Triplet, canonical_pair
from .nullmodels import (RewireMode, TriadReport, full_rewire, max_effect,
                         selective_rewire, triad_indices)
from .similarity import (PairwiseNullSummary, delta, distance, nj,
                         nj_partial, pairwise_null)
from .stats import EnsembleSummary, Histogram, histogram, summarize

__all__ = [
    "__version__", "NetriadError",
    "NodeUniverse", "EdgeSet", "Triplet", "canonical_pair",
    "nj", "nj_partial", "delta", "distance",
    "pairwise_null", "PairwiseNullSummary",
    "GenParams", "generate", "gen_uncorrelated", "gen_mediated",
    "gen_suppression", "gen_interpolated",
    "joint_pmf", "pair_expectation", "PairExpectation",
    "RewireMode", "TriadReport", "full_rewire", "selective_rewire",
    "max_effect", "triad_indices",
    "MultiplexDataset", "parse_multiplex", "serialize_multiplex",
    "write_multiplex", "binarize_layer", "extract_triplet",
    "weight_windows", "window_spec", "WindowSpec",
    "summarize", "histogram", "EnsembleSummary", "Histogram",
]
