"""sgdist: signed-graph distance matrices, balance, and distance spectra.

A signed graph carries a +1/-1 sign on each edge; the sign of a path is
the product of its edge signs.  This package computes the two signed
distance matrices obtained by taking the best or worst sign over all
shortest paths of each vertex pair, decides balance / antibalance /
geodeticity / distance-compatibility, builds the associated signed
complete graphs, and exposes numeric spectra, exact characteristic
polynomials, and closed-form spectra for the cycle and wheel families.
"""

from .balance import (
    BalanceReport,
    ClassLabel,
    balance_spectral_adjacency,
    balance_spectral_distance,
    balance_via_associated_complete,
    classify,
    is_antibalanced,
    is_balanced,
)
from .blocks import BlockDecomposition, block_decomposition, block_subgraphs
from .charpoly import CharPoly, charpoly_of_matrix, sachs_charpoly
from .core import (
    SignedGraph,
    bipartition,
    induced_subgraph,
    is_bipartite,
    negate,
    sign_product,
    switch,
    underlying_positive,
)
from .distance import (
    PairDistance,
    SignReachTable,
    compatible_pair,
    diameter,
    enumerate_shortest_paths,
    incompatible_pairs,
    is_compatible,
    is_geodetic,
    pair_distance,
    sign_bfs,
)
from .edgelist import dump_edge_list, format_edge_list, load_edge_list, parse_edge_list
from .errors import (
    BadFamilyParamError,
    BadSignError,
    DisconnectedError,
    DuplicateEdgeError,
    LoopEdgeError,
    NoConvergenceError,
    NotCompatibleError,
    NotSymmetricError,
    ParseError,
    PathExplosionError,
    SignedGraphError,
    SingularThetaError,
    TooLargeError,
    VertexOutOfRangeError,
)
from .families import (
    complete_bipartite,
    complete_graph,
    gen_family,
    kneser_graph,
    neg_rim_wheel,
    path_graph,
    positive_cycle,
    signed_join,
    unbalanced_cycle,
)
from .kernels import BACKEND, USE_NUMBA
from .matrices import (
    adjacency_matrix,
    associated_complete,
    check_symmetric_zero_diagonal,
    d_max_matrix,
    d_min_matrix,
    d_pm_matrix,
    distance_weights,
    matrix_to_csv,
    matrix_to_json_dict,
    unsigned_distance_matrix,
)
from .spectra import (
    Spectrum,
    cycle_spectrum_closed_form,
    eig_sym,
    spectra_close,
    weighted_cos_sum,
    wheel_spectrum_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BadFamilyParamError",
    "BadSignError",
    "BalanceReport",
    "BlockDecomposition",
    "CharPoly",
    "ClassLabel",
    "DisconnectedError",
    "DuplicateEdgeError",
    "LoopEdgeError",
    "NoConvergenceError",
    "NotCompatibleError",
    "NotSymmetricError",
    "PairDistance",
    "ParseError",
    "PathExplosionError",
    "SignReachTable",
    "SignedGraph",
    "SignedGraphError",
    "SingularThetaError",
    "Spectrum",
    "TooLargeError",
    "USE_NUMBA",
    "VertexOutOfRangeError",
    "adjacency_matrix",
    "associated_complete",
    "balance_spectral_adjacency",
    "balance_spectral_distance",
    "balance_via_associated_complete",
    "bipartition",
    "block_decomposition",
    "block_subgraphs",
    "charpoly_of_matrix",
    "check_symmetric_zero_diagonal",
    "classify",
    "compatible_pair",
    "complete_bipartite",
    "complete_graph",
    "cycle_spectrum_closed_form",
    "d_max_matrix",
    "d_min_matrix",
    "d_pm_matrix",
    "diameter",
    "distance_weights",
    "dump_edge_list",
    "eig_sym",
    "enumerate_shortest_paths",
    "format_edge_list",
    "gen_family",
    "incompatible_pairs",
    "induced_subgraph",
    "is_antibalanced",
    "is_balanced",
    "is_bipartite",
    "is_compatible",
    "is_geodetic",
    "kneser_graph",
    "load_edge_list",
    "matrix_to_csv",
    "matrix_to_json_dict",
    "neg_rim_wheel",
    "negate",
    "pair_distance",
    "parse_edge_list",
    "path_graph",
    "positive_cycle",
    "sachs_charpoly",
    "sign_bfs",
    "sign_product",
    "signed_join",
    "spectra_close",
    "switch",
    "unbalanced_cycle",
    "underlying_positive",
    "unsigned_distance_matrix",
    "weighted_cos_sum",
    "wheel_spectrum_closed_form",
]
