"""Graded Betti numbers of edge rings with 2-linear resolution, read off
from fat-forest decompositions and checked against Hochster's formula."""

from .chordal import (
    FatForestDecomposition,
    NotChordal,
    NotFatForest,
    fat_forest_decomposition,
    is_chordal,
    is_fat_forest,
    is_perfect_elimination,
    maximal_cliques_chordal,
    mcs_order,
)
from .complex import (
    Graph,
    SimplicialComplex,
    alexander_dual,
    complement_graph,
    flag_complex,
    induced_subcomplex,
    minimal_nonfaces,
    one_skeleton,
)
from .families import (
    FAMILIES,
    Tableau,
    UniformForestSpec,
    corso_nagel_betti,
    ferrers_complex,
    ferrers_labels,
    final_segment_complex,
    lexsegment_complex,
    multipartite_complex,
    random_fat_forest,
    random_graph,
    three_block_complex,
    uniform_dual_betti,
    uniform_forest,
    verify_identity,
)
from .oracle import (
    GF2,
    GF32003,
    RATIONALS,
    FieldSpec,
    has_linear_resolution,
    hochster_betti_table,
    homological_profile,
    is_two_linear,
    reduced_homology_dims,
)
from .series import (
    BettiTable,
    betti_from_numerator,
    hilbert_series,
    numerator,
    pipeline_betti,
    ring_profile,
    run_pipeline,
)

__version__ = "0.1.0"
