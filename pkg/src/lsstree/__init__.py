"""Combinatorial Groebner bases, Hilbert series, and Krull dimension for
LSS-ideals of trees."""

from .krull import (
    DimReport,
    dim_bounds,
    dim_pendant,
    dim_report,
    dim_subset_dp,
    dim_subset_max,
)
from .lssbasis import (
    BasisElement,
    GeneratorSet,
    GroebnerReport,
    Provenance,
    corollary_basis,
    edge_generators,
    odd_subsets,
    theorem_basis,
    verify_groebner,
)
from .polyengine import (
    Polynomial,
    VariableOrder,
    buchberger,
    initial_gens,
    lex_compare,
    reduce,
    reduce_basis,
    spoly,
)
from .srcomplex import (
    FVector,
    HilbertSeries,
    dim_from_complex,
    f_vector,
    face_via_initial,
    face_via_paths,
    hilbert_series,
    minimal_initial_gens,
    path_star,
    series_expand,
)
from .treekit import (
    LabeledTree,
    TreePath,
    all_paths,
    ascending_labeling,
    induced_components,
    is_ascending,
    is_independent,
    parse_tree,
    path_between,
    pendant_decomposition,
    random_tree,
    relabel,
)

__version__ = "0.1.0"
