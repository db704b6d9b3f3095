"""Growth-diagram bijections between oscillating tableaux and (semi)standard
Young tableaux, with independent exhaustive counters and the exact
Bessel-determinant count."""

from .bijections import (
    GeneralizedOscillatingTableau,
    OscillatingTableau,
    gen_oscillating_to_ssyt,
    odd_bound_expand,
    odd_bound_reduce,
    oscillating_to_syt,
    ssyt_to_gen_oscillating,
    syt_to_oscillating,
)
from .counting import (
    ExpSeries,
    bessel_count,
    count_gen_oscillating,
    count_oscillating,
    count_ssyt,
    count_syt,
)
from .growth import (
    BoundaryWord,
    CellArrangement,
    Filling,
    GrowthDiagram,
    backward_local,
    backward_sweep,
    forward_local,
    forward_sweep,
    greene_ranks_bruteforce,
    rs_correspondence,
)
from .jeu_de_taquin import eject_markers, inject_markers, inverse_rs_extract
from .knuth_growth import knuth_backward_sweep, knuth_forward_sweep, refine
from .partitions import Partition, StripType, column_stats, conjugate, contains, intersection, strip_type, union
from .tableaux import (
    AugmentedTableau,
    Marker,
    SemistandardTableau,
    StandardTableau,
    from_chain,
    to_chain,
    validate_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "AugmentedTableau",
    "BoundaryWord",
    "CellArrangement",
    "ExpSeries",
    "Filling",
    "GeneralizedOscillatingTableau",
    "GrowthDiagram",
    "Marker",
    "OscillatingTableau",
    "Partition",
    "SemistandardTableau",
    "StandardTableau",
    "StripType",
    "backward_local",
    "backward_sweep",
    "bessel_count",
    "column_stats",
    "conjugate",
    "contains",
    "count_gen_oscillating",
    "count_oscillating",
    "count_ssyt",
    "count_syt",
    "eject_markers",
    "forward_local",
    "forward_sweep",
    "from_chain",
    "gen_oscillating_to_ssyt",
    "greene_ranks_bruteforce",
    "inject_markers",
    "intersection",
    "inverse_rs_extract",
    "knuth_backward_sweep",
    "knuth_forward_sweep",
    "odd_bound_expand",
    "odd_bound_reduce",
    "oscillating_to_syt",
    "refine",
    "rs_correspondence",
    "ssyt_to_gen_oscillating",
    "strip_type",
    "syt_to_oscillating",
    "to_chain",
    "union",
    "validate_bounds",
]
