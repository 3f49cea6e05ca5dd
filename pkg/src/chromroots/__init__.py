"""Exact chromatic polynomials and certified bounds on root real parts."""

from .chromatic import (
    ChromaticRecord,
    bipartite_coefficient_formulas,
    broken_cycle_coefficients,
    chromatic_number,
    chromatic_polynomial,
    chromatic_polynomial_bipartite,
    coefficient_formulas,
    falling_factorial_tail,
    shifted_chromatic_quotient,
    stability_inequality_sides,
)
from .graphs import (
    Graph,
    Graph6Error,
    UnsupportedPatternError,
    complete_bipartite,
    complete_graph,
    complete_minus_matching,
    count_clique_unions,
    count_motif,
    cycle_graph,
    empty_graph,
    enumerate_labeled,
    girth,
    parse_graph6,
    path_graph,
    treewidth_exact,
    wheel_graph,
    write_graph6,
)
from .polynomials import (
    Poly,
    has_all_real_roots,
    interlaces,
    isolate_real_roots,
    real_root_count,
    sturm_sequence,
)
from .rootfind import RootSet, all_roots, brown_bound_check, classify_real, max_real_part
from .stability import (
    StabilityReport,
    analyze_stability,
    is_quasi_stable,
    is_stable,
    low_degree_stable,
    stability_at_shift,
    sturm_remainder_indicator,
    sturm_remainder_indicator_quartic,
)
from .version import VERSION

__version__ = VERSION
