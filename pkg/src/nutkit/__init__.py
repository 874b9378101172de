"""Exact nut-graph analysis, the Fowler construction and regular nut censuses."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    Graph,
    complement,
    make_antiprism,
    make_complete_minus_matching,
    parse_appendix_adjlist,
    parse_graph,
    parse_graph6,
    to_graph6,
)
from .kernel import IntegerMatrix, KernelBasis, kernel_basis, matvec, nullity  # noqa: E402
from .nut import (  # noqa: E402
    Classification,
    FowlerExtension,
    NutReport,
    classify,
    classify_pair,
    fowler_detect,
    fowler_extend,
)
