"""Matching powers of monomial ideals."""
from .graphs import (
    SimpleGraph,
    WeightedOrientedGraph,
    edge_ideal,
    edge_ideal_oriented,
    enumerate_matchings,
    graph_from_json,
    matching_number,
)
from .homology import (
    BettiTable,
    GFunctionProfile,
    UpperKoszulComplex,
    betti_table,
    depth,
    g_function,
    is_linearly_related,
    lcm_lattice,
    projective_dimension,
)
from .ideals import (
    ComplexityError,
    MonomialIdeal,
    bounding_multidegree,
    equals,
    ideal_sum,
    indeg,
    matching_power,
    matching_product,
    minimalize,
    monomial_grade,
    ordinary_product,
    polarize_ideal,
)
from .monomials import (
    Monomial,
    PolynomialContext,
    degree,
    divides,
    lcm,
    multiply,
    polarize_monomial,
    support,
    to_monomial,
    to_multidegree,
)
from .parser import ParseError, evaluate, parse_ideal_file, read_ideal, render_ideal_file

__version__ = "0.1.0"
