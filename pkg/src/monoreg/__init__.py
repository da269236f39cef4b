"""Integral closures and regularity of monomial ideals, with a focus on edge
ideals of weighted oriented graphs. All arithmetic is exact."""

from .digraph import (
    WeightedOrientedGraph,
    closure_radical_formula,
    complete_closure_reg,
    complete_graph_reg,
    edge_ideal,
    radical_colon_formula,
)
from .exceptions import DimensionMismatchError, DomainError, GraphInvariantError, MonoregError, ParseError
from .io import parse_graph, parse_ideal
from .monomial import GammaBox, MonomialIdeal, minimalize
from .newton import integral_closure, is_integrally_closed, np_membership
from .regularity import regularity, regularity_oracle_koszul
from .simplicial import SimplicialComplex, reduced_homology_dims, stanley_reisner_complex

__version__ = "0.1.0"
