"""Weighted oriented graphs and their edge ideals.

A weighted oriented graph D on the ambient vertex set [n] carries a weight
w(j) >= 1 on every vertex, with w(j) = 1 on sources. Its edge ideal is
I(D, w) = (x_i x_j^{w(j)} : (i, j) ∈ E(D)).

Besides the edge ideal this module provides the closed forms for the
radicals sqrt(I(D,w) : x^a) and sqrt(closure(I(D,w)) : x^a), the capacity
machinery behind the latter, and the complete-graph regularity formulas.
"""

from __future__ import annotations

import itertools
import logging
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exceptions import DomainError, GraphInvariantError
from .monomial import Exponent, MonomialIdeal, _check_exponent, squarefree_exponent, support
from .newton import integral_closure, np_membership
from .simplicial import RATIONALS, is_acyclic, stanley_reisner_complex

log = logging.getLogger(__name__)

Edge = tuple[int, int]


@dataclass(frozen=True)
class WeightedOrientedGraph:
    """A simple oriented graph with vertex weights.

    ``vertices`` defaults to all of [n]; induced subgraphs keep the ambient
    ``n`` so their edge ideals live in the same polynomial ring. ``weights``
    is indexed by vertex - 1 and only entries for ``vertices`` matter.
    """

    n: int
    edges: frozenset[Edge]
    weights: tuple[int, ...]
    vertices: frozenset[int] = field(default=None)

    def __post_init__(self):
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        object.__setattr__(self, "edges", edges)
        verts = frozenset(range(1, self.n + 1)) if self.vertices is None else frozenset(self.vertices)
        object.__setattr__(self, "vertices", verts)
        weights = tuple(int(x) for x in self.weights)
        object.__setattr__(self, "weights", weights)

        if len(weights) != self.n:
            raise GraphInvariantError("weight-length", f"expected {self.n} weights, got {len(weights)}")
        if any(not 1 <= v <= self.n for v in verts):
            raise GraphInvariantError("vertex-range", f"vertices must lie in 1..{self.n}")
        for i, j in edges:
            if i == j:
                raise GraphInvariantError("loop", f"loop at vertex {i}")
            if i not in verts or j not in verts:
                raise GraphInvariantError("vertex-range", f"edge ({i},{j}) leaves the vertex set")
            if (j, i) in edges:
                raise GraphInvariantError("double-edge", f"both ({i},{j}) and ({j},{i}) present")
        touched = {v for e in edges for v in e}
        isolated = sorted(verts - touched)
        if isolated:
            raise GraphInvariantError("isolated-vertex", f"isolated vertices {isolated}")
        for v in verts:
            if weights[v - 1] < 1:
                raise GraphInvariantError("weight-positive", f"w({v}) = {weights[v - 1]} is not positive")
            if self.is_source(v) and weights[v - 1] != 1:
                raise GraphInvariantError("weighted-source", f"source vertex {v} has weight {weights[v - 1]}")

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[Edge],
        weights: Mapping[int, int] | Sequence[int] | None = None,
        normalize_sources: bool = False,
    ) -> WeightedOrientedGraph:
        """Construct from edges and a weight map (omitted weights are 1).

        With ``normalize_sources`` a weighted source is reset to weight 1 with
        a warning instead of being rejected.
        """
        edges = frozenset(tuple(e) for e in edges)
        if weights is None:
            w = [1] * n
        elif isinstance(weights, Mapping):
            w = [1] * n
            for v, x in weights.items():
                v = int(v)
                if not 1 <= v <= n:
                    raise GraphInvariantError("vertex-range", f"weight given for vertex {v} outside 1..{n}")
                w[v - 1] = int(x)
        else:
            w = list(weights)
        if normalize_sources:
            heads = {j for _, j in edges}
            for v in range(1, n + 1):
                if v not in heads and w[v - 1] != 1:
                    warnings.warn(f"source vertex {v} had weight {w[v - 1]}; reset to 1", stacklevel=2)
                    w[v - 1] = 1
        return cls(n, edges, tuple(w))

    def w(self, v: int) -> int:
        return self.weights[v - 1]

    def in_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(i for i, j in self.edges if j == v)

    def out_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(j for i, j in self.edges if i == v)

    def out_neighborhood(self, vs: Iterable[int]) -> frozenset[int]:
        vs = set(vs)
        return frozenset(j for i, j in self.edges if i in vs)

    def is_source(self, v: int) -> bool:
        return not any(j == v for _, j in self.edges)

    def is_sink(self, v: int) -> bool:
        return not any(i == v for i, _ in self.edges)

    def sources(self) -> frozenset[int]:
        return frozenset(v for v in self.vertices if self.is_source(v))

    def sinks(self) -> frozenset[int]:
        return frozenset(v for v in self.vertices if self.is_sink(v))

    def underlying_edges(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    def is_independent(self, vs: Iterable[int]) -> bool:
        vs = set(vs)
        return not any(i in vs and j in vs for i, j in self.edges)

    def is_complete(self) -> bool:
        k = len(self.vertices)
        return len(self.edges) == k * (k - 1) // 2

    def total_weight(self) -> int:
        """|w| over the vertex set."""
        return sum(self.w(v) for v in self.vertices)

    def max_weight(self) -> int:
        return max(self.w(v) for v in self.vertices)

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "edges": [list(e) for e in sorted(self.edges)],
            "weights": {str(v): self.w(v) for v in sorted(self.vertices) if self.w(v) != 1},
        }
        if self.vertices != frozenset(range(1, self.n + 1)):
            out["vertices"] = sorted(self.vertices)
        return out


def edge_ideal(graph: WeightedOrientedGraph) -> MonomialIdeal:
    """I(D, w)."""
    gens = []
    for i, j in graph.edges:
        a = [0] * graph.n
        a[i - 1] = 1
        a[j - 1] = graph.w(j)
        gens.append(tuple(a))
    return MonomialIdeal(graph.n, tuple(gens))


def graph_edge_ideal(n: int, edges: Iterable[Iterable[int]]) -> MonomialIdeal:
    """The squarefree edge ideal of an undirected edge list."""
    return MonomialIdeal.squarefree(n, edges)


def underlying_edge_ideal(graph: WeightedOrientedGraph) -> MonomialIdeal:
    """I(G) for the underlying undirected graph G."""
    return graph_edge_ideal(graph.n, graph.edges)


def induced_subgraph_with_weights(graph: WeightedOrientedGraph, keep: Iterable[int]) -> WeightedOrientedGraph:
    """D_U with the induced weights w_U (new sources get weight 1).

    Vertices of U left isolated in D_U are dropped, with a log notice.
    """
    keep = frozenset(keep)
    if not keep:
        raise DomainError("cannot induce on the empty vertex set")
    if not keep <= graph.vertices:
        raise DomainError(f"vertices {sorted(keep - graph.vertices)} are not in the graph")
    edges = frozenset((i, j) for i, j in graph.edges if i in keep and j in keep)
    touched = {v for e in edges for v in e}
    dropped = keep - touched
    if dropped:
        log.info("dropping isolated vertices %s from the induced subgraph", sorted(dropped))
    verts = frozenset(touched)
    heads = {j for _, j in edges}
    weights = tuple(graph.weights[v - 1] if v in heads else 1 for v in range(1, graph.n + 1))
    if not verts:
        raise DomainError("induced subgraph has no edges")
    return WeightedOrientedGraph(graph.n, edges, weights, verts)


def _check_below_weights(graph: WeightedOrientedGraph, a: Exponent) -> None:
    for v in range(1, graph.n + 1):
        w = graph.w(v) if v in graph.vertices else 1
        if a[v - 1] >= w:
            raise DomainError(f"a_{v} = {a[v - 1]} is not below w({v}) = {w}")


def radical_colon_formula(graph: WeightedOrientedGraph, a: Sequence[int]) -> MonomialIdeal:
    """sqrt(I(D,w) : x^a) = I(G \\ U) + (x_i : i ∈ U) with U = N^+(supp a).

    Requires a_j < w(j) for every vertex.
    """
    a = _check_exponent(a, graph.n)
    _check_below_weights(graph, a)
    U = graph.out_neighborhood(support(a))
    outside = [e for e in graph.edges if not set(e) & U]
    return graph_edge_ideal(graph.n, outside) + MonomialIdeal.variables(graph.n, U)


def _check_sink_support(graph: WeightedOrientedGraph, vertices: Iterable[int]) -> None:
    vertices = set(vertices)
    bad = sorted(v for v in vertices if v not in graph.vertices or not graph.is_sink(v))
    if bad:
        raise DomainError(f"vertices {bad} are not sinks of the graph")
    if not graph.is_independent(vertices):
        raise DomainError("the vertex set is not independent")


def capacity(graph: WeightedOrientedGraph, a: Sequence[int], W: Iterable[int]) -> Fraction:
    """c(W) = Σ_{j ∈ W} a_j / w(j), exactly."""
    return sum((Fraction(a[j - 1], graph.w(j)) for j in W), Fraction(0))


@dataclass(frozen=True)
class CapacitySet:
    """W with its exact capacity; ``minimal`` means c(W) >= 1 and every proper subset is below 1."""

    vertices: frozenset[int]
    capacity: Fraction
    minimal: bool = True


def minimal_capacity_sets(graph: WeightedOrientedGraph, a: Sequence[int]) -> list[CapacitySet]:
    """Inclusion-minimal W ⊆ supp a with c(W) >= 1, sorted by (size, vertices)."""
    a = _check_exponent(a, graph.n)
    supp = sorted(support(a))
    _check_sink_support(graph, supp)
    found: list[frozenset[int]] = []
    out = []
    for k in range(1, len(supp) + 1):
        for W in itertools.combinations(supp, k):
            W = frozenset(W)
            if any(f <= W for f in found):
                continue
            c = capacity(graph, a, W)
            if c >= 1:
                found.append(W)
                out.append(CapacitySet(W, c))
    return out


def neighbor_intersection_ideal(graph: WeightedOrientedGraph, W: Iterable[int]) -> MonomialIdeal:
    """n(W) = ⋂_{j ∈ W} (x_k : k ∈ N^-(j)) for a set of sinks W."""
    W = sorted(set(W))
    _check_sink_support(graph, W)
    if not W:
        raise DomainError("n(W) needs a nonempty W")
    out = MonomialIdeal.variables(graph.n, graph.in_neighbors(W[0]))
    for j in W[1:]:
        out = out & MonomialIdeal.variables(graph.n, graph.in_neighbors(j))
    return out


def closure_radical_formula(graph: WeightedOrientedGraph, a: Sequence[int]) -> MonomialIdeal:
    """sqrt(closure(I(D,w)) : x^a) = I(G) + Σ_{W ∈ 𝒰} n(W).

    supp a must be an independent set of sinks with a_j < w(j); 𝒰 is the
    family of minimal sets of capacity at least 1.
    """
    a = _check_exponent(a, graph.n)
    _check_below_weights(graph, a)
    out = underlying_edge_ideal(graph)
    for cs in minimal_capacity_sets(graph, a):
        out = out + neighbor_intersection_ideal(graph, cs.vertices)
    return out


def acyclicity_check(
    graph: WeightedOrientedGraph,
    sinks: Iterable[int],
    family: Iterable[Iterable[int]],
    field: int = RATIONALS,
) -> bool:
    """Whether Δ(I(G) + Σ_{W ∈ family} n(W)) is acyclic."""
    sinks = frozenset(sinks)
    family = [frozenset(W) for W in family]
    _check_sink_support(graph, sinks)
    if not family or any(not W for W in family):
        raise DomainError("the family must be a nonempty collection of nonempty sets")
    if any(not W <= sinks for W in family):
        raise DomainError("family members must be subsets of the sink set")
    ideal = underlying_edge_ideal(graph)
    for W in family:
        ideal = ideal + neighbor_intersection_ideal(graph, W)
    return is_acyclic(stanley_reisner_complex(ideal), field)


# -- complete graphs ------------------------------------------------------------


def _require_complete(graph: WeightedOrientedGraph) -> None:
    if not graph.is_complete():
        raise DomainError("the graph is not a complete oriented graph")


def _sources_within(graph: WeightedOrientedGraph, verts: frozenset[int]) -> frozenset[int]:
    return frozenset(v for v in verts if not any(i in verts and j == v for i, j in graph.edges))


def find_admissible_vertex(graph: WeightedOrientedGraph) -> int:
    """Smallest vertex j whose removal turns no non-source into a source."""
    _require_complete(graph)
    if len(graph.vertices) < 4:
        raise DomainError("admissible vertices are only guaranteed on at least 4 vertices")
    old = graph.sources()
    for j in sorted(graph.vertices):
        rest = graph.vertices - {j}
        if _sources_within(graph, rest) <= old:
            return j
    raise DomainError("no admissible vertex")


def is_type_one(graph: WeightedOrientedGraph) -> bool:
    """D has a source u and D \\ u has a source too."""
    _require_complete(graph)
    for u in graph.sources():
        if _sources_within(graph, graph.vertices - {u}):
            return True
    return False


def complete_graph_reg(graph: WeightedOrientedGraph) -> int:
    """Closed-form reg(I(D,w)) for a complete oriented graph.

    |w| on two vertices; otherwise |w| - n + 2 for type 1 and |w| - n + 1.
    """
    _require_complete(graph)
    k = len(graph.vertices)
    if k == 2:
        return graph.total_weight()
    return graph.total_weight() - k + (2 if is_type_one(graph) else 1)


def complete_closure_reg(graph_or_weights) -> int:
    """Closed-form reg of the integral closure for a complete graph: max w + 1."""
    if isinstance(graph_or_weights, WeightedOrientedGraph):
        _require_complete(graph_or_weights)
        return graph_or_weights.max_weight() + 1
    return max(graph_or_weights) + 1


def membership_hypotheses(graph: WeightedOrientedGraph, a: Sequence[int], induced: bool = False) -> bool:
    """a_j <= w(j), |a| >= max w + 1 and |supp a| >= 3.

    With ``induced`` the bound a_j <= w(j) is taken against the induced
    weights on supp a, so a vertex that becomes a source there needs a_j <= 1.
    Only the induced form is sufficient for membership in the closure.
    """
    if induced:
        S = support(a)
        heads = {j for i, j in graph.edges if i in S and j in S}
        if any(a[v - 1] > 1 and v not in heads for v in S):
            return False
    return (
        all(a[v - 1] <= graph.w(v) for v in graph.vertices)
        and sum(a) >= graph.max_weight() + 1
        and len(support(a)) >= 3
    )


def membership_sufficient_condition(graph: WeightedOrientedGraph, a: Sequence[int]) -> bool:
    """Whether x^a is in the closure of I(D,w), by the exact LP.

    On a complete graph with at least 3 vertices the answer is True whenever
    ``membership_hypotheses(graph, a, induced=True)`` holds. The plain
    hypotheses are not enough: for edges 1->4, 2->1, 2->3, 2->4, 3->1, 3->4
    with w = (4, 1, 3, 4), a = (1, 0, 2, 2) satisfies them but is outside.
    """
    _require_complete(graph)
    if len(graph.vertices) < 3:
        raise DomainError("needs a complete graph on at least 3 vertices")
    a = _check_exponent(a, graph.n)
    return np_membership(edge_ideal(graph), a).member


def closure_edge_ideal(graph: WeightedOrientedGraph) -> MonomialIdeal:
    return integral_closure(edge_ideal(graph))


def all_orientations(n: int) -> Iterable[frozenset[Edge]]:
    """Every orientation of the complete graph K_n."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for flips in itertools.product((False, True), repeat=len(pairs)):
        yield frozenset((j, i) if f else (i, j) for (i, j), f in zip(pairs, flips))
