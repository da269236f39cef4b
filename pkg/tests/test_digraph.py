import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoreg.digraph import (
    WeightedOrientedGraph,
    acyclicity_check,
    all_orientations,
    capacity,
    closure_radical_formula,
    complete_closure_reg,
    complete_graph_reg,
    edge_ideal,
    find_admissible_vertex,
    induced_subgraph_with_weights,
    is_type_one,
    membership_hypotheses,
    membership_sufficient_condition,
    minimal_capacity_sets,
    neighbor_intersection_ideal,
    radical_colon_formula,
    underlying_edge_ideal,
)
from monoreg.exceptions import DomainError, GraphInvariantError
from monoreg.io import parse_ideal
from monoreg.monomial import MonomialIdeal
from monoreg.newton import integral_closure, np_membership
from monoreg.regularity import regularity
from monoreg.verify import EXAMPLE_EXPONENT, EXAMPLE_GENERATORS, example_graph, random_complete_graph, triangle_certificate

from .conftest import graphs

CYCLE = frozenset({(1, 2), (2, 3), (3, 1)})
TRIANGLE = WeightedOrientedGraph(3, CYCLE, (6, 3, 5))


def transitive(n, weights):
    edges = frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    return WeightedOrientedGraph(n, edges, tuple(weights))


def is_admissible(g, j):
    rest = g.vertices - {j}
    return not any(not g.is_source(v) and not (g.in_neighbors(v) & rest) for v in rest)


def test_edge_ideal_examples():
    assert edge_ideal(TRIANGLE) == MonomialIdeal(3, ((1, 3, 0), (0, 1, 5), (6, 0, 1)))
    g = example_graph()
    assert edge_ideal(g) == parse_ideal(EXAMPLE_GENERATORS, 10)
    assert len(edge_ideal(g).gens) == 13
    plain = WeightedOrientedGraph(3, CYCLE, (1, 1, 1))
    assert edge_ideal(plain) == underlying_edge_ideal(TRIANGLE) == MonomialIdeal.squarefree(3, [{1, 2}, {2, 3}, {1, 3}])


@pytest.mark.parametrize(
    "n, edges, weights, rule",
    [
        (2, [(1, 1)], (1, 1), "loop"),
        (2, [(1, 2), (2, 1)], (1, 1), "double-edge"),
        (3, [(1, 2)], (1, 1, 1), "isolated-vertex"),
        (2, [(1, 2)], (2, 1), "weighted-source"),
        (2, [(1, 2)], (1, 0), "weight-positive"),
        (2, [(1, 2)], (1,), "weight-length"),
        (2, [(1, 3)], (1, 1), "vertex-range"),
    ],
)
def test_invariant_violations_name_the_rule(n, edges, weights, rule):
    with pytest.raises(GraphInvariantError) as exc:
        WeightedOrientedGraph(n, frozenset(edges), weights)
    assert exc.value.rule == rule


def test_normalize_sources_warns():
    with pytest.warns(UserWarning):
        g = WeightedOrientedGraph.build(2, [(1, 2)], {1: 3, 2: 2}, normalize_sources=True)
    assert g.weights == (1, 2)


def test_induced_subgraph_examples():
    assert induced_subgraph_with_weights(TRIANGLE, {1, 2, 3}) == TRIANGLE
    sub = induced_subgraph_with_weights(TRIANGLE, {2, 3})
    assert sub.edges == {(2, 3)} and sub.w(3) == 5 and sub.w(2) == 1 and sub.is_source(2)
    with pytest.raises(DomainError):
        induced_subgraph_with_weights(TRIANGLE, set())


def test_induced_subgraph_drops_isolated_vertices():
    g = WeightedOrientedGraph(4, frozenset({(1, 2), (3, 4)}), (1, 2, 1, 3))
    sub = induced_subgraph_with_weights(g, {1, 2, 3})
    assert sub.vertices == {1, 2}


def test_radical_colon_examples():
    assert radical_colon_formula(TRIANGLE, (0, 0, 4)) == parse_ideal("x1, x2*x3")
    assert radical_colon_formula(TRIANGLE, (0, 0, 0)) == underlying_edge_ideal(TRIANGLE)
    with pytest.raises(DomainError):
        radical_colon_formula(TRIANGLE, (6, 0, 0))


def test_capacity_examples():
    g, a = example_graph(), EXAMPLE_EXPONENT
    assert capacity(g, a, {7, 10}) == 1
    assert capacity(g, a, {7, 8}) == Fraction(13, 14)
    assert capacity(g, a, set()) == 0
    family = minimal_capacity_sets(g, a)
    assert [sorted(cs.vertices) for cs in family] == [[7, 10], [7, 8, 9], [8, 9, 10]]
    assert all(cs.minimal and cs.capacity >= 1 for cs in family)


def test_capacity_requires_independent_sinks():
    with pytest.raises(DomainError):
        minimal_capacity_sets(TRIANGLE, (1, 0, 0))


def test_neighbor_intersections():
    g = example_graph()
    assert neighbor_intersection_ideal(g, {7}) == MonomialIdeal.variables(10, [2, 3, 4])
    assert neighbor_intersection_ideal(g, {7, 10}) == parse_ideal("x2, x3*x6, x4*x6", 10)
    assert neighbor_intersection_ideal(g, {8, 9}) == MonomialIdeal.variables(10, [5])
    with pytest.raises(DomainError):
        neighbor_intersection_ideal(g, {2})


def test_closure_radical_examples():
    g = example_graph()
    want = edge_ideal(g).radical() + parse_ideal("x2, x3*x5, x3*x6, x4*x5, x4*x6, x5*x6", 10)
    assert closure_radical_formula(g, EXAMPLE_EXPONENT) == want
    assert closure_radical_formula(g, (0,) * 10) == underlying_edge_ideal(g)


def test_acyclicity_examples():
    g = example_graph()
    assert acyclicity_check(g, {7}, [{7}])
    assert acyclicity_check(g, {7, 8, 9, 10}, [{7, 8, 9}, {7, 10}, {8, 9, 10}])
    with pytest.raises(DomainError):
        acyclicity_check(g, {7}, [])
    with pytest.raises(DomainError):
        acyclicity_check(g, {7}, [{8}])


def test_admissible_vertex_examples():
    g = transitive(4, (1, 2, 2, 2))
    assert is_admissible(g, 4)
    assert is_admissible(g, find_admissible_vertex(g))
    with pytest.raises(DomainError):
        find_admissible_vertex(WeightedOrientedGraph(3, CYCLE, (1, 1, 1)))
    with pytest.raises(DomainError):
        find_admissible_vertex(example_graph())


@pytest.mark.parametrize("n", [4, 5])
def test_admissible_vertex_exhaustive(n):
    for edges in all_orientations(n):
        g = WeightedOrientedGraph(n, edges, (1,) * n)
        assert is_admissible(g, find_admissible_vertex(g))


def test_complete_formula_examples():
    assert not is_type_one(TRIANGLE)
    assert complete_graph_reg(TRIANGLE) == 12 and complete_closure_reg(TRIANGLE) == 7
    for t in (1, 2, 3, 4):
        g = transitive(3, (1, 1, t))
        assert is_type_one(g)
        assert complete_graph_reg(g) == t + 1 == regularity(edge_ideal(g)).reg_ideal
    edge = WeightedOrientedGraph(2, frozenset({(1, 2)}), (1, 3))
    assert complete_graph_reg(edge) == 4 == regularity(edge_ideal(edge)).reg_ideal
    assert regularity(integral_closure(edge_ideal(edge))).reg_ideal == 4
    with pytest.raises(DomainError):
        complete_graph_reg(example_graph())


def test_formula_with_weight_one_vertex_disagrees():
    """Cyclic triangle with a weight-1 vertex: the engine and the oracle give 3, the formula 2."""
    from monoreg.regularity import regularity_oracle_koszul

    g = WeightedOrientedGraph(3, CYCLE, (2, 1, 1))
    ideal = edge_ideal(g)
    assert regularity(ideal).reg_ideal == regularity_oracle_koszul(ideal).reg_ideal == 3
    assert complete_graph_reg(g) == 2


def test_membership_examples():
    assert membership_hypotheses(TRIANGLE, (5, 1, 1))
    assert membership_sufficient_condition(TRIANGLE, (5, 1, 1))
    assert not edge_ideal(TRIANGLE).contains((5, 1, 1))
    assert not membership_sufficient_condition(TRIANGLE, (1, 1, 0))
    with pytest.raises(DomainError):
        membership_sufficient_condition(example_graph(), (0,) * 10)


def test_plain_membership_hypotheses_are_not_sufficient():
    g = WeightedOrientedGraph(4, frozenset({(1, 4), (2, 1), (2, 3), (2, 4), (3, 1), (3, 4)}), (4, 1, 3, 4))
    a = (1, 0, 2, 2)
    assert membership_hypotheses(g, a) and not membership_hypotheses(g, a, induced=True)
    res = np_membership(edge_ideal(g), a)
    assert not res.member and res.separator.verify(edge_ideal(g), a)
    assert not membership_sufficient_condition(g, a)


@pytest.mark.parametrize("w", [(2, 2, 2), (3, 4, 5), (4, 2, 3)])
def test_explicit_triangle_certificate(w):
    w1, w2, w3 = w
    ideal = MonomialIdeal(3, ((1, w2, 0), (0, 1, w3), (w1, 0, 1)))
    coeffs = triangle_certificate(w1, w2, w3)
    point = [sum(coeffs[k] * g[j] for k, g in enumerate(((1, w2, 0), (0, 1, w3), (w1, 0, 1)))) for j in range(3)]
    assert sum(coeffs.values()) == 1 and all(c >= 0 for c in coeffs.values())
    assert all(p <= x for p, x in zip(point, (1, 1, w3 - 1)))
    assert np_membership(ideal, (1, 1, w3 - 1)).member


def test_rho_equals_weight():
    g = example_graph()
    ideal = edge_ideal(g)
    for v in g.vertices:
        assert ideal.rho(v) == (1 if g.is_source(v) else g.w(v))


# -- properties ------------------------------------------------------------------


@given(graphs(), st.data())
def test_induced_weights_identity(g, data):
    U = data.draw(st.sets(st.sampled_from(sorted(g.vertices)), min_size=2))
    try:
        sub = induced_subgraph_with_weights(g, U)
        lhs_sub = edge_ideal(sub)
    except DomainError:
        lhs_sub = MonomialIdeal.zero(g.n)
    outside = MonomialIdeal.variables(g.n, set(range(1, g.n + 1)) - U)
    assert edge_ideal(g) + outside == lhs_sub + outside


@given(graphs(), st.data())
def test_radical_colon_formula_matches_direct(g, data):
    a = tuple(data.draw(st.integers(0, g.w(v) - 1)) for v in range(1, g.n + 1))
    assert radical_colon_formula(g, a) == edge_ideal(g).colon(a).radical()


@settings(max_examples=30)
@given(graphs(n_max=5, w_max=3), st.data())
def test_closure_radical_formula_matches_direct(g, data):
    sinks = sorted(g.sinks())
    chosen = []
    for s in sinks:
        if g.is_independent(chosen + [s]) and data.draw(st.booleans()):
            chosen.append(s)
    a = tuple(data.draw(st.integers(0, g.w(v) - 1)) if v in chosen else 0 for v in range(1, g.n + 1))
    assert closure_radical_formula(g, a) == integral_closure(edge_ideal(g)).colon(a).radical()


@given(graphs())
def test_rho_matches_weights(g):
    ideal = edge_ideal(g)
    for v in g.vertices:
        assert ideal.rho(v) == g.w(v)


@settings(max_examples=25)
@given(st.integers(0, 2**32), st.sampled_from([3, 4]))
def test_complete_formulas_when_heavy(seed, n):
    """With every non-source weight at least 2 the closed forms match the engine."""
    rng = random.Random(seed)
    g = random_complete_graph(rng, n, 4)
    heavy = tuple(1 if g.is_source(v) else max(2, g.w(v)) for v in range(1, n + 1))
    g = WeightedOrientedGraph(n, g.edges, heavy)
    ideal = edge_ideal(g)
    assert regularity(ideal).reg_ideal == complete_graph_reg(g)
    assert regularity(integral_closure(ideal)).reg_ideal == complete_closure_reg(g)


@settings(max_examples=25)
@given(st.integers(0, 2**32))
def test_membership_condition_under_hypotheses(seed):
    rng = random.Random(seed)
    g = random_complete_graph(rng, rng.choice([3, 4]), 4)
    for a in itertools.product(*(range(g.w(v) + 1) for v in range(1, g.n + 1))):
        if membership_hypotheses(g, a, induced=True):
            assert membership_sufficient_condition(g, a)
