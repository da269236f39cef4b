"""Randomized verification suites and golden checks.

Each suite draws instances from a seeded generator, checks one property per
instance and records every failing instance verbatim so it can be replayed
with :func:`replay`. Instance ``k`` of a run is drawn from its own RNG seeded
by ``(suite, seed, k)``, so results do not depend on scheduling.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .digraph import (
    WeightedOrientedGraph,
    acyclicity_check,
    all_orientations,
    closure_radical_formula,
    complete_closure_reg,
    complete_graph_reg,
    edge_ideal,
    find_admissible_vertex,
    minimal_capacity_sets,
    neighbor_intersection_ideal,
    radical_colon_formula,
    underlying_edge_ideal,
)
from .exceptions import DomainError
from .io import graph_from_json, ideal_from_json, ideal_to_json, parse_ideal
from .monomial import MonomialIdeal
from .newton import NewtonPolyhedron, RationalCertificate, integral_closure, np_membership
from .regularity import regularity, regularity_oracle_koszul
from .simplicial import cone_apexes, reduced_homology_dims, stanley_reisner_complex

DEFAULT_SEED = 7
EDGE_PROBABILITIES = (0.3, 0.5, 0.8)
MAX_N = 8
MAX_WEIGHT = 6


def default_seed() -> int:
    return int(os.environ.get("MC_SEED", DEFAULT_SEED))


# -- random instances -------------------------------------------------------------


def random_graph(rng: random.Random, n: int, w_max: int, p: float | None = None) -> WeightedOrientedGraph:
    """Erdős–Rényi underlying graph, uniform orientation, uniform weights.

    Graphs with isolated vertices are resampled; sources get weight 1.
    """
    if n < 2:
        raise DomainError("a graph without isolated vertices needs at least 2 vertices")
    if p is None:
        p = rng.choice(EDGE_PROBABILITIES)
    while True:
        pairs = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
        if {v for e in pairs for v in e} == set(range(1, n + 1)):
            break
    edges = [(j, i) if rng.random() < 0.5 else (i, j) for i, j in pairs]
    weights = [rng.randint(1, w_max) for _ in range(n)]
    heads = {j for _, j in edges}
    weights = [w if v + 1 in heads else 1 for v, w in enumerate(weights)]
    return WeightedOrientedGraph(n, frozenset(edges), tuple(weights))


def random_complete_graph(rng: random.Random, n: int, w_max: int) -> WeightedOrientedGraph:
    return random_graph(rng, n, w_max, p=1.0)


def random_ideal(rng: random.Random, n_max: int, rho_max: int, gens_max: int) -> MonomialIdeal:
    """A nonzero proper monomial ideal with n <= n_max and every rho_j <= rho_max."""
    n = rng.randint(1, n_max)
    while True:
        k = rng.randint(1, gens_max)
        gens = [tuple(rng.randint(0, rho_max) for _ in range(n)) for _ in range(k)]
        ideal = MonomialIdeal(n, tuple(g for g in gens if any(g)))
        if not ideal.is_zero:
            return ideal


def _random_graph_with_sinks(rng: random.Random, n_max: int, w_max: int, weighted: bool) -> WeightedOrientedGraph:
    for _ in range(1000):
        g = random_graph(rng, rng.randint(2, n_max), w_max)
        sinks = [v for v in g.sinks() if not weighted or g.w(v) > 1]
        if sinks:
            return g
    raise DomainError("could not draw a graph with a suitable sink")


# -- run records ------------------------------------------------------------------


@dataclass
class VerificationRun:
    suite: str
    seed: int
    count: int
    params: dict = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    timings_ms: list[float] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "seed": self.seed,
            "count": self.count,
            "params": self.params,
            "passed": self.passed,
            "failures": self.failures,
            "summary": self.summary,
        }
        if timing:
            out["timings_ms"] = [round(t, 3) for t in self.timings_ms]
        return out


# -- suites -------------------------------------------------------------------------
#
# A suite is a pair (make, check): make(rng, index, params) -> instance (JSON data),
# check(instance) -> (ok, detail). Instances carry everything needed to replay.


def _main_make(rng, index, params):
    g = random_graph(rng, rng.randint(2, params["n"]), params["wmax"])
    return {"graph": g.to_json(), "char": params.get("char", 0)}


def _main_check(inst):
    g = graph_from_json(inst["graph"])
    ideal = edge_ideal(g)
    closure = integral_closure(ideal)
    r_ideal = regularity(ideal, inst["char"]).reg_ideal
    r_closure = regularity(closure, inst["char"]).reg_ideal
    return r_closure <= r_ideal, {"reg": r_ideal, "reg_closure": r_closure}


def _complete_instances(params) -> list[dict]:
    """Exhaustive instances: every orientation of K_n and every admissible weight vector."""
    n, w_max = params["n"], params["wmax"]
    out = []
    seen = set()
    for edges in all_orientations(n):
        heads = {j for _, j in edges}
        ranges = [range(1, w_max + 1) if v in heads else (1,) for v in range(1, n + 1)]
        for w in itertools.product(*ranges):
            key = (edges, w)
            if key not in seen:
                seen.add(key)
                g = WeightedOrientedGraph(n, edges, w)
                out.append({"graph": g.to_json()})
    return out


def _complete_make(rng, index, params):
    return {"graph": random_complete_graph(rng, params["n"], params["wmax"]).to_json()}


def _complete_check(inst):
    g = graph_from_json(inst["graph"])
    ideal = edge_ideal(g)
    reg = regularity(ideal).reg_ideal
    reg_closure = regularity(integral_closure(ideal)).reg_ideal
    predicted = complete_graph_reg(g)
    predicted_closure = complete_closure_reg(g)
    detail = {
        "reg": reg,
        "formula_reg": predicted,
        "reg_closure": reg_closure,
        "formula_closure": predicted_closure,
        "trivial_weights_only": all(g.w(v) == 1 for v in g.vertices),
    }
    return reg == predicted and reg_closure == predicted_closure, detail


def _radical_make(rng, index, params):
    kind = "edge" if index < params["count"] else "closure"
    if kind == "edge":
        g = random_graph(rng, rng.randint(2, params["n"]), params["wmax"])
        a = [rng.randint(0, g.w(v) - 1) for v in range(1, g.n + 1)]
    else:
        g = _random_graph_with_sinks(rng, params["n"], params["wmax"], weighted=True)
        eligible = sorted(v for v in g.sinks() if g.w(v) > 1)
        chosen = [v for v in eligible if rng.random() < 0.7] or [rng.choice(eligible)]
        a = [rng.randint(1, g.w(v) - 1) if v in chosen else 0 for v in range(1, g.n + 1)]
    return {"kind": kind, "graph": g.to_json(), "a": a}


def _radical_check(inst):
    g = graph_from_json(inst["graph"])
    a = tuple(inst["a"])
    ideal = edge_ideal(g)
    if inst["kind"] == "edge":
        formula = radical_colon_formula(g, a)
        direct = ideal.colon(a).radical()
    else:
        formula = closure_radical_formula(g, a)
        direct = integral_closure(ideal).colon(a).radical()
    return formula == direct, {"formula": str(formula), "direct": str(direct)}


def _acyclic_make(rng, index, params):
    g = _random_graph_with_sinks(rng, params["n"], params["wmax"], weighted=False)
    sinks = sorted(g.sinks())
    U = [v for v in sinks if rng.random() < 0.6] or [rng.choice(sinks)]
    subsets = [list(s) for k in range(1, len(U) + 1) for s in itertools.combinations(U, k)]
    family = [s for s in subsets if rng.random() < 0.4] or [rng.choice(subsets)]
    return {"graph": g.to_json(), "sinks": U, "family": family}


def _acyclic_check(inst):
    g = graph_from_json(inst["graph"])
    ok = acyclicity_check(g, inst["sinks"], inst["family"])
    return ok, {}


def _oracle_make(rng, index, params):
    ideal = random_ideal(rng, params["n"], params["rho"], params["gens"])
    return {"ideal": ideal_to_json(ideal)}


def _oracle_check(inst):
    ideal = ideal_from_json(inst["ideal"])
    detail = {}
    ok = True
    for p in (0, 2):
        engine = regularity(ideal, p).reg_ideal
        oracle = regularity_oracle_koszul(ideal, p).reg_ideal
        detail[f"char{p}"] = {"engine": engine, "oracle": oracle}
        ok &= engine == oracle
    return ok, detail


def _closure_make(rng, index, params):
    ideal = random_ideal(rng, params["n"], params["rho"], params["gens"])
    return {"ideal": ideal_to_json(ideal)}


def _closure_check(inst):
    ideal = ideal_from_json(inst["ideal"])
    closure = integral_closure(ideal)
    problems = []
    if not all(closure.contains(g) for g in ideal.gens):
        problems.append("ideal not contained in its closure")
    if integral_closure(closure) != closure:
        problems.append("closure is not integrally closed")
    rad = ideal.radical()
    if integral_closure(rad) != rad:
        problems.append("squarefree radical not fixed by closure")
    poly = NewtonPolyhedron(ideal)
    for a in itertools.product(*(range(r + 2) for r in ideal.rhos())):
        res = poly.membership(a)
        if res.member != closure.contains(a):
            problems.append(f"membership of {list(a)} disagrees with the closure")
        if res.certificate is not None and not res.certificate.verify(ideal, a):
            problems.append(f"bad certificate at {list(a)}")
        if res.separator is not None and not res.separator.verify(ideal, a):
            problems.append(f"bad separator at {list(a)}")
    return not problems, {"problems": problems[:5], "closure": str(closure)}


SUITES: dict[str, tuple[Callable, Callable, dict]] = {
    "main-inequality": (_main_make, _main_check, {"n": 6, "wmax": 4, "count": 100}),
    "complete-formulas": (_complete_make, _complete_check, {"n": 3, "wmax": 4, "count": 50}),
    "radical-formulas": (_radical_make, _radical_check, {"n": 6, "wmax": 4, "count": 100}),
    "acyclicity": (_acyclic_make, _acyclic_check, {"n": 7, "wmax": 4, "count": 100}),
    "oracle-crosscheck": (_oracle_make, _oracle_check, {"n": 4, "rho": 4, "gens": 6, "count": 200}),
    "closure-idempotence": (_closure_make, _closure_check, {"n": 4, "rho": 5, "gens": 5, "count": 100}),
}


def _instance_rng(suite: str, seed: int, index: int) -> random.Random:
    return random.Random(f"{suite}:{seed}:{index}")


def _run_one(args):
    suite, inst = args
    start = time.perf_counter()
    ok, detail = SUITES[suite][1](inst)
    return ok, detail, (time.perf_counter() - start) * 1000


def make_instances(suite: str, seed: int, params: dict) -> list[dict]:
    make = SUITES[suite][0]
    if suite == "complete-formulas" and params.get("exhaustive"):
        return _complete_instances(params)
    total = params["count"]
    if suite == "radical-formulas":
        total += params.get("closure_count", params["count"] // 2)
    return [make(_instance_rng(suite, seed, k), k, params) for k in range(total)]


def check_params(params: dict, allow_large: bool = False) -> None:
    if allow_large:
        return
    if params.get("n", 0) > MAX_N:
        raise DomainError(f"n = {params['n']} exceeds the cap {MAX_N}; pass allow_large to override")
    for key in ("wmax", "rho"):
        if params.get(key, 0) > MAX_WEIGHT:
            raise DomainError(f"{key} = {params[key]} exceeds the cap {MAX_WEIGHT}; pass allow_large to override")


def cmd_verify(
    suite: str,
    seed: int | None = None,
    workers: int = 1,
    allow_large: bool = False,
    **overrides: Any,
) -> VerificationRun:
    """Run a named suite. Unspecified parameters take the suite defaults."""
    if suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    params = dict(SUITES[suite][2])
    params.update({k: v for k, v in overrides.items() if v is not None})
    for key, value in params.items():
        if isinstance(value, int) and not isinstance(value, bool) and value < 0:
            raise DomainError(f"parameter {key} must be non-negative")
    check_params(params, allow_large)
    seed = default_seed() if seed is None else seed
    instances = make_instances(suite, seed, params)

    jobs = [(suite, inst) for inst in instances]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=4))
    else:
        results = [_run_one(job) for job in jobs]

    run = VerificationRun(suite, seed, len(instances), params)
    for k, (inst, (ok, detail, ms)) in enumerate(zip(instances, results)):
        run.timings_ms.append(ms)
        if not ok:
            run.failures.append({"index": k, "instance": inst, "detail": detail})
    run.summary = {"instances": len(instances), "failed": len(run.failures)}
    return run


def replay(suite: str, instance: dict) -> tuple[bool, dict]:
    """Re-run one recorded instance in isolation."""
    return SUITES[suite][1](instance)


# -- golden checks ----------------------------------------------------------------

TRIANGLE_IDEAL = "x1*x2^3, x2*x3^5, x3*x1^6"
EXAMPLE_GRAPH = {
    "n": 10,
    "edges": [
        [1, 2], [1, 3], [1, 4], [2, 5], [2, 6], [2, 7], [2, 10],
        [3, 7], [4, 7], [4, 8], [5, 8], [5, 9], [6, 10],
    ],
    "weights": {"7": 4, "8": 7, "9": 4, "10": 6},
}
EXAMPLE_GENERATORS = (
    "x1*x2, x1*x3, x1*x4, x2*x5, x2*x6, x2*x7^4, x2*x10^6, x3*x7^4,"
    " x4*x7^4, x4*x8^7, x5*x8^7, x5*x9^4, x6*x10^6"
)
EXAMPLE_EXPONENT = (0, 0, 0, 0, 0, 0, 2, 3, 1, 3)
EXAMPLE_EXTRA = "x2, x3*x5, x3*x6, x4*x5, x4*x6, x5*x6"


def example_graph() -> WeightedOrientedGraph:
    return graph_from_json(EXAMPLE_GRAPH)


def triangle_certificate(w1: int, w2: int, w3: int) -> dict[int, Fraction]:
    """Explicit weights on (x1 x2^w2, x2 x3^w3, x3 x1^w1) putting (1, 1, w3 - 1) in NP."""
    c3 = Fraction(w2 - 1, w2 * w1 - w1 + 1)
    c2 = (w1 - 1) * c3
    return {0: 1 - c2 - c3, 1: c2, 2: c3}


def _golden_checks() -> list[tuple[str, Callable[[], tuple[bool, Any]]]]:
    def strictness():
        ideal = parse_ideal(TRIANGLE_IDEAL)
        got = (regularity(ideal).reg_ideal, regularity(integral_closure(ideal)).reg_ideal)
        return got == (12, 7), {"reg": got[0], "reg_closure": got[1]}

    def example_parse():
        g = example_graph()
        nontrivial = sum(1 for v in g.vertices if g.w(v) > 1)
        got = (len(g.vertices), len(g.edges), nontrivial)
        return got == (10, 13, 4), {"vertices_edges_weights": got}

    def example_generators():
        got = edge_ideal(example_graph())
        return got == parse_ideal(EXAMPLE_GENERATORS, 10), {"ideal": str(got)}

    def example_neighbors():
        g = example_graph()
        got = {v: sorted(g.in_neighbors(v)) for v in (7, 8, 9, 10)}
        return got == {7: [2, 3, 4], 8: [4, 5], 9: [5], 10: [2, 6]}, {"in_neighbors": got}

    def example_family():
        got = sorted(sorted(cs.vertices) for cs in minimal_capacity_sets(example_graph(), EXAMPLE_EXPONENT))
        return got == [[7, 8, 9], [7, 10], [8, 9, 10]], {"family": got}

    def example_radical_direct():
        ideal = edge_ideal(example_graph())
        expected = ideal.radical() + parse_ideal(EXAMPLE_EXTRA, 10)
        got = integral_closure(ideal).colon(EXAMPLE_EXPONENT).radical()
        return got == expected, {"direct": str(got)}

    def example_radical_closed_form():
        g = example_graph()
        expected = edge_ideal(g).radical() + parse_ideal(EXAMPLE_EXTRA, 10)
        got = closure_radical_formula(g, EXAMPLE_EXPONENT)
        summed = underlying_edge_ideal(g)
        for W in ([7, 8, 9], [7, 10], [8, 9, 10]):
            summed = summed + neighbor_intersection_ideal(g, W)
        return got == expected == summed, {"closed_form": str(got)}

    def two_vertex_rule():
        got = {}
        for w2 in (2, 3, 4):
            g = WeightedOrientedGraph(2, frozenset({(1, 2)}), (1, w2))
            ideal = edge_ideal(g)
            got[w2] = (regularity(ideal).reg_ideal, regularity(integral_closure(ideal)).reg_ideal)
        return all(v == (1 + w2, 1 + w2) for w2, v in got.items()), {"reg_pairs": got}

    def triangle_formulas():
        g = WeightedOrientedGraph(3, frozenset({(1, 2), (2, 3), (3, 1)}), (6, 3, 5))
        got = (complete_graph_reg(g), complete_closure_reg(g))
        return got == (12, 7), {"formulas": got}

    def rho_equals_weight():
        g = example_graph()
        ideal = edge_ideal(g)
        bad = [v for v in g.vertices if not g.is_source(v) and ideal.rho(v) != g.w(v)]
        return not bad, {"mismatch": bad}

    def triangle_vertex_certificate():
        w1, w2, w3 = 3, 4, 5
        ideal = MonomialIdeal(3, ((1, w2, 0), (0, 1, w3), (w1, 0, 1)))
        coeffs = triangle_certificate(w1, w2, w3)
        # map to the ideal's canonical generator order
        order = [ideal.gens.index(g) for g in ((1, w2, 0), (0, 1, w3), (w1, 0, 1))]
        cert = RationalCertificate({order[k]: c for k, c in coeffs.items()})
        a = (1, 1, w3 - 1)
        return cert.verify(ideal, a) and np_membership(ideal, a).member, {"certificate": {str(k): str(v) for k, v in coeffs.items()}}

    def sink_cone():
        g = example_graph()
        ideal = underlying_edge_ideal(g) + neighbor_intersection_ideal(g, [7])
        return 7 in cone_apexes(stanley_reisner_complex(ideal)), {}

    def empty_complex_homology():
        cx = stanley_reisner_complex(MonomialIdeal.maximal(4))
        dims = reduced_homology_dims(cx).nonzero()
        return cx.is_empty_complex and dims == {-1: 1}, {"dims": dims}

    def admissible_triangle_errors():
        g = WeightedOrientedGraph(3, frozenset({(1, 2), (2, 3), (3, 1)}), (1, 1, 1))
        try:
            find_admissible_vertex(g)
        except DomainError:
            return True, {}
        return False, {"error": "no domain error"}

    return [
        ("strictness-pair", strictness),
        ("example-graph-parse", example_parse),
        ("example-generators", example_generators),
        ("example-in-neighbors", example_neighbors),
        ("example-capacity-family", example_family),
        ("example-radical-direct", example_radical_direct),
        ("example-radical-closed-form", example_radical_closed_form),
        ("two-vertex-rule", two_vertex_rule),
        ("triangle-formulas", triangle_formulas),
        ("rho-equals-weight", rho_equals_weight),
        ("triangle-vertex-certificate", triangle_vertex_certificate),
        ("sink-cone", sink_cone),
        ("empty-complex-homology", empty_complex_homology),
        ("triangle-has-no-admissible-guarantee", admissible_triangle_errors),
    ]


def cmd_golden() -> VerificationRun:
    checks = _golden_checks()
    run = VerificationRun("golden", 0, len(checks))
    results = {}
    for k, (name, fn) in enumerate(checks):
        start = time.perf_counter()
        ok, detail = fn()
        run.timings_ms.append((time.perf_counter() - start) * 1000)
        results[name] = ok
        if not ok:
            run.failures.append({"index": k, "instance": {"check": name}, "detail": detail})
    run.summary = {"checks": results}
    return run
