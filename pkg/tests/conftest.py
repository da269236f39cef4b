import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from monoreg.digraph import WeightedOrientedGraph
from monoreg.monomial import MonomialIdeal
from monoreg.verify import random_graph

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def ideals(draw, n_max=4, rho_max=4, gens_max=5, proper=True):
    n = draw(st.integers(1, n_max))
    exps = st.tuples(*[st.integers(0, rho_max)] * n)
    gens = draw(st.lists(exps, min_size=1, max_size=gens_max))
    if proper:
        gens = [g for g in gens if any(g)] or [tuple(1 if j == 0 else 0 for j in range(n))]
    return MonomialIdeal(n, tuple(gens))


@st.composite
def ideals_in(draw, n, rho_max=4, gens_max=4, min_size=0):
    exps = st.tuples(*[st.integers(0, rho_max)] * n)
    return MonomialIdeal(n, tuple(draw(st.lists(exps, min_size=min_size, max_size=gens_max))))


@st.composite
def exponents(draw, n, hi=4):
    return tuple(draw(st.lists(st.integers(0, hi), min_size=n, max_size=n)))


@st.composite
def graphs(draw, n_max=6, w_max=4) -> WeightedOrientedGraph:
    seed = draw(st.integers(0, 2**32))
    n = draw(st.integers(2, n_max))
    return random_graph(random.Random(seed), n, w_max)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
