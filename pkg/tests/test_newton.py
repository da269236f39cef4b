import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from monoreg import lp
from monoreg.exceptions import DimensionMismatchError
from monoreg.monomial import MonomialIdeal
from monoreg.newton import (
    NewtonPolyhedron,
    RationalCertificate,
    closure_restriction_check,
    integral_closure,
    is_integrally_closed,
    np_membership,
)

from .conftest import exponents, ideals

TRIANGLE_IDEAL = MonomialIdeal(3, ((1, 3, 0), (0, 1, 5), (6, 0, 1)))


def float_packing(ideal, a):
    """Float LP max sum c s.t. sum c_i b_i <= a, c >= 0, via scipy."""
    A = [[g[j] for g in ideal.gens] for j in range(ideal.n)]
    res = linprog([-1.0] * len(ideal.gens), A_ub=A, b_ub=list(a), bounds=(0, None), method="highs")
    assert res.status == 0
    return -res.fun


def test_lp_threshold_and_optimum():
    res = lp.max_packing([[2, 0], [0, 2]], [1, 1])
    assert res.status == lp.OPTIMAL and res.value == 1
    cols, rhs = [[2, 0], [0, 2], [1, 1]], [1, 0]
    res = lp.max_packing(cols, rhs)
    assert res.value == Fraction(1, 2)
    # dual feasibility and strong duality
    assert all(y >= 0 for y in res.dual)
    assert all(sum(y * c for y, c in zip(res.dual, col)) >= 1 for col in cols)
    assert sum(y * b for y, b in zip(res.dual, rhs)) == res.value
    res = lp.max_packing([[1, 0]], [3, 0], stop_at=1)
    assert res.status == lp.THRESHOLD and sum(res.primal) >= 1


def test_triangle_vertex_certificate():
    res = np_membership(TRIANGLE_IDEAL, (5, 1, 1))
    assert res.member and res.certificate.verify(TRIANGLE_IDEAL, (5, 1, 1))
    assert not TRIANGLE_IDEAL.contains((5, 1, 1))


def test_triangle_separator():
    res = np_membership(TRIANGLE_IDEAL, (1, 1, 1))
    assert not res.member
    assert res.separator.weights == (Fraction(1, 7), Fraction(2, 7), Fraction(1, 7))
    assert res.separator.verify(TRIANGLE_IDEAL, (1, 1, 1))


def test_ideal_points_are_members():
    for g in TRIANGLE_IDEAL.gens:
        res = np_membership(TRIANGLE_IDEAL, g)
        assert res.member
        assert res.certificate.coefficients == {TRIANGLE_IDEAL.gens.index(g): 1}


def test_membership_dimension_check():
    with pytest.raises(DimensionMismatchError):
        np_membership(TRIANGLE_IDEAL, (1, 1))


def test_certificate_rejects_bad_input():
    assert not RationalCertificate({0: Fraction(-1)}).verify(TRIANGLE_IDEAL, (9, 9, 9))
    assert not RationalCertificate({7: Fraction(1)}).verify(TRIANGLE_IDEAL, (9, 9, 9))
    assert not RationalCertificate({0: Fraction(1, 2)}).verify(TRIANGLE_IDEAL, (9, 9, 9))


def test_closure_of_two_squares():
    I = MonomialIdeal(2, ((2, 0), (0, 2)))
    assert integral_closure(I) == MonomialIdeal(2, ((2, 0), (1, 1), (0, 2)))


def test_closure_of_triangle_ideal_contains_new_generator():
    closure = integral_closure(TRIANGLE_IDEAL)
    assert closure.contains((5, 1, 1)) and not TRIANGLE_IDEAL.contains((5, 1, 1))
    assert len(closure.gens) == 9 and (4, 1, 1) in closure.gens


def test_squarefree_and_principal_are_closed():
    assert is_integrally_closed(MonomialIdeal.squarefree(4, [{1, 2}, {2, 3}, {3, 4}, {1, 4}]))
    assert is_integrally_closed(MonomialIdeal(3, ((2, 3, 1),)))
    assert is_integrally_closed(MonomialIdeal.maximal(3))


def test_zero_and_unit_closures():
    assert integral_closure(MonomialIdeal.zero(2)).is_zero
    assert integral_closure(MonomialIdeal.unit(2)).is_unit
    assert not np_membership(MonomialIdeal.zero(2), (3, 3)).member


def test_separator_cache_avoids_solves():
    poly = NewtonPolyhedron(TRIANGLE_IDEAL)
    poly.membership((1, 1, 1))
    solves = poly.lp_solves
    assert not poly.membership((0, 1, 1)).member
    assert poly.lp_solves == solves


# -- properties ------------------------------------------------------------------


@settings(max_examples=80)
@given(ideals(n_max=4, rho_max=5, gens_max=5), st.data())
def test_membership_matches_float_lp(I, data):
    a = data.draw(exponents(I.n, hi=6))
    res = np_membership(I, a)
    value = float_packing(I, a)
    if abs(value - 1) > 1e-7:
        assert res.member == (value > 1)
    if res.member:
        assert res.certificate.verify(I, a)
    else:
        assert res.separator.verify(I, a)


@settings(max_examples=40)
@given(ideals(n_max=3, rho_max=4, gens_max=4))
def test_closure_box_bound_is_sound(I):
    """Scanning a larger box finds no extra minimal generator."""
    closure = integral_closure(I)
    bigger = [r + 2 for r in I.rhos()]
    poly = NewtonPolyhedron(I)
    for a in itertools.product(*(range(b + 1) for b in bigger)):
        assert poly.membership(a).member == closure.contains(a)


@settings(max_examples=40)
@given(ideals(n_max=4, rho_max=4, gens_max=4))
def test_closure_idempotent_and_contains_ideal(I):
    closure = integral_closure(I)
    assert integral_closure(closure) == closure
    assert all(closure.contains(g) for g in I.gens)


@settings(max_examples=40)
@given(ideals(n_max=4, rho_max=4, gens_max=4), st.data())
def test_closure_commutes_with_restriction(I, data):
    V = data.draw(st.sets(st.integers(1, I.n), min_size=1))
    assert closure_restriction_check(I, V)
