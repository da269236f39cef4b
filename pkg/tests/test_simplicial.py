import pytest
from hypothesis import given
from hypothesis import strategies as st

from monoreg.exceptions import DomainError
from monoreg.monomial import MonomialIdeal
from monoreg.simplicial import (
    SimplicialComplex,
    check_field,
    cone_apexes,
    field_name,
    is_acyclic,
    is_cone,
    link,
    reduced_euler_characteristic,
    reduced_homology_dims,
    stanley_reisner_complex,
    stanley_reisner_ideal,
)

from .conftest import ideals_in

HOLLOW_TRIANGLE = SimplicialComplex(3, ((1, 2), (2, 3), (1, 3)))
RP2 = SimplicialComplex(6, (
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
))


@st.composite
def complexes(draw, n_max=6):
    n = draw(st.integers(1, n_max))
    facets = draw(st.lists(st.sets(st.integers(1, n), max_size=n), max_size=5))
    return SimplicialComplex(n, tuple(tuple(sorted(f)) for f in facets))


def test_canonical_facets():
    cx = SimplicialComplex(3, ((2, 1), (1,), (3, 2)))
    assert cx.facets == ((1, 2), (2, 3))
    with pytest.raises(DomainError):
        SimplicialComplex(2, ((1, 3),))


def test_void_versus_empty():
    void, empty = SimplicialComplex.void(3), SimplicialComplex.empty(3)
    assert void != empty
    assert void.is_void and not void.is_empty_complex
    assert empty.is_empty_complex and empty.dimension == -1
    assert void.dimension is None
    assert reduced_homology_dims(void).is_acyclic
    assert reduced_homology_dims(empty).nonzero() == {-1: 1}


def test_stanley_reisner_examples():
    assert stanley_reisner_complex(MonomialIdeal.maximal(3)).is_empty_complex
    path = stanley_reisner_complex(MonomialIdeal.squarefree(3, [{1, 3}]))
    assert path.facets == ((1, 2), (2, 3))
    assert stanley_reisner_complex(MonomialIdeal.zero(3)) == SimplicialComplex.simplex(3)
    assert stanley_reisner_complex(MonomialIdeal.unit(3)).is_void
    assert stanley_reisner_ideal(HOLLOW_TRIANGLE) == MonomialIdeal.squarefree(3, [{1, 2, 3}])
    with pytest.raises(DomainError):
        stanley_reisner_complex(MonomialIdeal(2, ((2, 0),)))


def test_link_examples():
    cx = SimplicialComplex(4, ((1, 2, 3), (3, 4)))
    assert link(cx, [3]).facets == ((4,), (1, 2))
    assert link(cx, [1, 2, 3]).is_empty_complex
    assert link(cx, []) == cx
    with pytest.raises(DomainError):
        link(cx, [1, 4])


def test_cones():
    cx = SimplicialComplex(3, ((1, 2), (2, 3)))
    assert is_cone(cx, 2) and not is_cone(cx, 1)
    assert cone_apexes(cx) == {2}
    assert cone_apexes(SimplicialComplex.void(2)) == frozenset()
    assert is_acyclic(cx)


def test_homology_examples():
    assert reduced_homology_dims(HOLLOW_TRIANGLE).nonzero() == {1: 1}
    two_points = SimplicialComplex(2, ((1,), (2,)))
    assert reduced_homology_dims(two_points).nonzero() == {0: 1}
    assert reduced_homology_dims(SimplicialComplex.simplex(4)).is_acyclic


def test_projective_plane_depends_on_field():
    assert reduced_homology_dims(RP2, 0).is_acyclic
    assert reduced_homology_dims(RP2, 3).is_acyclic
    assert reduced_homology_dims(RP2, 2).nonzero() == {1: 1, 2: 1}


def test_field_validation():
    assert check_field(0) == 0 and check_field(7) == 7
    assert field_name(0) == "QQ" and field_name(2) == "GF(2)"
    for bad in (1, 4, -3):
        with pytest.raises(DomainError):
            check_field(bad)


# -- properties ------------------------------------------------------------------


@given(complexes(), st.sampled_from([0, 2, 3]))
def test_euler_characteristic_matches_homology(cx, p):
    dims = reduced_homology_dims(cx, p).dims
    assert sum((-1) ** q * d for q, d in dims.items()) == reduced_euler_characteristic(cx)


@given(complexes())
def test_homology_dims_nonnegative_and_bounded(cx):
    f = cx.f_vector()
    for q, d in reduced_homology_dims(cx).dims.items():
        assert 0 <= d <= f.get(q, 0)


@given(complexes())
def test_cone_is_acyclic(cx):
    if cone_apexes(cx):
        assert is_acyclic(cx)


@given(complexes())
def test_rational_betti_at_most_mod_p(cx):
    q0 = reduced_homology_dims(cx, 0).dims
    q2 = reduced_homology_dims(cx, 2).dims
    assert all(q0[q] <= q2[q] for q in q0)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    ideals_in(n, rho_max=1), ideals_in(n, rho_max=1))))
def test_stanley_reisner_correspondence(pair):
    I, J = pair
    DI, DJ = stanley_reisner_complex(I), stanley_reisner_complex(J)
    sum_faces = stanley_reisner_complex(I + J).face_masks
    inter_faces = stanley_reisner_complex(I & J).face_masks
    assert sum_faces == DI.face_masks & DJ.face_masks
    assert inter_faces == DI.face_masks | DJ.face_masks
    if not I.is_unit:
        assert stanley_reisner_ideal(DI) == I


@given(complexes())
def test_link_faces(cx):
    for F in cx.faces():
        lk = link(cx, F)
        for G in lk.faces():
            assert not (G & F) and (G | F) in cx
