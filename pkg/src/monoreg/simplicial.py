"""Simplicial complexes on [n], Stanley-Reisner duality and reduced homology.

Faces are handled internally as bitmasks (vertex j is bit j - 1); the public
:class:`SimplicialComplex` exposes them as frozensets of 1-based vertices.

Two degenerate complexes are kept apart on purpose: the *void* complex has no
faces at all and is acyclic, while the *empty* complex {∅} has only the empty
face and carries reduced homology in degree -1.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

from .exceptions import DomainError
from .monomial import MonomialIdeal, squarefree_exponent, support_mask

RATIONALS = 0


def check_field(characteristic: int) -> int:
    """Validate a coefficient field given by its characteristic (0 = rationals)."""
    p = int(characteristic)
    if p == 0:
        return 0
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise DomainError(f"characteristic {characteristic} is not 0 or a prime")
    return p


def field_name(characteristic: int) -> str:
    return "QQ" if characteristic == 0 else f"GF({characteristic})"


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return frozenset(out)


def set_to_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        mask |= 1 << (v - 1)
    return mask


def face_order(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: smaller faces first, then lexicographic on sorted vertices."""
    verts = tuple(sorted(mask_to_set(mask)))
    return (len(verts), verts)


def faces_avoiding(n: int, generator_masks: Iterable[int]) -> frozenset[int]:
    """All F ⊆ [n] containing no generator support: the faces of Δ(I)."""
    gens = list(generator_masks)
    return frozenset(F for F in range(1 << n) if not any(g & F == g for g in gens))


def link_masks(faces: frozenset[int], F: int) -> frozenset[int]:
    return frozenset(G for G in faces if not G & F and (G | F) in faces)


def _maximal(masks: Iterable[int]) -> list[int]:
    masks = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for m in masks:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def _down_closure(facet_masks: Iterable[int]) -> frozenset[int]:
    faces: set[int] = set()
    for top in facet_masks:
        sub = top
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & top
    return frozenset(faces)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on the vertex set [n], stored by its facets.

    ``facets`` is canonical: maximal faces only, each a sorted tuple, sorted
    by (size, vertices). ``()`` as the sole facet is the empty complex {∅};
    no facets at all is the void complex.
    """

    n: int
    facets: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        masks = []
        for f in self.facets:
            f = tuple(f)
            if any(not 1 <= v <= self.n for v in f):
                raise DomainError(f"facet {f} has vertices outside 1..{self.n}")
            masks.append(set_to_mask(f))
        canon = sorted(_maximal(masks), key=face_order)
        object.__setattr__(self, "facets", tuple(tuple(sorted(mask_to_set(m))) for m in canon))

    @classmethod
    def void(cls, n: int) -> SimplicialComplex:
        return cls(n, ())

    @classmethod
    def empty(cls, n: int) -> SimplicialComplex:
        return cls(n, ((),))

    @classmethod
    def simplex(cls, n: int, vertices: Iterable[int] | None = None) -> SimplicialComplex:
        verts = tuple(range(1, n + 1)) if vertices is None else tuple(vertices)
        return cls(n, (verts,))

    @classmethod
    def from_masks(cls, n: int, face_masks: Iterable[int]) -> SimplicialComplex:
        tops = _maximal(face_masks)
        return cls(n, tuple(tuple(sorted(mask_to_set(m))) for m in tops))

    @cached_property
    def face_masks(self) -> frozenset[int]:
        return _down_closure(set_to_mask(f) for f in self.facets)

    def faces(self) -> list[frozenset[int]]:
        return [mask_to_set(m) for m in sorted(self.face_masks, key=face_order)]

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == ((),)

    @property
    def dimension(self) -> int | None:
        """dim Δ; ``None`` for the void complex."""
        return max(len(f) for f in self.facets) - 1 if self.facets else None

    def __contains__(self, face) -> bool:
        return set_to_mask(face) in self.face_masks

    def vertices(self) -> frozenset[int]:
        return frozenset(v for f in self.facets for v in f)

    def f_vector(self) -> dict[int, int]:
        """Number of faces in each dimension, starting at -1."""
        counts: dict[int, int] = defaultdict(int)
        for m in self.face_masks:
            counts[bin(m).count("1") - 1] += 1
        return dict(sorted(counts.items()))

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Δ(I) = {F : x_F ∉ I} for a squarefree monomial ideal."""
    if not ideal.is_squarefree:
        raise DomainError("Stanley-Reisner complex requires a squarefree ideal")
    faces = faces_avoiding(ideal.n, (support_mask(g) for g in ideal.gens))
    return SimplicialComplex.from_masks(ideal.n, faces)


def stanley_reisner_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """I_Δ, generated by x_F over the minimal non-faces F."""
    faces = cx.face_masks
    non_faces = [F for F in range(1 << cx.n) if F not in faces]
    minimal = [F for F in non_faces if all((F & ~(1 << j)) in faces for j in range(cx.n) if F >> j & 1)]
    return MonomialIdeal(cx.n, tuple(squarefree_exponent(cx.n, mask_to_set(F)) for F in minimal))


def link(cx: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    F = set_to_mask(face)
    if F not in cx.face_masks:
        raise DomainError(f"{sorted(mask_to_set(F))} is not a face of the complex")
    return SimplicialComplex.from_masks(cx.n, link_masks(cx.face_masks, F))


def is_cone(cx: SimplicialComplex, t: int) -> bool:
    """Whether every facet contains t. The void complex is not a cone."""
    return bool(cx.facets) and all(t in f for f in cx.facets)


def cone_apexes(cx: SimplicialComplex) -> frozenset[int]:
    return frozenset(t for t in range(1, cx.n + 1) if is_cone(cx, t))


# -- homology -----------------------------------------------------------------


def _rank(rows: list[dict[int, int]], p: int) -> int:
    """Rank of a sparse integer matrix over QQ (p = 0) or GF(p)."""
    pivots: dict[int, dict] = {}
    for raw in rows:
        if p:
            row = {c: v % p for c, v in raw.items() if v % p}
        else:
            row = {c: Fraction(v) for c, v in raw.items() if v}
        while row:
            col = min(row)
            prow = pivots.get(col)
            if prow is None:
                lead = row[col]
                inv = pow(lead, -1, p) if p else 1 / lead
                pivots[col] = {c: (v * inv) % p if p else v * inv for c, v in row.items()}
                break
            f = row[col]
            for c, v in prow.items():
                nv = row.get(c, 0) - f * v
                if p:
                    nv %= p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


@lru_cache(maxsize=200_000)
def homology_of_masks(faces: frozenset[int], p: int = RATIONALS) -> tuple[tuple[int, int], ...]:
    """Reduced Betti numbers as ((q, dim H̃_q), ...) for q = -1 .. dim."""
    if not faces:
        return ((-1, 0),)
    by_dim: dict[int, list[int]] = defaultdict(list)
    for F in faces:
        by_dim[bin(F).count("1") - 1].append(F)
    top = max(by_dim)
    index = {q: {F: k for k, F in enumerate(sorted(by_dim[q]))} for q in by_dim}
    ranks = {-1: 0, top + 1: 0}
    for q in range(0, top + 1):
        lower = index[q - 1]
        rows = []
        for F in by_dim[q]:
            row = {}
            sign = 1
            for j in range(F.bit_length()):
                if F >> j & 1:
                    row[lower[F & ~(1 << j)]] = sign
                    sign = -sign
            rows.append(row)
        ranks[q] = _rank(rows, p)
    return tuple((q, len(by_dim[q]) - ranks[q] - ranks[q + 1]) for q in range(-1, top + 1))


@dataclass(frozen=True)
class HomologyProfile:
    dims: dict[int, int] = field(hash=False)
    characteristic: int = RATIONALS

    @property
    def field(self) -> str:
        return field_name(self.characteristic)

    @property
    def is_acyclic(self) -> bool:
        return not any(self.dims.values())

    def nonzero(self) -> dict[int, int]:
        return {q: d for q, d in self.dims.items() if d}

    def to_json(self) -> dict:
        return {"field": self.field, "dims": {str(q): d for q, d in self.dims.items()}}


def reduced_homology_dims(cx: SimplicialComplex, field: int = RATIONALS) -> HomologyProfile:
    p = check_field(field)
    return HomologyProfile(dict(homology_of_masks(cx.face_masks, p)), p)


def is_acyclic(cx: SimplicialComplex, field: int = RATIONALS) -> bool:
    return reduced_homology_dims(cx, field).is_acyclic


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """Σ_q (-1)^q f_q over all faces, the empty face counted in degree -1."""
    return sum((-1) ** q * c for q, c in cx.f_vector().items())
