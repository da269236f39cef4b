"""Castelnuovo-Mumford regularity of monomial ideals.

The engine evaluates

    reg(S/I) = max{ |a| + i : H̃_{i-1}(lk_{Δ_a(I)} F; k) ≠ 0
                    for some face F of Δ_a(I) with F ∩ supp a = ∅ }

where Δ_a(I) is the Stanley-Reisner complex of sqrt(I : x^a), and a only
needs to range over the box a_j < rho_j(I). Local cohomology is never
computed.

:func:`regularity_oracle_koszul` is an independent check: it reads off the
multigraded Betti numbers β_{i,a}(I) = dim H̃_{i-1}(K^a(I)) from the upper
Koszul complexes K^a(I) = {F ⊆ supp a : x^{a-F} ∈ I} and maximizes |a| - i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .exceptions import DomainError
from .monomial import Exponent, MonomialIdeal, _check_exponent, support_mask, unit_exponent
from .simplicial import (
    RATIONALS,
    SimplicialComplex,
    check_field,
    face_order,
    faces_avoiding,
    field_name,
    homology_of_masks,
    link_masks,
    mask_to_set,
    stanley_reisner_complex,
)


@dataclass(frozen=True)
class CriticalPair:
    """(a, i) together with a face F witnessing H̃_{i-1}(lk F) ≠ 0."""

    a: Exponent
    i: int
    face: frozenset[int]

    @property
    def value(self) -> int:
        return sum(self.a) + self.i

    def to_json(self) -> dict:
        return {"a": list(self.a), "i": self.i, "F": sorted(self.face)}


@dataclass(frozen=True)
class RegularityReport:
    reg_module: int
    reg_ideal: int
    witness: CriticalPair
    characteristic: int
    pairs_examined: int
    method: str = "degree-complex"

    @property
    def field(self) -> str:
        return field_name(self.characteristic)

    def to_json(self, witness: bool = True) -> dict:
        out = {
            "reg_ideal": self.reg_ideal,
            "reg_module": self.reg_module,
            "field": self.field,
            "method": self.method,
            "pairs_examined": self.pairs_examined,
        }
        if witness:
            out["witness"] = self.witness.to_json()
        return out


def _require_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise DomainError("regularity is undefined for the zero ideal")
    if ideal.is_unit:
        raise DomainError("regularity is undefined for the unit ideal")


def degree_complex(ideal: MonomialIdeal, a: Sequence[int]) -> SimplicialComplex:
    """Δ_a(I) = Δ(sqrt(I : x^a))."""
    if ideal.is_unit:
        raise DomainError("degree complexes of the unit ideal are not defined")
    return stanley_reisner_complex(ideal.colon(a).radical())


def _radical_colon_masks(gens: Sequence[Exponent], a: Sequence[int]) -> frozenset[int]:
    """Minimal supports of the generators of sqrt(I : x^a), as bitmasks."""
    masks = set()
    for u in gens:
        m = 0
        for j, (x, y) in enumerate(zip(u, a)):
            if x > y:
                m |= 1 << j
        if m == 0:
            return frozenset((0,))
        masks.add(m)
    minimal = [m for m in masks if not any(o != m and o & m == o for o in masks)]
    return frozenset(minimal)


@lru_cache(maxsize=100_000)
def _pairs_for(n: int, radical_masks: frozenset[int], supp: int, p: int) -> tuple[tuple[tuple[int, int], ...], int]:
    """All (i, F) for one degree complex and one support, plus faces examined.

    Sorted by descending i, then by face order, so element 0 is the best
    witness for this exponent.
    """
    faces = faces_avoiding(n, radical_masks)
    found = []
    examined = 0
    for F in sorted(faces, key=face_order):
        if F & supp:
            continue
        examined += 1
        for q, dim in homology_of_masks(link_masks(faces, F), p):
            if dim:
                found.append((q + 1, F))
    found.sort(key=lambda t: (-t[0], face_order(t[1])))
    return tuple(found), examined


def _sweep(ideal: MonomialIdeal, p: int, bounds: Sequence[int] | None):
    bounds = ideal.rhos() if bounds is None else tuple(bounds)
    for a in itertools.product(*(range(max(b, 1)) for b in bounds)):
        masks = _radical_colon_masks(ideal.gens, a)
        if 0 in masks:
            # x^a ∈ I: the degree complex is void
            continue
        yield a, _pairs_for(ideal.n, masks, support_mask(a), p)


def critical_pairs(ideal: MonomialIdeal, field: int = RATIONALS, bounds: Sequence[int] | None = None) -> Iterator[CriticalPair]:
    """Every critical pair (a, i, F) with a in Γ(I), in lexicographic order of a."""
    _require_proper(ideal)
    p = check_field(field)
    for a, (pairs, _) in _sweep(ideal, p, bounds):
        for i, F in pairs:
            yield CriticalPair(a, i, mask_to_set(F))


def regularity(ideal: MonomialIdeal, field: int = RATIONALS, bounds: Sequence[int] | None = None) -> RegularityReport:
    """reg(S/I) and reg(I) = reg(S/I) + 1, with a deterministic extremal witness.

    Among extremal pairs the witness has the lexicographically smallest a and
    then the smallest face. ``bounds`` overrides the exclusive search box
    (default: rho_j(I)).
    """
    _require_proper(ideal)
    p = check_field(field)
    best: CriticalPair | None = None
    examined = 0
    for a, (pairs, count) in _sweep(ideal, p, bounds):
        examined += count
        if not pairs:
            continue
        i, F = pairs[0]
        if best is None or sum(a) + i > best.value:
            best = CriticalPair(a, i, mask_to_set(F))
    if best is None:
        # unreachable for a proper nonzero ideal: a = 0 always has a pair
        raise DomainError("no critical pair found")
    return RegularityReport(best.value, best.value + 1, best, p, examined)


def extremal_pairs(ideal: MonomialIdeal, field: int = RATIONALS) -> list[CriticalPair]:
    reg = regularity(ideal, field).reg_module
    return [c for c in critical_pairs(ideal, field) if c.value == reg]


def upper_koszul_complex(ideal: MonomialIdeal, a: Sequence[int]) -> SimplicialComplex:
    """K^a(I) = {F ⊆ supp a : x^{a-F} ∈ I}."""
    a = _check_exponent(a, ideal.n)
    return SimplicialComplex.from_masks(ideal.n, _koszul_masks(ideal, a))


def _koszul_masks(ideal: MonomialIdeal, a: Exponent) -> frozenset[int]:
    supp = support_mask(a)
    out = []
    sub = supp
    while True:
        b = tuple(x - (sub >> j & 1) for j, x in enumerate(a))
        if any(all(g <= y for g, y in zip(u, b)) for u in ideal.gens):
            out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & supp
    return frozenset(out)


def betti_numbers(ideal: MonomialIdeal, field: int = RATIONALS) -> dict[tuple[int, Exponent], int]:
    """Nonzero multigraded Betti numbers β_{i,a}(I), keyed by (i, a)."""
    p = check_field(field)
    out = {}
    for a in itertools.product(*(range(r + 1) for r in ideal.rhos())):
        if not ideal.contains(a):
            continue
        for q, dim in homology_of_masks(_koszul_masks(ideal, a), p):
            if dim:
                out[(q + 1, a)] = dim
    return out


def regularity_oracle_koszul(ideal: MonomialIdeal, field: int = RATIONALS) -> RegularityReport:
    """reg(I) = max{|a| - i : β_{i,a}(I) ≠ 0}, over multidegrees dividing the lcm.

    The witness records the Betti multidegree a and homological degree i
    (its face is empty).
    """
    _require_proper(ideal)
    p = check_field(field)
    best = None
    seen = 0
    for (i, a) in sorted(betti_numbers(ideal, p), key=lambda t: t[1]):
        seen += 1
        value = sum(a) - i
        if best is None or value > best[0]:
            best = (value, a, i)
    value, a, i = best
    return RegularityReport(value - 1, value, CriticalPair(a, i, frozenset()), p, seen, method="koszul-betti")


def check_variable_addition(ideal: MonomialIdeal, j: int, field: int = RATIONALS) -> bool:
    """reg(I + (x_j)) <= reg(I), with equality if some extremal face contains j."""
    _require_proper(ideal)
    extended = ideal + MonomialIdeal(ideal.n, (unit_exponent(ideal.n, j),))
    before = regularity(ideal, field).reg_ideal
    after = regularity(extended, field).reg_ideal
    if after > before:
        return False
    if any(j in c.face for c in extremal_pairs(ideal, field)):
        return after == before
    return True
