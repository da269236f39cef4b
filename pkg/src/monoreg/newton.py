"""Newton polyhedra and integral closures of monomial ideals.

x^a is integral over I exactly when a lies in NP(I) = conv(E(I)), which holds
iff some non-negative rational combination of generators with total weight at
least 1 sits below a. Every decision here is backed by an exact witness: a
:class:`RationalCertificate` for members, a :class:`Separator` (an LP dual
point) for non-members.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import lp
from .exceptions import DimensionMismatchError
from .monomial import Exponent, MonomialIdeal, divides


@dataclass(frozen=True)
class RationalCertificate:
    """Coefficients c_i >= 0 on generator indices with sum >= 1 and sum c_i b_i <= a."""

    coefficients: dict[int, Fraction] = field(hash=False)

    def total(self) -> Fraction:
        return sum(self.coefficients.values(), Fraction(0))

    def combination(self, ideal: MonomialIdeal) -> tuple[Fraction, ...]:
        point = [Fraction(0)] * ideal.n
        for i, c in self.coefficients.items():
            for j, e in enumerate(ideal.gens[i]):
                point[j] += c * e
        return tuple(point)

    def verify(self, ideal: MonomialIdeal, a: Sequence[int]) -> bool:
        if any(c < 0 for c in self.coefficients.values()):
            return False
        if any(not 0 <= i < len(ideal.gens) for i in self.coefficients):
            return False
        return self.total() >= 1 and all(x <= y for x, y in zip(self.combination(ideal), a))


@dataclass(frozen=True)
class Separator:
    """A weight vector y >= 0 with y.b >= 1 on every generator b and y.a < 1."""

    weights: tuple[Fraction, ...]

    def pairing(self, a: Sequence[int]) -> Fraction:
        return sum((y * x for y, x in zip(self.weights, a)), Fraction(0))

    def verify(self, ideal: MonomialIdeal, a: Sequence[int]) -> bool:
        if any(y < 0 for y in self.weights):
            return False
        return all(self.pairing(b) >= 1 for b in ideal.gens) and self.pairing(a) < 1


@dataclass(frozen=True)
class Membership:
    member: bool
    certificate: RationalCertificate | None = None
    separator: Separator | None = None

    def __bool__(self) -> bool:
        return self.member


class NewtonPolyhedron:
    """Membership oracle for NP(I) that reuses separating hyperplanes.

    Separators found by earlier LP solves are kept and tried first, so a box
    scan only runs the simplex on points no known hyperplane cuts off.
    """

    def __init__(self, ideal: MonomialIdeal):
        self.ideal = ideal
        # (integer weights, common denominator) for fast exact screening
        self._cuts: list[tuple[tuple[int, ...], int, Separator]] = []
        self.lp_solves = 0

    def _remember(self, sep: Separator) -> None:
        den = math.lcm(*(y.denominator for y in sep.weights))
        self._cuts.append((tuple(int(y * den) for y in sep.weights), den, sep))

    def membership(self, a: Sequence[int]) -> Membership:
        ideal = self.ideal
        a = tuple(a)
        if len(a) != ideal.n:
            raise DimensionMismatchError(f"exponent of length {len(a)} queried against {ideal.n} variables")
        if ideal.is_zero:
            return Membership(False)
        for i, g in enumerate(ideal.gens):
            if divides(g, a):
                return Membership(True, RationalCertificate({i: Fraction(1)}))
        for weights, den, sep in self._cuts:
            if sum(y * x for y, x in zip(weights, a)) < den:
                return Membership(False, separator=sep)

        rows = [j for j in range(ideal.n) if a[j]]
        usable = [i for i, g in enumerate(ideal.gens) if all(g[j] == 0 or a[j] for j in range(ideal.n))]
        outside = [Fraction(0) if a[j] else Fraction(1) for j in range(ideal.n)]
        if not usable:
            sep = Separator(tuple(outside))
            self._remember(sep)
            return Membership(False, separator=sep)

        self.lp_solves += 1
        result = lp.max_packing(
            [[ideal.gens[i][j] for j in rows] for i in usable],
            [a[j] for j in rows],
            stop_at=1,
        )
        if result.status != lp.OPTIMAL:
            # threshold reached (unbounded cannot happen: the zero generator divides everything)
            coeffs = {usable[k]: c for k, c in enumerate(result.primal) if c}
            return Membership(True, RationalCertificate(coeffs))
        # optimum < 1: extend the dual by weight 1 on coordinates outside supp(a)
        weights = list(outside)
        for k, j in enumerate(rows):
            weights[j] = result.dual[k]
        sep = Separator(tuple(weights))
        self._remember(sep)
        return Membership(False, separator=sep)

    def __contains__(self, a) -> bool:
        return self.membership(a).member


def np_membership(ideal: MonomialIdeal, a: Sequence[int]) -> Membership:
    """Decide a in NP(I) by an exact LP; see :class:`Membership`."""
    return NewtonPolyhedron(ideal).membership(a)


def _box_by_degree(bounds: Sequence[int]) -> list[Exponent]:
    pts = itertools.product(*(range(b + 1) for b in bounds))
    return sorted(pts, key=lambda p: (sum(p), p))


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the integral closure of ``ideal``.

    If a is in NP(I) and a_j > rho_j(I), then a - e_j is too, so every minimal
    generator of the closure lies in the box prod [0, rho_j]. The box is
    scanned by ascending degree; points divisible by an accepted generator
    are skipped.
    """
    if ideal.is_zero or ideal.is_unit:
        return ideal
    poly = NewtonPolyhedron(ideal)
    accepted: list[Exponent] = []
    for a in _box_by_degree(ideal.rhos()):
        if any(divides(g, a) for g in accepted):
            continue
        if poly.membership(a).member:
            accepted.append(a)
    return MonomialIdeal(ideal.n, tuple(accepted))


def is_integrally_closed(ideal: MonomialIdeal) -> bool:
    return integral_closure(ideal) == ideal


def closure_restriction_check(ideal: MonomialIdeal, vertices: Iterable[int]) -> bool:
    """Closure of I_V equals the restriction of the closure of I to V."""
    vertices = frozenset(vertices)
    return integral_closure(ideal.restrict(vertices)) == integral_closure(ideal).restrict(vertices)
