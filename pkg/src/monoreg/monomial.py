"""Monomials and monomial ideals in k[x_1, ..., x_n].

A monomial x^a is identified with its exponent tuple ``a``; a monomial ideal
with the antichain of exponents of its minimal generators. Variables are
1-based throughout (``x1`` is coordinate 0 of the tuple).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .exceptions import DimensionMismatchError, DomainError

Exponent = tuple[int, ...]


def degree(a: Sequence[int]) -> int:
    """Total degree |a|."""
    return sum(a)


def support(a: Sequence[int]) -> frozenset[int]:
    """1-based indices of the nonzero entries of ``a``."""
    return frozenset(j + 1 for j, e in enumerate(a) if e)


def support_mask(a: Sequence[int]) -> int:
    mask = 0
    for j, e in enumerate(a):
        if e:
            mask |= 1 << j
    return mask


def unit_exponent(n: int, j: int) -> Exponent:
    """The canonical basis vector e_j (1-based)."""
    if not 1 <= j <= n:
        raise DomainError(f"variable index {j} outside 1..{n}")
    return tuple(1 if k == j - 1 else 0 for k in range(n))


def squarefree_exponent(n: int, face: Iterable[int]) -> Exponent:
    """Exponent of x_F for a set F of 1-based variable indices."""
    face = set(face)
    return tuple(1 if k + 1 in face else 0 for k in range(n))


def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    """x^u | x^v."""
    return all(x <= y for x, y in zip(u, v))


def lcm(u: Sequence[int], v: Sequence[int]) -> Exponent:
    return tuple(max(x, y) for x, y in zip(u, v))


def _check_exponent(a: Sequence[int], n: int) -> Exponent:
    a = tuple(int(e) for e in a)
    if len(a) != n:
        raise DimensionMismatchError(f"exponent {a} has length {len(a)}, expected {n}")
    if any(e < 0 for e in a):
        raise DomainError(f"exponent {a} has a negative entry")
    return a


def _antichain(gens: Iterable[Exponent]) -> tuple[Exponent, ...]:
    # Ascending degree: a divisor is always seen before its multiples.
    kept: list[Exponent] = []
    for g in sorted(set(gens), key=lambda u: (sum(u), u)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored as its sorted minimal generating set.

    Construction always minimalizes, so two ideals are equal exactly when
    their ``gens`` tuples are equal. The zero ideal has no generators; the
    unit ideal has the single generator ``(0, ..., 0)``.
    """

    n: int
    gens: tuple[Exponent, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("number of variables must be non-negative")
        checked = [_check_exponent(g, self.n) for g in self.gens]
        object.__setattr__(self, "gens", _antichain(checked))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls(n, ((0,) * n,))

    @classmethod
    def variables(cls, n: int, indices: Iterable[int]) -> MonomialIdeal:
        """The prime ideal (x_i | i in indices)."""
        return cls(n, tuple(unit_exponent(n, i) for i in indices))

    @classmethod
    def maximal(cls, n: int) -> MonomialIdeal:
        return cls.variables(n, range(1, n + 1))

    @classmethod
    def squarefree(cls, n: int, faces: Iterable[Iterable[int]]) -> MonomialIdeal:
        """Ideal generated by x_F for each F in ``faces``."""
        return cls(n, tuple(squarefree_exponent(n, f) for f in faces))

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.n,)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def contains(self, a: Sequence[int]) -> bool:
        """Whether x^a lies in the ideal."""
        a = _check_exponent(a, self.n)
        return any(divides(g, a) for g in self.gens)

    __contains__ = contains

    def _same_ring(self, other: MonomialIdeal) -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"ideals live in {self.n} and {other.n} variables")

    # -- algebra ------------------------------------------------------------

    def colon(self, a: Sequence[int]) -> MonomialIdeal:
        """(I : x^a), generated by u - min(u, a) over the generators u."""
        a = _check_exponent(a, self.n)
        return MonomialIdeal(self.n, tuple(tuple(max(x - y, 0) for x, y in zip(u, a)) for u in self.gens))

    def radical(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, tuple(tuple(min(e, 1) for e in u) for u in self.gens))

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_ring(other)
        return MonomialIdeal(self.n, self.gens + other.gens)

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_ring(other)
        return MonomialIdeal(self.n, tuple(lcm(u, v) for u in self.gens for v in other.gens))

    __and__ = intersect

    def restrict(self, vertices: Iterable[int]) -> MonomialIdeal:
        """I_V: the generators whose support lies inside V (1-based)."""
        vertices = frozenset(vertices)
        bad = [v for v in vertices if not 1 <= v <= self.n]
        if bad:
            raise DomainError(f"restriction set contains indices outside 1..{self.n}: {sorted(bad)}")
        return MonomialIdeal(self.n, tuple(g for g in self.gens if support(g) <= vertices))

    # -- statistics ---------------------------------------------------------

    def rho(self, j: int) -> int:
        """Largest exponent of x_j among the minimal generators (0 if absent)."""
        if not 1 <= j <= self.n:
            raise DomainError(f"variable index {j} outside 1..{self.n}")
        return max((g[j - 1] for g in self.gens), default=0)

    def rhos(self) -> tuple[int, ...]:
        return tuple(self.rho(j) for j in range(1, self.n + 1))

    def gamma_box(self) -> GammaBox:
        return GammaBox(self.rhos())

    def max_generator_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def __str__(self) -> str:
        return format_ideal(self)


@dataclass(frozen=True)
class GammaBox:
    """The exponents a with a_j < bounds[j] for every j.

    A bound of 0 still admits a_j = 0, so the box is never empty.
    """

    bounds: tuple[int, ...]

    def _ranges(self) -> list[range]:
        return [range(max(b, 1)) for b in self.bounds]

    def __iter__(self) -> Iterator[Exponent]:
        return itertools.product(*self._ranges())

    def __len__(self) -> int:
        return math.prod(max(b, 1) for b in self.bounds)

    def __contains__(self, a) -> bool:
        return len(a) == len(self.bounds) and all(0 <= x < max(b, 1) for x, b in zip(a, self.bounds))


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens``, as a minimal generating antichain.

    ``n`` is required when ``gens`` is empty.
    """
    gens = [tuple(g) for g in gens]
    lengths = {len(g) for g in gens}
    if n is not None:
        lengths.add(n)
    if len(lengths) > 1:
        raise DimensionMismatchError(f"mixed exponent lengths {sorted(lengths)}")
    if not lengths:
        raise DimensionMismatchError("cannot infer the number of variables of an empty generator list")
    return MonomialIdeal(lengths.pop(), tuple(gens))


def colon_by_monomial(ideal: MonomialIdeal, a: Sequence[int]) -> MonomialIdeal:
    return ideal.colon(a)


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return ideal.radical()


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    out = ideals[0]
    for other in ideals[1:]:
        out = out + other
    return out


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    out = ideals[0]
    for other in ideals[1:]:
        out = out & other
    return out


def restrict(ideal: MonomialIdeal, vertices: Iterable[int]) -> MonomialIdeal:
    return ideal.restrict(vertices)


def rho(ideal: MonomialIdeal, j: int) -> int:
    return ideal.rho(j)


def gamma_box(ideal: MonomialIdeal) -> GammaBox:
    return ideal.gamma_box()


def format_monomial(a: Sequence[int]) -> str:
    factors = [f"x{j + 1}" if e == 1 else f"x{j + 1}^{e}" for j, e in enumerate(a) if e]
    return "*".join(factors) if factors else "1"


def format_ideal(ideal: MonomialIdeal) -> str:
    """Render in the ``x1*x2^3, x2*x3^5`` text grammar; ``0`` for the zero ideal."""
    if ideal.is_zero:
        return "0"
    return ", ".join(format_monomial(g) for g in ideal.gens)
