"""Monomial ideals stored by their minimal generating set G(I)."""
from __future__ import annotations

from typing import Iterable, Sequence

from .monomials import (
    Monomial,
    PolynomialContext,
    polarization_context,
    polarize_monomial,
)

DEFAULT_MAX_GRADE_GENERATORS = 5000


class ComplexityError(RuntimeError):
    """A configured size cap was exceeded; no approximate answer is returned."""


def _minimal(gens: Iterable[Monomial]) -> list[Monomial]:
    # low degree first, so every kept monomial is only tested against possible divisors
    cands = sorted(set(gens), key=lambda u: (u.degree, u.exponents))
    kept: list[Monomial] = []
    for u in cands:
        e = u.exponents
        if not any(all(a <= b for a, b in zip(v.exponents, e)) for v in kept):
            kept.append(u)
    return kept


class MonomialIdeal:
    """A monomial ideal, held as its minimal generators.

    Generators are sorted in decreasing lexicographic order of their exponent
    vectors, so ``(x1*x2, x3*x4)`` renders with x1 first. The empty
    generating set is the zero ideal; ``(1)`` is the unit ideal.
    """

    __slots__ = ("context", "generators", "_hash")

    def __init__(self, context: PolynomialContext, generators: Iterable[Monomial] = ()):
        gens = list(generators)
        for u in gens:
            if u.context != context:
                raise ValueError("generator does not belong to the ideal's context")
        self.context = context
        self.generators: tuple[Monomial, ...] = tuple(
            sorted(_minimal(gens), key=lambda u: u.exponents, reverse=True)
        )
        self._hash = None

    @classmethod
    def from_exponents(cls, context: PolynomialContext, vectors: Iterable[Sequence[int]]):
        return cls(context, (Monomial(context, tuple(a)) for a in vectors))

    @classmethod
    def zero(cls, context: PolynomialContext) -> "MonomialIdeal":
        return cls(context)

    @classmethod
    def unit(cls, context: PolynomialContext) -> "MonomialIdeal":
        return cls(context, [context.one()])

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_unit()

    def is_squarefree(self) -> bool:
        return all(u.is_squarefree() for u in self.generators)

    def contains(self, u: Monomial) -> bool:
        return any(g.divides(u) for g in self.generators)

    def __contains__(self, u: Monomial) -> bool:
        return self.contains(u)

    def _check(self, other: "MonomialIdeal") -> None:
        if self.context != other.context:
            raise ValueError("ideals live in different contexts")

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.context == other.context and self.generators == other.generators

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.context, tuple(u.exponents for u in self.generators)))
        return self._hash

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.context, self.generators + other.generators)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Ordinary product I*J (not the matching product)."""
        self._check(other)
        return MonomialIdeal(self.context, (u * v for u in self.generators for v in other.generators))

    def _require_nonzero(self, what: str) -> None:
        if self.is_zero():
            raise ValueError(f"{what} is undefined for the zero ideal")

    @property
    def indeg(self) -> int:
        self._require_nonzero("indeg")
        return min(u.degree for u in self.generators)

    @property
    def bounding_multidegree(self) -> tuple[int, ...]:
        self._require_nonzero("the bounding multidegree")
        return tuple(max(col) for col in zip(*(u.exponents for u in self.generators)))

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(u) for u in self.generators) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"


def minimalize(gens: Iterable[Monomial], context: PolynomialContext | None = None) -> MonomialIdeal:
    """Ideal generated by ``gens``, with redundant generators dropped."""
    gens = list(gens)
    if context is None:
        if not gens:
            raise ValueError("cannot infer the context of an empty generating set")
        context = gens[0].context
    return MonomialIdeal(context, gens)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    I._check(J)
    return I == J


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return I + J


def ordinary_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return I * J


def indeg(I: MonomialIdeal) -> int:
    return I.indeg


def bounding_multidegree(I: MonomialIdeal) -> tuple[int, ...]:
    return I.bounding_multidegree


def matching_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I*J generated by u*v with u in G(I), v in G(J) of disjoint support."""
    I._check(J)
    prods = [
        u * v
        for u in I.generators
        for v in J.generators
        if not (u.support_mask & v.support_mask)
    ]
    return MonomialIdeal(I.context, prods)


def matching_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """The k-th matching power, built as I^[k] = I^[k-1] * I."""
    if k < 1:
        raise ValueError("matching powers are defined for k >= 1")
    P = I
    for _ in range(k - 1):
        if P.is_zero():
            break
        P = matching_product(P, I)
    return P


def _max_packing(masks: list[int]) -> int:
    """Largest number of pairwise disjoint bitmasks (exact branch and bound)."""
    masks = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    # greedy packing gives the starting lower bound
    used = best = 0
    for m in masks:
        if not m & used:
            used |= m
            best += 1
    minsize = masks[0].bit_count() if masks else 1

    def search(cands: list[int], count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if not cands:
            return
        if count + len(cands) <= best:
            return
        union = 0
        for m in cands:
            union |= m
        if count + union.bit_count() // minsize <= best:
            return
        for i, m in enumerate(cands):
            if count + len(cands) - i <= best:
                return
            search([d for d in cands[i + 1:] if not d & m], count + 1)

    search(masks, 0)
    return best


def monomial_grade(I: MonomialIdeal, max_generators: int = DEFAULT_MAX_GRADE_GENERATORS) -> int:
    """nu(I): the maximal number of generators with pairwise disjoint support."""
    I._require_nonzero("the monomial grade")
    if I.is_unit():
        raise ValueError("the monomial grade is undefined for the unit ideal")
    if len(I) > max_generators:
        raise ComplexityError(
            f"monomial grade search over {len(I)} generators exceeds the cap of {max_generators}"
        )
    return _max_packing([u.support_mask for u in I.generators])


def polarize_ideal(I: MonomialIdeal, bound: Sequence[int] | None = None) -> MonomialIdeal:
    """Squarefree polarization of I.

    The derived ring is fixed by ``bound`` (default: the bounding multidegree
    of I). Passing the bound of a larger ideal places both polarizations in
    one ring, which is how I^[k] and I are compared.
    """
    I._require_nonzero("polarization")
    if bound is None:
        bound = I.bounding_multidegree
    target = polarization_context(I.context, bound)
    return MonomialIdeal(target, (polarize_monomial(u, bound, target) for u in I.generators))
