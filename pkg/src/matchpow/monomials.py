"""Monomials as exponent vectors over a fixed, ordered set of variables."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

_FIELD_RE = re.compile(r"^(?:F|GF\(|ZZ/)(\d+)\)?$")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def parse_field(text: str | int) -> int:
    """Return the characteristic named by a field tag.

    Accepts ``"QQ"`` (characteristic 0) and prime fields written ``F7``,
    ``GF(7)`` or ``ZZ/7``. An integer is taken as the characteristic itself.
    """
    if isinstance(text, int):
        p = text
    elif text.strip().upper() == "QQ":
        return 0
    else:
        m = _FIELD_RE.match(text.strip())
        if m is None:
            raise ValueError(f"unsupported field {text!r}; use QQ or F<p>")
        p = int(m.group(1))
    if p != 0 and not _is_prime(p):
        raise ValueError(f"field characteristic {p} is not prime")
    return p


def field_name(characteristic: int) -> str:
    return "QQ" if characteristic == 0 else f"F{characteristic}"


def lookup_key(name: str) -> str:
    # x_1 and x1 name the same variable
    return name.replace("_", "")


@dataclass(frozen=True)
class PolynomialContext:
    """The ambient ring K[x_1, ..., x_n]: variable names plus the field.

    ``characteristic`` is 0 for the rationals and a prime p for GF(p).
    """

    variables: tuple[str, ...]
    characteristic: int = 0

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a polynomial context needs at least one variable")
        if any(not v for v in self.variables):
            raise ValueError("variable names must be nonempty")
        seen: set[str] = set()
        for v in self.variables:
            if lookup_key(v) in seen:
                raise ValueError(f"duplicate variable {v!r}")
            seen.add(lookup_key(v))
        parse_field(self.characteristic)

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def field(self) -> str:
        return field_name(self.characteristic)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lookup_key(v): i for i, v in enumerate(self.variables)}

    def index(self, name: str) -> int:
        """0-based position of a variable; underscores in ``name`` are ignored."""
        try:
            return self._index[lookup_key(name)]
        except KeyError:
            raise KeyError(f"unknown variable {name}") from None

    def var(self, name: str) -> "Monomial":
        e = [0] * self.n
        e[self.index(name)] = 1
        return Monomial(self, tuple(e))

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.n)

    def with_field(self, characteristic: int) -> "PolynomialContext":
        return PolynomialContext(self.variables, parse_field(characteristic))

    def __repr__(self):
        return f"PolynomialContext({', '.join(self.variables)}; {self.field})"


@dataclass(frozen=True, order=False)
class Monomial:
    """x^a for an exponent vector a of nonnegative integers."""

    context: PolynomialContext = field(compare=True, repr=False)
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))
        if len(self.exponents) != self.context.n:
            raise ValueError(
                f"exponent vector has length {len(self.exponents)}, "
                f"context has {self.context.n} variables"
            )
        if any(a < 0 for a in self.exponents):
            raise ValueError("negative entry in exponent vector")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        """0-based indices of the variables that divide this monomial."""
        return frozenset(i for i, a in enumerate(self.exponents) if a)

    @cached_property
    def support_mask(self) -> int:
        m = 0
        for i, a in enumerate(self.exponents):
            if a:
                m |= 1 << i
        return m

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(a <= 1 for a in self.exponents)

    def _check(self, other: "Monomial") -> None:
        if self.context != other.context:
            raise ValueError("monomials live in different contexts")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.context, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.context, tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.context, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self):
        parts = []
        for name, a in zip(self.context.variables, self.exponents):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"Monomial({self})"


def to_monomial(ctx: PolynomialContext, a: Sequence[int]) -> Monomial:
    """The monomial x^a = prod x_i^{a_i}."""
    return Monomial(ctx, tuple(a))


def to_multidegree(u: Monomial) -> tuple[int, ...]:
    return u.exponents


def support(u: Monomial) -> frozenset[int]:
    """1-based support, matching the x_1, ..., x_n numbering."""
    return frozenset(i + 1 for i in u.support)


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return u.lcm(v)


def divides(u: Monomial, v: Monomial) -> bool:
    return u.divides(v)


def multiply(u: Monomial, v: Monomial) -> Monomial:
    return u * v


def degree(u: Monomial) -> int:
    return u.degree


def polarization_context(ctx: PolynomialContext, bound: Sequence[int]) -> PolynomialContext:
    """Ring with variables ``<name>_<j>``, 1 <= j <= bound_i, grouped by original variable."""
    if len(bound) != ctx.n:
        raise ValueError("bound has the wrong length")
    names = [f"{name}_{j}" for name, b in zip(ctx.variables, bound) for j in range(1, b + 1)]
    if not names:
        raise ValueError("bound is zero; the polarized ring would have no variables")
    return PolynomialContext(tuple(names), ctx.characteristic)


def polarize_monomial(
    u: Monomial, bound: Sequence[int], target: PolynomialContext | None = None
) -> Monomial:
    """Squarefree u^P: x_i^{a_i} becomes x_{i,1} * ... * x_{i,a_i}.

    ``bound`` fixes the derived ring, so that every generator of one ideal is
    polarized into the same context. Pass ``target`` to reuse an already
    built polarization context.
    """
    bound = tuple(bound)
    if len(bound) != u.context.n:
        raise ValueError("bound has the wrong length")
    if any(a > b for a, b in zip(u.exponents, bound)):
        raise ValueError(f"bound {bound} is below the multidegree of {u}")
    if target is None:
        target = polarization_context(u.context, bound)
    e: list[int] = []
    for a, b in zip(u.exponents, bound):
        e.extend([1] * a + [0] * (b - a))
    return Monomial(target, tuple(e))


def monomial_from_names(ctx: PolynomialContext, powers: Iterable[tuple[str, int]]) -> Monomial:
    e = [0] * ctx.n
    for name, k in powers:
        e[ctx.index(name)] += k
    return Monomial(ctx, tuple(e))
