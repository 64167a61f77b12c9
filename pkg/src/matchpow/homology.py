"""Graded Betti numbers, depth and the normalized depth function.

Betti numbers come from the upper Koszul complexes

    K^m(I) = {tau subset of supp(m) : m / x^tau in I},
    beta_{i,m}(I) = dim H~_{i-1}(K^m(I); K),

evaluated at every m of the lcm lattice of G(I). This works for any monomial
ideal, squarefree or not.
"""
from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .ideals import ComplexityError, MonomialIdeal, matching_power, monomial_grade
from .linalg import rank
from .monomials import Monomial, field_name, parse_field

DEFAULT_LATTICE_CAP = 2**20
DEFAULT_FACE_CAP = 2**18

BETTI_SCHEMA = {
    "type": "object",
    "properties": {
        "subject": {"enum": ["ideal", "quotient"]},
        "field": {"type": "string"},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "i": {"type": "integer", "minimum": 0},
                    "degree": {"type": "integer", "minimum": 0},
                    "value": {"type": "integer", "minimum": 1},
                },
                "required": ["i", "degree", "value"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["subject", "field", "entries"],
    "additionalProperties": False,
}

GFUNCTION_SCHEMA = {
    "type": "object",
    "properties": {
        "nu": {"type": "integer", "minimum": 1},
        "g": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "depth": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "indeg": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "required": ["nu", "g", "depth", "indeg"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers beta_{i,j}, keyed by (i, j).

    ``subject`` is ``"ideal"`` for the resolution of I and ``"quotient"`` for
    that of S/I (shifted by one homological step, plus beta_{0,0} = 1).
    """

    entries: dict[tuple[int, int], int]
    subject: str = "ideal"
    characteristic: int = 0

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    def row(self, i: int) -> dict[int, int]:
        return {j: v for (a, j), v in sorted(self.entries.items()) if a == i}

    def quotient(self) -> "BettiTable":
        if self.subject == "quotient":
            return self
        e = {(i + 1, j): v for (i, j), v in self.entries.items()}
        e[(0, 0)] = 1
        return BettiTable(e, "quotient", self.characteristic)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "field": field_name(self.characteristic),
            "entries": [
                {"i": i, "degree": j, "value": v} for (i, j), v in sorted(self.entries.items())
            ],
        }

    def __str__(self):
        # Macaulay2 layout: column i, row j - i
        if not self.entries:
            return "0"
        cols = range(self.pd + 1)
        shifts = sorted({j - i for i, j in self.entries})
        header = ["", *map(str, cols)]
        total = ["total:", *(str(sum(v for (a, _), v in self.entries.items() if a == i)) for i in cols)]
        body = [
            [f"{s}:", *(str(self.entries[(i, i + s)]) if (i, i + s) in self.entries else "." for i in cols)]
            for s in shifts
        ]
        rows = [header, total, *body]
        widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
        return "\n".join(" ".join(x.rjust(w) for x, w in zip(r, widths)) for r in rows)


@dataclass(frozen=True)
class GFunctionProfile:
    """g_I(1..nu) with the depth and initial degree of each matching power."""

    values: tuple[int, ...]
    depth: tuple[int, ...]
    indeg: tuple[int, ...]
    field: str = "QQ"

    @property
    def nu(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> int:
        """g_I(k), 1-based like the function itself."""
        if not 1 <= k <= self.nu:
            raise IndexError(f"g_I is defined for 1 <= k <= {self.nu}")
        return self.values[k - 1]

    def to_json(self) -> dict:
        return {
            "nu": self.nu,
            "g": list(self.values),
            "depth": list(self.depth),
            "indeg": list(self.indeg),
        }


def _popcount_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _maximal(sets: Iterable[int]) -> list[int]:
    sets = sorted(set(sets), key=lambda s: -s.bit_count())
    out: list[int] = []
    for s in sets:
        if not any(s & t == s for t in out):
            out.append(s)
    return out


def _faces_direct(facets: list[int], cap: int) -> set[int]:
    faces: set[int] = set()
    for f in facets:
        sub = f
        # every submask of f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
        if len(faces) > cap:
            raise ComplexityError(f"simplicial complex has more than {cap} faces")
    return faces


def _faces_nerve(facets: list[int], cap: int) -> set[int]:
    """Faces of the nerve of the cover by ``facets`` (as masks over facet indices)."""
    faces: set[int] = {0}
    full = 0
    for f in facets:
        full |= f
    stack = [(0, -1, full)]
    while stack:
        face, last, inter = stack.pop()
        for t in range(last + 1, len(facets)):
            common = inter & facets[t]
            if common:
                new = face | (1 << t)
                faces.add(new)
                stack.append((new, t, common))
        if len(faces) > cap:
            raise ComplexityError(f"nerve complex has more than {cap} faces")
    return faces


def _homology_of_faces(faces: set[int], characteristic: int) -> dict[int, int]:
    by_dim: dict[int, list[int]] = defaultdict(list)
    for f in faces:
        by_dim[f.bit_count() - 1].append(f)
    top = max(by_dim)
    index = {d: {f: t for t, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    ranks = {}
    for d in range(0, top + 1):
        lower = index[d - 1]
        rows = []
        for f in index[d]:
            row = {}
            for pos, v in enumerate(_popcount_bits(f)):
                row[lower[f ^ (1 << v)]] = -1 if pos % 2 else 1
            rows.append(row)
        ranks[d] = rank(rows, characteristic)
    out = {}
    for d in range(-1, top + 1):
        h = len(index[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def reduced_homology(facets: Iterable[int], characteristic: int = 0, face_cap: int = DEFAULT_FACE_CAP) -> dict[int, int]:
    """Reduced Betti numbers {d: dim H~_d} of the complex spanned by ``facets``.

    Facets are bitmasks over the vertex set. A list holding only the empty
    face is the complex {emptyset}, with H~_{-1} of dimension one. An empty
    list is the void complex and has no homology.
    """
    facets = _maximal(facets)
    if not facets:
        return {}
    if facets == [0]:
        return {-1: 1}
    common = facets[0]
    for f in facets[1:]:
        common &= f
    if common:
        # a cone over any vertex in every facet
        return {}
    nverts = 0
    for f in facets:
        nverts |= f
    if len(facets) < nverts.bit_count():
        faces = _faces_nerve(facets, face_cap)
    else:
        faces = _faces_direct(facets, face_cap)
    return _homology_of_faces(faces, characteristic)


@dataclass(frozen=True)
class UpperKoszulComplex:
    """K^m(I) for a monomial m, described by its facets.

    For every generator g dividing m the set {i : g_i < m_i} is a face, and
    these sets span K^m(I): m / x^tau lies in I exactly when some g divides it.
    """

    base_degree: Monomial
    facets: tuple[frozenset[int], ...] = field(default=())

    @classmethod
    def of(cls, I: MonomialIdeal, m: Monomial) -> "UpperKoszulComplex":
        masks = _koszul_facets([g.exponents for g in I.generators], m.exponents)
        return cls(m, tuple(frozenset(_popcount_bits(f)) for f in _maximal(masks)))

    def faces(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for f in self.facets:
            items = sorted(f)
            for mask in range(1 << len(items)):
                out.add(frozenset(items[t] for t in range(len(items)) if mask >> t & 1))
        return out

    def reduced_homology(self, characteristic: int = 0) -> dict[int, int]:
        masks = [sum(1 << i for i in f) for f in self.facets]
        return reduced_homology(masks, characteristic)


def _koszul_facets(gens: Sequence[tuple[int, ...]], m: tuple[int, ...]) -> list[int]:
    facets = []
    for g in gens:
        if all(a <= b for a, b in zip(g, m)):
            mask = 0
            for i, (a, b) in enumerate(zip(g, m)):
                if a < b:
                    mask |= 1 << i
            facets.append(mask)
    return facets


def _require_proper(I: MonomialIdeal, what: str) -> None:
    if I.is_zero():
        raise ValueError(f"{what} is undefined for the zero ideal")
    if I.is_unit():
        raise ValueError(f"{what} is undefined for the unit ideal")


def _lcm_lattice_exponents(I: MonomialIdeal, cap: int) -> set[tuple[int, ...]]:
    gens = [g.exponents for g in I.generators]
    lattice = set(gens)
    frontier = list(lattice)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                m = tuple(x if x >= y else y for x, y in zip(a, g))
                if m not in lattice:
                    lattice.add(m)
                    new.append(m)
        if len(lattice) > cap:
            raise ComplexityError(f"lcm lattice has more than {cap} elements")
        frontier = new
    return lattice


def lcm_lattice(I: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> list[Monomial]:
    """lcms of all nonempty subsets of G(I), sorted by degree."""
    _require_proper(I, "the lcm lattice")
    ctx = I.context
    return [
        Monomial(ctx, e)
        for e in sorted(_lcm_lattice_exponents(I, cap), key=lambda e: (sum(e), e))
    ]


def _betti_chunk(args) -> list[tuple[int, int, int]]:
    gens, ms, characteristic, face_cap = args
    out = []
    for m in ms:
        h = reduced_homology(_koszul_facets(gens, m), characteristic, face_cap)
        deg = sum(m)
        out.extend((d + 1, deg, v) for d, v in h.items())
    return out


def betti_table(
    I: MonomialIdeal,
    characteristic: int | str | None = None,
    *,
    threads: int = 1,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
    face_cap: int = DEFAULT_FACE_CAP,
) -> BettiTable:
    """Graded Betti numbers of I over QQ or GF(p).

    ``characteristic`` defaults to the field of the ideal's context.
    ``threads > 1`` spreads the lattice over worker processes.
    """
    _require_proper(I, "the Betti table")
    p = I.context.characteristic if characteristic is None else parse_field(characteristic)
    gens = [g.exponents for g in I.generators]
    lattice = sorted(_lcm_lattice_exponents(I, lattice_cap))
    entries: dict[tuple[int, int], int] = defaultdict(int)
    if threads > 1 and len(lattice) > 256:
        size = max(64, len(lattice) // (4 * threads))
        chunks = [(gens, lattice[t:t + size], p, face_cap) for t in range(0, len(lattice), size)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_betti_chunk, chunks))
    else:
        results = [_betti_chunk((gens, lattice, p, face_cap))]
    for part in results:
        for i, j, v in part:
            entries[(i, j)] += v
    return BettiTable(dict(entries), "ideal", p)


def projective_dimension(I: MonomialIdeal, characteristic: int | str | None = None, **kw) -> int:
    """pd(I); pd(S/I) is one more."""
    return betti_table(I, characteristic, **kw).pd


def depth(I: MonomialIdeal, characteristic: int | str | None = None, **kw) -> int:
    """depth(S/I) = n - pd(S/I), by Auslander-Buchsbaum."""
    return I.context.n - (projective_dimension(I, characteristic, **kw) + 1)


def g_function(I: MonomialIdeal, characteristic: int | str | None = None, **kw) -> GFunctionProfile:
    """Normalized depth function g_I(k) for k = 1, ..., nu(I).

    g_I(k) = depth(S/I^[k]) + |deg(I)| - n - (indeg(I^[k]) - 1)
    """
    _require_proper(I, "the normalized depth function")
    p = I.context.characteristic if characteristic is None else parse_field(characteristic)
    n = I.context.n
    size = sum(I.bounding_multidegree)
    values, depths, indegs = [], [], []
    for k in range(1, monomial_grade(I) + 1):
        J = matching_power(I, k)
        dk = depth(J, p, **kw)
        values.append(dk + size - n - (J.indeg - 1))
        depths.append(dk)
        indegs.append(J.indeg)
    return GFunctionProfile(tuple(values), tuple(depths), tuple(indegs), field_name(p))


def is_linearly_related(I: MonomialIdeal) -> bool:
    """True if I is generated in one degree d with all first syzygies in degree d + 1.

    First syzygies sit in degrees lcm(u, v) for u, v in G(I), so only those
    multidegrees are inspected. beta_{1,m} = dim H~_0(K^m(I)) is nonzero
    exactly when K^m(I) is disconnected, and since the facets span K^m(I)
    this is a union-find over overlapping facets.
    """
    _require_proper(I, "linear relatedness")
    d = I.generators[0].degree
    if any(u.degree != d for u in I.generators):
        return False
    gens = [g.exponents for g in I.generators]
    seen = set()
    for s, u in enumerate(gens):
        for v in gens[s + 1:]:
            m = tuple(x if x >= y else y for x, y in zip(u, v))
            if sum(m) <= d + 1 or m in seen:
                continue
            seen.add(m)
            if _components(_koszul_facets(gens, m)) > 1:
                return False
    return True


def _components(facets: list[int]) -> int:
    groups: list[int] = []
    for f in facets:
        if not f:
            continue
        merged = f
        rest = []
        for g in groups:
            if g & merged:
                merged |= g
            else:
                rest.append(g)
        rest.append(merged)
        groups = rest
    return len(groups)
