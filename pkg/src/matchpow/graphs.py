"""Edge ideals of simple graphs and of vertex-weighted oriented graphs."""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import jsonschema

from .ideals import MonomialIdeal
from .monomials import Monomial, PolynomialContext

SIMPLE_GRAPH_SCHEMA = {
    "type": "object",
    "properties": {
        "type": {"const": "simple"},
        "vertices": {"type": "array", "items": {"type": "string", "minLength": 1}, "minItems": 1},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "string"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
    "required": ["type", "vertices", "edges"],
    "additionalProperties": False,
}

WEIGHTED_ORIENTED_GRAPH_SCHEMA = {
    "type": "object",
    "properties": {
        "type": {"const": "weighted-oriented"},
        "vertices": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string", "minLength": 1},
                    "weight": {"type": "integer", "minimum": 1},
                },
                "required": ["name"],
                "additionalProperties": False,
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"from": {"type": "string"}, "to": {"type": "string"}},
                "required": ["from", "to"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["type", "vertices", "edges"],
    "additionalProperties": False,
}


class GraphWarning(UserWarning):
    pass


def _check_vertices(names: Sequence[str]) -> dict[str, int]:
    index = {}
    for i, v in enumerate(names):
        if v in index:
            raise ValueError(f"duplicate vertex {v!r}")
        index[v] = i
    return index


@dataclass(frozen=True)
class SimpleGraph:
    """Finite simple graph; edges are stored as sorted index pairs."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_names(cls, vertices: Sequence[str], edges: Iterable[Sequence[str]]) -> "SimpleGraph":
        index = _check_vertices(vertices)
        es = set()
        for e in edges:
            a, b = e
            if a not in index or b not in index:
                raise ValueError(f"edge {a}-{b} uses an unknown vertex")
            if a == b:
                raise ValueError(f"loop at {a!r}")
            pair = tuple(sorted((index[a], index[b])))
            if pair in es:
                raise ValueError(f"duplicate edge {a}-{b}")
            es.add(pair)
        return cls(tuple(vertices), frozenset(es))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], prefix: str = "x") -> "SimpleGraph":
        """Graph on vertices x1..xn from 0-based index pairs."""
        names = [f"{prefix}{i + 1}" for i in range(n)]
        return cls.from_names(names, [(names[a], names[b]) for a, b in edges])

    def context(self, characteristic: int = 0) -> PolynomialContext:
        return PolynomialContext(self.vertices, characteristic)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class WeightedOrientedGraph:
    """Directed graph with a weight w_i >= 1 on every vertex."""

    vertices: tuple[str, ...]
    weights: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_names(
        cls,
        vertices: Sequence[tuple[str, int] | str],
        edges: Iterable[tuple[str, str]],
    ) -> "WeightedOrientedGraph":
        names, weights = [], []
        for v in vertices:
            name, w = (v, 1) if isinstance(v, str) else v
            if w < 1:
                raise ValueError(f"vertex {name!r} has weight {w} < 1")
            names.append(name)
            weights.append(int(w))
        index = _check_vertices(names)
        es = set()
        for a, b in edges:
            if a not in index or b not in index:
                raise ValueError(f"edge {a}->{b} uses an unknown vertex")
            if a == b:
                raise ValueError(f"loop at {a!r}")
            if (index[a], index[b]) in es:
                raise ValueError(f"duplicate edge {a}->{b}")
            es.add((index[a], index[b]))
        return cls(tuple(names), tuple(weights), frozenset(es))

    def context(self, characteristic: int = 0) -> PolynomialContext:
        return PolynomialContext(self.vertices, characteristic)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def antiparallel_pairs(self) -> list[tuple[str, str]]:
        """Unordered pairs carrying both orientations."""
        return [
            (self.vertices[i], self.vertices[j])
            for i, j in self.sorted_edges()
            if i < j and (j, i) in self.edges
        ]

    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.vertices, frozenset(tuple(sorted(e)) for e in self.edges))


def _edge_monomial(ctx: PolynomialContext, i: int, j: int, wj: int = 1) -> Monomial:
    e = [0] * ctx.n
    e[i] += 1
    e[j] += wj
    return Monomial(ctx, tuple(e))


def edge_ideal(G: SimpleGraph, characteristic: int = 0) -> MonomialIdeal:
    """I(G) = (x_i x_j : {i, j} an edge of G)."""
    ctx = G.context(characteristic)
    if not G.edges:
        warnings.warn("graph has no edges; its edge ideal is zero", GraphWarning, stacklevel=2)
    return MonomialIdeal(ctx, (_edge_monomial(ctx, i, j) for i, j in G.edges))


def edge_ideal_oriented(D: WeightedOrientedGraph, characteristic: int = 0) -> MonomialIdeal:
    """I(D) = (x_i x_j^{w_j} : (i, j) a directed edge), minimalized."""
    ctx = D.context(characteristic)
    if not D.edges:
        warnings.warn("graph has no edges; its edge ideal is zero", GraphWarning, stacklevel=2)
    return MonomialIdeal(ctx, (_edge_monomial(ctx, i, j, D.weights[j]) for i, j in D.edges))


def enumerate_matchings(G: SimpleGraph, k: int) -> set[frozenset[tuple[int, int]]]:
    """All sets of k pairwise vertex-disjoint edges, by exhaustive backtracking."""
    if k < 1:
        raise ValueError("k must be at least 1")
    edges = G.sorted_edges()
    found: set[frozenset[tuple[int, int]]] = set()

    def extend(start: int, used: int, chosen: list[tuple[int, int]]) -> None:
        if len(chosen) == k:
            found.add(frozenset(chosen))
            return
        for t in range(start, len(edges)):
            i, j = edges[t]
            bits = (1 << i) | (1 << j)
            if used & bits:
                continue
            chosen.append(edges[t])
            extend(t + 1, used | bits, chosen)
            chosen.pop()

    extend(0, 0, [])
    return found


def matching_number(G: SimpleGraph) -> int:
    k = 0
    while enumerate_matchings(G, k + 1):
        k += 1
    return k


def graph_from_json(data: dict | str) -> SimpleGraph | WeightedOrientedGraph:
    """Build a graph from the JSON schema; unknown fields are rejected."""
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("type") if isinstance(data, dict) else None
    if kind == "simple":
        jsonschema.validate(data, SIMPLE_GRAPH_SCHEMA)
        return SimpleGraph.from_names(data["vertices"], data["edges"])
    if kind == "weighted-oriented":
        jsonschema.validate(data, WEIGHTED_ORIENTED_GRAPH_SCHEMA)
        return WeightedOrientedGraph.from_names(
            [(v["name"], v.get("weight", 1)) for v in data["vertices"]],
            [(e["from"], e["to"]) for e in data["edges"]],
        )
    raise ValueError(f"unknown graph type {kind!r}; expected 'simple' or 'weighted-oriented'")


def graph_to_json(G: SimpleGraph | WeightedOrientedGraph) -> dict:
    if isinstance(G, SimpleGraph):
        return {
            "type": "simple",
            "vertices": list(G.vertices),
            "edges": [[G.vertices[i], G.vertices[j]] for i, j in G.sorted_edges()],
        }
    return {
        "type": "weighted-oriented",
        "vertices": [{"name": v, "weight": w} for v, w in zip(G.vertices, G.weights)],
        "edges": [{"from": G.vertices[i], "to": G.vertices[j]} for i, j in G.sorted_edges()],
    }
