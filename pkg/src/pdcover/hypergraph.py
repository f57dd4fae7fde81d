"""Weighted hypergraphs and the set-cover <-> vertex-cover equivalence.

Vertices are dense integer ids ``0..n-1`` and edges are tuples of vertex
ids. A set-cover instance maps onto a hypergraph with one vertex per set
and one edge per element; the edge of element ``x`` contains the vertex of
every set that holds ``x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    DuplicateVertexInEdge,
    EmptyEdge,
    NonpositiveWeight,
    UncoveredElement,
    UnknownId,
    UnknownVertex,
)

__all__ = [
    "GraphStats",
    "Hypergraph",
    "SetCoverInstance",
    "build_hypergraph",
    "cover_to_set_solution",
    "from_set_cover",
    "packing_to_element_solution",
    "stats",
]


class GraphStats(NamedTuple):
    n: int
    m: int
    r: int
    M: int


def _check_weight(v: int, w) -> None:
    if isinstance(w, bool) or not isinstance(w, Real):
        raise NonpositiveWeight(f"weight of vertex {v} is not a real number: {w!r}")
    if not w > 0 or (isinstance(w, float) and math.isinf(w)):
        raise NonpositiveWeight(f"weight of vertex {v} must be positive and finite, got {w!r}")


class Hypergraph:
    """Immutable vertex-weighted hypergraph.

    Parameters
    ----------
    weights : sequence of positive reals
        ``weights[v]`` is the weight of vertex ``v``. Ints, floats and
        :class:`fractions.Fraction` are all accepted and stored as given.
    edges : iterable of iterables of vertex ids
        Vertex order inside an edge is preserved. Identical edges are kept
        as distinct edges.
    """

    __slots__ = ("_weights", "_edges", "_incidence", "_stats")

    def __init__(self, weights: Sequence[Real], edges: Iterable[Iterable[int]]):
        weights = tuple(weights)
        for v, w in enumerate(weights):
            _check_weight(v, w)
        n = len(weights)
        checked = []
        incidence: list[list[int]] = [[] for _ in range(n)]
        for eid, edge in enumerate(edges):
            edge = tuple(edge)
            if not edge:
                raise EmptyEdge(f"edge {eid} is empty and can never be covered")
            for v in edge:
                if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                    raise UnknownVertex(f"edge {eid} refers to vertex {v!r}, but n = {n}")
            if len(set(edge)) != len(edge):
                raise DuplicateVertexInEdge(f"edge {eid} repeats a vertex: {edge}")
            for v in edge:
                incidence[v].append(eid)
            checked.append(edge)
        self._weights = weights
        self._edges = tuple(checked)
        self._incidence = tuple(tuple(inc) for inc in incidence)
        r = max((len(e) for e in self._edges), default=0)
        M = sum(len(e) for e in self._edges)
        self._stats = GraphStats(n, len(self._edges), r, M)

    @property
    def weights(self) -> tuple:
        return self._weights

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return self._edges

    @property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """``incidence[v]`` lists the ids of edges containing ``v``, ascending."""
        return self._incidence

    @property
    def n(self) -> int:
        return self._stats.n

    @property
    def m(self) -> int:
        return self._stats.m

    @property
    def r(self) -> int:
        return self._stats.r

    @property
    def M(self) -> int:
        return self._stats.M

    def stats(self) -> GraphStats:
        return self._stats

    def total_weight(self, vertices: Iterable[int] | None = None):
        """Sum of weights over ``vertices`` (all vertices by default)."""
        if vertices is None:
            return sum(self._weights)
        return sum(self._weights[v] for v in vertices)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._weights == other._weights and self._edges == other._edges

    def __hash__(self):
        return hash((self._weights, self._edges))

    def __repr__(self):
        n, m, r, M = self._stats
        return f"Hypergraph(n={n}, m={m}, r={r}, M={M})"


def build_hypergraph(weights: Sequence[Real], edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate ``weights`` and ``edges`` and return the hypergraph they define."""
    return Hypergraph(weights, edges)


def stats(h: Hypergraph) -> GraphStats:
    """Return ``(n, m, r, M)``: vertices, edges, rank and total edge size."""
    return h.stats()


@dataclass(frozen=True)
class SetCoverInstance:
    """Weighted set family over the universe ``0..num_elements-1``.

    ``sets[i]`` holds the element ids of set ``i`` and ``weights[i]`` its
    weight. Every element must lie in at least one set.
    """

    weights: tuple
    sets: tuple[tuple[int, ...], ...]
    num_elements: int

    def __init__(self, weights: Sequence[Real], sets: Iterable[Iterable[int]], num_elements: int | None = None):
        sets = tuple(tuple(s) for s in sets)
        weights = tuple(weights)
        if len(weights) != len(sets):
            raise ValueError(f"{len(weights)} weights for {len(sets)} sets")
        if num_elements is None:
            num_elements = 1 + max((x for s in sets for x in s), default=-1)
        for i, s in enumerate(sets):
            for x in s:
                if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < num_elements:
                    raise UnknownId(f"set {i} holds element {x!r} outside 0..{num_elements - 1}")
            if len(set(s)) != len(s):
                raise DuplicateVertexInEdge(f"set {i} repeats an element: {s}")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "sets", sets)
        object.__setattr__(self, "num_elements", num_elements)

    @property
    def num_sets(self) -> int:
        return len(self.sets)

    @property
    def vertex_of_set(self) -> tuple[int, ...]:
        return tuple(range(self.num_sets))

    @property
    def set_of_vertex(self) -> tuple[int, ...]:
        return tuple(range(self.num_sets))

    @property
    def edge_of_element(self) -> tuple[int, ...]:
        return tuple(range(self.num_elements))

    @property
    def element_of_edge(self) -> tuple[int, ...]:
        return tuple(range(self.num_elements))


def from_set_cover(inst: SetCoverInstance) -> Hypergraph:
    """Hypergraph image of a set-cover instance.

    Set ``i`` becomes vertex ``i`` with the same weight; element ``x``
    becomes edge ``x`` holding the vertices of the sets containing ``x``.
    The rank of the image is the largest number of sets sharing one
    element, and its size ``M`` is the sum of the set sizes.
    """
    members: list[list[int]] = [[] for _ in range(inst.num_elements)]
    for i, s in enumerate(inst.sets):
        for x in s:
            members[x].append(inst.vertex_of_set[i])
    for x, sets in enumerate(members):
        if not sets:
            raise UncoveredElement(f"element {x} belongs to no set")
    edge_of = inst.edge_of_element
    ordered = [None] * inst.num_elements
    for x, sets in enumerate(members):
        ordered[edge_of[x]] = sets
    return Hypergraph(inst.weights, ordered)


def cover_to_set_solution(inst: SetCoverInstance, cover: Iterable[int]) -> list[int]:
    """Translate a vertex cover of the image into sorted set ids."""
    out = []
    for v in cover:
        if not 0 <= v < inst.num_sets:
            raise UnknownId(f"vertex {v} has no set (num_sets = {inst.num_sets})")
        out.append(inst.set_of_vertex[v])
    return sorted(out)


def packing_to_element_solution(inst: SetCoverInstance, p: Sequence | Mapping[int, Real]) -> list:
    """Translate an edge packing of the image into per-element weights.

    ``p`` is either a sequence indexed by edge id or a mapping from edge id
    to value; edges missing from a mapping get weight 0.
    """
    items = p.items() if isinstance(p, Mapping) else enumerate(p)
    out = [0] * inst.num_elements
    for e, value in items:
        if not 0 <= e < inst.num_elements:
            raise UnknownId(f"edge {e} has no element (num_elements = {inst.num_elements})")
        out[inst.element_of_edge[e]] = value
    return out


def as_fraction(x) -> Fraction:
    """Exact rational for ``x``; floats go through their shortest repr, so 0.1 -> 1/10."""
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)
