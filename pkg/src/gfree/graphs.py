"""Finite simple graphs with named vertices, plus brute-force search oracles.

Graphs are immutable values: every operation returns a new graph.  Vertex
identity is an opaque string; operations that mint vertices use the
deterministic scheme "g0", "g1", ... so outputs are reproducible byte for
byte.  All searches iterate vertices in declared order and return the first
witness found, which makes every oracle deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    BadPartialError,
    BadSizeError,
    DuplicateVertexError,
    EmptyGraphError,
    LengthMismatchError,
    SelfLoopError,
    UnknownEndpointError,
)

__all__ = [
    "Graph",
    "VertexMap",
    "make_graph",
    "complement",
    "combine",
    "labeled_chain_sum",
    "path_graph",
    "cycle_graph",
    "induced_subgraph",
    "relabel",
    "connected_components",
    "find_induced_embedding",
    "is_free",
    "is_isomorphic",
]


def _norm_edge(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    vertices: declared order matters for search determinism.
    edges: canonical set of pairs, each stored once with endpoints sorted.
    """

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _adj(self) -> dict[str, frozenset[str]]:
        nbrs: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def has_vertex(self, v: str) -> bool:
        return v in self._adj

    def has_edge(self, u: str, v: str) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def edge_list(self) -> list[tuple[str, str]]:
        """Edges ordered by vertex position, endpoints in declared order."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        out = [(u, v) if pos[u] < pos[v] else (v, u) for u, v in self.edges]
        out.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
        return out


@dataclass(frozen=True)
class VertexMap:
    """Injective partial map between vertex sets, stored as sorted pairs."""

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        srcs = [p[0] for p in self.pairs]
        dsts = [p[1] for p in self.pairs]
        if len(set(srcs)) != len(srcs) or len(set(dsts)) != len(dsts):
            raise BadPartialError(f"vertex map is not injective: {self.pairs}")

    @staticmethod
    def from_dict(mapping: Mapping[str, str]) -> "VertexMap":
        return VertexMap(tuple(sorted(mapping.items())))

    @staticmethod
    def identity(vertices: Iterable[str]) -> "VertexMap":
        return VertexMap(tuple(sorted((v, v) for v in vertices)))

    @cached_property
    def _dict(self) -> dict[str, str]:
        return dict(self.pairs)

    def __getitem__(self, v: str) -> str:
        return self._dict[v]

    def __contains__(self, v: str) -> bool:
        return v in self._dict

    def as_dict(self) -> dict[str, str]:
        return dict(self._dict)

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(p[0] for p in self.pairs)

    @property
    def codomain(self) -> frozenset[str]:
        return frozenset(p[1] for p in self.pairs)

    def inverse(self) -> "VertexMap":
        return VertexMap(tuple(sorted((b, a) for a, b in self.pairs)))

    def after(self, other: "VertexMap") -> "VertexMap":
        """Composite self∘other: apply other first, then self."""
        return VertexMap(tuple(sorted((a, self._dict[b]) for a, b in other.pairs)))

    def restrict(self, keep: Iterable[str]) -> "VertexMap":
        keepset = set(keep)
        return VertexMap(tuple(p for p in self.pairs if p[0] in keepset))


def make_graph(names: Sequence[str], edge_pairs: Iterable[tuple[str, str]]) -> Graph:
    """Build a canonical Graph, validating names and edges."""
    seen: set[str] = set()
    for name in names:
        if name in seen:
            raise DuplicateVertexError(f"duplicate vertex name: {name!r}")
        seen.add(name)
    edges: set[tuple[str, str]] = set()
    for u, v in edge_pairs:
        if u == v:
            raise SelfLoopError(f"self-loop at {u!r}")
        if u not in seen:
            raise UnknownEndpointError(f"unknown endpoint: {u!r}")
        if v not in seen:
            raise UnknownEndpointError(f"unknown endpoint: {v!r}")
        edges.add(_norm_edge(u, v))
    return Graph(tuple(names), frozenset(edges))


def complement(g: Graph) -> Graph:
    """Same vertices; edge iff non-edge in g."""
    edges = {
        _norm_edge(u, v)
        for u, v in itertools.combinations(g.vertices, 2)
        if not g.has_edge(u, v)
    }
    return Graph(g.vertices, frozenset(edges))


def relabel(g: Graph, mapping: Mapping[str, str]) -> Graph:
    """Rename vertices through an injective total mapping."""
    names = [mapping[v] for v in g.vertices]
    edges = [(mapping[u], mapping[v]) for u, v in g.edges]
    return make_graph(names, edges)


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    """Induced subgraph on the given vertices, in declared order."""
    keepset = set(keep)
    for v in keepset:
        if not g.has_vertex(v):
            raise UnknownEndpointError(f"unknown vertex: {v!r}")
    names = tuple(v for v in g.vertices if v in keepset)
    edges = frozenset(e for e in g.edges if e[0] in keepset and e[1] in keepset)
    return Graph(names, edges)


def _disjointify(parts: Sequence[Graph], prefixes: Sequence[str]) -> list[Graph]:
    """Prefix vertex names only when some name occurs in two parts."""
    total = sum(p.n for p in parts)
    distinct = len({v for p in parts for v in p.vertices})
    if distinct == total:
        return list(parts)
    return [
        relabel(p, {v: f"{pre}{v}" for v in p.vertices})
        for p, pre in zip(parts, prefixes)
    ]


def combine(g: Graph, h: Graph, mode: str) -> Graph:
    """Disjoint union (mode "disjoint") or join (mode "join") of two graphs.

    Name collisions are resolved deterministically by prefixing "a." / "b.".
    """
    if mode not in ("disjoint", "join"):
        raise ValueError(f"combine mode must be 'disjoint' or 'join', got {mode!r}")
    return labeled_chain_sum([g, h], [1 if mode == "join" else 0, 0], _pair=True)


def labeled_chain_sum(
    parts: Sequence[Graph], labels: Sequence[int], _pair: bool = False
) -> Graph:
    """Union of parts; all cross edges part_i x part_j (i < j) iff labels[i] = 1.

    Name collisions across parts are resolved by prefixing "p<i>."
    ("a." / "b." when called through combine).
    """
    if len(parts) != len(labels):
        raise LengthMismatchError(
            f"{len(parts)} parts but {len(labels)} labels"
        )
    for lab in labels:
        if lab not in (0, 1):
            raise ValueError(f"labels must be 0 or 1, got {lab!r}")
    prefixes = ["a.", "b."] if _pair else [f"p{i}." for i in range(len(parts))]
    disjoint = _disjointify(parts, prefixes)
    names = [v for p in disjoint for v in p.vertices]
    edges: list[tuple[str, str]] = [e for p in disjoint for e in p.edges]
    for i, j in itertools.combinations(range(len(disjoint)), 2):
        if labels[i] == 1:
            edges.extend(
                (u, v)
                for u in disjoint[i].vertices
                for v in disjoint[j].vertices
            )
    return make_graph(names, edges)


def path_graph(n: int) -> Graph:
    """Path on n >= 1 fresh vertices g0-g1-...-g<n-1>."""
    if n < 1:
        raise BadSizeError(f"path needs n >= 1, got {n}")
    names = [f"g{i}" for i in range(n)]
    return make_graph(names, [(names[i], names[i + 1]) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """Cycle on n >= 3 fresh vertices."""
    if n < 3:
        raise BadSizeError(f"cycle needs n >= 3, got {n}")
    names = [f"g{i}" for i in range(n)]
    edges = [(names[i], names[(i + 1) % n]) for i in range(n)]
    return make_graph(names, edges)


def connected_components(g: Graph) -> list[tuple[str, ...]]:
    """Components as vertex tuples, each in declared order, ordered by first vertex."""
    seen: set[str] = set()
    out: list[tuple[str, ...]] = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for w in g.neighbors(v):
                    if w not in comp:
                        comp.add(w)
                        nxt.append(w)
            frontier = nxt
        seen.update(comp)
        out.append(tuple(v for v in g.vertices if v in comp))
    return out


def _check_partial(pattern: Graph, host: Graph, partial: Mapping[str, str]) -> None:
    dsts = list(partial.values())
    if len(set(dsts)) != len(dsts):
        raise BadPartialError("partial map is not injective")
    for u, v in partial.items():
        if not pattern.has_vertex(u):
            raise BadPartialError(f"partial maps unknown pattern vertex {u!r}")
        if not host.has_vertex(v):
            raise BadPartialError(f"partial maps to unknown host vertex {v!r}")


def find_induced_embedding(
    pattern: Graph,
    host: Graph,
    partial: Mapping[str, str] | VertexMap | None = None,
) -> VertexMap | None:
    """First injective map pattern -> host preserving edges and non-edges.

    Extends the given partial map.  Pattern vertices are assigned in declared
    order and candidates tried in the host's declared order, so the witness
    is deterministic.  Returns None when no embedding exists.
    """
    if isinstance(partial, VertexMap):
        partial = partial.as_dict()
    partial = dict(partial or {})
    _check_partial(pattern, host, partial)
    if pattern.n > host.n:
        return None

    order = [v for v in pattern.vertices if v not in partial]
    assigned: dict[str, str] = dict(partial)
    used: set[str] = set(assigned.values())

    def consistent(pv: str, hv: str) -> bool:
        if host.degree(hv) < pattern.degree(pv):
            return False
        if (host.n - 1 - host.degree(hv)) < (pattern.n - 1 - pattern.degree(pv)):
            return False
        for qv, qh in assigned.items():
            if pattern.has_edge(pv, qv) != host.has_edge(hv, qh):
                return False
        return True

    # The fixed part must itself be consistent.
    for pv, hv in partial.items():
        for qv, qh in assigned.items():
            if qv != pv and pattern.has_edge(pv, qv) != host.has_edge(hv, qh):
                return None
        if host.degree(hv) < pattern.degree(pv):
            return None
        if (host.n - 1 - host.degree(hv)) < (pattern.n - 1 - pattern.degree(pv)):
            return None

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        pv = order[i]
        for hv in host.vertices:
            if hv in used:
                continue
            if consistent(pv, hv):
                assigned[pv] = hv
                used.add(hv)
                if extend(i + 1):
                    return True
                del assigned[pv]
                used.remove(hv)
        return False

    if extend(0):
        return VertexMap.from_dict(assigned)
    return None


def is_free(g: Graph, forbidden: Graph) -> bool:
    """True iff g has no induced copy of the (nonempty) forbidden graph."""
    if forbidden.n == 0:
        raise EmptyGraphError("freeness needs a nonempty forbidden graph")
    return find_induced_embedding(forbidden, g) is None


def is_isomorphic(g: Graph, h: Graph) -> VertexMap | None:
    """Witness isomorphism or None; degree-sequence pruning, result exact."""
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(g.degree(v) for v in g.vertices) != sorted(
        h.degree(v) for v in h.vertices
    ):
        return None
    # A total induced embedding between equal-sized graphs is an isomorphism.
    return find_induced_embedding(g, h)
