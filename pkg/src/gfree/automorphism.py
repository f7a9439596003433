"""Automorphism enumeration and the order-3-to-order-2 construction.

No cograph has a cyclic automorphism group of order 3: from any order-3
automorphism one can always manufacture an involution, by swapping two of
the three sibling subtrees the 3-cycle spans in the decomposition tree.
check_no_z3 confirms the exclusion exhaustively on small cographs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .census import cograph_classes
from .cotree import decompose, leaf_paths, meet_path
from .errors import NotIsomorphismError, NotOrderThreeError, TooLargeError
from .graphs import Graph

__all__ = [
    "Permutation",
    "automorphisms",
    "order3_to_order2",
    "NoZ3Report",
    "check_no_z3",
]


@dataclass(frozen=True)
class Permutation:
    """Bijection on a fixed vertex set, stored as sorted (source, image) pairs."""

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        srcs = {p[0] for p in self.pairs}
        dsts = {p[1] for p in self.pairs}
        if len(srcs) != len(self.pairs) or srcs != dsts:
            raise NotIsomorphismError("not a bijection on its own domain")

    @staticmethod
    def from_dict(mapping: Mapping[str, str]) -> "Permutation":
        return Permutation(tuple(sorted(mapping.items())))

    @staticmethod
    def identity(vertices: Iterable[str]) -> "Permutation":
        return Permutation(tuple(sorted((v, v) for v in vertices)))

    @cached_property
    def _dict(self) -> dict[str, str]:
        return dict(self.pairs)

    def __getitem__(self, v: str) -> str:
        return self._dict[v]

    def as_dict(self) -> dict[str, str]:
        return dict(self._dict)

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self._dict)

    def after(self, other: "Permutation") -> "Permutation":
        return Permutation(
            tuple(sorted((v, self._dict[w]) for v, w in other.pairs))
        )

    def inverse(self) -> "Permutation":
        return Permutation(tuple(sorted((w, v) for v, w in self.pairs)))

    @property
    def is_identity(self) -> bool:
        return all(v == w for v, w in self.pairs)

    def order(self) -> int:
        n = 1
        p = self
        while not p.is_identity:
            p = p.after(self)
            n += 1
        return n

    def cycles(self) -> tuple[tuple[str, ...], ...]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen: set[str] = set()
        out: list[tuple[str, ...]] = []
        for v, _ in self.pairs:
            if v in seen or self._dict[v] == v:
                continue
            cyc = [v]
            w = self._dict[v]
            while w != v:
                cyc.append(w)
                w = self._dict[w]
            seen.update(cyc)
            pivot = cyc.index(min(cyc))
            out.append(tuple(cyc[pivot:] + cyc[:pivot]))
        out.sort(key=lambda c: c[0])
        return tuple(out)


def automorphisms(g: Graph) -> list[Permutation]:
    """All edge-preserving bijections, in lexicographic image order."""
    if g.n > 10:
        raise TooLargeError(f"automorphism enumeration limited to 10 vertices, got {g.n}")
    verts = g.vertices
    out: list[Permutation] = []
    assigned: dict[str, str] = {}
    used: set[str] = set()

    def consistent(v: str, w: str) -> bool:
        if g.degree(v) != g.degree(w):
            return False
        return all(
            g.has_edge(v, q) == g.has_edge(w, qi) for q, qi in assigned.items()
        )

    def extend(i: int) -> None:
        if i == len(verts):
            out.append(Permutation.from_dict(assigned))
            return
        v = verts[i]
        for w in verts:
            if w in used:
                continue
            if consistent(v, w):
                assigned[v] = w
                used.add(w)
                extend(i + 1)
                del assigned[v]
                used.remove(w)

    extend(0)
    return out


def _is_automorphism(g: Graph, f: Permutation) -> bool:
    if f.domain != frozenset(g.vertices):
        return False
    return all(g.has_edge(f[u], f[v]) for u, v in g.edges)


def order3_to_order2(g: Graph, f: Permutation) -> Permutation:
    """Build an involution from an order-3 automorphism of a cograph.

    Take the first 3-cycle (a, b, c) of f in vertex order.  Their pairwise
    meets in the decomposition tree coincide at one node; the leaves split
    into the three sibling subtrees A, B, C holding a, b, c and the rest D.
    The involution applies f on A, its inverse on B, and fixes C and D.
    """
    if not _is_automorphism(g, f):
        raise NotIsomorphismError("the given map is not an automorphism")
    if f.is_identity or not f.after(f).after(f).is_identity:
        raise NotOrderThreeError("the given automorphism does not have order 3")
    tree = decompose(g)
    paths = leaf_paths(tree)
    a = next(v for v in g.vertices if f[v] != v)
    b, c = f[a], f[f[a]]
    m = meet_path(paths[a], paths[b])
    if not (m == meet_path(paths[b], paths[c]) == meet_path(paths[c], paths[a])):
        raise RuntimeError("pairwise meets of a 3-cycle differ in a cotree")
    d = len(m)

    def side(anchor: str) -> set[str]:
        head = paths[anchor][: d + 1]
        return {u for u in g.vertices if paths[u][: d + 1] == head}

    part_a, part_b = side(a), side(b)
    if {f[u] for u in part_a} != part_b:
        raise RuntimeError("the order-3 map does not swap the sibling subtrees")
    finv = f.inverse()
    mapping = {}
    for u in g.vertices:
        if u in part_a:
            mapping[u] = f[u]
        elif u in part_b:
            mapping[u] = finv[u]
        else:
            mapping[u] = u
    out = Permutation.from_dict(mapping)
    if not _is_automorphism(g, out) or out.is_identity or not out.after(out).is_identity:
        raise RuntimeError("constructed map is not an involutive automorphism")
    return out


@dataclass(frozen=True)
class NoZ3Report:
    max_n: int
    examined: tuple[tuple[int, int], ...]  # (vertex count, cographs examined)
    offenders: tuple[Graph, ...]  # cographs whose automorphism group has order 3

    @property
    def ok(self) -> bool:
        return not self.offenders

    @property
    def total(self) -> int:
        return sum(count for _, count in self.examined)


def check_no_z3(max_n: int) -> NoZ3Report:
    """Search all cographs up to max_n vertices for an automorphism group
    of order 3 (any such group is cyclic); none should exist."""
    if max_n > 9:
        raise TooLargeError(f"exhaustive search limited to 9 vertices, got {max_n}")
    examined: list[tuple[int, int]] = []
    offenders: list[Graph] = []
    for n in range(1, max_n + 1):
        classes = cograph_classes(n)
        examined.append((n, len(classes)))
        for g in classes:
            if len(automorphisms(g)) == 3:
                offenders.append(g)
    return NoZ3Report(max_n, tuple(examined), tuple(offenders))
