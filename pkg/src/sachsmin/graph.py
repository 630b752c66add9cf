"""Immutable simple undirected graphs backed by per-vertex adjacency bitsets.

Vertices are the integers ``0..n-1`` and each adjacency row is a Python int
used as a bitset, so neighborhood intersections and degree counts reduce to
``&`` and ``int.bit_count``.  All editing operations return new graphs.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from . import canon

MAX_VERTICES = 64


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class Graph:
    """An immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[u]`` is the neighbor bitset of ``u``.  Symmetry and irreflexivity
    are checked on construction; every public constructor funnels through
    ``__init__``.
    """

    __slots__ = ("adj",)

    adj: tuple[int, ...]

    def __init__(self, adj: Iterable[int]):
        rows = tuple(adj)
        n = len(rows)
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency row {u} mentions vertices >= {n}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in _bits(row):
                if not rows[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph on ``n`` vertices from an edge list.

        Duplicate edges collapse; self-loops and out-of-range endpoints are
        rejected.
        """
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows)

    # -- basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``."""
        out = []
        for u, row in enumerate(self.adj):
            for v in _bits(row >> u + 1 << u + 1):
                out.append((u, v))
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.adj)

    # -- connectivity ------------------------------------------------------

    def component_of(self, v: int) -> int:
        """Bitmask of the connected component containing ``v``."""
        seen = 1 << v
        frontier = seen
        while frontier:
            grow = 0
            for u in _bits(frontier):
                grow |= self.adj[u]
            frontier = grow & ~seen
            seen |= frontier
        return seen

    def components(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest vertex."""
        remaining = (1 << self.n) - 1
        comps = []
        while remaining:
            v = (remaining & -remaining).bit_length() - 1
            comp = self.component_of(v)
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.component_of(0) == (1 << self.n) - 1

    def distance(self, u: int, v: int) -> int | float:
        """Breadth-first distance from ``u`` to ``v``; ``inf`` if unreachable."""
        if u == v:
            return 0
        seen = 1 << u
        frontier = seen
        d = 0
        while frontier:
            d += 1
            grow = 0
            for w in _bits(frontier):
                grow |= self.adj[w]
            frontier = grow & ~seen
            if frontier >> v & 1:
                return d
            seen |= frontier
        return float("inf")

    # -- editing (copy-on-write) -------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(rows)

    def remove_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(rows)

    def delete_vertex(self, v: int) -> Graph:
        """Delete ``v``; vertices above ``v`` shift down by one."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return self.induced_subgraph(u for u in range(self.n) if u != v)

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabeled to 0..k-1 in sorted order."""
        kept = sorted(set(vertices))
        if not all(0 <= u < self.n for u in kept):
            raise ValueError("vertex out of range")
        index = {u: i for i, u in enumerate(kept)}
        rows = [0] * len(kept)
        for u in kept:
            for w in _bits(self.adj[u]):
                if w in index:
                    rows[index[u]] |= 1 << index[w]
        return Graph(rows)

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Image under ``perm``: vertex ``v`` becomes ``perm[v]``."""
        perm = tuple(perm)
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            new = 0
            for w in _bits(row):
                new |= 1 << perm[w]
            rows[perm[u]] = new
        return Graph(rows)

    # -- isomorphism -------------------------------------------------------

    def canonical_code(self) -> bytes:
        """A byte string equal across isomorphic graphs and distinct otherwise."""
        rows, _, _ = canon.canonical_labeling(self.adj)
        return canon.pack_code(rows)

    def canonical_form(self) -> Graph:
        """The canonically labeled copy of this graph."""
        _, labeling, _ = canon.canonical_labeling(self.adj)
        return self.relabel(labeling)

    def automorphism_orbits(self) -> list[int]:
        """Vertex orbits under the automorphism group, as bitmasks."""
        _, _, gens = canon.canonical_labeling(self.adj)
        return canon.vertex_orbits(self.n, gens)

    def is_isomorphic(self, other: Graph) -> bool:
        if self.n != other.n or self.size != other.size:
            return False
        return self.canonical_code() == other.canonical_code()

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"
