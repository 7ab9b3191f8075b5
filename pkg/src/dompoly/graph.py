"""Immutable simple graphs and the surgeries used by domination recurrences.

Vertices are the integers ``0..order-1``. Every operation returns a new
graph; after removing vertices the survivors are relabelled by keeping
their original ascending order (vertex ``i`` becomes the number of
survivors smaller than ``i``).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

VertexSet = frozenset


class GraphError(ValueError):
    """Invalid vertex, edge or graph construction."""


class EdgeListParseError(ValueError):
    """Malformed edge-list text; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    order: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.order < 0 or len(self.adjacency) != self.order:
            raise GraphError("adjacency length must equal order")
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if not 0 <= v < self.order:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise GraphError(f"loop at vertex {u}")
                if u not in self.adjacency[v]:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(order, tuple(frozenset(s) for s in adj))

    @classmethod
    def null(cls) -> Graph:
        return cls(0, ())

    @classmethod
    def empty(cls, order: int) -> Graph:
        return cls(order, tuple(frozenset() for _ in range(order)))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in sorted(nbrs):
                if u < v:
                    yield (u, v)

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(len(n) for n in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.order and v in self.adjacency[u]

    def neighbors(self, u: int) -> frozenset[int]:
        self._check(u)
        return self.adjacency[u]

    def closed_masks(self) -> list[int]:
        """Bitmask of N[v] for each vertex v."""
        masks = []
        for v, nbrs in enumerate(self.adjacency):
            m = 1 << v
            for w in nbrs:
                m |= 1 << w
            masks.append(m)
        return masks

    def _check(self, u: int) -> None:
        if not isinstance(u, int) or not 0 <= u < self.order:
            raise GraphError(f"vertex {u!r} out of range for order {self.order}")

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={list(self.edges())})"


def closed_neighborhood(g: Graph, u: int) -> frozenset[int]:
    g._check(u)
    return g.adjacency[u] | {u}


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced on ``keep``, compacted in ascending label order."""
    kept = sorted(set(keep))
    for v in kept:
        g._check(v)
    index = {v: i for i, v in enumerate(kept)}
    adj = tuple(
        frozenset(index[w] for w in g.adjacency[v] if w in index) for v in kept
    )
    return Graph(len(kept), adj)


def delete_vertices(g: Graph, removed: Iterable[int]) -> Graph:
    removed = set(removed)
    for v in removed:
        g._check(v)
    return induced_subgraph(g, (v for v in range(g.order) if v not in removed))


def delete_vertex(g: Graph, u: int) -> Graph:
    return delete_vertices(g, (u,))


def delete_closed_neighborhood(g: Graph, u: int) -> Graph:
    """G - N[u]; may be the null graph."""
    return delete_vertices(g, closed_neighborhood(g, u))


def complete_neighborhood(g: Graph, u: int) -> Graph:
    """Join every pair of neighbors of ``u``; ``u`` itself is kept."""
    g._check(u)
    nbrs = g.adjacency[u]
    adj = [set(s) for s in g.adjacency]
    for a, b in combinations(nbrs, 2):
        adj[a].add(b)
        adj[b].add(a)
    return Graph(g.order, tuple(frozenset(s) for s in adj))


def contract_vertex(g: Graph, u: int) -> Graph:
    """Vertex contraction G/u: make N(u) a clique, then delete u."""
    return delete_vertex(complete_neighborhood(g, u), u)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    g._check(u)
    g._check(v)
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(g.adjacency)
    adj[u] = adj[u] - {v}
    adj[v] = adj[v] - {u}
    return Graph(g.order, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.order
    adj = g.adjacency + tuple(frozenset(w + off for w in s) for s in h.adjacency)
    return Graph(g.order + h.order, adj)


def corona_k1(g: Graph) -> Graph:
    """Attach one pendant vertex to every vertex; pendant of v is v + order."""
    n = g.order
    edges = list(g.edges()) + [(v, v + n) for v in range(n)]
    return Graph.from_edges(2 * n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex (a, b) labelled ``a * h.order + b``."""
    m = h.order
    edges = []
    for a in range(g.order):
        for b1, b2 in h.edges():
            edges.append((a * m + b1, a * m + b2))
    for a1, a2 in g.edges():
        for b in range(m):
            edges.append((a1 * m + b, a2 * m + b))
    return Graph.from_edges(g.order * m, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n <order>`` / ``u v`` edge-list format."""
    order = None
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if order is None:
            if len(parts) != 2 or parts[0] != "n":
                raise EdgeListParseError(lineno, "expected header 'n <order>'")
            try:
                order = int(parts[1])
            except ValueError:
                raise EdgeListParseError(lineno, f"bad order {parts[1]!r}") from None
            if order < 0:
                raise EdgeListParseError(lineno, "order must be non-negative")
            continue
        if len(parts) != 2:
            raise EdgeListParseError(lineno, "expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer endpoint in {line!r}") from None
        if not (0 <= u < order and 0 <= v < order):
            raise EdgeListParseError(lineno, f"endpoint out of range 0..{order - 1}")
        if u == v:
            raise EdgeListParseError(lineno, f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListParseError(lineno, f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if order is None:
        raise EdgeListParseError(1, "missing header 'n <order>'")
    return Graph.from_edges(order, edges)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.order}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _canonical_key(order: int, edges: list[tuple[int, int]]) -> tuple:
    from itertools import permutations

    best = None
    for perm in permutations(range(order)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def all_graphs(order: int, up_to_isomorphism: bool = True) -> list[Graph]:
    """Every simple graph on ``order`` labelled vertices, optionally one per isomorphism class.

    Brute force over all edge subsets; meant for order <= 6.
    """
    pairs = list(combinations(range(order), 2))
    seen: set[tuple] = set()
    out = []
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        if up_to_isomorphism:
            key = _canonical_key(order, edges)
            if key in seen:
                continue
            seen.add(key)
        out.append(Graph.from_edges(order, edges))
    return out


def random_graph(rng, order: int, p: float = 0.5) -> Graph:
    """Erdos-Renyi G(order, p) drawn from ``rng`` (a ``random.Random``)."""
    return Graph.from_edges(order, [e for e in combinations(range(order), 2) if rng.random() < p])
