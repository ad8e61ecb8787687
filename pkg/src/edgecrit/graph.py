"""Immutable simple graphs, graph6 IO and the vertex-level predicates used
throughout the verifier (overfull, full-deficiency pairs, vertex splitting).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 input.  ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency is stored as one bitmask per vertex.  Instances are never
    mutated after construction, so they can be hashed and shared freely.
    """

    __slots__ = ("n", "adj", "edges", "_edge_index", "degrees", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u}, {v}); only simple graphs are supported")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.edges: tuple[Edge, ...] = tuple(
            (u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1
        )
        self._edge_index = {e: i for i, e in enumerate(self.edges)}
        self.degrees = tuple(a.bit_count() for a in adj)
        self._hash = hash((n, self.adj))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> Graph:
        n = len(adj)
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1])

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        a = self.adj[v]
        return [u for u in range(self.n) if a >> u & 1]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._edge_index[_norm(u, v)]
        except KeyError:
            raise GraphError(f"no edge {u}-{v}") from None

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def distance_to_set(self, a: int, targets: Iterable[int]) -> float:
        """BFS distance from ``a`` to the nearest vertex in ``targets``."""
        tmask = 0
        for t in targets:
            tmask |= 1 << t
        seen = 1 << a
        frontier = seen
        d = 0
        while frontier:
            if frontier & tmask:
                return d
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
            d += 1
        return float("inf")

    # -- derived graphs ------------------------------------------------

    def remove_edge(self, u: int, v: int) -> Graph:
        e = _norm(u, v)
        if e not in self._edge_index:
            raise GraphError(f"no edge {u}-{v}")
        return Graph(self.n, [f for f in self.edges if f != e])

    def remove_vertex(self, v: int) -> Graph:
        """Delete ``v``; vertices above it shift down by one."""
        self._check_vertex(v)

        def r(w: int) -> int:
            return w - 1 if w > v else w

        return Graph(self.n - 1, [(r(a), r(b)) for a, b in self.edges if v not in (a, b)])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``i`` renamed ``perm[i]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, graph6={to_graph6(self)!r})"


# ---------------------------------------------------------------------
# graph6 (short form only, n <= 62)
# ---------------------------------------------------------------------

_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise GraphError("only the short graph6 form (n <= 62) is supported")
    bits = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.rstrip("\r\n")
    start = 0
    if s.startswith(_HEADER):
        start = len(_HEADER)
    if len(s) <= start:
        raise Graph6Error("empty graph6 string", start)
    n = ord(s[start]) - 63
    if n < 0 or n > 62:
        if ord(s[start]) == 126:
            raise Graph6Error("long-form graph6 (n > 62) is not supported", start)
        raise Graph6Error(f"bad header byte {s[start]!r}", start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[start + 1 :]
    for i, ch in enumerate(body[:nbytes]):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"bad body byte {ch!r}", start + 1 + i)
    if len(body) < nbytes:
        raise Graph6Error(f"truncated body: need {nbytes} bytes, got {len(body)}", start + 1 + len(body))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after graph6 body", start + 1 + nbytes)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            val = ord(body[k // 6]) - 63
            if val >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    # padding bits are ignored, as nauty and networkx do; encoding writes zeros
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield from_graph6(line)


# ---------------------------------------------------------------------
# predicates and transformations
# ---------------------------------------------------------------------


def is_overfull(g: Graph) -> bool:
    return g.m > g.max_degree * (g.n // 2)


def full_deficiency_pairs(g: Graph) -> list[Edge]:
    """Adjacent pairs whose degree sum is exactly Delta + 2."""
    target = g.max_degree + 2
    return [(u, v) for u, v in g.edges if g.degrees[u] + g.degrees[v] == target]


@dataclass(frozen=True)
class VertexPartition:
    left: frozenset[int]
    right: frozenset[int]

    @classmethod
    def of(cls, left: Iterable[int], right: Iterable[int]) -> VertexPartition:
        return cls(frozenset(left), frozenset(right))

    def validate(self, g: Graph, v: int) -> None:
        nbrs = set(g.neighbors(v))
        if not self.left or not self.right:
            raise GraphError("both sides of a vertex split must be nonempty")
        if self.left & self.right:
            raise GraphError(f"split sides overlap in {sorted(self.left & self.right)}")
        if self.left | self.right != nbrs:
            raise GraphError(f"split sides must cover exactly N({v}) = {sorted(nbrs)}")


def split_vertex(g: Graph, v: int, partition: VertexPartition) -> Graph:
    """Replace ``v`` by two adjacent vertices ``v`` and ``n``.

    ``v`` keeps the neighbors in ``partition.left``; the new vertex ``n``
    receives ``partition.right``.
    """
    g._check_vertex(v)
    partition.validate(g, v)
    new = g.n
    edges = [e for e in g.edges if v not in e]
    edges += [(v, u) for u in partition.left]
    edges += [(new, u) for u in partition.right]
    edges.append((v, new))
    return Graph(g.n + 1, edges)


def neighborhood_bipartitions(g: Graph, v: int, cap: int | None = None) -> Iterator[VertexPartition]:
    """All unordered splits of N(v) into two nonempty parts.

    The lowest neighbor always goes left, so each unordered split appears once.
    """
    nbrs = g.neighbors(v)
    if len(nbrs) < 2:
        return
    first, rest = nbrs[0], nbrs[1:]
    count = 0
    for mask in range(1 << len(rest)):
        if mask == (1 << len(rest)) - 1:
            continue  # right side would be empty
        left = [first] + [w for i, w in enumerate(rest) if mask >> i & 1]
        right = [w for i, w in enumerate(rest) if not mask >> i & 1]
        yield VertexPartition.of(left, right)
        count += 1
        if cap is not None and count >= cap:
            return


# ---------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def octahedron_graph() -> Graph:
    """K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5) are the non-edges."""
    return Graph(6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2])
