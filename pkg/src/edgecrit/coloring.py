"""Partial proper edge colorings and the Kempe-chain engine.

Colors are the integers ``1..k``; ``0`` marks an uncolored edge.  Every
mutating method keeps the per-vertex caches in sync and leaves the coloring
proper, raising :class:`ColoringError` (and leaving the coloring untouched)
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Mapping, Sequence

from .graph import Graph, GraphError

UNCOLORED = 0


class ColoringError(ValueError):
    pass


class ChainError(ColoringError):
    pass


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def set_to_mask(colors: Iterable[int]) -> int:
    m = 0
    for c in colors:
        m |= 1 << c
    return m


@dataclass(frozen=True)
class Chain:
    """A maximal two-colored component, listed in traversal order.

    For a cycle the closing edge joins the last vertex back to the first.
    """

    colors: tuple[int, int]
    vertices: tuple[int, ...]
    kind: Literal["path", "cycle"]

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_path(self) -> bool:
        return self.kind == "path"

    @property
    def endpoints(self) -> tuple[int, int] | None:
        if self.kind == "cycle":
            return None
        return self.vertices[0], self.vertices[-1]

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        out = list(zip(vs, vs[1:]))
        if self.kind == "cycle":
            out.append((vs[-1], vs[0]))
        return out

    def oriented_from(self, start: int) -> tuple[int, ...]:
        if self.kind != "path" or start not in self.endpoints:
            raise ChainError(f"{start} is not an endpoint of this path")
        return self.vertices if self.vertices[0] == start else self.vertices[::-1]

    def meets_before(self, start: int, u: int, v: int) -> bool:
        """True when the path traversed from endpoint ``start`` reaches ``u`` before ``v``."""
        order = self.oriented_from(start)
        return order.index(u) < order.index(v)


class Coloring:
    """A partial proper ``k``-edge-coloring of ``graph``."""

    __slots__ = ("graph", "k", "colors", "_at", "_present", "_full")

    def __init__(self, graph: Graph, k: int, colors: Sequence[int] | Mapping | None = None):
        if k < 0:
            raise ColoringError("k must be nonnegative")
        self.graph = graph
        self.k = k
        self._full = ((1 << (k + 1)) - 1) & ~1
        self.colors = [UNCOLORED] * graph.m
        self._at = [[-1] * (k + 1) for _ in range(graph.n)]
        self._present = [0] * graph.n
        if colors is None:
            return
        if isinstance(colors, Mapping):
            items = [(graph.edge_id(u, v), c) for (u, v), c in colors.items()]
        else:
            if len(colors) != graph.m:
                raise ColoringError(f"expected {graph.m} edge colors, got {len(colors)}")
            items = list(enumerate(colors))
        for eid, c in items:
            if c is None or c == UNCOLORED:
                continue
            u, v = graph.edges[eid]
            self._check_free(u, v, c)
            self._assign(eid, c)

    # -- construction helpers -----------------------------------------

    def copy(self) -> Coloring:
        new = Coloring.__new__(Coloring)
        new.graph = self.graph
        new.k = self.k
        new._full = self._full
        new.colors = list(self.colors)
        new._at = [list(row) for row in self._at]
        new._present = list(self._present)
        return new

    def key(self) -> tuple[int, ...]:
        return tuple(self.colors)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Coloring)
            and self.graph == other.graph
            and self.k == other.k
            and self.colors == other.colors
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.k, tuple(self.colors)))

    def __repr__(self) -> str:
        body = ", ".join(f"{u}-{v}:{c or '-'}" for (u, v), c in zip(self.graph.edges, self.colors))
        return f"Coloring(k={self.k}, {body})"

    def permuted(self, perm: Mapping[int, int] | Sequence[int]) -> Coloring:
        """Relabel colors; ``perm[c]`` is the new name of color ``c``."""
        return Coloring(self.graph, self.k, [perm[c] if c else 0 for c in self.colors])

    # -- low level -----------------------------------------------------

    def _assign(self, eid: int, c: int) -> None:
        u, v = self.graph.edges[eid]
        self.colors[eid] = c
        self._at[u][c] = v
        self._at[v][c] = u
        self._present[u] |= 1 << c
        self._present[v] |= 1 << c

    def _clear(self, eid: int) -> None:
        c = self.colors[eid]
        if not c:
            return
        u, v = self.graph.edges[eid]
        self.colors[eid] = UNCOLORED
        self._at[u][c] = -1
        self._at[v][c] = -1
        self._present[u] &= ~(1 << c)
        self._present[v] &= ~(1 << c)

    def _check_color(self, c: int) -> None:
        if not 1 <= c <= self.k:
            raise ColoringError(f"color {c} outside [1, {self.k}]")

    def _check_free(self, u: int, v: int, c: int) -> None:
        self._check_color(c)
        for w in (u, v):
            if self._present[w] >> c & 1:
                raise ColoringError(f"color {c} already present at vertex {w}")

    def _eid(self, u: int, v: int) -> int:
        try:
            return self.graph.edge_id(u, v)
        except GraphError as exc:
            raise ColoringError(str(exc)) from None

    # -- queries -------------------------------------------------------

    def color_of(self, u: int, v: int) -> int | None:
        c = self.colors[self._eid(u, v)]
        return c or None

    def neighbor_via(self, v: int, c: int) -> int | None:
        """The other end of the ``c``-colored edge at ``v``, if any."""
        w = self._at[v][c]
        return None if w < 0 else w

    def present_mask(self, v: int) -> int:
        return self._present[v]

    def missing_mask(self, v: int) -> int:
        return self._full & ~self._present[v]

    def present(self, v: int) -> frozenset[int]:
        return mask_to_set(self._present[v])

    def missing(self, v: int) -> frozenset[int]:
        return mask_to_set(self.missing_mask(v))

    def missing_of_set(self, vertices: Iterable[int]) -> frozenset[int]:
        m = 0
        for v in vertices:
            m |= self.missing_mask(v)
        return mask_to_set(m)

    def uncolored_edges(self) -> list[tuple[int, int]]:
        return [e for e, c in zip(self.graph.edges, self.colors) if not c]

    def is_total(self) -> bool:
        return all(self.colors)

    def is_proper(self) -> bool:
        """Recomputed from the raw assignment, independent of the caches."""
        seen: set[tuple[int, int]] = set()
        for (u, v), c in zip(self.graph.edges, self.colors):
            if not c:
                continue
            if not 1 <= c <= self.k:
                return False
            for w in (u, v):
                if (w, c) in seen:
                    return False
                seen.add((w, c))
        return True

    def is_elementary(self, vertices: Iterable[int]) -> bool:
        acc = 0
        for v in vertices:
            m = self.missing_mask(v)
            if acc & m:
                return False
            acc |= m
        return True

    def missing_count(self, color: int) -> int:
        return sum(1 for v in range(self.graph.n) if not self._present[v] >> color & 1)

    # -- chains --------------------------------------------------------

    def _walk(self, v: int, first: int, a: int, b: int) -> tuple[list[int], bool]:
        out: list[int] = []
        cur, c = v, first
        at = self._at
        while True:
            nxt = at[cur][c]
            if nxt < 0:
                return out, False
            if nxt == v:
                return out, True
            out.append(nxt)
            cur = nxt
            c = b if c == a else a

    def chain_component(self, v: int, a: int, b: int) -> Chain:
        if a == b:
            raise ChainError("chains need two distinct colors")
        self._check_color(a)
        self._check_color(b)
        fwd, closed = self._walk(v, a, a, b)
        if closed:
            return Chain((a, b), (v, *fwd), "cycle")
        back, _ = self._walk(v, b, a, b)
        if not back:
            return Chain((a, b), (v, *fwd), "path")
        if not fwd:
            return Chain((a, b), (v, *back), "path")
        return Chain((a, b), (*reversed(back), v, *fwd), "path")

    def chains(self, a: int, b: int) -> list[Chain]:
        """All nontrivial (a, b)-components (isolated vertices omitted)."""
        seen = 0
        out = []
        for v in range(self.graph.n):
            if seen >> v & 1 or not (self._present[v] >> a & 1 or self._present[v] >> b & 1):
                continue
            ch = self.chain_component(v, a, b)
            for w in ch.vertices:
                seen |= 1 << w
            out.append(ch)
        return out

    def linked(self, x: int, y: int, a: int, b: int) -> bool:
        if a == b:
            raise ChainError("linkage needs two distinct colors")
        if x == y:
            return True
        return y in self.chain_component(x, a, b)

    def subchain_between(self, x: int, y: int, a: int, b: int) -> Chain:
        ch = self.chain_component(x, a, b)
        if y not in ch:
            raise ChainError(f"{x} and {y} are not ({a},{b})-linked")
        if ch.kind == "cycle":
            if x == y:
                return Chain((a, b), (x,), "path")
            raise ChainError(f"{x} and {y} lie on an ({a},{b})-cycle; the subchain is ambiguous")
        i, j = ch.vertices.index(x), ch.vertices.index(y)
        if i <= j:
            return Chain((a, b), ch.vertices[i : j + 1], "path")
        return Chain((a, b), ch.vertices[j : i + 1][::-1], "path")

    def _exchange(self, chain: Chain) -> None:
        a, b = chain.colors
        ids = [self._eid(u, v) for u, v in chain.edges()]
        old = [self.colors[e] for e in ids]
        for e in ids:
            self._clear(e)
        for e, c in zip(ids, old):
            self._assign(e, b if c == a else a)

    def swap_component(self, chain: Chain) -> None:
        """Exchange the two colors on a whole component (path or cycle)."""
        self._exchange(chain)

    def swap_at(self, x: int, a: int, b: int) -> None:
        """The (a, b)-swap at ``x``; ``x`` must be an end of its component."""
        if a == b:
            return
        self._check_color(a)
        self._check_color(b)
        if self._present[x] >> a & 1 and self._present[x] >> b & 1:
            raise ChainError(f"vertex {x} is interior to its ({a},{b})-chain")
        self._exchange(self.chain_component(x, a, b))

    def swap_sequence(self, x: int, betas: Sequence[int]) -> None:
        """Consecutive swaps (b0,b1)-(b1,b2)-... at ``x``; ``b0`` must be missing at ``x``."""
        if not betas:
            raise ColoringError("empty swap sequence")
        self._check_color(betas[0])
        if self._present[x] >> betas[0] & 1:
            raise ColoringError(f"color {betas[0]} is present at {x}")
        for prev, nxt in zip(betas, betas[1:]):
            self.swap_at(x, prev, nxt)

    def swap_subchain(self, x: int, y: int, a: int, b: int) -> None:
        """Exchange colors on the part of the (a, b)-path between ``x`` and ``y``."""
        sub = self.subchain_between(x, y, a, b)
        if len(sub) > 1:
            for end, inner in ((sub.vertices[0], sub.vertices[1]), (sub.vertices[-1], sub.vertices[-2])):
                c = self.colors[self._eid(end, inner)]
                other = b if c == a else a
                if self._present[end] >> other & 1:
                    raise ColoringError(
                        f"swapping P[{x},{y}]({a},{b}) would repeat color {other} at {end}"
                    )
        self._exchange(sub)

    # -- single-edge updates -------------------------------------------

    def color_edge(self, u: int, v: int, c: int) -> None:
        eid = self._eid(u, v)
        if self.colors[eid]:
            raise ColoringError(f"edge {u}-{v} is already colored {self.colors[eid]}")
        self._check_free(u, v, c)
        self._assign(eid, c)

    def recolor_edge(self, u: int, v: int, old: int, new: int) -> None:
        eid = self._eid(u, v)
        cur = self.colors[eid]
        if cur != old:
            raise ColoringError(f"edge {u}-{v} has color {cur or '-'}, not {old}")
        if old == new:
            return
        self._check_free(u, v, new)
        self._clear(eid)
        self._assign(eid, new)

    def uncolor_edge(self, u: int, v: int) -> None:
        eid = self._eid(u, v)
        if not self.colors[eid]:
            raise ColoringError(f"edge {u}-{v} is not colored")
        self._clear(eid)

    # -- text format ---------------------------------------------------

    def to_text(self) -> str:
        lines = [f"k {self.k}"]
        for (u, v), c in zip(self.graph.edges, self.colors):
            lines.append(f"{u} {v} {c if c else '-'}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, graph: Graph, text: str) -> Coloring:
        k = None
        assignment: dict[tuple[int, int], int] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            parts = raw.split()
            if not parts:
                continue
            if k is None:
                if len(parts) != 2 or parts[0] != "k":
                    raise ColoringError(f"line {lineno}: expected 'k <int>'")
                k = int(parts[1])
                continue
            if len(parts) != 3:
                raise ColoringError(f"line {lineno}: expected '<u> <v> <color|->'")
            u, v = int(parts[0]), int(parts[1])
            if not graph.has_edge(u, v):
                raise ColoringError(f"line {lineno}: {u}-{v} is not an edge")
            assignment[(u, v)] = 0 if parts[2] == "-" else int(parts[2])
        if k is None:
            raise ColoringError("missing 'k <int>' header")
        return cls(graph, k, assignment)


def iter_vertices(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
