"""Small-graph corpora.

nauty's ``geng`` is the usual source of these files; when it is not around,
:func:`all_graphs` produces the same isomorphism classes (in a different
order) by vertex augmentation with a canonical form built from equitable
partition refinement plus individualization.  Counts for n <= 8 match the
published tables (1, 2, 4, 11, 34, 156, 1044, 12346).
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .graph import Graph, from_graph6, read_graph6_lines, to_graph6


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition (order-invariant)."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for si in range(len(cells)):
            smask = 0
            for w in cells[si]:
                smask |= 1 << w
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    out.extend(groups[key] for key in sorted(groups))
            cells = out
            if changed:
                break
    return cells


def _code(adj: Sequence[int], lab: Sequence[int]) -> int:
    n = len(lab)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    code = 0
    for i, v in enumerate(lab):
        row = 0
        a = adj[v]
        while a:
            low = a & -a
            row |= 1 << pos[low.bit_length() - 1]
            a ^= low
        code = (code << n) | row
    return code


def canonical_labeling(adj: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Return ``(code, lab)``: ``lab[i]`` is the vertex placed at position i.

    Two graphs are isomorphic iff their codes are equal.
    """
    n = len(adj)
    if n == 0:
        return 0, ()
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(adj[v].bit_count(), []).append(v)
    start = _refine(adj, [by_deg[d] for d in sorted(by_deg)])
    best_code = -1
    best_lab: tuple[int, ...] = ()

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_lab
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            lab = tuple(c[0] for c in cells)
            code = _code(adj, lab)
            if code > best_code:
                best_code, best_lab = code, lab
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            # skip twins of a vertex already tried: the swap is an automorphism
            if any((adj[v] & ~(1 << u)) == (adj[u] & ~(1 << v)) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(_refine(adj, cells[:target] + [[v], rest] + cells[target + 1 :]))

    search(start)
    return best_code, best_lab


def canonical_form(g: Graph) -> Graph:
    _, lab = canonical_labeling(g.adj)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return g.relabel(perm)


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_labeling(g.adj)[0] == canonical_labeling(h.adj)[0]


def _extend(level: dict[int, tuple[int, ...]], n: int) -> dict[int, tuple[int, ...]]:
    """All graphs on ``n`` vertices from all graphs on ``n-1`` vertices."""
    out: dict[int, tuple[int, ...]] = {}
    new = n - 1
    for adj in level.values():
        for s in range(1 << new):
            child = [a | ((s >> v & 1) << new) for v, a in enumerate(adj)]
            child.append(s)
            code, lab = canonical_labeling(child)
            if code not in out:
                pos = [0] * n
                for i, v in enumerate(lab):
                    pos[v] = i
                canon = [0] * n
                for v in range(n):
                    row = 0
                    a = child[v]
                    while a:
                        low = a & -a
                        row |= 1 << pos[low.bit_length() - 1]
                        a ^= low
                    canon[pos[v]] = row
                out[code] = tuple(canon)
    return out


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if n == 1:
        return ((0,),)
    prev = {i: adj for i, adj in enumerate(_level(n - 1))}
    cur = _extend(prev, n)
    return tuple(cur[c] for c in sorted(cur))


def all_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class on exactly ``n`` vertices, in canonical form."""
    return [Graph.from_adjacency(adj) for adj in _level(n)]


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if g.is_connected()]


def connected_corpus(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from connected_graphs(n)


def write_graph6(graphs: Iterable[Graph], path: str | Path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")


def load_graph6(path: str | Path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return list(read_graph6_lines(fh))


def dedupe(graphs: Iterable[Graph]) -> list[Graph]:
    """Drop isomorphic repeats, keeping first occurrences in order."""
    seen: set[tuple[int, int]] = set()
    out = []
    for g in graphs:
        key = (g.n, canonical_labeling(g.adj)[0])
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


__all__ = [
    "all_graphs",
    "canonical_form",
    "canonical_graph6",
    "canonical_labeling",
    "connected_corpus",
    "connected_graphs",
    "dedupe",
    "from_graph6",
    "is_isomorphic",
    "load_graph6",
    "write_graph6",
]
