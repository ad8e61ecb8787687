"""Exact chromatic index, criticality, coloring enumeration and the
constructive (Delta+1)-colorer.

The exact solver is a backtracking search over bitmasks: edges are chosen
dynamically (fewest usable colors first), unused colors are interchangeable
so only the lowest one is ever tried, and the edges at one max-degree vertex
are pinned to ``1..d`` up front.  Desk scale is n <= 14, m <= 30.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Literal

from .coloring import Coloring
from .graph import Graph

Mode = Literal["canonical", "full"]


def _full_mask(k: int) -> int:
    return ((1 << (k + 1)) - 1) & ~1


def find_delta_coloring(graph: Graph, k: int) -> Coloring | None:
    """A proper total ``k``-edge-coloring, or ``None`` when none exists."""
    if k < graph.max_degree:
        raise ValueError(f"k={k} is below the maximum degree {graph.max_degree}")
    colors = _solve(graph, k)
    return None if colors is None else Coloring(graph, k, colors)


def _solve(graph: Graph, k: int) -> list[int] | None:
    n, m = graph.n, graph.m
    if m == 0:
        return []
    edges = graph.edges
    full = _full_mask(k)
    present = [0] * n
    colors = [0] * m

    # pin the star at the lowest max-degree vertex
    hub = graph.degrees.index(graph.max_degree)
    c = 0
    for eid, (u, v) in enumerate(edges):
        if hub in (u, v):
            c += 1
            colors[eid] = c
            present[u] |= 1 << c
            present[v] |= 1 << c
    free = [eid for eid in range(m) if not colors[eid]]
    incident = [[] for _ in range(n)]
    for eid in free:
        u, v = edges[eid]
        incident[u].append(eid)
        incident[v].append(eid)

    def hall_ok(w: int) -> bool:
        # the uncolored edges at w need that many distinct usable colors
        cnt = 0
        union = 0
        for eid in incident[w]:
            if not colors[eid]:
                a, b = edges[eid]
                union |= full & ~(present[a] | present[b])
                cnt += 1
        return union.bit_count() >= cnt

    udeg = [len(incident[w]) for w in range(n)]
    color_bits = [1 << cc for cc in range(1, k + 1)]

    def matching_bound_ok(remaining: int) -> bool:
        # each color class is a matching on the vertices that still miss it
        active = [present[w] for w in range(n) if udeg[w]]
        total = 0
        for bit in color_bits:
            total += sum(1 for p in active if not p & bit) >> 1
            if total >= remaining:
                return True
        return False

    def rec(remaining: int, maxused: int) -> bool:
        if remaining == 0:
            return True
        if not matching_bound_ok(remaining):
            return False
        limit = (1 << (maxused + 2)) - 1
        best = -1
        best_mask = 0
        best_cnt = 99
        for eid in free:
            if colors[eid]:
                continue
            u, v = edges[eid]
            mask = full & ~(present[u] | present[v]) & limit
            cnt = mask.bit_count()
            if cnt < best_cnt:
                if cnt == 0:
                    return False
                best, best_mask, best_cnt = eid, mask, cnt
                if cnt == 1:
                    break
        u, v = edges[best]
        mask = best_mask
        while mask:
            low = mask & -mask
            mask ^= low
            col = low.bit_length() - 1
            colors[best] = col
            present[u] |= low
            present[v] |= low
            udeg[u] -= 1
            udeg[v] -= 1
            if hall_ok(u) and hall_ok(v):
                if rec(remaining - 1, maxused if col <= maxused else col):
                    return True
            udeg[u] += 1
            udeg[v] += 1
            present[u] ^= low
            present[v] ^= low
            colors[best] = 0
        return False

    if rec(len(free), c):
        return colors
    return None


def chromatic_index(graph: Graph) -> int:
    if graph.m == 0:
        return 0
    delta = graph.max_degree
    if _solve(graph, delta) is not None:
        return delta
    # Vizing: a (Delta+1)-coloring always exists
    assert vizing_plus_one_coloring(graph).is_proper()
    return delta + 1


def classify(graph: Graph) -> int:
    """1 for class 1, 2 for class 2."""
    if graph.m == 0:
        raise ValueError("edgeless graphs are not classified")
    return 1 if chromatic_index(graph) == graph.max_degree else 2


def critical_edges(graph: Graph) -> list[tuple[int, int]]:
    if graph.m == 0:
        return []
    delta = graph.max_degree
    if _solve(graph, delta) is not None:
        return []
    return [(u, v) for u, v in graph.edges if _solve(graph.remove_edge(u, v), delta) is not None]


def is_delta_critical(graph: Graph) -> bool:
    if graph.m == 0 or not graph.is_connected():
        return False
    delta = graph.max_degree
    if _solve(graph, delta) is not None:
        return False
    return all(_solve(graph.remove_edge(u, v), delta) is not None for u, v in graph.edges)


# ---------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------


def _enumerate_raw(graph: Graph, k: int, canonical: bool) -> Iterator[tuple[int, ...]]:
    """Proper total colorings as color words over ``graph.edges``.

    In canonical mode a color may only be used once every smaller color has
    appeared earlier in the word, which picks exactly the lexicographically
    least relabeling from each orbit of color permutations.
    """
    order = graph.edges
    m = len(order)
    if m == 0:
        yield ()
        return
    if k < graph.max_degree:
        return
    full = _full_mask(k)
    present = [0] * graph.n
    col = [0] * m
    cand = [0] * m
    mx = [0] * (m + 1)

    def avail(i: int) -> int:
        u, v = order[i]
        a = full & ~(present[u] | present[v])
        if canonical:
            a &= (1 << (mx[i] + 2)) - 1
        return a

    i = 0
    cand[0] = avail(0)
    while i >= 0:
        u, v = order[i]
        if col[i]:
            b = 1 << col[i]
            present[u] ^= b
            present[v] ^= b
            col[i] = 0
        mask = cand[i]
        if not mask:
            i -= 1
            continue
        low = mask & -mask
        cand[i] = mask ^ low
        c = low.bit_length() - 1
        col[i] = c
        present[u] |= low
        present[v] |= low
        if i + 1 == m:
            yield tuple(col)
            continue
        mx[i + 1] = mx[i] if c <= mx[i] else c
        i += 1
        cand[i] = avail(i)


def canonical_word(colors: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    """Relabel colors in order of first appearance."""
    relabel: dict[int, int] = {}
    out = []
    for c in colors:
        if c and c not in relabel:
            relabel[c] = len(relabel) + 1
        out.append(relabel[c] if c else 0)
    return tuple(out)


@dataclass
class ColoringEnumeration:
    """Proper total ``k``-colorings of ``graph`` in a deterministic order.

    ``cap`` bounds the number yielded (0 means no bound).
    """

    graph: Graph
    k: int
    mode: Mode = "canonical"
    cap: int = 0

    def words(self) -> Iterator[tuple[int, ...]]:
        count = 0
        for w in _enumerate_raw(self.graph, self.k, self.mode == "canonical"):
            yield w
            count += 1
            if self.cap and count >= self.cap:
                return

    def __iter__(self) -> Iterator[Coloring]:
        for w in self.words():
            yield Coloring(self.graph, self.k, w)


def enumerate_colorings(graph: Graph, k: int, mode: Mode = "canonical", cap: int = 0) -> ColoringEnumeration:
    if k < graph.max_degree:
        raise ValueError(f"k={k} is below the maximum degree {graph.max_degree}")
    if cap < 0:
        raise ValueError("cap must be >= 0")
    return ColoringEnumeration(graph, k, mode, cap)


def sample_colorings(graph: Graph, k: int, count: int, seed: int) -> list[tuple[int, ...]]:
    """Up to ``count`` distinct canonical color words found by seeded random DFS."""
    rng = random.Random(seed)
    found: dict[tuple[int, ...], None] = {}
    attempts = 0
    while len(found) < count and attempts < 4 * count:
        attempts += 1
        w = _random_coloring(graph, k, rng)
        if w is None:
            break
        found.setdefault(canonical_word(w), None)
    return list(found)


def _random_coloring(graph: Graph, k: int, rng: random.Random) -> tuple[int, ...] | None:
    edges = graph.edges
    m = len(edges)
    if m == 0:
        return ()
    present = [0] * graph.n
    col = [0] * m
    opts: list[list[int]] = [[] for _ in range(m)]

    def options(i: int) -> list[int]:
        u, v = edges[i]
        used = present[u] | present[v]
        out = [c for c in range(1, k + 1) if not used >> c & 1]
        rng.shuffle(out)
        return out

    i = 0
    opts[0] = options(0)
    while 0 <= i < m:
        u, v = edges[i]
        if col[i]:
            b = 1 << col[i]
            present[u] ^= b
            present[v] ^= b
            col[i] = 0
        if not opts[i]:
            i -= 1
            continue
        c = opts[i].pop()
        col[i] = c
        present[u] |= 1 << c
        present[v] |= 1 << c
        i += 1
        if i < m:
            opts[i] = options(i)
    return None if i < 0 else tuple(col)


@dataclass
class ColoringBudget:
    """Colorings of one graph used by a check, plus how they were obtained."""

    words: list[tuple[int, ...]]
    exhaustive: bool
    seed: int | None = None
    notes: list[str] = field(default_factory=list)


def budgeted_colorings(graph: Graph, k: int, budget: int, seed: int = 0) -> ColoringBudget:
    """All canonical colorings when there are at most ``budget`` of them,
    otherwise ``budget`` seeded random ones.  ``budget == 0`` means no limit.
    """
    if budget == 0:
        return ColoringBudget(list(_enumerate_raw(graph, k, True)), True)
    words = []
    for w in _enumerate_raw(graph, k, True):
        words.append(w)
        if len(words) > budget:
            break
    if len(words) <= budget:
        return ColoringBudget(words, True)
    return ColoringBudget(sample_colorings(graph, k, budget, seed), False, seed)


# ---------------------------------------------------------------------
# constructive (Delta+1)-coloring
# ---------------------------------------------------------------------


def vizing_plus_one_coloring(graph: Graph) -> Coloring:
    """Color edge by edge with at most Delta+1 colors using fans and one
    Kempe inversion per edge (Misra-Gries).  No search is involved.
    """
    k = graph.max_degree + 1
    col = Coloring(graph, k)
    for u, v in graph.edges:
        _misra_gries_step(col, u, v)
    return col


def _first(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _misra_gries_step(col: Coloring, u: int, v: int) -> None:
    g = col.graph
    common = col.missing_mask(u) & col.missing_mask(v)
    if common:
        col.color_edge(u, v, _first(common))
        return
    # maximal fan at u starting with v
    fan = [v]
    in_fan = {v}
    grown = True
    while grown:
        grown = False
        last_free = col.missing_mask(fan[-1])
        for w in g.neighbors(u):
            if w in in_fan:
                continue
            c = col.color_of(u, w)
            if c is not None and last_free >> c & 1:
                fan.append(w)
                in_fan.add(w)
                grown = True
                break
    c = _first(col.missing_mask(u))
    d = _first(col.missing_mask(fan[-1]))
    if col.present_mask(u) >> d & 1:
        col.swap_at(u, c, d)
    # shortest fan prefix whose tip now misses d
    j = None
    for idx, w in enumerate(fan):
        if idx > 0:
            cw = col.color_of(u, w)
            if cw is None or not col.missing_mask(fan[idx - 1]) >> cw & 1:
                break
        if col.missing_mask(w) >> d & 1:
            j = idx
            break
    assert j is not None, "fan argument failed"
    ids = [g.edge_id(u, w) for w in fan[: j + 1]]
    shifted = [col.colors[e] for e in ids[1:]]
    for e in ids:
        col._clear(e)
    for e, cc in zip(ids, shifted):
        col._assign(e, cc)
    col.color_edge(u, fan[j], d)
