"""Multifans, Kierstead paths, short brooms and forks relative to an
uncolored edge and a partial coloring.

All enumerators scan neighbors in increasing vertex order, so their output
order is deterministic.  Every record can be re-validated against its
definition with the matching ``is_*`` checker.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from .coloring import Coloring, ColoringError, mask_to_set


# ---------------------------------------------------------------------
# records
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class Multifan:
    center: int
    leaves: tuple[int, ...]
    colors: tuple[int | None, ...]  # colors[i] is the color of center-leaves[i]

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.center, *self.leaves)

    def __str__(self) -> str:
        return f"multifan r={self.center} leaves={list(self.leaves)} colors={list(self.colors[1:])}"


@dataclass(frozen=True)
class KiersteadPath:
    vertices: tuple[int, ...]
    colors: tuple[int | None, ...]  # colors[i] is the color of v_i v_{i+1}; colors[0] is None

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return f"kierstead path={list(self.vertices)} colors={list(self.colors[1:])}"


@dataclass(frozen=True)
class ShortBroom:
    x: int
    y: int
    z: int
    bristles: tuple[int, ...]
    handle_color: int
    bristle_colors: tuple[int, ...]
    simple: bool

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.x, self.y, self.z, *self.bristles)

    @property
    def p(self) -> int:
        return len(self.bristles)

    def __str__(self) -> str:
        return (
            f"broom x={self.x} y={self.y} z={self.z} bristles={list(self.bristles)} "
            f"colors={list(self.bristle_colors)} simple={str(self.simple).lower()}"
        )


@dataclass(frozen=True)
class BroomProfile:
    m: dict[int, int]  # color -> m-value
    total: int
    excess_colors: frozenset[int]  # colors with m >= 1
    inducing: dict[int, int]  # bristle -> color of the root bristle of its sequence
    sequences: dict[int, tuple[int, ...]]  # bristle -> sequence from its root bristle


@dataclass(frozen=True)
class Fork:
    x: int
    y: int
    z: int
    s1: int
    s2: int
    t1: int
    t2: int
    colors: tuple[int, int, int, int, int]  # yz, zs1, zs2, s1t1, s2t2

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.x, self.y, self.z, self.s1, self.s2, self.t1, self.t2)

    def __str__(self) -> str:
        return (
            f"fork x={self.x} y={self.y} z={self.z} s=[{self.s1},{self.s2}] "
            f"t=[{self.t1},{self.t2}] colors={list(self.colors)}"
        )


# ---------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------


def _require_uncolored(col: Coloring, u: int, v: int) -> None:
    if not col.graph.has_edge(u, v):
        raise ColoringError(f"{u}-{v} is not an edge")
    if col.color_of(u, v) is not None:
        raise ColoringError(f"edge {u}-{v} must be uncolored")


def _in(mask: int, c: int | None) -> bool:
    return c is not None and bool(mask >> c & 1)


# ---------------------------------------------------------------------
# multifans
# ---------------------------------------------------------------------


def grow_multifan(col: Coloring, r: int, s1: int) -> Multifan:
    """Greedy maximal multifan at ``r`` with respect to the uncolored edge ``r s1``."""
    _require_uncolored(col, r, s1)
    leaves = [s1]
    colors: list[int | None] = [None]
    used = {r, s1}
    free = col.missing_mask(s1)
    nbrs = col.graph.neighbors(r)
    grown = True
    while grown:
        grown = False
        for w in nbrs:
            if w in used:
                continue
            c = col.color_of(r, w)
            if _in(free, c):
                leaves.append(w)
                colors.append(c)
                used.add(w)
                free |= col.missing_mask(w)
                grown = True
                break
    return Multifan(r, tuple(leaves), tuple(colors))


def is_multifan(col: Coloring, fan: Multifan) -> bool:
    g = col.graph
    vs = fan.vertices
    if len(set(vs)) != len(vs) or not fan.leaves:
        return False
    if not all(g.has_edge(fan.center, s) for s in fan.leaves):
        return False
    if col.color_of(fan.center, fan.leaves[0]) is not None:
        return False
    for i in range(1, len(fan.leaves)):
        c = col.color_of(fan.center, fan.leaves[i])
        if c != fan.colors[i] or not any(c in col.missing(fan.leaves[j]) for j in range(i)):
            return False
    return True


def multifan_is_maximal(col: Coloring, fan: Multifan) -> bool:
    free = 0
    for s in fan.leaves:
        free |= col.missing_mask(s)
    for w in col.graph.neighbors(fan.center):
        if w not in fan.leaves and _in(free, col.color_of(fan.center, w)):
            return False
    return True


# ---------------------------------------------------------------------
# Kierstead paths
# ---------------------------------------------------------------------


def enumerate_kierstead_paths(
    col: Coloring, edge: tuple[int, int], max_vertices: int = 4
) -> list[KiersteadPath]:
    """All Kierstead paths ``(v0, v0v1, v1, ...)`` with ``{v0, v1} = edge``
    and between 2 and ``max_vertices`` vertices, in DFS preorder.
    """
    a, b = edge
    _require_uncolored(col, a, b)
    if not 2 <= max_vertices <= 5:
        raise ValueError("max_vertices must lie in 2..5")
    g = col.graph
    out: list[KiersteadPath] = []

    def extend(path: list[int], colors: list[int | None], free: int) -> None:
        out.append(KiersteadPath(tuple(path), tuple(colors)))
        if len(path) == max_vertices:
            return
        last = path[-1]
        for w in g.neighbors(last):
            if w in path:
                continue
            c = col.color_of(last, w)
            if _in(free, c):
                path.append(w)
                colors.append(c)
                extend(path, colors, free | col.missing_mask(last))
                path.pop()
                colors.pop()

    for v0, v1 in ((a, b), (b, a)):
        extend([v0, v1], [None], col.missing_mask(v0))
    return out


def is_kierstead_path(col: Coloring, path: KiersteadPath) -> bool:
    g = col.graph
    vs = path.vertices
    if len(vs) < 2 or len(set(vs)) != len(vs):
        return False
    if not all(g.has_edge(u, v) for u, v in zip(vs, vs[1:])):
        return False
    if col.color_of(vs[0], vs[1]) is not None:
        return False
    for i in range(1, len(vs) - 1):
        c = col.color_of(vs[i], vs[i + 1])
        if c != path.colors[i] or not any(c in col.missing(vs[j]) for j in range(i)):
            return False
    return True


# ---------------------------------------------------------------------
# short brooms
# ---------------------------------------------------------------------


def _handle_choices(col: Coloring, x: int, y: int) -> Iterator[tuple[int, int]]:
    mx = col.missing_mask(x)
    for z in col.graph.neighbors(y):
        if z == x:
            continue
        c = col.color_of(y, z)
        if _in(mx, c):
            yield z, c


def enumerate_short_brooms(
    col: Coloring, x: int, y: int, mode: Literal["all", "maximal"] = "all"
) -> list[ShortBroom]:
    """Short brooms rooted at the uncolored edge ``xy`` (bristle count >= 1).

    ``mode="all"`` lists every ordered bristle sequence.  ``mode="maximal"``
    gives one broom per handle vertex ``z``: bristles are added greedily
    (lowest vertex first) until nothing more is admissible.  Every maximal
    broom at the same ``z`` has this same vertex set.
    """
    _require_uncolored(col, x, y)
    g = col.graph
    mxy = col.missing_mask(x) | col.missing_mask(y)
    out: list[ShortBroom] = []
    for z, hc in _handle_choices(col, x, y):
        base = mxy | col.missing_mask(z)
        cands = [w for w in g.neighbors(z) if w not in (x, y)]
        zcol = {w: col.color_of(z, w) for w in cands}
        if mode == "maximal":
            bristles: list[int] = []
            bcols: list[int] = []
            free = base
            grown = True
            while grown:
                grown = False
                for w in cands:
                    if w not in bristles and _in(free, zcol[w]):
                        bristles.append(w)
                        bcols.append(zcol[w])
                        free |= col.missing_mask(w)
                        grown = True
                        break
            if bristles:
                simple = all(_in(mxy, c) for c in bcols)
                out.append(ShortBroom(x, y, z, tuple(bristles), hc, tuple(bcols), simple))
            continue

        def extend(bristles: list[int], bcols: list[int], free: int) -> None:
            for w in cands:
                if w in bristles:
                    continue
                c = zcol[w]
                if _in(free, c):
                    bristles.append(w)
                    bcols.append(c)
                    simple = all(_in(mxy, cc) for cc in bcols)
                    out.append(ShortBroom(x, y, z, tuple(bristles), hc, tuple(bcols), simple))
                    extend(bristles, bcols, free | col.missing_mask(w))
                    bristles.pop()
                    bcols.pop()

        extend([], [], base)
    return out


def is_short_broom(col: Coloring, broom: ShortBroom) -> bool:
    g = col.graph
    x, y, z = broom.x, broom.y, broom.z
    vs = broom.vertices
    if len(set(vs)) != len(vs) or not broom.bristles:
        return False
    if not (g.has_edge(x, y) and g.has_edge(y, z)) or col.color_of(x, y) is not None:
        return False
    hc = col.color_of(y, z)
    if hc != broom.handle_color or hc not in col.missing(x):
        return False
    seen = [x, y, z]
    for v, c in zip(broom.bristles, broom.bristle_colors):
        if not g.has_edge(z, v) or col.color_of(z, v) != c:
            return False
        if c not in col.missing_of_set(seen):
            return False
        seen.append(v)
    return broom.simple == is_simple_broom(col, broom)


def is_simple_broom(col: Coloring, broom: ShortBroom) -> bool:
    """Each (x, xy, y, yz, z, zv_i, v_i) must be a Kierstead path."""
    for v, c in zip(broom.bristles, broom.bristle_colors):
        path = KiersteadPath((broom.x, broom.y, broom.z, v), (None, broom.handle_color, c))
        if not is_kierstead_path(col, path):
            return False
    return True


def broom_profile(col: Coloring, broom: ShortBroom) -> BroomProfile:
    vs = broom.vertices
    counts: dict[int, int] = {}
    for v in vs:
        for c in col.missing(v):
            counts[c] = counts.get(c, 0) + 1
    m = {c: counts.get(c, 0) - 1 if c in counts else 0 for c in range(1, col.k + 1)}
    total = sum(m.values())
    excess = frozenset(c for c, val in m.items() if val >= 1)

    mxy = col.missing_mask(broom.x) | col.missing_mask(broom.y)
    inducing: dict[int, int] = {}
    sequences: dict[int, tuple[int, ...]] = {}
    for i, (v, c) in enumerate(zip(broom.bristles, broom.bristle_colors)):
        if _in(mxy, c):
            inducing[v] = c
            sequences[v] = (v,)
            continue
        parent = next(
            (broom.bristles[j] for j in range(i) if _in(col.missing_mask(broom.bristles[j]), c)),
            None,
        )
        if parent is None:  # only reachable for non-brooms
            raise ColoringError(f"bristle {v} is not admitted by any earlier vertex")
        inducing[v] = inducing[parent]
        sequences[v] = (*sequences[parent], v)
    return BroomProfile(m, total, excess, inducing, sequences)


def broom_excess(col: Coloring, vertices: tuple[int, ...] | list[int]) -> int:
    """Sum of the m-values: total missing multiplicity minus distinct missing colors."""
    acc = 0
    union = 0
    for v in vertices:
        mk = col.missing_mask(v)
        acc += mk.bit_count()
        union |= mk
    return acc - union.bit_count()


# ---------------------------------------------------------------------
# forks
# ---------------------------------------------------------------------


def find_forks(col: Coloring, edge: tuple[int, int]) -> list[Fork]:
    """Forks at the uncolored edge, in both orientations of ``edge``."""
    a, b = edge
    _require_uncolored(col, a, b)
    g = col.graph
    out: list[Fork] = []
    for x, y in ((a, b), (b, a)):
        mx = col.missing_mask(x)
        mxy = mx | col.missing_mask(y)
        for z, hc in _handle_choices(col, x, y):
            arms = []
            for s in g.neighbors(z):
                if s in (x, y):
                    continue
                cs = col.color_of(z, s)
                if not _in(mxy, cs):
                    continue
                for t in g.neighbors(s):
                    if t in (x, y, z):
                        continue
                    ct = col.color_of(s, t)
                    if _in(mxy, ct):
                        arms.append((s, t, cs, ct))
            for s1, t1, c1, d1 in arms:
                for s2, t2, c2, d2 in arms:
                    if len({s1, t1, s2, t2}) < 4:
                        continue
                    if _in(col.missing_mask(t2), d1) and _in(col.missing_mask(t1), d2):
                        out.append(Fork(x, y, z, s1, s2, t1, t2, (hc, c1, c2, d1, d2)))
    return out


def is_fork(col: Coloring, fork: Fork) -> bool:
    g = col.graph
    x, y, z, s1, s2, t1, t2 = fork.vertices
    if len(set(fork.vertices)) != 7:
        return False
    pairs = [(y, z), (z, s1), (z, s2), (s1, t1), (s2, t2)]
    if not g.has_edge(x, y) or col.color_of(x, y) is not None:
        return False
    if not all(g.has_edge(u, v) for u, v in pairs):
        return False
    cols = tuple(col.color_of(u, v) for u, v in pairs)
    if cols != fork.colors:
        return False
    mx = col.missing(x)
    mxy = mx | col.missing(y)
    return (
        cols[0] in mx
        and cols[1] in mxy
        and cols[2] in mxy
        and cols[3] in mxy & col.missing(t2)
        and cols[4] in mxy & col.missing(t1)
    )


def missing_set(col: Coloring, v: int) -> frozenset[int]:
    return mask_to_set(col.missing_mask(v))
