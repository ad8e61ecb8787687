"""Extensional checks of the structural results on edge-critical graphs.

Each ``verify_*`` function enumerates the hypothesis instances of one result
on a single graph and returns a :class:`Report` counting instances checked,
instances skipped (hypothesis unmet) and violations (serialized witnesses).
The theorems are proved, so any violation points at a bug in this package.

Colorings of ``G - e`` come from :func:`budgeted_colorings`: all canonical
colorings when there are at most ``budget`` of them, a seeded sample
otherwise.  Sampling is recorded in the report notes.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterator

from .chromatic import ColoringBudget, _solve, budgeted_colorings, is_delta_critical
from .coloring import Coloring
from .graph import (
    Graph,
    is_overfull,
    neighborhood_bipartitions,
    split_vertex,
    to_graph6,
    full_deficiency_pairs,
)
from .structures import (
    broom_excess,
    enumerate_kierstead_paths,
    enumerate_short_brooms,
    find_forks,
    grow_multifan,
)

DEFAULT_BUDGET = 10_000
SPLIT_CAP = 1 << 12

CSV_HEADER = "graph6,check,checked,skipped,violations,millis"


@dataclass
class Report:
    check: str
    graph6: str
    checked: int = 0
    skipped: int = 0
    violations: list[str] = field(default_factory=list)
    millis: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def csv_row(self, timing: bool = False) -> str:
        ms = round(self.millis) if timing else 0
        return f"{self.graph6},{self.check},{self.checked},{self.skipped},{len(self.violations)},{ms}"

    def to_json(self, timing: bool = False) -> dict:
        return {
            "graph6": self.graph6,
            "check": self.check,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": list(self.violations),
            "millis": round(self.millis) if timing else 0,
            "notes": list(self.notes),
        }

    def to_json_line(self, timing: bool = False) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True)


class GraphContext:
    """Per-graph facts shared by several checks: class, critical edges and
    the colorings of each ``G - e`` (computed lazily, once)."""

    def __init__(self, graph: Graph, budget: int = DEFAULT_BUDGET, seed: int = 0):
        if budget < 0:
            raise ValueError("budget must be >= 0")
        self.graph = graph
        self.budget = budget
        self.seed = seed
        self.delta = graph.max_degree
        self.graph6 = to_graph6(graph)
        self._budgets: dict[tuple[int, int], ColoringBudget] = {}

    @cached_property
    def class_two(self) -> bool:
        return self.graph.m > 0 and _solve(self.graph, self.delta) is None

    @cached_property
    def critical_edges(self) -> frozenset[tuple[int, int]]:
        if not self.class_two:
            return frozenset()
        g = self.graph
        return frozenset(e for e in g.edges if _solve(g.remove_edge(*e), self.delta) is not None)

    @cached_property
    def delta_critical(self) -> bool:
        return self.class_two and self.graph.is_connected() and len(self.critical_edges) == self.graph.m

    def budget_for(self, e: tuple[int, int]) -> ColoringBudget:
        if e not in self._budgets:
            h = self.graph.remove_edge(*e)
            self._budgets[e] = budgeted_colorings(h, self.delta, self.budget, self.seed)
        return self._budgets[e]

    def colorings(self, e: tuple[int, int]) -> Iterator[Coloring]:
        """Colorings of ``G`` with ``e`` the only uncolored edge."""
        g = self.graph
        pos = g.edge_id(*e)
        for w in self.budget_for(e).words:
            yield Coloring(g, self.delta, (*w[:pos], 0, *w[pos:]))

    def sampling_notes(self) -> list[str]:
        return [
            f"sampled {len(b.words)} colorings of G-{u}{v} (seed={b.seed})"
            for (u, v), b in sorted(self._budgets.items())
            if not b.exhaustive
        ]

    def all_exhaustive(self, edges) -> bool:
        return all(self.budget_for(e).exhaustive for e in edges)


def _word(col: Coloring) -> str:
    return "".join("-" if c == 0 else str(c) if c < 10 else f"({c})" for c in col.colors)


def _timed(check: str) -> Callable:
    def wrap(fn: Callable[..., None]) -> Callable[..., Report]:
        def run(graph: Graph, budget: int = DEFAULT_BUDGET, seed: int = 0, ctx: GraphContext | None = None, **kw) -> Report:
            ctx = ctx or GraphContext(graph, budget, seed)
            rep = Report(check, ctx.graph6)
            t0 = time.perf_counter()
            fn(ctx, rep, **kw)
            rep.notes.extend(ctx.sampling_notes())
            rep.millis = (time.perf_counter() - t0) * 1000
            return rep

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


def _per_coloring(ctx: GraphContext, rep: Report) -> Iterator[tuple[tuple[int, int], Coloring]]:
    """All (edge, coloring) pairs of a Delta-critical graph; otherwise every
    edge counts as one skipped instance."""
    g = ctx.graph
    if not ctx.delta_critical:
        rep.skipped += g.m
        return
    for e in g.edges:
        for col in ctx.colorings(e):
            yield e, col


# ---------------------------------------------------------------------
# degree and fan lemmas
# ---------------------------------------------------------------------


@_timed("val")
def verify_val(ctx: GraphContext, rep: Report) -> None:
    """Each critical edge xy: x has at least Delta - d(y) + 1 neighbors of
    degree Delta other than y (checked for both orderings)."""
    g, delta = ctx.graph, ctx.delta
    for u, v in g.edges:
        for x, y in ((u, v), (v, u)):
            if (u, v) not in ctx.critical_edges:
                rep.skipped += 1
                continue
            rep.checked += 1
            big = sum(1 for w in g.neighbors(x) if w != y and g.degrees[w] == delta)
            if big < delta - g.degrees[y] + 1:
                rep.violations.append(f"val x={x} y={y} big_neighbors={big} need={delta - g.degrees[y] + 1}")


@_timed("multifan")
def verify_multifan(ctx: GraphContext, rep: Report) -> None:
    """Maximal multifans at either end of the uncolored edge are elementary
    and the center is (alpha, beta)-linked to every leaf."""
    for (u, v), col in _per_coloring(ctx, rep):
        for r, s1 in ((u, v), (v, u)):
            fan = grow_multifan(col, r, s1)
            rep.checked += 1
            if not col.is_elementary(fan.vertices):
                rep.violations.append(f"{fan} not elementary coloring={_word(col)}")
                continue
            for s in fan.leaves:
                for a in col.missing(r):
                    for b in col.missing(s):
                        if not col.linked(r, s, a, b):
                            rep.violations.append(f"{fan} unlinked r={r} s={s} colors={a}/{b} coloring={_word(col)}")


@_timed("kierstead")
def verify_kierstead(ctx: GraphContext, rep: Report) -> None:
    """Four-vertex Kierstead paths: elementary when an inner vertex has
    degree below Delta; the tip shares at most one missing color with the
    first two vertices."""
    g, delta = ctx.graph, ctx.delta
    for e, col in _per_coloring(ctx, rep):
        for path in enumerate_kierstead_paths(col, e, 4):
            if len(path) != 4:
                continue
            v0, v1, v2, v3 = path.vertices
            rep.checked += 1
            if min(g.degrees[v1], g.degrees[v2]) < delta and not col.is_elementary(path.vertices):
                rep.violations.append(f"{path} not elementary coloring={_word(col)}")
            shared = col.missing_mask(v3) & (col.missing_mask(v0) | col.missing_mask(v1))
            if shared.bit_count() > 1:
                rep.violations.append(f"{path} tip shares {shared.bit_count()} colors coloring={_word(col)}")


# ---------------------------------------------------------------------
# brooms
# ---------------------------------------------------------------------


@_timed("broom_main")
def verify_broom_main(ctx: GraphContext, rep: Report, mode: str = "all") -> None:
    """Every short broom has excess at most 1, and an excess of 1 comes
    from a single color missed at exactly two broom vertices."""
    for (u, v), col in _per_coloring(ctx, rep):
        seen: dict[frozenset[int], str | None] = {}
        for x, y in ((u, v), (v, u)):
            for broom in enumerate_short_brooms(col, x, y, mode):
                rep.checked += 1
                key = frozenset(broom.vertices)
                if key not in seen:
                    seen[key] = _broom_fault(col, broom.vertices)
                fault = seen[key]
                if fault:
                    rep.violations.append(f"{broom} {fault} coloring={_word(col)}")


def _broom_fault(col: Coloring, vertices) -> str | None:
    total = broom_excess(col, vertices)
    if total > 1:
        return f"excess={total}"
    if total == 1:
        counts: dict[int, int] = {}
        for w in vertices:
            for c in col.missing(w):
                counts[c] = counts.get(c, 0) + 1
        repeated = [c for c, k in counts.items() if k > 1]
        if len(repeated) != 1 or counts[repeated[0]] != 2:
            return f"excess=1 repeated={sorted(repeated)}"
    return None


@_timed("broom_elementary")
def verify_broom_elementary(ctx: GraphContext, rep: Report) -> None:
    """Brooms with min(d(y), d(z)) < Delta are elementary; maximal ones at a
    fixed handle vertex z also satisfy the degree-sum bound
    sum over v != z of (d(v) + [zv is an edge] - Delta) >= 2."""
    g, delta = ctx.graph, ctx.delta
    deg = g.degrees
    per_root = 0
    globally_maximal = 0
    global_faults = 0
    for (u, v), col in _per_coloring(ctx, rep):
        for x, y in ((u, v), (v, u)):
            for broom in enumerate_short_brooms(col, x, y, "all"):
                if min(deg[y], deg[broom.z]) >= delta:
                    rep.skipped += 1
                    continue
                rep.checked += 1
                if not col.is_elementary(broom.vertices):
                    rep.violations.append(f"{broom} not elementary coloring={_word(col)}")
            maximal = enumerate_short_brooms(col, x, y, "maximal")
            sets = [frozenset(b.vertices) for b in maximal]
            for broom, vs in zip(maximal, sets):
                z = broom.z
                if min(deg[y], deg[z]) >= delta:
                    rep.skipped += 1
                    continue
                rep.checked += 1
                per_root += 1
                top = not any(vs < other for other in sets)
                globally_maximal += top
                total = sum(deg[w] + g.has_edge(z, w) - delta for w in vs if w != z)
                if total < 2:
                    global_faults += top
                    rep.violations.append(
                        f"{broom} degree_sum={total} globally_maximal={str(top).lower()} coloring={_word(col)}"
                    )
    if per_root:
        rep.notes.append(
            f"maximal brooms: {per_root} per-root, {globally_maximal} also maximal across handles; "
            f"degree-sum failures across handles: {global_faults}"
        )


# ---------------------------------------------------------------------
# vertex splitting and full-deficiency pairs
# ---------------------------------------------------------------------


@_timed("splitting")
def verify_splitting_suite(ctx: GraphContext, rep: Report) -> None:
    """Splits of dense class-1 regular graphs are Delta-critical; degree
    structure around full-deficiency critical edges; the handle lemma for
    pairs of three-edge Kierstead paths."""
    g, delta = ctx.graph, ctx.delta
    n = g.n

    # splitting dense regular class-1 graphs
    dense = 3 * delta >= 2 * (n - 1)
    if g.m and g.is_connected() and g.min_degree == delta and dense and not ctx.class_two:
        for v in range(n):
            for part in neighborhood_bipartitions(g, v, SPLIT_CAP):
                rep.checked += 1
                h = split_vertex(g, v, part)
                if not is_delta_critical(h):
                    rep.violations.append(
                        f"split v={v} left={sorted(part.left)} right={sorted(part.right)} "
                        f"result={to_graph6(h)} not critical"
                    )
    else:
        rep.skipped += 1

    # full-deficiency critical edges in class-2 graphs
    if ctx.class_two:
        for x, y in full_deficiency_pairs(g):
            if (x, y) not in ctx.critical_edges:
                rep.skipped += 1
                continue
            _deficiency_checks(g, x, y, rep)
    else:
        rep.skipped += 1

    # two Kierstead paths (x, y, z, u) and (x, y, z, v)
    for e, col in _per_coloring(ctx, rep):
        tips: dict[tuple[int, int, int], list[int]] = {}
        for path in enumerate_kierstead_paths(col, e, 4):
            if len(path) == 4:
                x, y, z, t = path.vertices
                tips.setdefault((x, y, z), []).append(t)
        for (x, y, z), ts in tips.items():
            mxy = col.missing_mask(x) | col.missing_mask(y)
            good = [t for t in ts if not col.missing_mask(t) & ~mxy]
            for a, b in combinations(good, 2):
                rep.checked += 1
                if max(g.degrees[a], g.degrees[b]) != delta:
                    rep.violations.append(
                        f"handle x={x} y={y} z={z} tips={a},{b} degrees={g.degrees[a]},{g.degrees[b]} "
                        f"coloring={_word(col)}"
                    )


def _deficiency_checks(g: Graph, x: int, y: int, rep: Report) -> None:
    delta = g.max_degree
    n = g.n
    deg = g.degrees
    both_low = deg[x] < delta and deg[y] < delta
    near = set(g.neighbors(x)) | set(g.neighbors(y))
    for a in sorted(near - {x, y}):
        rep.checked += 1
        if deg[a] != delta:
            rep.violations.append(f"deficiency x={x} y={y} neighbor={a} degree={deg[a]}")
    for a in range(n):
        if a in (x, y):
            continue
        if g.distance_to_set(a, (x, y)) == 2:
            rep.checked += 1
            need = delta if both_low else delta - 1
            if deg[a] < need:
                rep.violations.append(f"deficiency x={x} y={y} distance2={a} degree={deg[a]} need={need}")
        if deg[a] >= n - len(near):
            rep.checked += 1
            if deg[a] < delta - 1 or (both_low and deg[a] != delta):
                rep.violations.append(f"deficiency x={x} y={y} large={a} degree={deg[a]}")
    if 3 * delta >= 2 * (n - 1):
        rep.checked += 1
        low = [a for a in range(n) if a not in (x, y) and deg[a] == delta - 1]
        if len(low) > 1:
            rep.violations.append(f"deficiency x={x} y={y} several Delta-1 vertices {low}")
    else:
        rep.skipped += 1


# ---------------------------------------------------------------------
# overfullness
# ---------------------------------------------------------------------


@_timed("overfull")
def verify_overfull_suite(ctx: GraphContext, rep: Report) -> None:
    """Dense Delta-critical graphs are overfull; degree gaps around a
    low-degree anchor; the parity of missing counts."""
    g, delta = ctx.graph, ctx.delta
    if not ctx.delta_critical:
        rep.skipped += 1 + g.m
        return
    n, deg = g.n, g.degrees
    if 3 * delta >= 2 * n + 5 * g.min_degree - 12:
        rep.checked += 1
        if not is_overfull(g):
            rep.violations.append(f"dense but not overfull n={n} delta={delta} delta_min={g.min_degree} m={g.m}")
    else:
        rep.skipped += 1

    anchors = []
    for a in range(n):
        da = deg[a]
        if 3 * da > 2 * delta - n + 5:
            rep.skipped += 1
            continue
        anchors.append(a)
        lo = n - delta + 2 * da - 6
        for v in range(n):
            if v == a:
                continue
            rep.checked += 1
            if not (deg[v] >= delta - da + 1 or deg[v] <= lo):
                tag = "4.4" if 3 * da <= 2 * delta - n + 2 else "4.5"
                rep.violations.append(f"gap anchor={a} v={v} degree={deg[v]} band=({lo},{delta - da + 1}) [{tag}]")
        exact = [v for v in range(n) if v != a and deg[v] == lo]
        for v1, v2 in combinations(exact, 2):
            rep.checked += 1
            if not g.has_edge(v1, v2):
                rep.violations.append(f"gap anchor={a} low vertices {v1},{v2} not adjacent")
        for b in g.neighbors(a):
            if deg[b] != delta:
                continue
            e = (min(a, b), max(a, b))
            for col in ctx.colorings(e):
                mab = col.missing_mask(a) | col.missing_mask(b)
                for v in range(n):
                    if v == a or deg[v] < delta - deg[a] + 1:
                        continue
                    rep.checked += 1
                    if (col.missing_mask(v) & mab).bit_count() > 1:
                        rep.violations.append(f"gap anchor={a} b={b} v={v} coloring={_word(col)}")

    for e in g.edges:
        for col in ctx.colorings(e):
            rep.checked += 1
            for c in range(1, delta + 1):
                if (col.missing_count(c) - n) % 2:
                    rep.violations.append(f"parity color={c} edge={e} coloring={_word(col)}")


# ---------------------------------------------------------------------
# forks
# ---------------------------------------------------------------------


@_timed("fork")
def verify_fork_suite(ctx: GraphContext, rep: Report, universal: bool = False) -> None:
    """Five-vertex Kierstead paths and forks at each critical edge."""
    g, delta = ctx.graph, ctx.delta
    deg = g.degrees
    inconclusive = 0
    by_edge: dict[tuple[int, int], list[Coloring]] = {}
    for e, col in _per_coloring(ctx, rep):
        by_edge.setdefault(e, []).append(col)

    for e, cols in by_edge.items():
        exhaustive = ctx.budget_for(e).exhaustive
        wanted: set[tuple[int, ...]] = set()
        for col in cols:
            paths = [p for p in enumerate_kierstead_paths(col, e, 5) if len(p) == 5]
            groups: dict[tuple[int, int, int], list] = {}
            for p in paths:
                x, y, z, s, t = p.vertices
                mxy = col.missing_mask(x) | col.missing_mask(y)
                if (col.missing_mask(t) & mxy).bit_count() >= 3:
                    rep.checked += 1
                    wanted.add(p.vertices)
                    if deg[y] != delta or deg[z] != delta:
                        rep.violations.append(f"{p} rich tip but d(y)={deg[y]} d(z)={deg[z]} coloring={_word(col)}")
                groups.setdefault((x, y, z), []).append(p)
            for (x, y, z), ps in groups.items():
                mxy = col.missing_mask(x) | col.missing_mask(y)
                for p, q in combinations(ps, 2):
                    if p.colors[3] != q.colors[3]:
                        continue
                    rep.checked += 1
                    t1, t2 = p.vertices[4], q.vertices[4]
                    common = col.missing_mask(t1) & col.missing_mask(t2) & mxy
                    if common.bit_count() > 3:
                        rep.violations.append(f"{p} / {q} share {common.bit_count()} colors coloring={_word(col)}")
            for fork in find_forks(col, e):
                if delta >= deg[fork.x] + deg[fork.t1] + deg[fork.t2] + 1:
                    rep.checked += 1
                    rep.violations.append(f"{fork} under the degree condition coloring={_word(col)}")
        # existence of a recolored coloring for each rich five-vertex path
        for vs in sorted(wanted):
            if not exhaustive:
                inconclusive += 1
                rep.skipped += 1
                continue
            rep.checked += 1
            if not any(_recolored_witness(col, vs) for col in cols):
                rep.violations.append(f"kierstead path={list(vs)} no recolored witness")
        if universal:
            _universal_fork(ctx, e, cols, rep)
    if inconclusive:
        rep.notes.append(f"{inconclusive} existence checks inconclusive under sampling")


def _recolored_witness(col: Coloring, vs: tuple[int, ...]) -> bool:
    x, y, z, s, t = vs
    a, b, c = col.color_of(y, z), col.color_of(z, s), col.color_of(s, t)
    mx, my, mt = col.missing_mask(x), col.missing_mask(y), col.missing_mask(t)
    return (
        a is not None
        and b is not None
        and c is not None
        and bool(mx & mt & (1 << a))
        and bool(my & mt & (1 << b))
        and bool(mx >> c & 1)
    )


def _universal_fork(ctx: GraphContext, e: tuple[int, int], cols: list[Coloring], rep: Report) -> None:
    """Forks whose seven vertices meet the rich-intersection hypothesis of
    the no-fork result under every coloring (full enumeration only)."""
    if not ctx.budget_for(e).exhaustive:
        rep.skipped += 1
        return
    cands: set[tuple[int, ...]] = set()
    for col in cols:
        for fork in find_forks(col, e):
            cands.add(fork.vertices)
    for vs in sorted(cands):
        x, y, _, _, _, t1, t2 = vs
        if all(_rich_pair(col, x, y, t1, t2) for col in cols):
            rep.checked += 1
            rep.violations.append(f"fork vertices={list(vs)} under the universal hypothesis")


def _rich_pair(col: Coloring, x: int, y: int, t1: int, t2: int) -> bool:
    mxy = col.missing_mask(x) | col.missing_mask(y)
    return (col.missing_mask(t1) & mxy).bit_count() >= 3 and (col.missing_mask(t2) & mxy).bit_count() >= 3


CHECKS: dict[str, Callable[..., Report]] = {
    "val": verify_val,
    "multifan": verify_multifan,
    "kierstead": verify_kierstead,
    "broom_main": verify_broom_main,
    "broom_elementary": verify_broom_elementary,
    "splitting": verify_splitting_suite,
    "overfull": verify_overfull_suite,
    "fork": verify_fork_suite,
}
