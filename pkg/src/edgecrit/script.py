"""A small language for Kempe-change recoloring programs.

Linear form, statements separated by ``;``::

    swap [a,b](α/β)        exchange α, β on the subchain between a and b
    swap@ x (α/β)          exchange α, β on the chain ending at x
    seqswap@ x (b0,b1,..)  (b0,b1)-(b1,b2)-... swaps at x
    recolor u-v: a->b
    color u-v: c
    uncolor u-v

``#`` starts a comment that runs to the end of the line.  The same program
can be written as a bracketed two-row matrix, one column per statement,
operands on top and operations below::

    [ P_[4,0](1,2) | 2-3  | 0-1 ]
    [ 1/2          | 2->5 | 2   ]

:func:`parse_script` accepts both forms; :func:`render_script` produces the
matrix form.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from typing import Callable, Mapping, Union

from .coloring import Coloring, ColoringError
from .graph import Graph, GraphError

Pos = tuple[int, int]


class ScriptSyntaxError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class ScriptError(ValueError):
    """Execution failure; ``step`` is the 0-based index of the failing statement."""

    def __init__(self, message: str, step: int):
        super().__init__(f"step {step}: {message}")
        self.step = step


# ---------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class SubchainSwap:
    a: int
    b: int
    alpha: int
    beta: int
    pos: Pos = field(default=(0, 0), compare=False)

    def __str__(self) -> str:
        return f"swap [{self.a},{self.b}]({self.alpha}/{self.beta})"


@dataclass(frozen=True)
class EndpointSwap:
    x: int
    alpha: int
    beta: int
    pos: Pos = field(default=(0, 0), compare=False)

    def __str__(self) -> str:
        return f"swap@ {self.x} ({self.alpha}/{self.beta})"


@dataclass(frozen=True)
class SequenceSwap:
    x: int
    colors: tuple[int, ...]
    pos: Pos = field(default=(0, 0), compare=False)

    def __str__(self) -> str:
        return f"seqswap@ {self.x} ({','.join(map(str, self.colors))})"


@dataclass(frozen=True)
class Recolor:
    u: int
    v: int
    old: int
    new: int
    pos: Pos = field(default=(0, 0), compare=False)

    def __str__(self) -> str:
        return f"recolor {self.u}-{self.v}: {self.old}->{self.new}"


@dataclass(frozen=True)
class ColorEdge:
    u: int
    v: int
    color: int
    pos: Pos = field(default=(0, 0), compare=False)

    def __str__(self) -> str:
        return f"color {self.u}-{self.v}: {self.color}"


@dataclass(frozen=True)
class Uncolor:
    u: int
    v: int
    pos: Pos = field(default=(0, 0), compare=False)

    def __str__(self) -> str:
        return f"uncolor {self.u}-{self.v}"


Statement = Union[SubchainSwap, EndpointSwap, SequenceSwap, Recolor, ColorEdge, Uncolor]


@dataclass(frozen=True)
class ScriptProgram:
    statements: tuple[Statement, ...]

    def __post_init__(self) -> None:
        if not self.statements:
            raise ValueError("a program needs at least one statement")

    def __len__(self) -> int:
        return len(self.statements)

    def __str__(self) -> str:
        return "; ".join(map(str, self.statements))


# ---------------------------------------------------------------------
# lexer
# ---------------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>#[^\n]*)|(?P<int>\d+)|(?P<word>[A-Za-z][A-Za-z_]*)"
    r"|(?P<arrow>->|→)|(?P<punct>[\[\](),/;:@|\-])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # int, word, arrow, punct, eof
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    i = 0
    line, line_start = 1, 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            raise ScriptSyntaxError(f"unexpected character {text[i]!r}", line, i - line_start + 1)
        kind = m.lastgroup
        tok = m.group()
        if kind not in ("ws", "comment"):
            out.append(Token(kind, tok, line, i - line_start + 1))
        for j, ch in enumerate(tok):
            if ch == "\n":
                line += 1
                line_start = i + j + 1
        i = m.end()
    out.append(Token("eof", "", line, i - line_start + 1))
    return out


# ---------------------------------------------------------------------
# parser (recursive descent, one token of lookahead)
# ---------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def fail(self, msg: str, tok: Token | None = None):
        tok = tok or self.cur
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ScriptSyntaxError(f"{msg}, found {found}", tok.line, tok.col)

    def at(self, text: str) -> bool:
        return self.cur.kind != "eof" and self.cur.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r}")
        tok = self.cur
        self.i += 1
        return tok

    def integer(self, what: str) -> int:
        if self.cur.kind != "int":
            self.fail(f"expected {what}")
        val = int(self.cur.text)
        self.i += 1
        return val

    def color(self) -> int:
        tok = self.cur
        if self.at("-") and self.toks[self.i + 1].kind == "int":
            raise ScriptSyntaxError("color literals must be positive", tok.line, tok.col)
        val = self.integer("a color")
        if val <= 0:
            raise ScriptSyntaxError("color literals must be positive", tok.line, tok.col)
        return val

    def edge(self) -> tuple[int, int]:
        tok = self.cur
        if tok.kind != "int":
            self.fail("expected an edge 'u-v'")
        u = self.integer("a vertex")
        if not self.at("-"):
            raise ScriptSyntaxError(f"malformed edge token after {u}: expected '-'", self.cur.line, self.cur.col)
        self.i += 1
        if self.cur.kind != "int":
            raise ScriptSyntaxError("malformed edge token: missing second vertex", self.cur.line, self.cur.col)
        v = self.integer("a vertex")
        if u == v:
            raise ScriptSyntaxError(f"malformed edge token {u}-{v}: a loop", tok.line, tok.col)
        return u, v

    def pair(self) -> tuple[int, int]:
        self.expect("(")
        a = self.color()
        self.expect("/")
        b = self.color()
        self.expect(")")
        return a, b

    # -- linear form --

    def program(self) -> ScriptProgram:
        if self.at("["):
            return self.matrix()
        stmts = [self.statement()]
        while self.at(";"):
            self.i += 1
            if self.cur.kind == "eof":
                break
            stmts.append(self.statement())
        if self.cur.kind != "eof":
            self.fail("expected ';' or end of input")
        return ScriptProgram(tuple(stmts))

    def statement(self) -> Statement:
        tok = self.cur
        pos = (tok.line, tok.col)
        if tok.kind != "word":
            self.fail("expected a statement keyword")
        word = tok.text
        self.i += 1
        if word == "swap":
            if self.at("@"):
                self.i += 1
                x = self.integer("a vertex")
                a, b = self.pair()
                return EndpointSwap(x, a, b, pos)
            self.expect("[")
            a = self.integer("a vertex")
            self.expect(",")
            b = self.integer("a vertex")
            self.expect("]")
            al, be = self.pair()
            return SubchainSwap(a, b, al, be, pos)
        if word == "seqswap":
            self.expect("@")
            x = self.integer("a vertex")
            self.expect("(")
            cols = [self.color()]
            while self.at(","):
                self.i += 1
                cols.append(self.color())
            self.expect(")")
            if len(cols) < 2:
                raise ScriptSyntaxError("a swap sequence needs at least two colors", tok.line, tok.col)
            return SequenceSwap(x, tuple(cols), pos)
        if word == "recolor":
            u, v = self.edge()
            self.expect(":")
            old = self.color()
            self.expect_arrow()
            new = self.color()
            return Recolor(u, v, old, new, pos)
        if word == "color":
            u, v = self.edge()
            self.expect(":")
            return ColorEdge(u, v, self.color(), pos)
        if word == "uncolor":
            u, v = self.edge()
            return Uncolor(u, v, pos)
        raise ScriptSyntaxError(f"unknown statement {word!r}", tok.line, tok.col)

    def expect_arrow(self) -> None:
        if self.cur.kind != "arrow":
            self.fail("expected '->'")
        self.i += 1

    # -- matrix form --

    def row(self) -> list[tuple[int, int]]:
        """Token index ranges of the cells of one bracketed row."""
        self.expect("[")
        cells = []
        start = self.i
        depth = 0
        while True:
            tok = self.cur
            if tok.kind == "eof":
                self.fail("unterminated matrix row")
            if tok.text == "[":
                depth += 1
            elif tok.text == "]":
                if depth == 0:
                    cells.append((start, self.i))
                    self.i += 1
                    return cells
                depth -= 1
            elif tok.text == "|" and depth == 0:
                cells.append((start, self.i))
                start = self.i + 1
            self.i += 1

    def matrix(self) -> ScriptProgram:
        top = self.row()
        bottom = self.row()
        if self.cur.kind != "eof":
            self.fail("expected end of input after the two matrix rows")
        if len(top) != len(bottom):
            self.fail(f"rows have {len(top)} and {len(bottom)} columns", self.toks[bottom[0][0]])
        stmts = []
        for (t0, t1), (b0, b1) in zip(top, bottom):
            stmts.append(self.column(t0, t1, b0, b1))
        return ScriptProgram(tuple(stmts))

    def _sub(self, lo: int, hi: int) -> _Parser:
        end = self.toks[hi]
        sub = _Parser(self.toks[lo:hi] + [Token("eof", "", end.line, end.col)])
        if lo == hi:
            sub.fail("empty matrix cell")
        return sub

    def column(self, t0: int, t1: int, b0: int, b1: int) -> Statement:
        top = self._sub(t0, t1)
        bot = self._sub(b0, b1)
        head = top.cur
        pos = (head.line, head.col)
        if head.kind == "word" and head.text == "P_":
            top.i += 1
            if top.at("["):
                top.i += 1
                a = top.integer("a vertex")
                top.expect(",")
                b = top.integer("a vertex")
                top.expect("]")
                cols = top.color_tuple()
                top.done()
                al, be = bot.slash()
                bot.done()
                if cols != (al, be):
                    bot.fail(f"operation must match the chain colors {cols}", bot.toks[0])
                return SubchainSwap(a, b, al, be, pos)
            x = top.integer("a vertex or '['")
            cols = top.color_tuple()
            top.done()
            if len(cols) == 2 and not bot.at("("):
                al, be = bot.slash()
                bot.done()
                if cols != (al, be):
                    bot.fail(f"operation must match the chain colors {cols}", bot.toks[0])
                return EndpointSwap(x, al, be, pos)
            seq = bot.sequence()
            bot.done()
            if seq != cols:
                bot.fail(f"swap sequence must match the chain colors {cols}", bot.toks[0])
            return SequenceSwap(x, seq, pos)
        u, v = top.edge()
        top.done()
        if bot.at("-") and bot.toks[bot.i + 1].kind == "eof":
            return Uncolor(u, v, pos)
        c = bot.color()
        if bot.cur.kind == "arrow":
            bot.i += 1
            new = bot.color()
            bot.done()
            return Recolor(u, v, c, new, pos)
        bot.done()
        return ColorEdge(u, v, c, pos)

    def color_tuple(self) -> tuple[int, ...]:
        self.expect("(")
        cols = [self.color()]
        while self.at(","):
            self.i += 1
            cols.append(self.color())
        self.expect(")")
        if len(cols) < 2:
            self.fail("a chain needs at least two colors")
        return tuple(cols)

    def slash(self) -> tuple[int, int]:
        a = self.color()
        self.expect("/")
        return a, self.color()

    def sequence(self) -> tuple[int, ...]:
        pairs = [self.paren_pair()]
        while self.at("-"):
            self.i += 1
            pairs.append(self.paren_pair())
        for (_, b), (c, _) in zip(pairs, pairs[1:]):
            if b != c:
                self.fail("consecutive swaps in a sequence must share a color")
        return (pairs[0][0], *(b for _, b in pairs))

    def paren_pair(self) -> tuple[int, int]:
        self.expect("(")
        a = self.color()
        self.expect(",")
        b = self.color()
        self.expect(")")
        return a, b

    def done(self) -> None:
        if self.cur.kind != "eof":
            self.fail("unexpected token in matrix cell")


def parse_script(text: str) -> ScriptProgram:
    return _Parser(tokenize(text)).program()


# ---------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------


def _cells(st: Statement, vn: Callable[[int], str], cn: Callable[[int], str], sep: str) -> tuple[str, str]:
    if isinstance(st, SubchainSwap):
        return f"P_[{vn(st.a)},{vn(st.b)}]({cn(st.alpha)},{cn(st.beta)})", f"{cn(st.alpha)}/{cn(st.beta)}"
    if isinstance(st, EndpointSwap):
        return f"P_{vn(st.x)}({cn(st.alpha)},{cn(st.beta)})", f"{cn(st.alpha)}/{cn(st.beta)}"
    if isinstance(st, SequenceSwap):
        cs = [cn(c) for c in st.colors]
        return f"P_{vn(st.x)}({','.join(cs)})", "-".join(f"({a},{b})" for a, b in zip(cs, cs[1:]))
    edge = f"{vn(st.u)}{sep}{vn(st.v)}"
    if isinstance(st, Recolor):
        return edge, f"{cn(st.old)}->{cn(st.new)}"
    if isinstance(st, ColorEdge):
        return edge, cn(st.color)
    return edge, "-"


def render_script(
    program: ScriptProgram,
    vertex_names: Mapping[int, str] | None = None,
    color_names: Mapping[int, str] | None = None,
) -> str:
    """Two-row matrix text.  With name maps the output is for display only
    (edges are written ``uv`` without a dash) and does not parse back."""
    named = bool(vertex_names or color_names)
    vmap, cmap = vertex_names or {}, color_names or {}

    def vn(v: int) -> str:
        return vmap.get(v, str(v))

    def cn(c: int) -> str:
        return cmap.get(c, str(c))

    cols = [_cells(st, vn, cn, "" if named else "-") for st in program.statements]
    widths = [max(len(t), len(b)) for t, b in cols]
    top = " | ".join(t.ljust(w) for (t, _), w in zip(cols, widths))
    bottom = " | ".join(b.ljust(w) for (_, b), w in zip(cols, widths))
    return f"[ {top} ]\n[ {bottom} ]\n"


# ---------------------------------------------------------------------
# execution
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    index: int
    statement: str
    digest: str

    def __str__(self) -> str:
        return f"{self.index}\t{self.digest}\t{self.statement}"


@dataclass
class Execution:
    coloring: Coloring
    trace: list[TraceStep]


def coloring_digest(col: Coloring) -> str:
    data = ",".join(map(str, col.colors)).encode()
    return hashlib.blake2b(data, digest_size=8).hexdigest()


def _vertices(st: Statement) -> tuple[int, ...]:
    if isinstance(st, SubchainSwap):
        return st.a, st.b
    if isinstance(st, (EndpointSwap, SequenceSwap)):
        return (st.x,)
    return st.u, st.v


def apply_statement(col: Coloring, st: Statement) -> None:
    """Apply one statement in place; raises ColoringError on any rule breach."""
    g = col.graph
    for v in _vertices(st):
        if not 0 <= v < g.n:
            raise ColoringError(f"vertex {v} does not exist")
    if isinstance(st, (Recolor, ColorEdge, Uncolor)) and not g.has_edge(st.u, st.v):
        raise ColoringError(f"{st.u}-{st.v} is not an edge")
    if isinstance(st, SubchainSwap):
        col.swap_subchain(st.a, st.b, st.alpha, st.beta)
    elif isinstance(st, EndpointSwap):
        col.swap_at(st.x, st.alpha, st.beta)
    elif isinstance(st, SequenceSwap):
        col.swap_sequence(st.x, st.colors)
    elif isinstance(st, Recolor):
        col.recolor_edge(st.u, st.v, st.old, st.new)
    elif isinstance(st, ColorEdge):
        col.color_edge(st.u, st.v, st.color)
    else:
        col.uncolor_edge(st.u, st.v)


def execute_script(program: ScriptProgram, graph: Graph, coloring: Coloring) -> Execution:
    """Run ``program`` on a copy of ``coloring``; the input is left untouched."""
    if coloring.graph != graph:
        raise ValueError("coloring belongs to a different graph")
    if not coloring.is_proper():
        raise ValueError("the starting coloring is not proper")
    col = coloring.copy()
    trace = []
    for i, st in enumerate(program.statements):
        try:
            apply_statement(col, st)
        except (ColoringError, GraphError) as exc:
            raise ScriptError(f"{st}: {exc}", i) from exc
        if not col.is_proper():  # defensive: the engine should never allow this
            raise ScriptError(f"{st}: result is not proper", i)
        trace.append(TraceStep(i, str(st), coloring_digest(col)))
    return Execution(col, trace)


def inverse_script(program: ScriptProgram, graph: Graph, coloring: Coloring) -> ScriptProgram:
    """The program undoing ``program`` when run after it from ``coloring``.

    Swaps are their own inverses, a swap sequence runs backwards, recolors
    flip direction, and color/uncolor trade places (an uncolor's inverse
    needs the color the edge had, which is read off a replay).
    """
    col = coloring.copy()
    undo: list[Statement] = []
    for i, st in enumerate(program.statements):
        if isinstance(st, Uncolor):
            c = col.color_of(st.u, st.v)
            inv: Statement = ColorEdge(st.u, st.v, c if c is not None else 1)
        elif isinstance(st, ColorEdge):
            inv = Uncolor(st.u, st.v)
        elif isinstance(st, Recolor):
            inv = Recolor(st.u, st.v, st.new, st.old)
        elif isinstance(st, SequenceSwap):
            inv = SequenceSwap(st.x, tuple(reversed(st.colors)))
        else:
            inv = st
        try:
            apply_statement(col, st)
        except (ColoringError, GraphError) as exc:
            raise ScriptError(f"{st}: {exc}", i) from exc
        undo.append(inv)
    return ScriptProgram(tuple(reversed(undo)))
