"""Concrete instances of the two Kempe-change matrices used against the
broom configurations with a repeated missing color.

Each instance is a small graph with an uncolored edge ``xy`` and a coloring
of ``G - xy`` arranged so that the matrix applies.  The literal
transcription passes through improper intermediate colorings (the matrices
describe a net effect), so the strict executor rejects it at its first
column.  The ``*_STRICT`` programs reach the same final coloring using
explicit uncolor steps, and finish with a proper coloring of all of ``G``.
"""

from __future__ import annotations

from .coloring import Coloring
from .graph import Graph
from .script import ScriptProgram, parse_script

# Colors 1, zeta=2, beta_0=3, beta=4.  Bristles v_1=3 (via color 1) and
# u_1=4 (via beta_0); beta is missing at x, v_1 and u_1.
A1_NAMES = {0: "x", 1: "y", 2: "z", 3: "v_1", 4: "u_1", 5: "w", 6: "a", 7: "b", 8: "c"}
A1_COLORS = {1: "1", 2: "ζ", 3: "β_0", 4: "β"}
A1_GRAPH = Graph(9, [(0, 1), (0, 8), (1, 2), (1, 6), (1, 7), (2, 3), (2, 4), (2, 5), (3, 5)])
A1_COLORING = {(0, 8): 1, (1, 2): 2, (1, 6): 3, (1, 7): 4, (2, 3): 1, (2, 4): 3, (3, 5): 2, (2, 5): 4}
A1_LITERAL = """\
recolor 2-4: 3->4;     # zu_1: beta_0 -> beta
swap [3,2](4/2);       # P_[v_1,z](beta, zeta)
recolor 1-2: 2->1;     # yz: zeta -> 1
swap [2,3](1/3);       # the restricted chain from z along zv_1
color 0-1: 2           # xy: zeta
"""
A1_STRICT = """\
uncolor 2-4; uncolor 1-2;
swap [3,2](4/2);
color 2-4: 4;
swap@ 2 (1/3);
color 1-2: 1;
color 0-1: 2
"""

# Colors 1, zeta=2, beta_0=3, 4.  The restricted chain from z along zu_1
# is z, u_1, p, x and ends at x, so xy receives beta_0.
A2_NAMES = {0: "x", 1: "y", 2: "z", 3: "v_1", 4: "u_1", 5: "p", 6: "w", 7: "q"}
A2_COLORS = {1: "1", 2: "ζ", 3: "β_0", 4: "4"}
A2_GRAPH = Graph(8, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (0, 5), (2, 6), (1, 7)])
A2_COLORING = {(1, 2): 2, (2, 3): 1, (2, 4): 3, (4, 5): 1, (0, 5): 3, (2, 6): 4, (1, 7): 1}
A2_LITERAL = """\
swap [2,0](1/3);       # restricted chain from z along zu_1
recolor 2-3: 1->3;     # zv_1: 1 -> beta_0
color 0-1: 3           # xy: beta_0 since the chain ended at x
"""
A2_STRICT = """\
uncolor 2-3;
swap [2,0](1/3);
color 2-3: 3;
color 0-1: 3
"""


def instance(name: str) -> tuple[Graph, Coloring, ScriptProgram, ScriptProgram]:
    """``(graph, coloring, literal, strict)`` for ``"A1"`` or ``"A2"``."""
    if name == "A1":
        g, cols, lit, strict = A1_GRAPH, A1_COLORING, A1_LITERAL, A1_STRICT
    elif name == "A2":
        g, cols, lit, strict = A2_GRAPH, A2_COLORING, A2_LITERAL, A2_STRICT
    else:
        raise KeyError(name)
    return g, Coloring(g, g.max_degree, cols), parse_script(lit), parse_script(strict)
