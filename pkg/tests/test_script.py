import random

import pytest

from edgecrit.coloring import Coloring
from edgecrit.graph import Graph, cycle_graph, path_graph
from edgecrit.samples import A1_COLORS, A1_NAMES, instance
from edgecrit.script import (
    ColorEdge,
    EndpointSwap,
    Recolor,
    ScriptError,
    ScriptProgram,
    ScriptSyntaxError,
    SequenceSwap,
    SubchainSwap,
    Uncolor,
    coloring_digest,
    execute_script,
    inverse_script,
    parse_script,
    render_script,
)

from fuzz import executable_program, random_coloring, random_graph, random_program


def test_linear_forms_parse():
    prog = parse_script(
        "swap [3,2](4/2); swap@ 0 (1/2);\n"
        "seqswap@ 1 (1,2,3); recolor 2-4: 3->4; color 0-1: 2; uncolor 1-2  # trailing comment"
    )
    assert prog.statements == (
        SubchainSwap(3, 2, 4, 2),
        EndpointSwap(0, 1, 2),
        SequenceSwap(1, (1, 2, 3)),
        Recolor(2, 4, 3, 4),
        ColorEdge(0, 1, 2),
        Uncolor(1, 2),
    )
    assert parse_script(str(prog)) == prog


def test_unicode_arrow():
    assert parse_script("recolor 0-1: 1→2").statements == (Recolor(0, 1, 1, 2),)


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("swap@ 3 (1/1,", 1, 13),
        ("color 1-: 2", 1, 9),
        ("color 1-1: 2", 1, 7),
        ("color 0-1: 0", 1, 12),
        ("swap@ 0 (1/2) swap@ 1 (1/2)", 1, 15),
        ("frobnicate 1", 1, 1),
        ("color 0-1: 1;\nuncolor 0-", 2, 11),
        ("", 1, 1),
    ],
)
def test_syntax_errors_point_at_the_problem(text, line, col):
    with pytest.raises(ScriptSyntaxError) as info:
        parse_script(text)
    assert (info.value.line, info.value.col) == (line, col)


def test_seqswap_needs_two_colors():
    with pytest.raises(ScriptSyntaxError):
        parse_script("seqswap@ 0 (1)")


def test_matrix_form_round_trip():
    prog = parse_script("swap [3,2](4/2); swap@ 0 (1/2); seqswap@ 1 (1,2,3); recolor 2-4: 3->4; color 0-1: 2; uncolor 1-2")
    text = render_script(prog)
    top, bottom = text.splitlines()
    assert [c.strip() for c in top.strip("[]").split("|")] == [
        "P_[3,2](4,2)", "P_0(1,2)", "P_1(1,2,3)", "2-4", "0-1", "1-2"
    ]
    assert [c.strip() for c in bottom.strip("[]").split("|")] == ["4/2", "1/2", "(1,2)-(2,3)", "3->4", "2", "-"]
    assert parse_script(text) == prog
    assert render_script(parse_script(text)) == text


def test_named_rendering_of_first_matrix():
    _, _, literal, _ = instance("A1")
    text = render_script(literal, A1_NAMES, A1_COLORS)
    top, bottom = [row.strip("[] ") for row in text.splitlines()]
    assert [c.strip() for c in top.split("|")] == ["zu_1", "P_[v_1,z](β,ζ)", "yz", "P_[z,v_1](1,β_0)", "xy"]
    assert [c.strip() for c in bottom.split("|")] == ["β_0->β", "β/ζ", "ζ->1", "1/β_0", "ζ"]


def test_execution_of_simple_program():
    g = cycle_graph(5)
    col = Coloring(g, 2, {(1, 2): 1, (2, 3): 2, (3, 4): 1, (0, 4): 2})
    prog = parse_script("swap@ 0 (1/2)")
    result = execute_script(prog, g, col)
    assert result.coloring.is_proper()
    assert result.coloring.missing(0) == {2}
    assert col.missing(0) == {1}  # input untouched
    assert execute_script(parse_script("swap@ 0 (1/1)"), g, col).coloring == col
    with pytest.raises(ScriptError):
        execute_script(parse_script("color 1-2: 1"), g, col)
    assert len(result.trace) == 1 and result.trace[0].digest == coloring_digest(result.coloring)


def test_failing_step_is_reported():
    g = path_graph(3)
    col = Coloring(g, 2, [1, 2])
    with pytest.raises(ScriptError) as info:
        execute_script(parse_script("uncolor 0-1; color 1-2: 1"), g, col)
    assert info.value.step == 1
    with pytest.raises(ScriptError) as info:
        execute_script(parse_script("color 1-2: 1"), g, col)
    assert info.value.step == 0


def test_improper_start_rejected():
    g = path_graph(3)
    col = Coloring(g, 2, [1, 2])
    col.colors[1] = 1  # corrupt behind the engine's back
    with pytest.raises(ValueError):
        execute_script(parse_script("uncolor 0-1"), g, col)


@pytest.mark.parametrize("name", ["A1", "A2"])
def test_matrix_instances(name):
    g, col, literal, strict = instance(name)
    with pytest.raises(ScriptError) as info:
        execute_script(literal, g, col)
    assert info.value.step == 0
    done = execute_script(strict, g, col).coloring
    assert done.is_total() and done.is_proper() and done.k == g.max_degree
    undo = inverse_script(strict, g, col)
    assert execute_script(undo, g, done).coloring == col


def test_inverse_of_each_statement_kind():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    col = Coloring(g, 3, {(0, 1): 1, (1, 2): 2, (2, 3): 1})
    prog = parse_script("seqswap@ 4 (2,1,3); recolor 0-1: 1->3; uncolor 1-2; color 3-4: 3; swap [0,1](3/2)")
    after = execute_script(prog, g, col).coloring
    back = execute_script(inverse_script(prog, g, col), g, after).coloring
    assert back == col


def test_fuzzed_programs_round_trip_and_invert():
    rng = random.Random(1234)
    for _ in range(150):
        prog = random_program(rng)
        assert parse_script(str(prog)) == prog
        text = render_script(prog)
        assert parse_script(text) == prog
        g = random_graph(rng, 3, 7)
        if not g.m:
            continue
        col = random_coloring(rng, g, g.max_degree + 1, fill=0.8)
        prog = executable_program(rng, col, rng.randint(1, 6))
        after = execute_script(prog, g, col).coloring
        assert execute_script(inverse_script(prog, g, col), g, after).coloring == col


def test_empty_program_is_not_constructible():
    with pytest.raises(ValueError):
        ScriptProgram(())
