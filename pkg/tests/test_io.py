import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pvg import Embedding, Graph, Point, SchemaError, phi
from pvg.io import (emit_dot, emit_family, emit_graph, emit_points,
                    parse_family, parse_graph, parse_points,
                    reduced_instance_to_obj, witness_to_obj)
from pvg.reductions import reduce_fvs
from pvg.solvers import Witness
from pvg.verify import random_graph


# --- graphs ------------------------------------------------------------------

def test_parse_graph_p3():
    g = parse_graph('{"n":3,"edges":[[0,1],[1,2]]}')
    assert g == Graph(3, frozenset({(0, 1), (1, 2)}))


def test_parse_graph_rejects_loop():
    with pytest.raises(SchemaError, match=r"edges\[0\]"):
        parse_graph('{"n":2,"edges":[[0,0]]}')


def test_parse_graph_rejects_out_of_range():
    with pytest.raises(SchemaError, match="out of range"):
        parse_graph('{"n":2,"edges":[[0,2]]}')


def test_parse_graph_rejects_duplicates():
    with pytest.raises(SchemaError, match="duplicate"):
        parse_graph('{"n":3,"edges":[[0,1],[1,0]]}')


def test_parse_graph_rejects_bad_shapes():
    for doc in ['[]', '{"edges":[]}', '{"n":-1}', '{"n":2,"edges":[[0]]}',
                '{"n":2,"edges":[["a","b"]]}', 'not json']:
        with pytest.raises(SchemaError):
            parse_graph(doc)


def test_graph_round_trip_random():
    rng = random.Random(23)
    for _ in range(25):
        g = random_graph(rng, rng.randrange(0, 8))
        assert parse_graph(emit_graph(g)) == g


def test_emit_graph_trailing_newline_and_sorted_edges():
    text = emit_graph(Graph(3, frozenset({(1, 2), (0, 1)})), name="p3")
    assert text.endswith("\n") and not text.endswith("\n\n")
    obj = json.loads(text)
    assert obj["edges"] == [[0, 1], [1, 2]]
    assert obj["name"] == "p3"


# --- points ------------------------------------------------------------------

def test_parse_points_quadruples():
    emb = parse_points('[[2,1,2,3],[0,1,0,1]]')
    assert emb.points == (Point(2, Fraction(2, 3)), Point(0, 0))


def test_parse_points_wrapped_form():
    emb = parse_points('{"points":[[1,2,3,4]]}')
    assert emb.points == (Point(Fraction(1, 2), Fraction(3, 4)),)


def test_parse_points_rejects_duplicates():
    with pytest.raises(SchemaError):
        parse_points('[[0,1,0,1],[0,2,0,1]]')  # 0/1 == 0/2


def test_parse_points_rejects_nonpositive_denominator():
    with pytest.raises(SchemaError, match="denominator"):
        parse_points('[[1,0,1,1]]')
    with pytest.raises(SchemaError, match="denominator"):
        parse_points('[[1,-1,1,1]]')


def test_parse_points_empty_is_empty_embedding():
    assert len(parse_points('[]')) == 0


coords = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@given(st.lists(st.builds(Point, coords, coords), max_size=8, unique=True))
def test_points_round_trip(pts):
    emb = Embedding(pts)
    assert parse_points(emit_points(emb)) == emb


# --- families ----------------------------------------------------------------

def test_family_round_trip():
    f = parse_family('{"members":[{"n":3,"edges":[[0,1],[0,2],[1,2]]}]}')
    assert parse_family(emit_family(f)) == f


def test_family_rejects_empty():
    with pytest.raises(SchemaError):
        parse_family('{"members":[]}')


# --- DOT ---------------------------------------------------------------------

def test_emit_dot_k2():
    assert emit_dot(Graph(2, frozenset({(0, 1)}))) == "graph {\n  v0 -- v1;\n}\n"


def test_emit_dot_isolated_vertex():
    assert "v0;" in emit_dot(Graph(1, frozenset()))


def test_emit_dot_flags_blockers(four_cycle_with_chord):
    res = phi(four_cycle_with_chord)
    text = emit_dot(res.graph, blockers=res.blockers)
    assert text.count("[blocker=true]") == 2
    assert "v4 [blocker=true];" in text and "v5 [blocker=true];" in text


# --- result objects ----------------------------------------------------------

def test_witness_to_obj():
    assert witness_to_obj(Witness(False)) == {"answer": False}
    obj = witness_to_obj(Witness(True, (1, 2)))
    assert obj == {"answer": True, "certificate": [1, 2]}


def test_reduced_instance_to_obj_drops_null_provenance():
    obj = reduced_instance_to_obj(reduce_fvs(Graph(3, frozenset()), 1))
    assert obj["problem"] == "FVS"
    assert obj["provenance"]["blockers"] == 3
    assert "presolved" not in obj["provenance"]
    json.dumps(obj)  # must be serializable
