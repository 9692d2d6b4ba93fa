import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scmkit.cycles import Cycle, fundamental_cycle
from scmkit.gen import ade, chain
from scmkit.graph import (
    DualGraph,
    GraphError,
    InvalidGraphError,
    bareiss_determinant,
    intersection_matrix,
    pair,
    parse_graph,
    require_valid,
    validate,
)

from conftest import rational_graphs


def check(report, name):
    return next(c for c in report.checks if c.name == name)


def test_a1_passes():
    r = validate(chain([-2]))
    assert r.passed
    assert [c.name for c in r.checks] == ["simple", "tree", "weights", "negative_definite", "rational"]


def test_minus_one_fails_weight_check():
    r = validate(chain([-1]))
    assert not r.passed
    assert not check(r, "weights").passed


def test_repeated_edge_rejected_at_parse_and_by_validate():
    data = {"vertices": [{"id": "a", "self": -2}, {"id": "b", "self": -2}],
            "edges": [["a", "b"], ["b", "a"]]}
    with pytest.raises(GraphError, match="duplicate edge"):
        parse_graph(data)
    g = DualGraph((("a", -2), ("b", -2)), (("a", "b"), ("b", "a")))
    r = validate(g)
    assert not check(r, "simple").passed
    assert not r.passed


def test_triangle_fails_tree_check():
    g = DualGraph((("a", -2), ("b", -2), ("c", -2)), (("a", "b"), ("b", "c"), ("c", "a")))
    assert not check(validate(g), "tree").passed


def test_disconnected_fails_tree_check():
    g = DualGraph((("a", -2), ("b", -2)))
    assert not check(validate(g), "tree").passed


def test_empty_graph_passes():
    assert validate(DualGraph()).passed


def test_affine_d4_not_definite():
    # extended D4: centre with four (-2) leaves has det 0
    g = DualGraph((("c", -2),) + tuple((f"l{k}", -2) for k in range(4)),
                  tuple(("c", f"l{k}") for k in range(4)))
    r = validate(g)
    assert not check(r, "negative_definite").passed
    assert not check(r, "rational").passed


def test_non_rational_definite_graph():
    # Z_f = (2,1,1,1,1): Z_f.Z_f = -4, K.Z_f = 4, so p_a = 1
    g = DualGraph((("c", -2),) + tuple((f"l{k}", -3) for k in range(4)),
                  tuple(("c", f"l{k}") for k in range(4)))
    r = validate(g)
    assert check(r, "negative_definite").passed
    assert not check(r, "rational").passed
    assert check(r, "rational").detail == "p_a(Z_f) = 1"


def test_e9_is_not_definite():
    g = chain([-2] * 8)
    g = DualGraph(g.vertices + (("X", -2),), g.edges + (("E3", "X"),))
    assert not validate(g).passed


def test_require_valid_raises():
    with pytest.raises(InvalidGraphError) as info:
        require_valid(chain([-1]))
    assert not info.value.report.passed


@pytest.mark.parametrize("payload, msg", [
    ({"vertices": [{"id": "a", "self": -2}, {"id": "a", "self": -3}], "edges": []}, "duplicate vertex"),
    ({"vertices": [{"id": "a", "self": -2}], "edges": [["a", "a"]]}, "self-edge"),
    ({"vertices": [{"id": "a", "self": -1}], "edges": []}, "must be <= -2"),
    ({"vertices": [{"id": "a", "self": -2.0}], "edges": []}, "integer"),
    ({"vertices": [{"id": "a", "self": True}], "edges": []}, "integer"),
    ({"vertices": [{"id": "", "self": -2}], "edges": []}, "nonempty"),
    ({"vertices": [{"id": "*", "self": -2}], "edges": []}, "reserved"),
    ({"vertices": [{"id": "a", "self": -2}], "edges": [["a", "b"]]}, "unknown"),
])
def test_parser_rejections(payload, msg):
    with pytest.raises(GraphError, match=msg):
        parse_graph(payload)


def test_parser_malformed_json():
    with pytest.raises(GraphError, match="malformed JSON"):
        parse_graph("{not json")


def test_json_round_trip(G1):
    text = json.dumps(G1.to_json())
    assert parse_graph(text) == G1


def test_intersection_matrix_g1(G1):
    m = intersection_matrix(G1)
    assert m[G1.index("b4")][G1.index("b4")] == -4
    assert m[G1.index("b2")][G1.index("t")] == 1
    assert m[G1.index("b1")][G1.index("b4")] == 0
    assert all(m[i][j] == m[j][i] for i in range(5) for j in range(5))


def test_pair_examples(G1):
    a1 = chain([-2])
    one = Cycle(a1.ids, (1,))
    assert pair(a1, one, one) == -2
    z = Cycle(G1.ids, (3, -1, 2, 0, 5))
    assert pair(G1, z, Cycle.zero(G1)) == 0
    zf = fundamental_cycle(G1)
    assert pair(G1, zf, zf) == -4


def test_pair_index_mismatch(G1):
    other = Cycle(("x",), (1,))
    with pytest.raises(ValueError):
        pair(G1, other, other)


@pytest.mark.parametrize("rows, det", [
    ([[2, -1], [-1, 2]], 3),
    ([[0, 1], [1, 0]], -1),
    ([[1, 2, 3], [4, 5, 6], [7, 8, 10]], -3),
    ([[1, 2], [2, 4]], 0),
])
def test_bareiss(rows, det):
    assert bareiss_determinant(rows) == det


def test_ade_determinants():
    # det(-M) of A_n, D_n, E_n is n+1, 4, 9-n
    for n in range(1, 9):
        neg = [[-x for x in r] for r in intersection_matrix(ade(f"A{n}"))]
        assert bareiss_determinant(neg) == n + 1
    for n in range(4, 9):
        neg = [[-x for x in r] for r in intersection_matrix(ade(f"D{n}"))]
        assert bareiss_determinant(neg) == 4
    for n in (6, 7, 8):
        neg = [[-x for x in r] for r in intersection_matrix(ade(f"E{n}"))]
        assert bareiss_determinant(neg) == 9 - n


fractions = st.fractions(min_value=-10, max_value=10, max_denominator=12)


@settings(max_examples=60, deadline=None)
@given(g=rational_graphs(), data=st.data())
def test_pair_symmetric_bilinear(g, data):
    n = len(g)
    vec = st.lists(fractions, min_size=n, max_size=n)
    x, y, w = (Cycle(g.ids, tuple(data.draw(vec))) for _ in range(3))
    s = data.draw(fractions)
    assert pair(g, x, y) == pair(g, y, x)
    assert pair(g, x + y, w) == pair(g, x, w) + pair(g, y, w)
    assert pair(g, s * x, w) == s * pair(g, x, w)


@settings(max_examples=60, deadline=None)
@given(g=rational_graphs(), data=st.data())
def test_pair_negative_on_nonzero(g, data):
    assert validate(g).passed
    n = len(g)
    z = Cycle(g.ids, tuple(data.draw(st.lists(fractions, min_size=n, max_size=n))))
    if any(z.coeffs):
        assert pair(g, z, z) < 0


@settings(max_examples=60, deadline=None)
@given(g=rational_graphs(), data=st.data())
def test_validate_relabel_invariant(g, data):
    perm = data.draw(st.permutations(range(len(g))))
    renamed = {v: f"x{k}" for k, v in enumerate(g.ids)}
    h = DualGraph(tuple((renamed[g.vertices[k][0]], g.vertices[k][1]) for k in perm),
                  tuple((renamed[a], renamed[b]) for a, b in g.edges))
    a, b = validate(g), validate(h)
    assert [(c.name, c.passed) for c in a.checks] == [(c.name, c.passed) for c in b.checks]


@settings(max_examples=40, deadline=None)
@given(g=rational_graphs(), bump=st.integers(0, 9))
def test_validate_rejects_minus_one(g, bump):
    k = bump % len(g)
    vs = list(g.vertices)
    vs[k] = (vs[k][0], -1)
    assert not validate(DualGraph(tuple(vs), g.edges)).passed
