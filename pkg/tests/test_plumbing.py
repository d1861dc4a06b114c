import json
import random
from fractions import Fraction

import pytest
import sympy

from zhathat import (
    PlumbingError,
    PlumbingGraph,
    blow_down,
    blow_up_edge,
    blow_up_vertex,
    det_and_inverse,
    det_int,
    inverse_fraction,
    is_negative_definite,
    smith_normal_form,
    spinc_equivalent,
    spinc_representatives,
    vertex_deleted_h,
)


def _random_tree(rng, size):
    weights = []
    edges = [(rng.randrange(i), i) for i in range(1, size)]
    degs = [0] * size
    for a, b in edges:
        degs[a] += 1
        degs[b] += 1
    for i in range(size):
        weights.append(-(degs[i] + 1 + rng.randrange(3)))
    return PlumbingGraph(weights, edges)


def test_tree_validation():
    with pytest.raises(PlumbingError):
        PlumbingGraph([-2, -2], [])  # disconnected
    with pytest.raises(PlumbingError):
        PlumbingGraph([-2, -2, -2], [(0, 1), (1, 2), (0, 2)])  # cycle
    with pytest.raises(PlumbingError):
        PlumbingGraph([-2], [(0, 0)])  # self loop
    g = PlumbingGraph([-1, -2, -3], [(0, 1), (1, 2)])
    assert g.degrees() == [1, 2, 1]
    assert g.matrix() == [[-1, 1, 0], [1, -2, 1], [0, 1, -3]]


def test_det_and_inverse_against_sympy():
    rng = random.Random(3)
    for _ in range(15):
        g = _random_tree(rng, rng.randrange(2, 8))
        m = g.matrix()
        sm = sympy.Matrix(m)
        assert det_int(m) == sm.det()
        d, inv = det_and_inverse(m)
        assert d == sm.det()
        sinv = sm.inv()
        for i in range(len(m)):
            for j in range(len(m)):
                assert inv[i][j] == Fraction(int(sinv[i, j].p), int(sinv[i, j].q))


def test_negative_definiteness_against_sympy():
    rng = random.Random(5)
    for _ in range(15):
        g = _random_tree(rng, rng.randrange(2, 7))
        m = g.matrix()
        assert is_negative_definite(m) == (-sympy.Matrix(m)).is_positive_definite
    not_nd = PlumbingGraph([1, -2], [(0, 1)]).matrix()
    assert not is_negative_definite(not_nd)


def test_vertex_deleted_h():
    # E8-like chain: deleting an end of a (-2)-chain of length n leaves
    # determinant +-n
    chain = PlumbingGraph([-2] * 4, [(0, 1), (1, 2), (2, 3)])
    m = chain.matrix()
    assert vertex_deleted_h(m, 0) == 4  # leaves a length-3 chain, |det| = 4
    assert vertex_deleted_h(m, 3) == 4


def test_smith_normal_form_properties():
    rng = random.Random(9)
    for _ in range(10):
        g = _random_tree(rng, rng.randrange(2, 7))
        m = g.matrix()
        d, u, v = smith_normal_form(m)
        s = len(m)
        um = sympy.Matrix(u) * sympy.Matrix(m) * sympy.Matrix(v)
        assert um == sympy.Matrix(d)
        assert abs(sympy.Matrix(u).det()) == 1
        assert abs(sympy.Matrix(v).det()) == 1
        prod = 1
        for i in range(s):
            assert all(d[i][j] == 0 for j in range(s) if j != i)
            prod *= d[i][i]
        assert abs(prod) == abs(det_int(m))


def test_spinc_representatives_counts_and_inequivalence():
    lone = PlumbingGraph([-3], [])
    reps = spinc_representatives(lone)
    assert len(reps) == 3
    m = lone.matrix()
    for i, k1 in enumerate(reps):
        assert (k1[0] - (-3)) % 2 == 0
        for k2 in reps[i + 1 :]:
            assert not spinc_equivalent(m, k1, k2)

    chain = PlumbingGraph([-2, -3], [(0, 1)])  # det = 5
    reps = spinc_representatives(chain)
    assert len(reps) == 5
    m = chain.matrix()
    for i, k1 in enumerate(reps):
        for k2 in reps[i + 1 :]:
            assert not spinc_equivalent(m, k1, k2)


def test_spinc_unique_for_unimodular():
    from zhathat import BrieskornData

    e8 = BrieskornData.from_triple(2, 3, 5).tree
    assert abs(det_int(e8.matrix())) == 1
    assert len(spinc_representatives(e8)) == 1


def test_blow_down_round_trips():
    g = PlumbingGraph([-2, -3, -2], [(0, 1), (1, 2)])
    up = blow_up_vertex(g, 1)
    assert up.weights[-1] == -1
    assert blow_down(up, up.size - 1) == g

    up2 = blow_up_edge(g, (0, 1))
    assert up2.weights[-1] == -1
    down = blow_down(up2, up2.size - 1)
    assert down.weights == g.weights
    assert sorted(down.edges) == sorted(g.edges)


def test_blow_down_rejects_bad_vertices():
    g = PlumbingGraph([-1, -2], [(0, 1)])
    with pytest.raises(PlumbingError):
        blow_down(g, 1)  # weight is -2, not -1


def test_json_round_trip(tmp_path):
    g = PlumbingGraph([-2, -3, -7, -1], [(3, 0), (3, 1), (3, 2)])
    d = g.to_json_dict()
    assert PlumbingGraph.from_json_dict(d) == g
    path = tmp_path / "graph.json"
    path.write_text(json.dumps(d))
    assert PlumbingGraph.from_json_file(str(path)) == g


def test_inverse_fraction_identity():
    g = PlumbingGraph([-2, -3, -7, -1], [(3, 0), (3, 1), (3, 2)])
    m = g.matrix()
    inv = inverse_fraction(m)
    n = len(m)
    for i in range(n):
        for j in range(n):
            acc = sum(Fraction(m[i][k]) * inv[k][j] for k in range(n))
            assert acc == (1 if i == j else 0)
