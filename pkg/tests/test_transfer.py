import json
import math

import numpy as np
import pytest

from gridcycles import alphabet as al
from gridcycles import transfer as tr


def reindex(d, words):
    """Submatrix of d.adj in the given vertex order."""
    idx = [d.index(w) for w in words]
    return d.adj[np.ix_(idx, idx)].tolist()


# ---------------------------------------------------------------------------
# full digraph
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("m,expected", [(2, 10), (3, 26), (5, 242)])
def test_full_vertex_counts(m, expected):
    assert len(tr.build_full(m, with_matrix=False)) == expected


def test_full_vertex_order_and_arcs():
    d = tr.build_full(2)
    assert d.vertices[0] == "bb"
    assert list(d.vertices[1:]) == sorted(d.vertices[1:])
    # arc rule: outlet(v) = inlet(u)
    for i, v in enumerate(d.vertices):
        for j, u in enumerate(d.vertices):
            assert d.adj[i, j] == (al.outlet(v) == al.inlet(u))


@pytest.mark.parametrize("m", range(1, 6))
def test_every_vertex_has_an_out_arc(m):
    d = tr.build_full(m, with_matrix=False)
    assert all(succ for succ in d.successor_lists())


def test_full_matrix_limit():
    with pytest.raises(tr.ResourceLimitError):
        tr.build_full(9, with_matrix=True)


# ---------------------------------------------------------------------------
# reduced digraph
# ---------------------------------------------------------------------------


def test_reduced_m2_component_matrices():
    d = tr.build_reduced(2)
    assert d.vertices[0] == "00"
    assert reindex(d, ["00", "11"]) == [[1, 2], [2, 1]]
    assert reindex(d, ["10", "01"]) == [[0, 2], [2, 0]]


def test_reduced_m3_component_matrix():
    d = tr.build_reduced(3)
    expected = [[1, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
    assert reindex(d, ["000", "101", "011", "110"]) == expected
    assert reindex(d, ["111", "001", "100", "010"]) == expected


def test_reduced_m4_zero_component_matrix():
    d = tr.build_reduced(4)
    order = ["0000", "1111", "0011", "0110", "1100", "1001"]
    expected = [
        [1, 2, 1, 1, 1, 1],
        [2, 1, 1, 1, 1, 1],
        [1, 1, 0, 1, 2, 1],
        [1, 1, 1, 0, 1, 2],
        [1, 1, 2, 1, 0, 1],
        [1, 1, 1, 2, 1, 0],
    ]
    assert reindex(d, order) == expected


@pytest.mark.parametrize("m", range(1, 11))
def test_reduced_counts(m):
    d = tr.build_reduced(m)
    assert len(d) == 2**m
    assert tr.reduced_edge_total(d) == 3**m + (-1) ** m


@pytest.mark.parametrize("m", range(1, 11))
def test_reduced_symmetry(m):
    d = tr.build_reduced(m)
    assert np.array_equal(d.adj, d.adj.T)


def test_reduced_limit():
    with pytest.raises(tr.ResourceLimitError):
        tr.build_reduced(tr.REDUCED_DENSE_LIMIT + 1)


# ---------------------------------------------------------------------------
# rotation / conversion relations
# ---------------------------------------------------------------------------


def test_rotation_cycle_m4():
    d = tr.build_reduced(4)
    rot = tr.rotation_matrix(d)
    cycle = ["0011", "0110", "1100", "1001"]
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert rot.perm[d.index(a)] == d.index(b)


@pytest.mark.parametrize("m", range(2, 11))
def test_relation_properties(m):
    d = tr.build_reduced(m)
    rot = tr.rotation_matrix(d)
    conv = tr.hconversion_matrix(d)
    zero, ones = d.index("0" * m), d.index("1" * m)
    assert rot.perm[zero] == zero and rot.perm[ones] == ones
    assert conv.perm[zero] == zero and conv.perm[ones] == ones
    # rotation has order dividing m; conversion is an involution
    idx = np.arange(len(d))
    acc = idx
    for _ in range(m):
        acc = rot.perm[acc]
    assert np.array_equal(acc, idx)
    assert np.array_equal(conv.perm[conv.perm], idx)


def test_relation_matrices_shapes():
    d = tr.build_reduced(3)
    rot = tr.rotation_matrix(d)
    conv = tr.hconversion_matrix(d)
    assert rot.matrix.sum() == len(d)  # permutation matrix
    assert np.array_equal(conv.matrix, conv.matrix.T)


@pytest.mark.parametrize("m", range(2, 9))
def test_rotation_is_an_automorphism(m):
    d = tr.build_reduced(m)
    perm = tr.rotation_matrix(d).perm
    assert np.array_equal(d.adj[np.ix_(perm, perm)], d.adj)


def test_full_hconversion_relation():
    d = tr.build_full(3)
    conv = tr.hconversion_matrix(d)
    for i, w in enumerate(d.vertices):
        assert d.vertices[conv.perm[i]] == al.horizontal_convert(w)


# ---------------------------------------------------------------------------
# components
# ---------------------------------------------------------------------------


def test_components_m4():
    d = tr.build_reduced(4)
    census = tr.components(d)
    assert census.zero_id == census.ones_id
    assert census.sizes[census.zero_id] == 6
    assert census.rest_sizes() == [8, 2]


def test_components_m5():
    census = tr.components(tr.build_reduced(5))
    assert census.n_components == 2
    assert sorted(census.sizes) == [16, 16]
    assert census.zero_id != census.ones_id


@pytest.mark.parametrize("m", [2, 4, 6, 8, 10])
def test_even_component_sizes_are_binomial(m):
    census = tr.components(tr.build_reduced(m))
    assert census.n_components == m // 2 + 1
    assert census.sizes[census.ones_id] == math.comb(m, m // 2)
    assert census.rest_sizes() == [
        2 * math.comb(m, m // 2 - s) for s in range(1, m // 2 + 1)
    ]


@pytest.mark.parametrize("m", [3, 5, 7])
def test_odd_components_isomorphic_under_complement(m):
    d = tr.build_reduced(m)
    census = tr.components(d)
    assert census.zero_id != census.ones_id
    zero = census.members(census.zero_id)
    flip = str.maketrans("01", "10")
    image = [d.index(d.vertices[i].translate(flip)) for i in zero]
    assert sorted(census.labels[i] for i in image) == [census.ones_id] * len(image)
    assert np.array_equal(d.adj[np.ix_(zero, zero)], d.adj[np.ix_(image, image)])


@pytest.mark.parametrize("m", range(2, 9))
def test_full_and_reduced_parity_split(m):
    full_census = tr.components(tr.build_full(m, with_matrix=False))
    assert (full_census.zero_id == full_census.ones_id) == (m % 2 == 0)


# ---------------------------------------------------------------------------
# glued digraph
# ---------------------------------------------------------------------------


def test_glued_m4_exact():
    g = tr.build_glued(4)
    assert g.vertices == ("0000", "1111", "0011")
    assert g.adj.tolist() == [[1, 2, 4], [2, 1, 4], [1, 1, 4]]


def test_glued_m2():
    g = tr.build_glued(2)
    assert g.vertices == ("00", "11")


@pytest.mark.parametrize(
    "m,expected", [(2, 2), (3, 2), (4, 3), (5, 4), (6, 6), (7, 9), (8, 11)]
)
def test_glued_sizes(m, expected):
    assert len(tr.build_glued(m)) == expected


@pytest.mark.parametrize("m", range(2, 11))
def test_zero_component_closure(m):
    words = tr.zero_component_words(m)
    for w in words:
        assert w[::-1] in words
        assert al.rotate(w, 1) in words


# ---------------------------------------------------------------------------
# column sets, serialization
# ---------------------------------------------------------------------------


def test_column_sets_m2():
    first, last = tr.column_sets(2)
    assert set(first) == {"bb", "ac", "ca"}
    assert set(last) == {"bb", "df", "fd"}


@pytest.mark.parametrize("m,expected", [(4, 7), (10, 123)])
def test_column_set_sizes(m, expected):
    first, last = tr.column_sets(m)
    assert len(first) == len(last) == expected == tr.lucas(m)


def test_json_serialization_roundtrip():
    d = tr.build_reduced(3)
    doc = json.loads(json.dumps(d.to_json_dict()))
    assert doc["kind"] == "reduced" and doc["m"] == 3
    assert doc["vertices"] == list(d.vertices)
    assert doc["adj"] == [int(x) for x in d.adj.reshape(-1)]
    with pytest.raises(tr.ResourceLimitError):
        tr.build_full(9, with_matrix=False).to_json_dict()
