import json

import pytest
from hypothesis import given

from treeswitch.tree import (
    BadEdge,
    BadRole,
    BadVertex,
    InvalidSwitch,
    NotATree,
    apply_2switch,
    build_tree,
    canonical_form,
    degree_sequence,
    path,
    postorder,
    rooted,
    star,
    subdivide_edge,
    sun,
    tree_from_json,
)

from conftest import trees


def test_build_normalizes_edges():
    t = build_tree(3, [(1, 0), (2, 1)])
    assert t.sorted_edges() == [(0, 1), (1, 2)]
    assert t.neighbors(1) == (0, 2)
    assert t.degree(1) == 2 and t.max_degree == 2


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (0, [], NotATree),
        (3, [(0, 1)], NotATree),
        (3, [(0, 1), (0, 1)], NotATree),
        (3, [(0, 0), (1, 2)], NotATree),
        (4, [(0, 1), (1, 2), (2, 0)], NotATree),
        (3, [(0, 1), (1, 3)], BadVertex),
        (3, [(0, 1), (-1, 2)], BadVertex),
    ],
)
def test_build_rejects(n, edges, exc):
    with pytest.raises(exc):
        build_tree(n, edges)


def test_roles():
    t = build_tree(2, [(0, 1)], {"u": 1})
    assert t.role("u") == 1
    with pytest.raises(BadRole):
        build_tree(2, [(0, 1)], {"hub": 0})
    with pytest.raises(BadRole):
        build_tree(2, [(0, 1)], {"u": 5})


@given(trees())
def test_json_round_trip(t):
    assert tree_from_json(t.to_json()) == t
    assert json.loads(t.to_json())["n"] == t.n


def test_postorder_children_ascending():
    t = star(3)
    assert postorder(t, 0) == [1, 2, 3, 0]
    order, parent = rooted(path(4), 2)
    assert order[-1] == 2 and parent[2] == -1 and parent[0] == 1


@given(trees(min_n=2))
def test_postorder_visits_children_first(t):
    order, parent = rooted(t, 0)
    pos = {v: i for i, v in enumerate(order)}
    assert sorted(order) == list(range(t.n))
    assert all(pos[v] < pos[parent[v]] for v in range(t.n) if parent[v] >= 0)


def test_2switch_on_path():
    # P6: remove 1-2 and 3-4, add 1-3 and 2-4 -> 0-1-3-2-4-5
    t = apply_2switch(path(6), (1, 2), (3, 4))
    assert degree_sequence(t) == degree_sequence(path(6))
    assert t.has_edge(1, 3) and t.has_edge(2, 4) and not t.has_edge(1, 2)


def test_2switch_errors():
    p = path(6)
    with pytest.raises(InvalidSwitch):
        apply_2switch(p, (0, 1), (1, 2))
    with pytest.raises(InvalidSwitch):
        apply_2switch(p, (0, 2), (3, 4))
    with pytest.raises(NotATree):
        # 1-3 closes the cycle 1-2-3 and leaves {0, 4, 5} cut off
        apply_2switch(p, (0, 1), (4, 3))


def test_subdivide():
    t = subdivide_edge(path(2), (1, 0))
    assert t.n == 3 and canonical_form(t, 0) == canonical_form(path(3), 0)
    with pytest.raises(BadEdge):
        subdivide_edge(path(3), (0, 2))


def test_sun_shape():
    s = sun(3)
    assert s.n == 7 and s.degree(0) == 3
    assert degree_sequence(s) == [3, 2, 2, 2, 1, 1, 1]


@given(trees(min_n=2))
def test_canonical_form_is_label_free(t):
    perm = list(reversed(range(t.n)))
    relabeled = build_tree(t.n, [(perm[a], perm[b]) for a, b in t.edges])
    assert canonical_form(relabeled, perm[0]) == canonical_form(t, 0)
