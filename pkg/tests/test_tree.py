# Canopy - Byzantine approximate agreement on trees, with a lockstep network simulator.
# Copyright (C) 2024-present  Canopy contributors

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from canopy.errors import (
    CycleDetected,
    Disconnected,
    DistinctStart,
    DuplicateEdge,
    EmptyInput,
    EmptySet,
    InvalidPath,
    MalformedLine,
    UnknownVertex,
)
from canopy.harness import generate_tree
from canopy.tree import (
    TreePath,
    convex_hull,
    diameter,
    diameter_path,
    distance,
    euler_list,
    format_tree,
    is_path_graph,
    is_prefix,
    longest_common_prefix,
    max_pairwise_distance,
    parse_tree,
    path_between,
    project_onto_path,
)

from .conftest import FULL_MATRIX, to_nx

random_trees = st.builds(generate_tree, st.just("random"), st.integers(1, 60), st.integers(0, 2**16))
tree_settings = settings(max_examples=500 if FULL_MATRIX else 60, deadline=None)


@pytest.mark.parametrize(
    "text, error",
    [
        ("", EmptyInput),
        ("# nothing here\n\n", EmptyInput),
        ("a b\na b\n", DuplicateEdge),
        ("a b\nb a\n", DuplicateEdge),
        ("a b\nb c\nc a\n", CycleDetected),
        ("a a\n", CycleDetected),
        ("a b\nc d\n", Disconnected),
        ("a b c\n", MalformedLine),
        ("a\nb c\n", MalformedLine),
    ],
)
def test_parse_rejects(text, error):
    with pytest.raises(error):
        parse_tree(text)


def test_parse_single_vertex():
    tree = parse_tree("# one vertex\nsolo\n")
    assert tree.vertices == {"solo"}
    assert not tree.edges
    assert diameter(tree) == 0
    assert diameter_path(tree) == TreePath.of("solo")


def test_parse_and_format(eight_tree):
    assert eight_tree.order == 8
    assert eight_tree.root == "v1"
    assert eight_tree.neighbours("v2") == ("v1", "v3", "v4", "v5")
    assert parse_tree(format_tree(eight_tree)) == eight_tree

    with pytest.raises(UnknownVertex):
        eight_tree.neighbours("v9")


def test_path_between(eight_tree):
    assert path_between(eight_tree, "v6", "v8") == TreePath.of("v6", "v3", "v2", "v4", "v8")
    assert path_between(eight_tree, "v8", "v6") == TreePath.of("v8", "v4", "v2", "v3", "v6")
    assert path_between(eight_tree, "v7", "v7") == TreePath.of("v7")
    assert distance(eight_tree, "v6", "v7") == 2

    with pytest.raises(UnknownVertex):
        path_between(eight_tree, "v1", "zz")


def test_convex_hull(hull_tree):
    assert convex_hull(hull_tree, {"u1", "u2", "u3"}) == {"u1", "u2", "u3", "u4", "u5"}
    assert convex_hull(hull_tree, ["u2"]) == {"u2"}

    with pytest.raises(EmptySet):
        convex_hull(hull_tree, [])
    with pytest.raises(UnknownVertex):
        convex_hull(hull_tree, ["u1", "nope"])


def test_project_onto_path(projection_tree):
    line = path_between(projection_tree, "v1", "v8")
    assert project_onto_path(projection_tree, line, "u1") == "v3"
    assert project_onto_path(projection_tree, line, "u2") == "v4"
    assert project_onto_path(projection_tree, line, "u3") == "v6"
    assert project_onto_path(projection_tree, line, "v5") == "v5"

    with pytest.raises(InvalidPath):
        project_onto_path(projection_tree, TreePath.of("v1", "v3"), "u1")


def test_diameter(eight_tree, projection_tree):
    ends = diameter_path(eight_tree)
    assert ends.length == diameter(eight_tree) == 4
    assert {eight_tree.degree(ends.first), eight_tree.degree(ends.last)} == {1}
    assert ends.first < ends.last

    assert diameter(projection_tree) == 7
    assert not is_path_graph(projection_tree)
    assert is_path_graph(generate_tree("path", 12))


def test_tree_path_rules(eight_tree):
    with pytest.raises(InvalidPath):
        TreePath(())
    with pytest.raises(InvalidPath):
        TreePath.of("v1", "v2", "v1")
    with pytest.raises(UnknownVertex):
        TreePath.of("v1", "x").validate(eight_tree)

    p = TreePath.of("v1", "v2", "v3")
    assert p.validate(eight_tree) is p
    assert p.append("v6").last == "v6"
    assert p.prefix(2) == TreePath.of("v1", "v2")
    assert p.length == 2 and len(p) == 3
    assert str(p) == "(v1, v2, v3)"


def test_prefixes():
    p = TreePath.of("v1", "v2", "v3", "v6")
    q = TreePath.of("v1", "v2", "v4")

    assert is_prefix(TreePath.of("v1", "v2"), p)
    assert is_prefix(p, p)
    assert not is_prefix(q, p)
    assert not is_prefix(p, p.prefix(3))
    assert longest_common_prefix(p, q) == TreePath.of("v1", "v2")
    assert longest_common_prefix(p, p) == p

    with pytest.raises(DistinctStart):
        longest_common_prefix(p, TreePath.of("v2", "v1"))


def test_euler_list_walkthrough(eight_tree):
    euler = euler_list(eight_tree, "v1")
    assert list(euler.entries) == [
        "v1", "v2", "v3", "v6", "v3", "v7", "v3", "v2", "v4", "v8", "v4", "v2", "v5", "v2", "v1",
    ]  # fmt: skip
    assert euler.index_of["v3"] == (3, 5, 7)
    assert euler.index_of["v6"] == (4,)
    assert euler.index_of["v5"] == (13,)
    assert euler.first_index("v3") == 3
    assert euler.span("v2") == (2, 14)
    assert euler.at(10) == "v8"


def test_euler_list_single_vertex():
    euler = euler_list(parse_tree("x"), "x")
    assert euler.entries == ("x",)
    assert euler.index_of == {"x": (1,)}


@tree_settings
@given(random_trees)
def test_euler_list_properties(tree):
    graph = to_nx(tree)
    root = tree.root
    euler = euler_list(tree, root)
    below = nx.bfs_tree(graph, root)
    depth = nx.single_source_shortest_path_length(graph, root)

    assert len(euler) == 2 * tree.order - 1
    assert set(euler.entries) == tree.vertices
    assert all(graph.has_edge(a, b) for a, b in zip(euler.entries, euler.entries[1:]))

    for v in tree.vertices:
        lo, hi = euler.span(v)
        subtree = nx.descendants(below, v) | {v}
        for u in tree.vertices:
            inside = all(lo <= i <= hi for i in euler.index_of[u])
            assert inside == (u in subtree)

    ancestors = {v: nx.ancestors(below, v) | {v} for v in tree.vertices}
    for u, v in combinations(sorted(tree.vertices), 2):
        lca = max(ancestors[u] & ancestors[v], key=depth.__getitem__)
        for i in euler.index_of[u]:
            for j in euler.index_of[v]:
                lo, hi = min(i, j), max(i, j)
                assert any(lo <= k <= hi for k in euler.index_of[lca])


@tree_settings
@given(random_trees, st.data())
def test_against_networkx(tree, data):
    graph = to_nx(tree)
    labels = sorted(tree.vertices)
    members = data.draw(st.lists(st.sampled_from(labels), min_size=1, max_size=6))

    hull = set()
    for u in members:
        for v in members:
            hull.update(nx.shortest_path(graph, u, v))
    assert convex_hull(tree, members) == hull

    u, v = members[0], members[-1]
    path = path_between(tree, u, v)
    assert path.vertices == tuple(nx.shortest_path(graph, u, v))
    assert path.validate(tree).length == nx.shortest_path_length(graph, u, v)

    if tree.order > 1:
        assert diameter(tree) == nx.diameter(graph)
    assert max_pairwise_distance(tree, members) == max(
        nx.shortest_path_length(graph, a, b) for a in members for b in members
    )

    line = diameter_path(tree)
    w = data.draw(st.sampled_from(labels))
    proj = project_onto_path(tree, line, w)
    lengths = nx.single_source_shortest_path_length(graph, w)
    assert lengths[proj] == min(lengths[x] for x in line)
