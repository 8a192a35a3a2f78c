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

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from canopy.errors import NoSupport
from canopy.harness import generate_tree
from canopy.protocols import (
    GradedValue,
    Schedule,
    Supported,
    decode_supported,
    plan_iterations,
    run_fox_path_finder,
    run_legacy_path_finder,
    supported_prefix,
)
from canopy.protocols.codec import decode_path, encode_path
from canopy.protocols.path_select import PATHS_EVENT
from canopy.tree import TreePath, convex_hull, euler_list, is_prefix, longest_common_prefix, path_between

from .conftest import ADVERSARIES, FULL_MATRIX, MATRIX, attack, seeds, simulate


def entries(*paths, grade=2):
    return {s: Supported(TreePath(p) if p else None, grade if p else 0) for s, p in enumerate(paths, start=1)}


def test_supported_prefix_examples():
    ab = ("a", "b")
    assert supported_prefix(entries(ab, ab, ab, ab), 2, 3) == TreePath(ab)
    assert supported_prefix(entries(("a", "b", "c"), ("a", "b", "c"), ("a", "b", "d"), ("a",)), 2, 3) == TreePath(ab)
    assert supported_prefix(entries(ab, ab, ab, None), 2, 3) == TreePath(ab)


def test_supported_prefix_respects_grades():
    paths = entries(("a", "b"), ("a", "b"), ("a",))
    paths[4] = Supported(TreePath.of("a", "b"), 1)

    assert supported_prefix(paths, 2, 3) == TreePath.of("a")
    assert supported_prefix(paths, 1, 3) == TreePath.of("a", "b")

    with pytest.raises(NoSupport):
        supported_prefix(entries(None, None, ("a",)), 2, 3)


def test_path_payload_with_long_label():
    labels = ("root", "é" * 40_000, "leaf")
    assert decode_path(encode_path(labels)) == labels


def test_decode_supported(eight_tree):
    graded = {
        1: GradedValue(encode_path(("v1", "v2", "v3")), 2),
        2: GradedValue(encode_path(("v1", "v2")), 1),
        3: GradedValue(encode_path(("v2", "v3")), 2),
        4: GradedValue(encode_path(("v1", "v3")), 2),
        5: GradedValue(b"\xff\xff", 2),
        6: GradedValue(None, 0),
        7: GradedValue(encode_path(("v1", "zz")), 2),
    }
    paths = decode_supported(eight_tree, graded)

    assert paths[1] == Supported(TreePath.of("v1", "v2", "v3"), 2)
    assert paths[2] == Supported(TreePath.of("v1", "v2"), 1)
    assert all(paths[s] == Supported(None, 0) for s in (3, 4, 5, 6, 7))


def test_fox_unanimous(eight_tree):
    outputs, tr = simulate(run_fox_path_finder, 4, 1, {p: "v7" for p in range(1, 5)}, tree=eight_tree)
    expected = TreePath.of("v1", "v2", "v3", "v7")

    assert tr.rounds == 3
    assert set(outputs.values()) == {(expected, expected)}


def test_fox_two_inputs(eight_tree):
    inputs = {1: "v6", 2: "v6", 3: "v8", 4: "v8"}
    outputs, _ = simulate(run_fox_path_finder, 4, 1, inputs, tree=eight_tree)
    assert set(outputs.values()) == {(TreePath.of("v1", "v2"), TreePath.of("v1", "v2"))}


def check_fox(tree, inputs, outputs, tr):
    assert tr.rounds == 3
    honest = {p: inputs[p] for p in outputs}
    hull = convex_hull(tree, honest.values())

    common = None
    for v in honest.values():
        mine = path_between(tree, tree.root, v)
        common = mine if common is None else longest_common_prefix(common, mine)

    for p, (pp, qq) in outputs.items():
        assert hull & set(pp)
        assert is_prefix(common, pp)
        assert [e.data["p"] for e in tr.events_named(p, PATHS_EVENT)] == [pp.vertices]
        for _, q_other in outputs.values():
            assert is_prefix(pp, q_other)


@pytest.mark.slow
@pytest.mark.parametrize("n, t", MATRIX)
@pytest.mark.parametrize("name", ADVERSARIES)
def test_fox_registry(name, n, t):
    for seed in seeds(5, 50):
        tree = generate_tree("random", 30, seed)
        rng = random.Random(seed)
        inputs = {p: rng.choice(sorted(tree.vertices)) for p in range(1, n + 1)}
        adversary = attack(name, n, t, tree, Schedule([("path", 0)]))

        outputs, tr = simulate(run_fox_path_finder, n, t, inputs, adversary, seed, tree=tree)
        check_fox(tree, inputs, outputs, tr)


def test_legacy_unanimous(eight_tree):
    outputs, tr = simulate(run_legacy_path_finder, 4, 1, {p: "v8" for p in range(1, 5)}, tree=eight_tree)

    assert set(outputs.values()) == {TreePath.of("v1", "v2", "v4", "v8")}
    assert tr.rounds == 3 * plan_iterations(4, 1, 2 * eight_tree.order, 1)


def test_legacy_walkthrough(eight_tree):
    inputs = {1: "v3", 2: "v6", 3: "v5", 4: "v1"}
    outputs, tr = simulate(run_legacy_path_finder, 4, 1, inputs, attack("silent", 4, 1), tree=eight_tree)
    euler = euler_list(eight_tree, "v1")

    for p, path in outputs.items():
        (event,) = tr.events_named(p, PATHS_EVENT)
        assert event.data["index"] == euler.first_index(inputs[p])
        assert 3 <= event.data["landed"] <= 13
        assert path.last == euler.at(event.data["landed"])
        assert "v2" in path


def check_legacy(tree, inputs, outputs):
    honest = {p: inputs[p] for p in outputs}
    hull = convex_hull(tree, honest.values())
    paths = sorted(outputs.values(), key=len)

    for path in paths:
        assert hull & set(path)
    assert len(paths[-1]) - len(paths[0]) <= 1
    for short in paths:
        for long in paths:
            if len(short) <= len(long):
                assert is_prefix(short, long)


@pytest.mark.slow
@pytest.mark.parametrize("n, t", MATRIX)
@pytest.mark.parametrize("name", ADVERSARIES)
def test_legacy_registry(name, n, t):
    for seed in seeds(3, 50):
        tree = generate_tree("random", 30, seed)
        rng = random.Random(seed)
        inputs = {p: rng.choice(sorted(tree.vertices)) for p in range(1, n + 1)}
        plan = plan_iterations(n, t, 2 * tree.order, 1)
        adversary = attack(name, n, t, tree, Schedule([("real", i) for i in range(1, plan + 1)]))

        outputs, tr = simulate(run_legacy_path_finder, n, t, inputs, adversary, seed, tree=tree)
        assert tr.rounds == 3 * plan
        check_legacy(tree, inputs, outputs)


@settings(max_examples=300 if FULL_MATRIX else 50, deadline=None)
@given(st.integers(2, 40), st.integers(0, 2**16), st.data())
def test_landing_paths_meet_the_hull(size, seed, data):
    tree = generate_tree("random", size, seed)
    euler = euler_list(tree, tree.root)
    members = data.draw(st.lists(st.sampled_from(sorted(tree.vertices)), min_size=1, max_size=5))
    hull = convex_hull(tree, members)
    indices = [euler.first_index(v) for v in members]

    for c in range(min(indices), max(indices) + 1):
        assert hull & set(path_between(tree, tree.root, euler.at(c)))
