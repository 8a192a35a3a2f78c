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

import os
import random

import networkx as nx
import pytest

from canopy.config import Config
from canopy.harness import AttackSetting, registry
from canopy.net import ProtocolParty, run_simulation
from canopy.protocols import Schedule
from canopy.tree import LabeledTree, parse_tree

FULL_MATRIX = os.getenv("CANOPY_FULL_MATRIX", "") == "1"
SLACK = Config.REAL_SLACK
MATRIX = [(4, 1), (7, 2), (10, 3)]
ADVERSARIES = registry().names

EIGHT_TREE = """
# The small tree used for the Euler-list walk-through.
v1 v2
v2 v3
v3 v6
v3 v7
v2 v4
v4 v8
v2 v5
"""

# Hull of {u1, u2, u3} is {u1, ..., u5}; w1 and w2 hang outside it.
HULL_TREE = """
u1 u4
u4 u2
u4 u5
u5 u3
u5 w1
u1 w2
"""

# Path v1..v8 with u1, u2, u3 projecting onto v3, v4, v6.
PROJECTION_TREE = """
v1 v2
v2 v3
v3 v4
v4 v5
v5 v6
v6 v7
v7 v8
v3 a1
a1 u1
v4 u2
v6 a3
a3 u3
"""


def seeds(default, full):
    return range(full if FULL_MATRIX else default)


def to_nx(tree):
    graph = nx.Graph()
    graph.add_nodes_from(tree.vertices)
    graph.add_edges_from(tuple(e) for e in tree.edges)
    return graph


def simulate(protocol, n, t, inputs, adversary=None, seed=0, round_cap=1_000, **params):
    return run_simulation(n, t, lambda p: ProtocolParty(protocol, **params), inputs, adversary, seed, round_cap)


def attack(name, n, t, tree=None, schedule=None):
    tree = tree or LabeledTree.from_edges(["x"], [])
    return registry().create(name, AttackSetting(n, t, tree, schedule or Schedule([])))


def real_schedule(iterations):
    return Schedule([("real", i) for i in range(1, iterations + 1)])


@pytest.fixture()
def eight_tree():
    return parse_tree(EIGHT_TREE)


@pytest.fixture()
def hull_tree():
    return parse_tree(HULL_TREE)


@pytest.fixture()
def projection_tree():
    return parse_tree(PROJECTION_TREE)


@pytest.fixture()
def rng():
    return random.Random(1234)
