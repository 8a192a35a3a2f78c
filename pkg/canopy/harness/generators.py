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

from __future__ import annotations

import math
import random

import networkx as nx

from canopy.errors import InvalidParams, UnknownName
from canopy.tree import LabeledTree
from canopy.utils import search

GENERATORS = {}


def generator(kind):
    def decorator(func):
        GENERATORS[kind] = func
        return func

    return decorator


def _labels(prefix, count):
    # Zero padding keeps label order equal to numeric order.
    width = len(str(max(count - 1, 0)))
    return [f"{prefix}{i:0{width}}" for i in range(count)]


@generator("path")
def _path(size, rng):
    vs = _labels("p", size + 1)
    return vs, list(zip(vs, vs[1:]))


@generator("star")
def _star(size, rng):
    leaves = _labels("l", size)
    return ["c"], [("c", leaf) for leaf in leaves]


@generator("caterpillar")
def _caterpillar(size, rng):
    spine = _labels("s", max(1, math.isqrt(size)))
    legs = _labels("g", size - len(spine))
    edges = list(zip(spine, spine[1:]))
    edges.extend((spine[rng.randrange(len(spine))], leg) for leg in legs)
    return spine, edges


@generator("binary")
def _binary(size, rng):
    vs = _labels("b", size)
    # Heap order: vertex i hangs below vertex (i - 1) // 2.
    return vs, [(vs[(i - 1) // 2], vs[i]) for i in range(1, size)]


@generator("random")
def _random(size, rng):
    vs = _labels("r", size)
    if size < 3:
        return vs, list(zip(vs, vs[1:]))

    graph = nx.from_prufer_sequence([rng.randrange(size) for _ in range(size - 2)])
    return vs, [(vs[u], vs[v]) for u, v in sorted(graph.edges())]


def generate_tree(kind, size, seed=0):
    if kind not in GENERATORS:
        raise UnknownName("tree generator", kind, search.suggestions(kind, sorted(GENERATORS)))
    if size < 1:
        raise InvalidParams(f"a {kind} tree needs size >= 1, got {size}")

    vertices, edges = GENERATORS[kind](size, random.Random(seed))
    return LabeledTree.from_edges(vertices, edges)


def parse_generator_spec(spec):
    """``kind:size[:seed]``, for example ``random:200:7``."""
    kind, _, rest = spec.partition(":")
    size, _, seed = rest.partition(":")
    try:
        return kind, int(size), int(seed or 0)
    except ValueError:
        raise InvalidParams(f"generator spec {spec!r} should look like kind:size[:seed]") from None
