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

import functools
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType
from typing import Mapping, NamedTuple

from canopy.errors import (
    CycleDetected,
    Disconnected,
    DuplicateEdge,
    EmptyInput,
    EmptySet,
    MalformedLine,
    UnknownVertex,
)
from canopy.tree.paths import TreePath


@dataclass(frozen=True)
class LabeledTree:
    vertices: frozenset[str]
    edges: frozenset[frozenset[str]]
    adjacency: Mapping[str, tuple[str, ...]] = field(compare=False, hash=False, repr=False)

    @classmethod
    def from_edges(cls, vertices, pairs):
        vertices = frozenset(vertices) | {v for pair in pairs for v in pair}
        if not vertices:
            raise EmptyInput()

        parent = {v: v for v in vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        edges = set()
        adjacency = {v: [] for v in vertices}
        for u, v in pairs:
            if (edge := frozenset((u, v))) in edges:
                raise DuplicateEdge(u, v)
            if u == v or (ru := find(u)) == (rv := find(v)):
                raise CycleDetected(u, v)

            parent[ru] = rv
            edges.add(edge)
            adjacency[u].append(v)
            adjacency[v].append(u)

        if (components := len({find(v) for v in vertices})) > 1:
            raise Disconnected(components)

        return cls(
            vertices,
            frozenset(edges),
            MappingProxyType({v: tuple(sorted(ns)) for v, ns in adjacency.items()}),
        )

    @property
    def root(self):
        # Also the start vertex of every exchanged path.
        return min(self.vertices)

    @property
    def order(self):
        return len(self.vertices)

    def neighbours(self, v):
        try:
            return self.adjacency[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v):
        return len(self.neighbours(v))

    def adjacent(self, u, v):
        return v in self.neighbours(u)

    def require(self, *labels):
        for v in labels:
            if v not in self.adjacency:
                raise UnknownVertex(v)

    def __contains__(self, v):
        return v in self.adjacency

    def __repr__(self):
        return f"<LabeledTree vertices={self.order!r} edges={len(self.edges)!r} root={self.root!r}>"


class Rooting(NamedTuple):
    root: str
    parent: Mapping[str, str | None]
    depth: Mapping[str, int]
    order: tuple[str, ...]


@functools.lru_cache(maxsize=256)
def rooted(tree, root):
    tree.require(root)
    parent, depth, order = {root: None}, {root: 0}, [root]
    queue = deque([root])

    while queue:
        v = queue.popleft()
        for w in tree.neighbours(v):
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                order.append(w)
                queue.append(w)

    return Rooting(root, MappingProxyType(parent), MappingProxyType(depth), tuple(order))


def parse_tree(text):
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if (line := raw.strip()) and not line.startswith("#"):
            lines.append((lineno, line.split()))

    if not lines:
        raise EmptyInput()

    # A lone label is only a tree when it is the whole document.
    if len(lines) == 1 and len(tokens := lines[0][1]) == 1:
        return LabeledTree.from_edges(tokens, [])

    pairs = []
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise MalformedLine(lineno, " ".join(tokens))
        pairs.append(tuple(tokens))

    return LabeledTree.from_edges((), pairs)


def format_tree(tree):
    if not tree.edges:
        return f"{tree.root}\n"

    pairs = sorted(tuple(sorted(e)) for e in tree.edges)
    return "".join(f"{u} {v}\n" for u, v in pairs)


def path_between(tree, u, v):
    tree.require(u, v)
    r = rooted(tree, tree.root)
    up, down = [u], [v]
    a, b = u, v

    while r.depth[a] > r.depth[b]:
        up.append(a := r.parent[a])
    while r.depth[b] > r.depth[a]:
        down.append(b := r.parent[b])
    while a != b:
        up.append(a := r.parent[a])
        down.append(b := r.parent[b])

    # Both walks end on the lowest common ancestor.
    return TreePath(tuple(up) + tuple(reversed(down[:-1])))


def distance(tree, u, v):
    return path_between(tree, u, v).length


def convex_hull(tree, s):
    if not (members := set(s)):
        raise EmptySet()
    tree.require(*sorted(members))

    r = rooted(tree, min(members))
    below = dict.fromkeys(r.order, 0)
    for v in reversed(r.order):
        below[v] += v in members
        if (p := r.parent[v]) is not None:
            below[p] += below[v]

    # Rooted at a member, a vertex is in the hull iff its subtree holds one.
    return frozenset(v for v, count in below.items() if count)


def project_onto_path(tree, p, v):
    p.validate(tree)
    tree.require(v)
    on_path = set(p.vertices)

    # The first path vertex reached by BFS is the unique closest one.
    seen = {v}
    queue = deque([v])
    while queue:
        if (w := queue.popleft()) in on_path:
            return w
        for x in tree.neighbours(w):
            if x not in seen:
                seen.add(x)
                queue.append(x)

    raise UnknownVertex(v)  # pragma: no cover


def _farthest(tree, source):
    r = rooted(tree, source)
    return max(r.order, key=lambda w: r.depth[w]), r


def diameter_path(tree):
    a, _ = _farthest(tree, tree.root)
    b, _ = _farthest(tree, a)
    return path_between(tree, min(a, b), max(a, b))


def diameter(tree):
    a, _ = _farthest(tree, tree.root)
    b, r = _farthest(tree, a)
    return r.depth[b]


def is_path_graph(tree):
    return all(len(ns) <= 2 for ns in tree.adjacency.values())


def max_pairwise_distance(tree, labels):
    return max((distance(tree, u, v) for u, v in combinations(sorted(set(labels)), 2)), default=0)
