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

from dataclasses import dataclass

from canopy.errors import DistinctStart, InvalidPath, UnknownVertex


@dataclass(frozen=True)
class TreePath:
    """An ordered simple path, stored as its vertex labels.

    Whether consecutive vertices are adjacent depends on the tree the path
    lives in, so that part is only checked by ``validate``.
    """

    vertices: tuple[str, ...]

    def __post_init__(self):
        if not self.vertices:
            raise InvalidPath("a path needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidPath("a vertex is repeated")

    @classmethod
    def of(cls, *vertices):
        return cls(tuple(vertices))

    @property
    def first(self):
        return self.vertices[0]

    @property
    def last(self):
        return self.vertices[-1]

    @property
    def length(self):
        # Edge count.
        return len(self.vertices) - 1

    def validate(self, tree):
        for v in self.vertices:
            if v not in tree:
                raise UnknownVertex(v)

        for u, v in zip(self.vertices, self.vertices[1:]):
            if not tree.adjacent(u, v):
                raise InvalidPath(f"{u} and {v} are not adjacent")

        return self

    def append(self, vertex):
        return TreePath(self.vertices + (vertex,))

    def prefix(self, k):
        return TreePath(self.vertices[:k])

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, index):
        return self.vertices[index]

    def __str__(self):
        return "(" + ", ".join(self.vertices) + ")"

    def __repr__(self):
        return f"<TreePath vertices={self.vertices!r}>"


def is_prefix(p, q):
    return len(p) <= len(q) and q.vertices[: len(p)] == p.vertices


def longest_common_prefix(p, q):
    if p.first != q.first:
        raise DistinctStart(p.first, q.first)

    k = 1
    for a, b in zip(p.vertices[1:], q.vertices[1:]):
        if a != b:
            break
        k += 1

    return p.prefix(k)
