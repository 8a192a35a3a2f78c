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
from typing import Mapping


@dataclass(frozen=True)
class EulerList:
    """DFS visit sequence of a rooted tree, with every visit recorded.

    Indices are 1-based throughout, matching how parties exchange them.
    """

    entries: tuple[str, ...]
    index_of: Mapping[str, tuple[int, ...]]

    def at(self, i):
        return self.entries[i - 1]

    def first_index(self, v):
        return self.index_of[v][0]

    def span(self, v):
        return self.index_of[v][0], self.index_of[v][-1]

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return f"<EulerList entries={len(self.entries)!r} root={self.entries[0]!r}>"


def euler_list(tree, root):
    tree.require(root)
    entries = [root]
    stack = [(root, None, iter(tree.neighbours(root)))]

    while stack:
        v, parent, children = stack[-1]
        for w in children:
            if w != parent:
                entries.append(w)
                stack.append((w, v, iter(tree.neighbours(w))))
                break
        else:
            stack.pop()
            if stack:
                # Back at the parent.
                entries.append(stack[-1][0])

    index_of = {}
    for i, v in enumerate(entries, start=1):
        index_of.setdefault(v, []).append(i)

    return EulerList(tuple(entries), {v: tuple(ix) for v, ix in index_of.items()})
