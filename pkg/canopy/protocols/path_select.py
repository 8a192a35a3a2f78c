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

import logging
from collections import Counter
from typing import Mapping, NamedTuple, Optional

from canopy.errors import NoSupport, TreeError
from canopy.protocols.codec import MalformedPayload, decode_path, encode_path
from canopy.protocols.gradecast import gradecast_all
from canopy.protocols.real_aa import run_real_aa
from canopy.protocols.rounding import closest_int
from canopy.tree import TreePath, euler_list, path_between

log = logging.getLogger(__name__)

PATHS_EVENT = "path_select.paths"


class Supported(NamedTuple):
    path: Optional[TreePath]
    grade: int


SupportedPaths = Mapping[int, Supported]


def decode_supported(tree, graded):
    """Turn gradecast output into paths, zeroing anything that is not a path from the root."""
    paths = {}
    for sender, gv in sorted(graded.items()):
        if not gv.grade:
            paths[sender] = Supported(None, 0)
            continue

        try:
            path = TreePath(decode_path(gv.value)).validate(tree)
        except (MalformedPayload, TreeError):
            paths[sender] = Supported(None, 0)
            continue

        paths[sender] = Supported(path, gv.grade) if path.first == tree.root else Supported(None, 0)

    return paths


def supported_prefix(paths, min_grade, threshold):
    group = [s.path.vertices for s in paths.values() if s.path is not None and s.grade >= min_grade]
    prefix = []

    while True:
        depth = len(prefix)
        counts = Counter(p[depth] for p in group if len(p) > depth)
        # Unique whenever 2 * threshold exceeds the entry count; min() keeps it deterministic otherwise.
        if not (passing := sorted(v for v, c in counts.items() if c >= threshold)):
            break

        prefix.append(passing[0])
        group = [p for p in group if len(p) > depth and p[depth] == passing[0]]

    if not prefix:
        raise NoSupport(threshold)
    return TreePath(tuple(prefix))


def run_fox_path_finder(ctx, value, tree):
    mine = path_between(tree, tree.root, value)
    graded = yield from gradecast_all(ctx, encode_path(mine.vertices))

    paths = decode_supported(tree, graded)
    p = supported_prefix(paths, 2, ctx.n - ctx.t)
    q = supported_prefix(paths, 1, ctx.n - ctx.t)

    ctx.record(PATHS_EVENT, p=p.vertices, q=q.vertices)
    return p, q


def run_legacy_path_finder(ctx, value, tree):
    euler = euler_list(tree, tree.root)
    i = euler.first_index(value)

    j = yield from run_real_aa(ctx, i, 2 * tree.order, 1)
    c = closest_int(j)

    path = path_between(tree, tree.root, euler.at(c))
    ctx.record(PATHS_EVENT, index=i, landed=c, p=path.vertices, q=path.vertices)
    return path
