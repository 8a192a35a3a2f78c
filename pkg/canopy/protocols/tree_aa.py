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
from dataclasses import dataclass

from canopy.errors import InvalidParams, ProtocolError
from canopy.protocols.gradecast import ROUNDS
from canopy.protocols.path_select import run_fox_path_finder, run_legacy_path_finder
from canopy.protocols.real_aa import plan_iterations, run_real_aa
from canopy.protocols.rounding import closest_int
from canopy.tree import LabeledTree, diameter, diameter_path, is_path_graph, project_onto_path

log = logging.getLogger(__name__)

INDEX_EVENT = "tree_aa.index"
MODES = ("final", "legacy", "path")


@dataclass(frozen=True)
class TreeAAConfig:
    tree: LabeledTree
    n: int
    t: int
    mode: str = "final"

    def __post_init__(self):
        if self.t < 0 or self.n <= 3 * self.t:
            raise InvalidParams(f"tree agreement needs n > 3t, got n={self.n}, t={self.t}")
        if self.mode not in MODES:
            raise InvalidParams(f"mode must be one of {', '.join(MODES)}, not {self.mode!r}")
        if self.mode == "path" and not is_path_graph(self.tree):
            raise InvalidParams("path mode only runs on trees that are themselves paths")

    @property
    def diameter(self):
        return diameter(self.tree)

    def expected_rounds(self):
        if (d := self.diameter) <= 1:
            return 0
        if self.mode == "final":
            return ROUNDS + ROUNDS * plan_iterations(self.n, self.t, d, 1)
        if self.mode == "legacy":
            return ROUNDS * plan_iterations(self.n, self.t, 2 * self.tree.order, 1) + ROUNDS * plan_iterations(
                self.n, self.t, d, 1
            )
        return ROUNDS * plan_iterations(self.n, self.t, d, 1)

    def protocol(self):
        return PROTOCOLS[self.mode]


def vertex_or_last(path, k):
    # Past the end of a shorter path means its last vertex.
    return path[min(k, len(path)) - 1]


def run_tree_aa(ctx, value, tree, p, q, d_bound):
    v = project_onto_path(tree, p, value)
    i = p.vertices.index(v) + 1

    j = yield from run_real_aa(ctx, i, d_bound, 1)
    k = closest_int(j)

    ctx.record(INDEX_EVENT, index=i, real=j, landed=k, labels=q.vertices)
    # Landing past the longest honest P, and so past Q, can not happen.
    return q[k - 1]


def run_final_tree_aa(ctx, value, tree):
    if (d := diameter(tree)) <= 1:
        return value

    p, q = yield from run_fox_path_finder(ctx, value, tree)
    return (yield from run_tree_aa(ctx, value, tree, p, q, d))


def run_tree_aa_old(ctx, value, tree):
    if (d := diameter(tree)) <= 1:
        return value

    path = yield from run_legacy_path_finder(ctx, value, tree)

    # Fixed-length agreement already lines everybody up; this is the explicit wait.
    if (used := ctx.round - 1) != (planned := ROUNDS * plan_iterations(ctx.n, ctx.t, 2 * tree.order, 1)):
        raise ProtocolError(f"path finding took {used} rounds instead of {planned}")

    v = project_onto_path(tree, path, value)
    i = path.vertices.index(v) + 1

    j = yield from run_real_aa(ctx, i, d, 1)
    k = closest_int(j)

    ctx.record(INDEX_EVENT, index=i, real=j, landed=k, labels=path.vertices)
    return vertex_or_last(path, k)


def run_path_aa(ctx, value, tree):
    if not is_path_graph(tree):
        raise InvalidParams("path mode only runs on trees that are themselves paths")
    if (d := diameter(tree)) <= 1:
        return value

    # Numbered from the endpoint with the lower label.
    line = diameter_path(tree)
    i = line.vertices.index(value) + 1

    j = yield from run_real_aa(ctx, i, d, 1)
    k = closest_int(j)

    ctx.record(INDEX_EVENT, index=i, real=j, landed=k, labels=line.vertices)
    return line[k - 1]


PROTOCOLS = {
    "final": run_final_tree_aa,
    "legacy": run_tree_aa_old,
    "path": run_path_aa,
}
