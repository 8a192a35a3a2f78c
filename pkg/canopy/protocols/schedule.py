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

"""Which gradecast every round belongs to, for a given run.

Every protocol here is a sequence of gradecasts, so round r is step
((r - 1) % 3) + 1 of stage (r - 1) // 3. Adversaries use this to know
what kind of value is on the wire.
"""

from __future__ import annotations

from typing import NamedTuple

from canopy.protocols.gradecast import ROUNDS
from canopy.protocols.real_aa import plan_iterations
from canopy.tree import diameter


class Stage(NamedTuple):
    kind: str  # "path" or "real"
    first_round: int
    iteration: int


class Position(NamedTuple):
    stage: Stage
    step: int


class Schedule:
    def __init__(self, kinds):
        self.stages = tuple(Stage(kind, ROUNDS * i + 1, it) for i, (kind, it) in enumerate(kinds))

    @property
    def total_rounds(self):
        return ROUNDS * len(self.stages)

    def at(self, round):
        if not 1 <= round <= self.total_rounds:
            return None
        stage = self.stages[(round - 1) // ROUNDS]
        return Position(stage, (round - 1) % ROUNDS + 1)

    @property
    def final_iteration_start(self):
        return self.stages[-1].first_round if self.stages else 1

    def __repr__(self):
        return f"<Schedule stages={len(self.stages)!r} rounds={self.total_rounds!r}>"


def _real(count):
    return [("real", i) for i in range(1, count + 1)]


def schedule_for(mode, n, t, tree):
    if (d := diameter(tree)) <= 1:
        return Schedule([])
    if mode == "final":
        return Schedule([("path", 0)] + _real(plan_iterations(n, t, d, 1)))
    if mode == "legacy":
        return Schedule(_real(plan_iterations(n, t, 2 * tree.order, 1)) + _real(plan_iterations(n, t, d, 1)))
    return Schedule(_real(plan_iterations(n, t, d, 1)))
