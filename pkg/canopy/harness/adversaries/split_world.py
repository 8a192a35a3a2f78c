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

from canopy.harness.strategy import CampAdversary


class SplitWorld(CampAdversary):
    name = "split-world"

    def camp_of(self, receiver):
        if not hasattr(self, "_camps"):
            honest = sorted(set(range(1, self.n + 1)) - self.targets)
            self.rng.shuffle(honest)
            self._camps = {p: 1 for p in honest[: (len(honest) + 1) // 2]}
        return self._camps.get(receiver, 0)


class AdaptiveLate(SplitWorld):
    name = "adaptive-late"

    def __init__(self, setting):
        super().__init__(setting)
        # Stay quiet until the last agreement iteration starts.
        self.corrupt_from = setting.schedule.final_iteration_start


def load(registry):
    registry.add(
        SplitWorld.name, SplitWorld, "Splits honest parties into two camps and keeps each camp's story straight."
    )
    registry.add(
        AdaptiveLate.name, AdaptiveLate, "Behaves like split-world, but only corrupts for the final iteration."
    )
