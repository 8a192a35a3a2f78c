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

from canopy.harness.strategy import ProtocolAdversary


class SkewHigh(ProtocolAdversary):
    name = "skew-high"


class SkewLow(ProtocolAdversary):
    name = "skew-low"

    def initial(self, round, party, transcript, kind):
        return self.everyone(self.pick(round, transcript, kind, high=False))


def load(registry):
    registry.add(SkewHigh.name, SkewHigh, "Gradecasts the largest honest value, or the deepest path, to everyone.")
    registry.add(SkewLow.name, SkewLow, "Gradecasts the smallest honest value, or the bare root path, to everyone.")
