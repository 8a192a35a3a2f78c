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

from canopy.harness.strategy import CampAdversary, ProtocolAdversary


class Equivocator(CampAdversary):
    """Tells odd and even receivers different things in step 1, then echoes and votes honestly."""

    name = "equivocator"

    echo = ProtocolAdversary.echo
    vote = ProtocolAdversary.vote


def load(registry):
    registry.add(Equivocator.name, Equivocator, "Sends different step-1 values to odd and even receivers.")
