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

__all__ = [
    "AdversaryStrategy",
    "CallbackAdversary",
    "Event",
    "NO_OUTPUT",
    "PartyContext",
    "PartyId",
    "PartyProgram",
    "ProtocolParty",
    "RoundEnvelope",
    "Transcript",
    "dump_transcript",
    "load_transcript",
    "replay_transcript",
    "run_simulation",
]

from .adversary import AdversaryStrategy, CallbackAdversary
from .envelope import Event, PartyId, RoundEnvelope, Transcript, dump_transcript, load_transcript, replay_transcript
from .simulator import NO_OUTPUT, PartyContext, PartyProgram, ProtocolParty, run_simulation
