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

import random


class AdversaryStrategy:
    """Controls the corrupted parties.

    ``corrupt_decision`` runs at the start of every round and returns the full
    (cumulative) corrupted set. ``byzantine_send`` runs once per corrupted party
    after every honest message of the round is already in the transcript.
    """

    name = "passive"

    def setup(self, n, t, rng):
        self.n = n
        self.t = t
        self.rng = rng if rng is not None else random.Random(0)

    def corrupt_decision(self, round, transcript):
        return frozenset()

    def byzantine_send(self, round, party, transcript):
        return []

    def __repr__(self):
        return f"<{type(self).__name__} name={self.name!r}>"


class CallbackAdversary(AdversaryStrategy):
    name = "callback"

    def __init__(self, corrupt_decision=None, byzantine_send=None):
        self._corrupt = corrupt_decision
        self._send = byzantine_send

    def corrupt_decision(self, round, transcript):
        return frozenset(self._corrupt(round, transcript)) if self._corrupt else frozenset()

    def byzantine_send(self, round, party, transcript):
        return list(self._send(round, party, transcript)) if self._send else []
