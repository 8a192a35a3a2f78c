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

from canopy.net import AdversaryStrategy, RoundEnvelope
from canopy.protocols.codec import MalformedPayload, decode_real, encode_path, encode_real, encode_vector
from canopy.protocols.gradecast import candidates, echo_vector
from canopy.protocols.schedule import Schedule
from canopy.tree import LabeledTree, path_between, rooted


@dataclass(frozen=True)
class AttackSetting:
    n: int
    t: int
    tree: LabeledTree
    schedule: Schedule


class ProtocolAdversary(AdversaryStrategy):
    """Base for registry strategies.

    Every round is one step of a gradecast (see ``Schedule``), so a strategy
    only decides what to send in each of the three steps. By default it sends
    the high extreme in step 1 and follows the protocol afterwards.
    """

    name = "skew-high"
    corrupt_from = 1

    def __init__(self, setting):
        self.setting = setting
        self.tree = setting.tree
        self.schedule = setting.schedule
        self._targets = None

    @property
    def targets(self):
        if self._targets is None:
            self._targets = frozenset(self.rng.sample(range(1, self.n + 1), self.t))
        return self._targets

    def corrupt_decision(self, round, transcript):
        return self.targets if round >= self.corrupt_from else frozenset()

    def byzantine_send(self, round, party, transcript):
        if (pos := self.schedule.at(round)) is None:
            return []

        if pos.step == 1:
            payloads = self.initial(round, party, transcript, pos.stage.kind)
        elif pos.step == 2:
            payloads = self.echo(round, party, transcript)
        else:
            payloads = self.vote(round, party, transcript)

        return [RoundEnvelope(round, party, q, b) for q, b in sorted(payloads.items()) if b is not None]

    def initial(self, round, party, transcript, kind):
        return self.everyone(self.pick(round, transcript, kind, high=True))

    def echo(self, round, party, transcript):
        return self.everyone(encode_vector(echo_vector(self.n, transcript.received(round - 1, party))))

    def vote(self, round, party, transcript):
        return self.everyone(encode_vector(candidates(self.n, self.t, transcript.received(round - 1, party))))

    def everyone(self, payload):
        return {q: payload for q in range(1, self.n + 1)}

    def honest_reals(self, round, transcript):
        values = []
        for e in transcript.sent(round):
            # Honest parties broadcast, so their copy to themselves is enough.
            if e.sender in transcript.corrupted_at or e.receiver != e.sender:
                continue
            try:
                values.append(decode_real(e.payload))
            except MalformedPayload:
                continue
        return values

    def pick(self, round, transcript, kind, high):
        if kind == "real":
            if not (values := self.honest_reals(round, transcript)):
                return None
            return encode_real(max(values) if high else min(values))

        if not high:
            return encode_path((self.tree.root,))
        return encode_path(self.deepest_path().vertices)

    def deepest_path(self):
        r = rooted(self.tree, self.tree.root)
        far = max(r.order, key=lambda v: (r.depth[v], v))
        return path_between(self.tree, self.tree.root, far)

    def __repr__(self):
        return f"<{type(self).__name__} name={self.name!r} corrupt_from={self.corrupt_from!r}>"


class CampAdversary(ProtocolAdversary):
    """Splits the receivers in two and gives each camp its own extreme."""

    name = "camps"

    def camp_of(self, receiver):
        return receiver % 2

    def initial(self, round, party, transcript, kind):
        return {q: self.pick(round, transcript, kind, high=self.camp_of(q) == 1) for q in range(1, self.n + 1)}

    def _own_column(self, round, party, transcript, step):
        # Repeat to every receiver what it was told in step 1, honest about everybody else.
        told = transcript.sent_by(round - (step - 1), party)
        received = transcript.received(round - 1, party)
        honest = echo_vector(self.n, received) if step == 2 else candidates(self.n, self.t, received)

        payloads = {}
        for q in range(1, self.n + 1):
            items = list(honest)
            items[party - 1] = told.get(q)
            payloads[q] = encode_vector(items)
        return payloads

    def echo(self, round, party, transcript):
        return self._own_column(round, party, transcript, 2)

    def vote(self, round, party, transcript):
        return self._own_column(round, party, transcript, 3)
