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

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Mapping, NamedTuple, NewType

from canopy.errors import CorruptTranscript

PartyId = NewType("PartyId", int)

RECORD_FIELDS = ("round", "sender", "receiver", "payload_hex")


@dataclass(frozen=True)
class RoundEnvelope:
    round: int
    sender: PartyId
    receiver: PartyId
    payload: bytes

    def to_record(self):
        return {
            "round": self.round,
            "sender": self.sender,
            "receiver": self.receiver,
            "payload_hex": self.payload.hex(),
        }

    def __repr__(self):
        return (
            f"<RoundEnvelope round={self.round!r} sender={self.sender!r} receiver={self.receiver!r}"
            f" bytes={len(self.payload)!r}>"
        )


class Event(NamedTuple):
    round: int
    name: str
    data: Mapping[str, Any]


class Transcript:
    """Everything that crossed the network, plus each party's local event log."""

    def __init__(self, n):
        self.n = n
        self.rounds = 0
        self.envelopes = []
        self.events = defaultdict(list)
        self.corrupted_at = {}
        self._by_round = defaultdict(list)

    def append(self, envelope):
        self.envelopes.append(envelope)
        self._by_round[envelope.round].append(envelope)

    def sent(self, round):
        return tuple(self._by_round.get(round, ()))

    def received(self, round, receiver):
        return {e.sender: e.payload for e in self.sent(round) if e.receiver == receiver}

    def sent_by(self, round, sender):
        return {e.receiver: e.payload for e in self.sent(round) if e.sender == sender}

    def honest(self):
        return [p for p in range(1, self.n + 1) if p not in self.corrupted_at]

    def events_named(self, party, name):
        return [e for e in self.events.get(party, ()) if e.name == name]

    def __len__(self):
        return len(self.envelopes)

    def __repr__(self):
        return f"<Transcript n={self.n!r} rounds={self.rounds!r} envelopes={len(self.envelopes)!r}>"


def replay_transcript(tr):
    if not tr.envelopes:
        return {}

    rounds = tr.rounds or max(e.round for e in tr.envelopes)
    seen = set()
    last = 0
    for e in tr.envelopes:
        if not 1 <= e.round <= rounds:
            raise CorruptTranscript(f"round {e.round} lies outside 1..{rounds}")
        if e.round < last:
            raise CorruptTranscript(f"round {e.round} appears after round {last}")
        if not (1 <= e.sender <= tr.n and 1 <= e.receiver <= tr.n):
            raise CorruptTranscript(f"party ids {e.sender}->{e.receiver} lie outside 1..{tr.n}")
        if (key := (e.round, e.sender, e.receiver)) in seen:
            raise CorruptTranscript(f"p{e.sender} sent p{e.receiver} two messages in round {e.round}")

        seen.add(key)
        last = e.round

    inboxes = {p: [{} for _ in range(rounds)] for p in range(1, tr.n + 1)}
    for e in tr.envelopes:
        inboxes[e.receiver][e.round - 1][e.sender] = e.payload

    return {p: [dict(sorted(box.items())) for box in boxes] for p, boxes in inboxes.items()}


def dump_transcript(tr):
    return "".join(json.dumps(e.to_record(), separators=(",", ":")) + "\n" for e in tr.envelopes)


def load_transcript(text, n=None):
    envelopes = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            envelopes.append(
                RoundEnvelope(
                    int(record["round"]),
                    PartyId(int(record["sender"])),
                    PartyId(int(record["receiver"])),
                    bytes.fromhex(record["payload_hex"]),
                )
            )
        except (ValueError, KeyError, TypeError) as err:
            raise CorruptTranscript(f"line {lineno:,} is not an envelope record ({err})") from None

    tr = Transcript(n or max((max(e.sender, e.receiver) for e in envelopes), default=0))
    for e in envelopes:
        tr.append(e)
    tr.rounds = max((e.round for e in envelopes), default=0)
    return tr
