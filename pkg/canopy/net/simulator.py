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
import random
from abc import ABC, abstractmethod

from canopy.errors import NonTermination, StrategyViolation
from canopy.net.adversary import AdversaryStrategy
from canopy.net.envelope import Event, PartyId, RoundEnvelope, Transcript
from canopy.utils.string import parties

log = logging.getLogger(__name__)

NO_OUTPUT = object()


class PartyContext:
    def __init__(self, party, n, t, transcript):
        self.party = party
        self.n = n
        self.t = t
        self.round = 0
        self._transcript = transcript

    def record(self, name, **data):
        self._transcript.events[self.party].append(Event(self.round, name, data))

    def broadcast(self, payload):
        return {q: payload for q in range(1, self.n + 1)}

    def __repr__(self):
        return f"<PartyContext party={self.party!r} round={self.round!r}>"


class PartyProgram(ABC):
    def init(self, ctx, value):
        self.ctx = ctx
        self.value = value

    @abstractmethod
    def on_round(self, round, inbox):
        """Return the outbox (receiver -> payload) for ``round``.

        ``inbox`` holds what was delivered at the end of the previous round.
        """

    def output(self):
        return NO_OUTPUT


class ProtocolParty(PartyProgram):
    """Runs a generator protocol: ``inbox = yield outbox``, result returned.

    Sub-protocols compose with ``yield from``.
    """

    def __init__(self, protocol, **params):
        self.protocol = protocol
        self.params = params
        self._result = NO_OUTPUT

    def init(self, ctx, value):
        super().init(ctx, value)
        self._gen = self.protocol(ctx, value, **self.params)

    def on_round(self, round, inbox):
        self.ctx.round = round
        try:
            return self._gen.send(inbox) if round > 1 else next(self._gen)
        except StopIteration as stop:
            self._result = stop.value
            return {}

    def output(self):
        return self._result


def run_simulation(n, t, program, inputs, adversary=None, seed=0, round_cap=100):
    """Run one lockstep execution and return ``(outputs, transcript)``.

    ``program`` maps a party id to a fresh ``PartyProgram``. Outputs are only
    reported for parties that were never corrupted.
    """
    if not 0 <= t < n:
        raise StrategyViolation(f"t={t} must satisfy 0 <= t < n={n}")

    adversary = adversary or AdversaryStrategy()
    adversary.setup(n, t, random.Random(seed))

    transcript = Transcript(n)
    programs = {}
    for p in range(1, n + 1):
        programs[p] = program(PartyId(p))
        programs[p].init(PartyContext(PartyId(p), n, t, transcript), inputs[p])

    corrupted = frozenset()
    inboxes = {p: {} for p in programs}
    round = 0

    while True:
        round += 1
        corrupted = _corrupt(adversary, round, transcript, corrupted, n, t)

        outboxes = {}
        for p in sorted(set(programs) - corrupted):
            if programs[p].output() is NO_OUTPUT:
                outboxes[p] = programs[p].on_round(round, inboxes[p])

        if all(programs[p].output() is not NO_OUTPUT for p in programs if p not in corrupted):
            break
        if round > round_cap:
            waiting = [p for p in programs if p not in corrupted and programs[p].output() is NO_OUTPUT]
            raise NonTermination(round_cap, parties(waiting))

        for p, outbox in outboxes.items():
            for q in sorted(outbox):
                transcript.append(RoundEnvelope(round, p, PartyId(q), outbox[q]))

        # Rushing: honest traffic for this round is already visible.
        for p in sorted(corrupted):
            for e in _checked(adversary.byzantine_send(round, p, transcript), round, p, n):
                transcript.append(e)

        transcript.rounds = round
        inboxes = {p: transcript.received(round, p) for p in programs}
        inboxes = {p: dict(sorted(box.items())) for p, box in inboxes.items()}
        log.debug("Round %d done: %d envelopes, corrupted %s.", round, len(transcript.sent(round)), parties(corrupted))

    outputs = {p: programs[p].output() for p in sorted(programs) if p not in corrupted}
    log.debug("Simulation finished after %d rounds with %d honest outputs.", transcript.rounds, len(outputs))
    return outputs, transcript


def _corrupt(adversary, round, transcript, corrupted, n, t):
    decision = frozenset(adversary.corrupt_decision(round, transcript))

    if not corrupted <= decision:
        raise StrategyViolation(f"parties {parties(corrupted - decision)} were un-corrupted in round {round}")
    if len(decision) > t:
        raise StrategyViolation(f"{len(decision)} corruptions exceed t={t}")
    if any(not 1 <= p <= n for p in decision):
        raise StrategyViolation(f"corrupted set {sorted(decision)} names parties outside 1..{n}")

    for p in sorted(decision - corrupted):
        transcript.corrupted_at[p] = round
        log.info("Adversary corrupted p%d at the start of round %d.", p, round)

    return decision


def _checked(envelopes, round, party, n):
    receivers = set()
    for e in envelopes:
        if e.sender != party:
            raise StrategyViolation(f"p{party} tried to send as p{e.sender}")
        if e.round != round:
            raise StrategyViolation(f"p{party} sent a round-{e.round} envelope during round {round}")
        if not 1 <= e.receiver <= n or e.receiver in receivers:
            raise StrategyViolation(f"p{party} sent an extra or misaddressed envelope to p{e.receiver}")
        if not isinstance(e.payload, bytes):
            raise StrategyViolation(f"p{party} sent a {type(e.payload).__name__} payload, not bytes")
        receivers.add(e.receiver)
        yield e
