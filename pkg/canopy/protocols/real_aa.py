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
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from canopy.errors import InsufficientValues, InvalidParams, NonFinite
from canopy.protocols.codec import MalformedPayload, decode_real, encode_real
from canopy.protocols.gradecast import BOTTOM, ROUNDS, gradecast_all

log = logging.getLogger(__name__)

ITERATION_EVENT = "real_aa.iteration"


@dataclass(frozen=True)
class RealAAState:
    current_value: float
    blacklist: frozenset[int]
    iteration: int
    plan_R: int

    def __repr__(self):
        return (
            f"<RealAAState value={self.current_value!r} iteration={self.iteration!r}/{self.plan_R!r}"
            f" blacklist={sorted(self.blacklist)!r}>"
        )


def _check_params(n, t, d_bound, epsilon):
    if t < 0 or n <= 3 * t:
        raise InvalidParams(f"real-valued agreement needs n > 3t, got n={n}, t={t}")
    for name, x in (("d_bound", d_bound), ("epsilon", epsilon)):
        if not (math.isfinite(x) and x > 0):
            raise InvalidParams(f"{name} must be a positive finite number, got {x!r}")


def range_bound(span, n, t, rounds):
    """Largest honest range the analysis allows after ``rounds`` iterations."""
    if rounds == 0:
        return float(span)
    return float(Fraction(span) * Fraction(t) ** rounds / (Fraction(rounds) ** rounds * Fraction(n - 2 * t) ** rounds))


def plan_iterations(n, t, d_bound, epsilon):
    _check_params(n, t, d_bound, epsilon)
    if d_bound <= epsilon:
        return 0
    if t == 0:
        return 1

    ratio = Fraction(d_bound) / Fraction(epsilon)
    r = 1
    while ratio * t**r > r**r * (n - 2 * t) ** r:
        r += 1
    return r


def trim_mean_update(received, prior_blacklist, n, t):
    values = []
    blacklist = set(prior_blacklist)

    for q in range(1, n + 1):
        graded = received.get(q, BOTTOM)
        try:
            value = decode_real(graded.value) if graded.grade else None
        except MalformedPayload:
            # Anything that is not a finite real counts as nothing sent.
            value = None

        if value is None or graded.grade <= 1:
            blacklist.add(q)
        if value is not None and q not in prior_blacklist:
            values.append(value)

    if len(values) < 2 * t + 1:
        raise InsufficientValues(len(values), 2 * t + 1)

    kept = np.sort(np.asarray(values, dtype=np.float64))[t : len(values) - t]
    # The mean lies inside the kept values; the clip only absorbs rounding.
    return float(np.clip(kept.mean(), kept[0], kept[-1])), frozenset(blacklist)


def run_real_aa(ctx, value, d_bound, epsilon):
    if not math.isfinite(value):
        raise NonFinite(value)

    plan = plan_iterations(ctx.n, ctx.t, d_bound, epsilon)
    state = RealAAState(float(value), frozenset(), 0, plan)
    ctx.record(ITERATION_EVENT, iteration=0, value=state.current_value, blacklist=state.blacklist, plan=plan)

    while state.iteration < plan:
        received = yield from gradecast_all(ctx, encode_real(state.current_value))
        value, blacklist = trim_mean_update(received, state.blacklist, ctx.n, ctx.t)
        state = RealAAState(value, blacklist, state.iteration + 1, plan)
        ctx.record(ITERATION_EVENT, iteration=state.iteration, value=value, blacklist=blacklist, plan=plan)

    log.debug("p%d finished %d iterations at %r.", ctx.party, plan, state.current_value)
    return state.current_value


def rounds_for(n, t, d_bound, epsilon):
    return ROUNDS * plan_iterations(n, t, d_bound, epsilon)
