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

"""Graded broadcast for every party at once, in three rounds.

1. each sender sends its value to everybody;
2. everybody echoes, per sender, the value it got;
3. everybody votes, per sender, for the value echoed by n - t parties (if any).

A receiver grades a sender 2 on n - t matching votes, 1 on t + 1, else 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from canopy.protocols.codec import MalformedPayload, decode_vector, encode_vector

ROUNDS = 3


@dataclass(frozen=True)
class GradedValue:
    value: bytes | None
    grade: int

    def __post_init__(self):
        if self.grade not in (0, 1, 2):
            raise ValueError(f"grade must be 0, 1 or 2, not {self.grade!r}")
        if (self.grade == 0) != (self.value is None):
            raise ValueError("only grade 0 carries no value")

    def __repr__(self):
        return f"<GradedValue value={self.value!r} grade={self.grade!r}>"


BOTTOM = GradedValue(None, 0)


def echo_vector(n, inbox):
    return [inbox.get(s) for s in range(1, n + 1)]


def _tally(n, inbox):
    # Column s counts what every well-formed vector said about sender s.
    columns = [Counter() for _ in range(n)]
    for payload in inbox.values():
        try:
            items = decode_vector(payload, n)
        except MalformedPayload:
            continue
        for column, item in zip(columns, items):
            if item is not None:
                column[item] += 1
    return columns


def candidates(n, t, inbox):
    # 2(n - t) > n, so at most one value per column can pass.
    return [next((v for v, c in sorted(column.items()) if c >= n - t), None) for column in _tally(n, inbox)]


def grades(n, t, inbox):
    graded = {}
    for s, column in enumerate(_tally(n, inbox), start=1):
        if not column:
            graded[s] = BOTTOM
            continue

        value, votes = min(column.items(), key=lambda item: (-item[1], item[0]))
        if votes >= n - t:
            graded[s] = GradedValue(value, 2)
        elif votes >= t + 1:
            graded[s] = GradedValue(value, 1)
        else:
            graded[s] = BOTTOM

    return graded


def gradecast_all(ctx, my_value):
    inbox = yield ctx.broadcast(my_value)
    inbox = yield ctx.broadcast(encode_vector(echo_vector(ctx.n, inbox)))
    inbox = yield ctx.broadcast(encode_vector(candidates(ctx.n, ctx.t, inbox)))
    return grades(ctx.n, ctx.t, inbox)
