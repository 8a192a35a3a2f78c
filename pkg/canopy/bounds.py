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

"""Round-complexity bounds for agreement on trees.

Everything is evaluated with exact rationals and only converted to ``float``
on the way out, so thresholds like ``<= 1`` are decided exactly and large
exponents never overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from canopy.errors import InvalidParams


@dataclass(frozen=True)
class BoundParams:
    n: int
    t: int
    R: int
    d: float

    def __post_init__(self):
        if not self.n > self.t >= 0:
            raise InvalidParams(f"bounds need n > t >= 0, got n={self.n}, t={self.t}")
        if self.R < 1:
            raise InvalidParams(f"bounds need R >= 1, got {self.R}")
        if not (math.isfinite(self.d) and self.d > 0):
            raise InvalidParams(f"d must be a positive finite number, got {self.d!r}")


def max_partition_product(t, parts):
    """Largest product of ``parts`` positive integers summing to at most ``t`` (0 if impossible)."""
    if t < parts:
        return 0
    q, r = divmod(t, parts)
    return (q + 1) ** r * q ** (parts - r)


def _k_bound(p):
    return Fraction(p.d) * max_partition_product(p.t, p.R) / Fraction(p.n + p.t) ** p.R


def _k_bound_simple(p):
    return Fraction(p.d) * Fraction(p.t) ** p.R / (Fraction(p.R) ** p.R * Fraction(p.n + p.t) ** p.R)


def k_bound(p):
    return float(_k_bound(p))


def k_bound_simple(p):
    return float(_k_bound_simple(p))


def lb_rounds(n, t, d):
    if not n > t >= 1:
        raise InvalidParams(f"the round lower bound needs n > t >= 1, got n={n}, t={t}")
    if not (math.isfinite(d) and d > 1):
        raise InvalidParams(f"the round lower bound needs d > 1, got {d!r}")

    r = 1
    while _k_bound_simple(BoundParams(n, t, r, d)) > 1:
        r += 1
    return r


def lb_rounds_closed_form(n, t, d):
    if not n > t >= 1:
        raise InvalidParams(f"the closed form needs n > t >= 1, got n={n}, t={t}")
    if not d >= 4:
        raise InvalidParams(f"the closed form needs d >= 4, got {d!r}")
    return math.log2(d) / (math.log2(math.log2(d)) + math.log2((n + t) / t))


def closed_form_iterations(d, epsilon):
    if not (delta := d / epsilon) > 4:
        raise InvalidParams(f"the closed form needs d/epsilon > 4, got {delta!r}")
    return math.ceil(20 / 9 * math.log2(delta) / math.log2(math.log2(delta)))


def round_cap(d, epsilon):
    if not (delta := d / epsilon) > 4:
        raise InvalidParams(f"the cap needs d/epsilon > 4, got {delta!r}")
    return 7 * math.log2(delta) / math.log2(math.log2(delta)) + 3
