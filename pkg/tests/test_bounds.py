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

import math
from itertools import product

import pytest

from canopy.bounds import (
    BoundParams,
    closed_form_iterations,
    k_bound,
    k_bound_simple,
    lb_rounds,
    lb_rounds_closed_form,
    max_partition_product,
    round_cap,
)
from canopy.errors import InvalidParams


def test_k_bound_examples():
    assert k_bound(BoundParams(4, 1, 1, 100)) == pytest.approx(20.0)
    assert k_bound(BoundParams(4, 2, 2, 100)) == pytest.approx(2.7778, abs=1e-4)
    assert k_bound(BoundParams(10, 2, 3, 100)) == 0

    assert k_bound_simple(BoundParams(4, 1, 1, 100)) == pytest.approx(20.0)
    assert k_bound_simple(BoundParams(4, 2, 2, 100)) == pytest.approx(2.7778, abs=1e-4)
    assert k_bound_simple(BoundParams(4, 0, 2, 100)) == 0


@pytest.mark.parametrize("n, t, R", [(4, -1, 1), (4, 4, 1), (4, 1, 0)])
def test_params_rejected(n, t, R):
    with pytest.raises(InvalidParams):
        BoundParams(n, t, R, 10)


def test_params_need_positive_d():
    with pytest.raises(InvalidParams):
        BoundParams(4, 1, 1, 0)
    with pytest.raises(InvalidParams):
        BoundParams(4, 1, 1, math.nan)


def partitions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in partitions(total - first, parts - 1):
            yield (first,) + rest


def test_balanced_partition_is_optimal():
    for t, R in product(range(13), range(1, 13)):
        best = max((math.prod(p) for s in range(R, t + 1) for p in partitions(s, R)), default=0)
        assert max_partition_product(t, R) == best


def test_balanced_bound_against_simple():
    for t, R in product(range(1, 13), range(1, 13)):
        p = BoundParams(3 * t + 1, t, R, 1000)
        if t % R == 0:
            assert k_bound(p) == pytest.approx(k_bound_simple(p))
        assert k_bound(p) <= k_bound_simple(p) * (1 + 1e-12)


@pytest.mark.parametrize("n, t, d, expected", [(4, 1, 5, 1), (4, 1, 6, 2), (4, 1, 1.5, 1), (100, 1, 1e6, 3)])
def test_lb_rounds(n, t, d, expected):
    assert lb_rounds(n, t, d) == expected


def test_lb_rounds_grows_slowly():
    previous = 0
    for exponent in range(1, 30):
        r = lb_rounds(4, 1, 10.0**exponent)
        assert previous <= r
        assert r <= exponent + 1
        previous = r


@pytest.mark.parametrize("n, t, d", [(4, 0, 10), (4, 4, 10), (4, 1, 1), (4, 1, math.inf)])
def test_lb_rounds_rejects(n, t, d):
    with pytest.raises(InvalidParams):
        lb_rounds(n, t, d)


def test_closed_forms():
    assert lb_rounds_closed_form(4, 1, 16) == pytest.approx(4 / (2 + math.log2(5)))
    assert closed_form_iterations(16, 1) == 5
    assert round_cap(16, 1) == pytest.approx(17)
    assert round_cap(10**3, 1) == pytest.approx(24.03, abs=0.01)

    with pytest.raises(InvalidParams):
        lb_rounds_closed_form(4, 1, 3)
    with pytest.raises(InvalidParams):
        closed_form_iterations(4, 1)
    with pytest.raises(InvalidParams):
        round_cap(2, 1)
