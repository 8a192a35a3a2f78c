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

import datetime as dt
from time import perf_counter


def short_delta(td):
    """Render a wall-clock duration like ``1h, 2m, 5.042s``."""
    hours, rest = divmod(td.total_seconds(), 3600)
    minutes, seconds = divmod(rest, 60)

    parts = [f"{int(hours):,}h"] if hours else []
    if minutes:
        parts.append(f"{int(minutes)}m")
    if seconds or not parts:
        parts.append(f"{seconds:.3f}s")

    return ", ".join(parts)


def stopwatch():
    return perf_counter()


def since(start):
    # Wall clock only ever reaches log lines, never simulated time.
    return short_delta(dt.timedelta(seconds=max(0.0, perf_counter() - start)))
