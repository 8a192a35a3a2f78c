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

from os import getenv
from typing import Final

from dotenv import load_dotenv

from canopy.errors import ConfigError
from canopy.utils import DEFAULT_ROUND_CAP_FACTOR

load_dotenv()


def _number(name, default, kind):
    raw = getenv(name, str(default))
    try:
        value = kind(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {raw!r}") from None

    if value <= 0:
        raise ConfigError(f"{name} must be positive, got {raw!r}")
    return value


class Config:
    LOG_LEVEL: Final = getenv("CANOPY_LOG_LEVEL", "WARNING").upper()
    ROUND_CAP_FACTOR: Final = _number("CANOPY_ROUND_CAP_FACTOR", DEFAULT_ROUND_CAP_FACTOR, int)
    TRANSCRIPT_DIR: Final = getenv("CANOPY_TRANSCRIPT_DIR", "./transcripts")
    REAL_SLACK: Final = _number("CANOPY_REAL_SLACK", 2.0**-40, float)
    MAX_WORKERS: Final = _number("CANOPY_MAX_WORKERS", 4, int)
