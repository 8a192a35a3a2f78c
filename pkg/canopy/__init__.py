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

from importlib.metadata import version
from pathlib import Path

from toml import loads

from canopy.config import Config
from canopy.errors import CanopyError


def _version():
    # Source checkouts carry the manifest; installed wheels only have metadata.
    if (manifest := Path(__file__).resolve().parents[1] / "pyproject.toml").is_file():
        return loads(manifest.read_text())["tool"]["poetry"]["version"]
    return version("canopy")


__version__ = _version()
