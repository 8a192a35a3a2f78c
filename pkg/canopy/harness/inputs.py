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

import random

from canopy.errors import ConfigError, UnknownVertex
from canopy.tree import diameter_path

ALIASES = {"random-valid": "random", "endpoints-of-diameter": "endpoints"}
ASSIGNMENTS = ("explicit", "random", "endpoints", *ALIASES)


def assign_inputs(tree, n, how, seed=0, labels=()):
    """Map every party id to an input vertex.

    ``explicit`` takes one label per party (or a single label for everyone),
    ``random`` (also ``random-valid``) draws uniformly per party, ``endpoints``
    (also ``endpoints-of-diameter``) alternates between the two ends of a
    longest path.
    """
    how = ALIASES.get(how, how)

    if how == "explicit":
        if len(labels) not in (1, n):
            raise ConfigError(f"explicit inputs need 1 or {n} labels, got {len(labels)}")
        for label in labels:
            if label not in tree:
                raise ConfigError(UnknownVertex(label).msg)
        return {p: labels[0] if len(labels) == 1 else labels[p - 1] for p in range(1, n + 1)}

    if how == "random":
        rng = random.Random(seed)
        vertices = sorted(tree.vertices)
        return {p: rng.choice(vertices) for p in range(1, n + 1)}

    if how == "endpoints":
        ends = diameter_path(tree)
        return {p: ends.first if p % 2 else ends.last for p in range(1, n + 1)}

    raise ConfigError(f"input assignment must be one of {', '.join(ASSIGNMENTS)}, not {how!r}")
