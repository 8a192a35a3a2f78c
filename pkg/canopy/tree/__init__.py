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

__all__ = [
    "EulerList",
    "LabeledTree",
    "TreePath",
    "convex_hull",
    "diameter",
    "diameter_path",
    "distance",
    "euler_list",
    "format_tree",
    "is_path_graph",
    "is_prefix",
    "longest_common_prefix",
    "max_pairwise_distance",
    "parse_tree",
    "path_between",
    "project_onto_path",
    "rooted",
]

from .paths import TreePath, is_prefix, longest_common_prefix

# Dependant on paths above.
from .euler import EulerList, euler_list
from .tree import (
    LabeledTree,
    convex_hull,
    diameter,
    diameter_path,
    distance,
    format_tree,
    is_path_graph,
    max_pairwise_distance,
    parse_tree,
    path_between,
    project_onto_path,
    rooted,
)
