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
    "BOTTOM",
    "GradedValue",
    "MODES",
    "PROTOCOLS",
    "RealAAState",
    "Schedule",
    "Supported",
    "TreeAAConfig",
    "closest_int",
    "decode_supported",
    "gradecast_all",
    "plan_iterations",
    "range_bound",
    "run_final_tree_aa",
    "run_fox_path_finder",
    "run_legacy_path_finder",
    "run_path_aa",
    "run_real_aa",
    "run_tree_aa",
    "run_tree_aa_old",
    "schedule_for",
    "supported_prefix",
    "trim_mean_update",
]

from .gradecast import BOTTOM, GradedValue, gradecast_all
from .real_aa import RealAAState, plan_iterations, range_bound, run_real_aa, trim_mean_update
from .rounding import closest_int

# Dependant on the building blocks above.
from .path_select import Supported, decode_supported, run_fox_path_finder, run_legacy_path_finder, supported_prefix
from .schedule import Schedule, schedule_for
from .tree_aa import (
    MODES,
    PROTOCOLS,
    TreeAAConfig,
    run_final_tree_aa,
    run_path_aa,
    run_tree_aa,
    run_tree_aa_old,
)
