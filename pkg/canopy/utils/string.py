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

def list_of(items, sep="and"):
    items = [str(i) for i in items]
    if len(items) > 2:
        return "{}, {} {}".format(", ".join(items[:-1]), sep, items[-1])
    else:
        return f" {sep} ".join(items)


def parties(ids):
    # Party sets are small, so print them in full.
    return "{" + ", ".join(f"p{i}" for i in sorted(ids)) + "}"
