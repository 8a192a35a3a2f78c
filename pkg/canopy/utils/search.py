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

from rapidfuzz import fuzz, process


class Match:
    def __init__(self, term, comparison, strength):
        self.term = term
        self.comparison = comparison
        self.strength = strength / 100

    def __str__(self, /):
        return self.comparison

    def __repr__(self, /):
        return f"<Match comparison={self.comparison!r} strength={self.strength!r}>"

    def __float__(self, /):
        return self.strength


class Search:
    def __init__(self, term, comparisons, case_sensitive=False):
        self.term = term
        self.comparisons = list(comparisons)
        processor = None if case_sensitive else str.lower
        self._matches = [
            Match(term, c, s)
            for c, s, _ in process.extract(
                term, self.comparisons, scorer=fuzz.WRatio, processor=processor, limit=len(self.comparisons)
            )
        ]

    @property
    def matches(self):
        return self._matches

    def accurate_to(self, accuracy):
        return [m for m in self.matches if m.strength >= accuracy]

    def __repr__(self, /):
        return f"<Search term={self.term!r} comparisons={len(self.comparisons)!r}>"


def suggestions(term, comparisons, limit=2, accuracy=0.6):
    return [str(m) for m in Search(term, comparisons).accurate_to(accuracy)[:limit]]
