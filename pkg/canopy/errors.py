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

from canopy.utils.string import list_of


class CanopyError(Exception):
    def __init__(self, message):
        super().__init__(message)
        self.msg = message


# Tree input space.


class TreeError(CanopyError):
    pass


class EmptyInput(TreeError):
    def __init__(self):
        super().__init__("The edge list is empty. A tree needs at least one vertex.")


class MalformedLine(TreeError):
    def __init__(self, lineno, line):
        super().__init__(
            f"Line {lineno:,} ({line!r}) is not an edge. Use 'labelA labelB', or a single label for a one-vertex tree."
        )


class DuplicateEdge(TreeError):
    def __init__(self, u, v):
        super().__init__(f"The edge {u} {v} appears more than once. Tree edges must be unique.")


class CycleDetected(TreeError):
    def __init__(self, u, v):
        super().__init__(f"The edge {u} {v} closes a cycle. A tree must be acyclic.")


class Disconnected(TreeError):
    def __init__(self, components):
        super().__init__(f"The edges form {components:,} separate components. A tree must be connected.")


class UnknownVertex(TreeError):
    def __init__(self, label):
        super().__init__(f"The vertex {label!r} is not part of this tree.")


class EmptySet(TreeError):
    def __init__(self):
        super().__init__("The convex hull of an empty vertex set is undefined.")


class InvalidPath(TreeError):
    def __init__(self, reason):
        super().__init__(f"Not a simple path in this tree: {reason}.")


class DistinctStart(TreeError):
    def __init__(self, a, b):
        super().__init__(f"The paths start at different vertices ({a!r} and {b!r}), so they share no prefix.")


# Simulation.


class SimulationError(CanopyError):
    pass


class StrategyViolation(SimulationError):
    def __init__(self, reason):
        super().__init__(f"The adversary broke the model: {reason}.")


class NonTermination(SimulationError):
    def __init__(self, cap, waiting):
        super().__init__(f"Round cap of {cap:,} reached while parties {waiting} still had no output.")


class CorruptTranscript(SimulationError):
    def __init__(self, reason):
        super().__init__(f"The transcript can not be replayed: {reason}.")


# Protocols.


class ProtocolError(CanopyError):
    pass


class InvalidParams(ProtocolError):
    def __init__(self, reason):
        super().__init__(f"Invalid parameters: {reason}.")


class InsufficientValues(ProtocolError):
    def __init__(self, count, needed):
        super().__init__(f"Only {count:,} usable values were received, but trimming needs at least {needed:,}.")


class NoSupport(ProtocolError):
    def __init__(self, threshold):
        super().__init__(f"No path is supported by {threshold:,} or more entries.")


class NonFinite(ProtocolError):
    def __init__(self, value):
        super().__init__(f"{value!r} is not a finite real number.")


# Harness.


class HarnessError(CanopyError):
    pass


class ConfigError(HarnessError):
    def __init__(self, reason):
        super().__init__(f"Bad experiment configuration: {reason}.")


class UnknownName(HarnessError):
    def __init__(self, kind, name, suggestions=()):
        self.suggestions = tuple(suggestions)
        hint = f" Did you mean {list_of([repr(s) for s in self.suggestions], sep='or')}?" if self.suggestions else ""
        super().__init__(f"There is no {kind} called {name!r}.{hint}")


class ReportError(HarnessError):
    def __init__(self, reason):
        super().__init__(f"Can not emit the report: {reason}.")
