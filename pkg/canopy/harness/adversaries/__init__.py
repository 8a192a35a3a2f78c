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

"""Adversary registry.

Every module in this package is a plug-in exposing ``load(registry)``, which
registers one or more named strategy factories. A factory takes an
``AttackSetting`` and returns a fresh ``AdversaryStrategy``.
"""

from __future__ import annotations

import importlib
import logging
from pathlib import Path

from canopy.errors import UnknownName
from canopy.utils import search

log = logging.getLogger(__name__)


class Registry:
    def __init__(self):
        self._factories = {}
        self._descriptions = {}
        self._plugins = [p.stem for p in Path(__file__).parent.glob("*.py") if p.stem != "__init__"]

    def add(self, name, factory, description=""):
        if name in self._factories:
            raise ValueError(f"adversary {name!r} is already registered")
        self._factories[name] = factory
        self._descriptions[name] = description

    def load_plugins(self):
        for plugin in sorted(self._plugins):
            importlib.import_module(f"{__name__}.{plugin}").load(self)
            log.debug("Loaded the %s adversary plug-in.", plugin)
        return self

    @property
    def names(self):
        return tuple(sorted(self._factories))

    def describe(self, name):
        return self._descriptions[self._check(name)]

    def create(self, name, setting):
        return self._factories[self._check(name)](setting)

    def _check(self, name):
        if name not in self._factories:
            raise UnknownName("adversary", name, search.suggestions(name, self.names))
        return name

    def __contains__(self, name):
        return name in self._factories

    def __repr__(self):
        return f"<Registry adversaries={len(self._factories)!r}>"


_registry = None


def registry():
    global _registry

    if _registry is None:
        _registry = Registry().load_plugins()
    return _registry
