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

import csv
import io
import json
from pathlib import Path

from canopy.errors import ReportError
from canopy.harness.experiment import RunReport

CSV_FIELDS = (
    "seed",
    "mode",
    "n",
    "t",
    "tree_kind",
    "vertices",
    "diameter",
    "rounds",
    "lb_rounds",
    "max_dist",
    "valid",
)


def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def emit_report(reports, format="csv"):
    if not reports:
        raise ReportError("there are no reports to emit")

    if format == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"

    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for r in reports:
            writer.writerow([_cell(getattr(r, f)) for f in CSV_FIELDS])
        return buffer.getvalue()

    raise ReportError(f"unknown format {format!r}")


def parse_report(text):
    try:
        return [RunReport.from_dict(item) for item in json.loads(text)]
    except (json.JSONDecodeError, TypeError, KeyError) as err:
        raise ReportError(f"not a JSON report ({err})") from None


def write_report(reports, format, out=None):
    document = emit_report(reports, format)
    if out is None:
        return document

    try:
        Path(out).write_text(document, encoding="utf-8")
    except OSError as err:
        raise ReportError(f"can not write {out} ({err.strerror})") from None
    return document
