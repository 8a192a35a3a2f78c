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

"""Wire formats. Everything is big-endian.

real    8-byte IEEE-754 double
path    u32 vertex count, then per label a u32 byte length and UTF-8 bytes
item    u8 tag (0 = bottom, 1 = present), present items add a u32 length and bytes
vector  u32 item count, then that many items
"""

from __future__ import annotations

import math
import struct

_REAL = struct.Struct(">d")
_U8 = struct.Struct(">B")
_U32 = struct.Struct(">I")


class MalformedPayload(ValueError):
    pass


class _Reader:
    def __init__(self, data):
        self.data = bytes(data)
        self.offset = 0

    def take(self, fmt):
        try:
            (value,) = fmt.unpack_from(self.data, self.offset)
        except struct.error:
            raise MalformedPayload(f"truncated at byte {self.offset}") from None
        self.offset += fmt.size
        return value

    def raw(self, size):
        if self.offset + size > len(self.data):
            raise MalformedPayload(f"needs {size} bytes at byte {self.offset}")
        chunk = self.data[self.offset : self.offset + size]
        self.offset += size
        return chunk

    def finish(self):
        if self.offset != len(self.data):
            raise MalformedPayload(f"{len(self.data) - self.offset} trailing bytes")


def encode_real(value):
    return _REAL.pack(value)


def decode_real(data):
    if len(data) != _REAL.size:
        raise MalformedPayload(f"a real is {_REAL.size} bytes, got {len(data)}")
    if not math.isfinite(value := _REAL.unpack(data)[0]):
        raise MalformedPayload(f"{value!r} is not finite")
    return value


def encode_path(vertices):
    out = [_U32.pack(len(vertices))]
    for label in vertices:
        raw = label.encode("utf-8")
        out.append(_U32.pack(len(raw)))
        out.append(raw)
    return b"".join(out)


def decode_path(data):
    reader = _Reader(data)
    count = reader.take(_U32)
    if count > len(data):
        raise MalformedPayload(f"claims {count} vertices in {len(data)} bytes")

    try:
        labels = tuple(reader.raw(reader.take(_U32)).decode("utf-8") for _ in range(count))
    except UnicodeDecodeError as err:
        raise MalformedPayload(str(err)) from None

    reader.finish()
    return labels


def encode_vector(items):
    out = [_U32.pack(len(items))]
    for item in items:
        if item is None:
            out.append(_U8.pack(0))
        else:
            out.append(_U8.pack(1) + _U32.pack(len(item)) + item)
    return b"".join(out)


def decode_vector(data, n):
    reader = _Reader(data)
    if (count := reader.take(_U32)) != n:
        raise MalformedPayload(f"expected {n} items, got {count}")

    items = []
    for _ in range(count):
        if (tag := reader.take(_U8)) == 0:
            items.append(None)
        elif tag == 1:
            items.append(reader.raw(reader.take(_U32)))
        else:
            raise MalformedPayload(f"unknown item tag {tag}")

    reader.finish()
    return items
