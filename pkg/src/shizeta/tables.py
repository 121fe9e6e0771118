"""Inverse tables for the type C zeta maps, optionally cached on disk.

No direct inversion procedure is implemented; the inverse of a forward map
is read off a table of all forward images for the given n. Tables are kept
in memory and, when ``SHIZETA_TABLE_DIR`` is set, stored there in a small
binary format:

    header   b"SHZT" | version u8 | kind u8 | n u8 | count u32
    record   key path | key labels | value path | value labels

where a path is a u8 length followed by ASCII ``N``/``E`` bytes and a label
list is a u8 length followed by signed bytes. All integers are
little-endian.
"""

from __future__ import annotations

import io
import os
import struct
from functools import lru_cache
from pathlib import Path

from .labelled import DiagonalPath, VerticalPath, enumerate_vertical_C
from .paths import enumerate_L
from .zeta import zeta_C, zeta_labelled_C

MAGIC = b"SHZT"
VERSION = 1
UNLABELLED, LABELLED = 0, 1
MAX_N = {UNLABELLED: 8, LABELLED: 5}

Entry = tuple[str, tuple[int, ...], str, tuple[int, ...]]


class TableFormatError(ValueError):
    pass


def _write_path(buf: io.BytesIO, path: str) -> None:
    buf.write(struct.pack("<B", len(path)))
    buf.write(path.encode("ascii"))


def _write_labels(buf: io.BytesIO, labels: tuple[int, ...]) -> None:
    buf.write(struct.pack("<B", len(labels)))
    buf.write(struct.pack(f"<{len(labels)}b", *labels))


def dump_table(kind: int, n: int, entries: list[Entry]) -> bytes:
    buf = io.BytesIO()
    buf.write(MAGIC)
    buf.write(struct.pack("<BBBI", VERSION, kind, n, len(entries)))
    for key_path, key_labels, val_path, val_labels in entries:
        _write_path(buf, key_path)
        _write_labels(buf, key_labels)
        _write_path(buf, val_path)
        _write_labels(buf, val_labels)
    return buf.getvalue()


def load_table(data: bytes, kind: int, n: int) -> list[Entry]:
    if data[:4] != MAGIC:
        raise TableFormatError("bad magic")
    try:
        version, k, nn, count = struct.unpack_from("<BBBI", data, 4)
    except struct.error:
        raise TableFormatError("truncated header") from None
    if version != VERSION:
        raise TableFormatError(f"unsupported table version {version}")
    if (k, nn) != (kind, n):
        raise TableFormatError(f"table holds kind {k}, n={nn}; wanted kind {kind}, n={n}")
    pos = 4 + struct.calcsize("<BBBI")

    def path() -> str:
        nonlocal pos
        (length,) = struct.unpack_from("<B", data, pos)
        s = data[pos + 1:pos + 1 + length].decode("ascii")
        pos += 1 + length
        return s

    def labels() -> tuple[int, ...]:
        nonlocal pos
        (length,) = struct.unpack_from("<B", data, pos)
        vals = struct.unpack_from(f"<{length}b", data, pos + 1)
        pos += 1 + length
        return tuple(vals)

    out = []
    try:
        for _ in range(count):
            out.append((path(), labels(), path(), labels()))
    except (struct.error, UnicodeDecodeError):
        raise TableFormatError("truncated records") from None
    if pos != len(data):
        raise TableFormatError("trailing bytes after records")
    return out


def _build(kind: int, n: int) -> list[Entry]:
    if kind == UNLABELLED:
        return [(zeta_C(p), (), p, ()) for p in enumerate_L(n)]
    out = []
    for v in enumerate_vertical_C(n):
        d = zeta_labelled_C(v)
        out.append((d.path, d.labels, v.path, v.labels))
    return out


def _cache_file(kind: int, n: int) -> Path | None:
    root = os.environ.get("SHIZETA_TABLE_DIR")
    if not root:
        return None
    name = "zeta_c" if kind == UNLABELLED else "zeta_c_labelled"
    return Path(root) / f"{name}_n{n}.bin"


@lru_cache(maxsize=None)
def inverse_table(kind: int, n: int) -> dict:
    if not 1 <= n <= MAX_N[kind]:
        raise ValueError(f"inverse table bound exceeded: n={n}, max {MAX_N[kind]}")
    entries = None
    cache = _cache_file(kind, n)
    if cache is not None and cache.exists():
        try:
            entries = load_table(cache.read_bytes(), kind, n)
        except TableFormatError:
            entries = None
    if entries is None:
        entries = _build(kind, n)
        if cache is not None:
            cache.parent.mkdir(parents=True, exist_ok=True)
            cache.write_bytes(dump_table(kind, n, entries))
    table = {}
    for key_path, key_labels, val_path, val_labels in entries:
        key = (key_path, key_labels)
        if key in table:
            raise AssertionError(f"forward map not injective at {key_path}")
        table[key] = (val_path, val_labels)
    return table


def zeta_C_inverse(path: str) -> str:
    if len(path) % 2:
        raise ValueError("ballot paths have even length")
    table = inverse_table(UNLABELLED, len(path) // 2)
    try:
        return table[path, ()][0]
    except KeyError:
        raise ValueError(f"{path} is not the image of any lattice path") from None


def zeta_labelled_C_inverse(d: DiagonalPath) -> VerticalPath:
    table = inverse_table(LABELLED, len(d.path) // 2)
    try:
        path, labels = table[d.path, tuple(d.labels)]
    except KeyError:
        raise ValueError(f"{d} is not the image of any labelled path") from None
    return VerticalPath(path, labels)
