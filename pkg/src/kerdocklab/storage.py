"""On-disk code container.

Layout: magic "KCDK" | version byte (1) | n_bits as u16 LE | count as u64 LE |
count records of ceil(n/8) bytes.  Records store coordinate i at byte i>>3,
bit i&7 (LSB first) and appear in strictly increasing little-endian integer
order, so files are canonical and byte-for-byte reproducible.
"""

from __future__ import annotations

import struct
from pathlib import Path

from .codes import Code

MAGIC = b"KCDK"
VERSION = 1
_HEADER = struct.Struct("<4sBHQ")


class CodeFileError(Exception):
    """Base error for malformed code files."""


class BadMagicError(CodeFileError):
    pass


class UnsupportedVersionError(CodeFileError):
    pass


class TruncatedFileError(CodeFileError):
    pass


class RecordOrderError(CodeFileError):
    pass


def write_code(code: Code, path: str | Path) -> None:
    """Serialize a code; ``read_code`` restores it bit-exactly."""
    rec = (code.n + 7) // 8
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(MAGIC, VERSION, code.n, code.size))
        for w in code.words:
            fh.write(w.to_bytes(rec, "little"))


def read_code(path: str | Path) -> Code:
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size:
        raise TruncatedFileError(f"{path}: shorter than the fixed header")
    magic, version, n_bits, count = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise BadMagicError(f"{path}: bad magic {magic!r}")
    if version != VERSION:
        raise UnsupportedVersionError(f"{path}: unsupported version {version}")
    if not 0 < n_bits <= 1024:
        raise CodeFileError(f"{path}: implausible length {n_bits}")
    rec = (n_bits + 7) // 8
    payload = data[_HEADER.size:]
    if len(payload) != count * rec:
        raise TruncatedFileError(
            f"{path}: payload holds {len(payload)} bytes, expected {count * rec}")
    words = []
    prev = -1
    for r in range(count):
        w = int.from_bytes(payload[r * rec:(r + 1) * rec], "little")
        if w >> n_bits:
            raise CodeFileError(f"{path}: record {r} sets bits beyond the stated length")
        if w <= prev:
            raise RecordOrderError(f"{path}: record {r} violates strict ascending order")
        prev = w
        words.append(w)
    return Code(n_bits, words, family=None, validate=False)
