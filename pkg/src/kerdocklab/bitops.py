"""GF(2) linear algebra on int bitmasks plus numpy bit-packing helpers.

Codewords are Python ints with coordinate i at bit i (LSB-first).  All the
heavy pairwise work goes through numpy; single words stay plain ints.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

_U1 = np.uint64(1)

if hasattr(np, "bitwise_count"):
    def popcount_u64(a: np.ndarray) -> np.ndarray:
        return np.bitwise_count(a)
else:  # numpy < 2.0
    _TABLE = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

    def popcount_u64(a: np.ndarray) -> np.ndarray:
        b = a.view(np.uint8).reshape(a.shape + (8,))
        return _TABLE[b].sum(axis=-1, dtype=np.uint8)


def span_gf2(generators: Sequence[int]) -> list[int]:
    """All XOR combinations of the generators, via Gray-code enumeration.

    Returns 2**len(generators) words (with repeats if the rows are
    dependent); the zero word comes first.
    """
    words = [0] * (1 << len(generators))
    cur = 0
    for idx in range(1, len(words)):
        cur ^= generators[(idx & -idx).bit_length() - 1]
        words[idx] = cur
    return words


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of a set of bitmask rows over GF(2)."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            p = r.bit_length() - 1
            if p not in basis:
                basis[p] = r
                break
            r ^= basis[p]
    return len(basis)


class RankAccumulator:
    """Incremental GF(2) rank with early exit for streaming row feeds."""

    def __init__(self) -> None:
        self._basis: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self._basis)

    def add(self, row: int) -> bool:
        """Reduce a row into the basis; True if the rank grew."""
        while row:
            p = row.bit_length() - 1
            if p not in self._basis:
                self._basis[p] = row
                return True
            row ^= self._basis[p]
        return False

    def reduce(self, row: int) -> int:
        """Remainder of the row after elimination by the current basis.

        Every pivot bit is cleared, so rows in one coset of the span share
        the same remainder and it doubles as a canonical coset label.
        """
        for p in sorted(self._basis, reverse=True):
            if (row >> p) & 1:
                row ^= self._basis[p]
        return row

    def contains(self, row: int) -> bool:
        """Whether the row lies in the span accumulated so far."""
        return self.reduce(row) == 0

    def basis_rows(self) -> list[int]:
        return sorted(self._basis.values())


def words_to_uint64(words: Sequence[int]) -> np.ndarray:
    """Pack words of length <= 64 into a (N,) uint64 array."""
    return np.array(words, dtype=np.uint64)


def words_to_limbs(words: Sequence[int], n: int) -> np.ndarray:
    """Pack words of any length into a (N, ceil(n/64)) uint64 limb matrix."""
    limbs = (n + 63) // 64
    out = np.empty((len(words), limbs), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, w in enumerate(words):
        for j in range(limbs):
            out[i, j] = (w >> (64 * j)) & mask
    return out


def pairwise_distances(packed: np.ndarray, chunk: int = 1024) -> np.ndarray:
    """Full Hamming distance matrix for a (N,) uint64 word array."""
    n_words = len(packed)
    out = np.empty((n_words, n_words), dtype=np.uint8)
    for lo in range(0, n_words, chunk):
        hi = min(lo + chunk, n_words)
        out[lo:hi] = popcount_u64(packed[lo:hi, None] ^ packed[None, :])
    return out


def distances_from(packed: np.ndarray, word: int) -> np.ndarray:
    """Hamming distances from one word to every row of a limb matrix."""
    if packed.ndim == 1:
        return popcount_u64(packed ^ np.uint64(word))
    row = words_to_limbs([word], packed.shape[1] * 64)[0]
    return popcount_u64(packed ^ row[None, :]).sum(axis=1, dtype=np.int64)


def bit_columns(packed: np.ndarray, n: int) -> np.ndarray:
    """(N, n) uint8 matrix of individual bits of a (N,) uint64 word array."""
    shifts = np.arange(n, dtype=np.uint64)
    return ((packed[:, None] >> shifts[None, :]) & _U1).astype(np.uint8)
