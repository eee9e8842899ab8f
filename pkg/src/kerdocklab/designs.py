"""t-design verification, the block counting identity, and MacWilliams transforms.

Everything here is exact integer or rational arithmetic: all quantities are
counts, so there are no tolerances anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from collections.abc import Sequence

_DIRECT_SUBSET_CAP = 100_000_000   # enumerate t-subsets only while C(n,t) stays below this
_SAMPLE_TRIALS = 1_000_000


@dataclass
class DesignReport:
    """Result of grading a fixed-weight block set as a t-design."""

    n: int
    block_weight: int
    block_count: int
    strength: int
    lambdas: list[int] = field(default_factory=list)   # lambda_1 .. lambda_strength
    sampled: bool = False

    def lambda_at(self, t: int) -> int:
        if not 1 <= t <= self.strength:
            raise ValueError(f"level {t} beyond verified strength {self.strength}")
        return self.lambdas[t - 1]


def _support(word: int) -> tuple[int, ...]:
    out = []
    while word:
        b = word & -word
        out.append(b.bit_length() - 1)
        word ^= b
    return tuple(out)


def _uniform_cover_level_direct(blocks: Sequence[int], n: int, t: int) -> int | None:
    import numpy as np

    supports = [_support(w) for w in blocks]
    j = len(supports[0])
    # One coverage counter per ordered cell of an n^t cube; only the strictly
    # increasing cells are ever touched, and only those are inspected.
    cube = np.zeros(n ** t, dtype=np.int64)
    pick = np.array(list(combinations(range(j), t)), dtype=np.intp)
    weights = np.array([n ** (t - 1 - a) for a in range(t)], dtype=np.int64)
    for sup in supports:
        cells = np.asarray(sup, dtype=np.int64)[pick] @ weights
        np.add.at(cube, cells, 1)
    all_cells = np.array(list(combinations(range(n), t)), dtype=np.int64) @ weights
    vals = cube[all_cells]
    lo, hi = int(vals.min()), int(vals.max())
    return lo if lo == hi else None


def _uniform_cover_level(blocks: Sequence[int], n: int, t: int) -> int | None:
    """The common t-subset coverage count, or None if coverage is not uniform."""
    if comb(n, t) <= _DIRECT_SUBSET_CAP and n ** t <= 50_000_000:
        return _uniform_cover_level_direct(blocks, n, t)
    # Sampled fallback for astronomically many t-subsets.
    rng = random.Random(0xD0E5)
    coords = range(n)
    ref: int | None = None
    for _ in range(_SAMPLE_TRIALS):
        sub = rng.sample(coords, t)
        mask = sum(1 << c for c in sub)
        cnt = sum(1 for w in blocks if w & mask == mask)
        if ref is None:
            ref = cnt
        elif cnt != ref:
            return None
    return ref


def design_strength(blocks: Sequence[int], n: int, max_t: int) -> DesignReport:
    """Largest t <= max_t for which every t-subset lies in equally many blocks.

    All blocks must share one weight.  Reports every verified level's lambda;
    the invariant lambda_t * C(n,t) = |blocks| * C(j,t) holds per level.
    """
    if not blocks:
        raise ValueError("empty block set")
    weights = {w.bit_count() for w in blocks}
    if len(weights) != 1:
        raise ValueError(f"mixed block weights {sorted(weights)}")
    j = weights.pop()
    if max_t > j:
        raise ValueError(f"max_t={max_t} exceeds the block weight {j}")
    report = DesignReport(n=n, block_weight=j, block_count=len(blocks), strength=0,
                          sampled=comb(n, max_t) > _DIRECT_SUBSET_CAP)
    for t in range(1, max_t + 1):
        lam = _uniform_cover_level(blocks, n, t)
        if lam is None:
            break
        assert lam * comb(n, t) == len(blocks) * comb(j, t)
        report.lambdas.append(lam)
        report.strength = t
    return report


def magic_identity(x: int, blocks: Sequence[int], n: int) -> tuple[bool, int]:
    """Counting identity tying distances from x to a 1-design's blocks.

    For blocks of weight j forming a 1-design with index lam1 and a word x of
    weight i, summing the overlap (i + j - d(x, y)) / 2 over all blocks y
    must give i * lam1.  Returns (blocks form a 1-design, integer residual);
    the residual is 0 exactly when the identity holds.
    """
    report = design_strength(blocks, n, 1)
    if report.strength < 1:
        return False, 0
    lam1 = report.lambda_at(1)
    i = x.bit_count()
    j = report.block_weight
    twice_overlap = sum(i + j - (x ^ y).bit_count() for y in blocks)
    assert twice_overlap % 2 == 0
    return True, twice_overlap // 2 - i * lam1


def strength_prediction(dual_weight_distribution: dict[int, int], n: int,
                        primal_min_distance: int) -> int:
    """Guaranteed design strength d - s for the fixed-weight classes of a code.

    ``s`` counts the distinct weights present other than 0 and n, and ``d``
    is the minimum distance of the formally dual code.
    """
    nontrivial = {w for w, c in dual_weight_distribution.items() if c and w not in (0, n)}
    return primal_min_distance - len(nontrivial)


def krawtchouk(k: int, i: int, n: int) -> int:
    """Binary Krawtchouk polynomial value K_k(i; n)."""
    return sum((-1) ** l * comb(i, l) * comb(n - i, k - l) for l in range(k + 1))


def macwilliams_transform(weight_distribution: dict[int, int], n: int,
                          size: int) -> dict[int, Fraction]:
    """Weight distribution of the formal dual, as exact rationals.

    W'_k = (1/size) * sum_i W_i * K_k(i; n).  Zero entries are omitted; the
    values sum to 2^n / size.
    """
    if sum(weight_distribution.values()) != size:
        raise ValueError("weight distribution does not sum to the stated code size")
    out: dict[int, Fraction] = {}
    for k in range(n + 1):
        v = Fraction(sum(cnt * krawtchouk(k, i, n) for i, cnt in weight_distribution.items()), size)
        if v:
            out[k] = v
    return out


def formal_dual_min_distance(weight_distribution: dict[int, int], n: int, size: int) -> int:
    """Smallest nonzero weight of the MacWilliams transform."""
    dual = macwilliams_transform(weight_distribution, n, size)
    nonzero = [k for k in dual if k > 0]
    if not nonzero:
        raise ValueError("formal dual has no nonzero weights")
    if any(v < 0 for v in dual.values()):
        raise ValueError("transform has negative entries; inputs are not a valid pair")
    return min(nonzero)
