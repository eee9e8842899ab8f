"""Association-scheme checks for the distance restriction of the Hamming scheme.

For a code C, partition C x C by Hamming distance.  The partition is an
association scheme iff for every ordered pair (x, y) at distance i, the
count of z at distance j from x and k from y depends only on (i, j, k).
``restriction_scheme_check`` verifies this by counting all triples (full
mode) or seeded random pairs (sampled mode) and returns the intersection
tensor, recording per-relation consistency so partially regular codes still
expose their well-defined rows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from math import isqrt

import numpy as np

from .bitops import pairwise_distances, popcount_u64, words_to_limbs
from .codes import Code

FULL_MODE_SIZE_CAP = 4096


@dataclass
class IntersectionTensor:
    """Triple-count table delta[(i,j,k)] with a consistency verdict.

    Entries are stored for every relation row i that is pair-independent;
    ``consistent`` is True when all rows are.  ``witness`` pins down the
    first violation as (x, y, x2, y2, (j, k), count_xy, count_x2y2): two
    pairs in the same distance class whose (j, k) counts differ.
    """

    n: int
    size: int
    relations: tuple[int, ...]
    delta: dict[tuple[int, int, int], int] = field(default_factory=dict)
    consistent: bool = True
    row_consistent: dict[int, bool] = field(default_factory=dict)
    witness: tuple | None = None
    mode: str = "full"

    def entry(self, i: int, j: int, k: int) -> int:
        return self.delta[(i, j, k)]

    def row_sums(self, i: int, j: int) -> int:
        """Sum over k of delta[(i,j,k)], the count of words at distance j."""
        return sum(v for (ii, jj, _), v in self.delta.items() if ii == i and jj == j)


def _distance_matrix(code: Code) -> np.ndarray:
    if code.n <= 64:
        return pairwise_distances(code.packed()).astype(np.int32)
    limbs = words_to_limbs(code.words, code.n)
    n_words = len(limbs)
    out = np.empty((n_words, n_words), dtype=np.int32)
    for i in range(n_words):
        out[i] = popcount_u64(limbs ^ limbs[i][None, :]).sum(axis=1, dtype=np.int32)
    return out


def _full_check(code: Code) -> IntersectionTensor:
    d_matrix = _distance_matrix(code)
    n_words = code.size
    rels = tuple(int(v) for v in np.unique(d_matrix))
    flat_d = d_matrix.ravel()
    order = np.argsort(flat_d, kind="stable")
    sorted_d = flat_d[order]
    bounds = {i: (int(np.searchsorted(sorted_d, i, "left")),
                  int(np.searchsorted(sorted_d, i, "right"))) for i in rels}

    # Relation indicators as float32: counts stay below 2^24, so the BLAS
    # products are exact integers.
    masks = {j: (d_matrix == j).astype(np.float32) for j in rels}
    tensor = IntersectionTensor(n=code.n, size=n_words, relations=rels,
                                row_consistent={i: True for i in rels})
    for j, k in product(rels, rels):
        counts = (masks[j] @ masks[k]).ravel()[order]
        for i in rels:
            lo, hi = bounds[i]
            seg = counts[lo:hi]
            first = float(seg[0])
            if bool((seg != first).any()):
                tensor.row_consistent[i] = False
                tensor.consistent = False
                if tensor.witness is None:
                    off = int(np.argmax(seg != first))
                    fa, fb = int(order[lo]), int(order[lo + off])
                    tensor.witness = (code.words[fa // n_words], code.words[fa % n_words],
                                      code.words[fb // n_words], code.words[fb % n_words],
                                      (j, k), int(first), int(seg[off]))
            else:
                tensor.delta[(i, j, k)] = int(first)
    for i in rels:
        if not tensor.row_consistent[i]:
            for j, k in product(rels, rels):
                tensor.delta.pop((i, j, k), None)
    return tensor


def _pair_profile(limbs: np.ndarray, x_idx: int, y_idx: int, n: int) -> np.ndarray:
    """Joint (d(x,z), d(y,z)) histogram over all codewords z, flattened."""
    if limbs.ndim == 1:
        dx = popcount_u64(limbs ^ limbs[x_idx]).astype(np.int64)
        dy = popcount_u64(limbs ^ limbs[y_idx]).astype(np.int64)
    else:
        dx = popcount_u64(limbs ^ limbs[x_idx][None, :]).sum(axis=1, dtype=np.int64)
        dy = popcount_u64(limbs ^ limbs[y_idx][None, :]).sum(axis=1, dtype=np.int64)
    return np.bincount(dx * (n + 1) + dy, minlength=(n + 1) * (n + 1))


def _sampled_check(code: Code, seed: int, trials: int) -> IntersectionTensor:
    rng = random.Random(seed)
    n = code.n
    limbs = code.packed() if n <= 64 else words_to_limbs(code.words, n)
    references: dict[int, np.ndarray] = {}
    ref_pair: dict[int, tuple[int, int]] = {}
    tensor = IntersectionTensor(n=n, size=code.size, relations=(),
                                mode=f"sampled(seed={seed},trials={trials})")
    size = code.size
    for _ in range(trials):
        a = rng.randrange(size)
        b = rng.randrange(size)
        if limbs.ndim == 1:
            dist = int(limbs[a] ^ limbs[b]).bit_count()
        else:
            dist = (code.words[a] ^ code.words[b]).bit_count()
        profile = _pair_profile(limbs, a, b, n)
        if dist not in references:
            references[dist] = profile
            ref_pair[dist] = (a, b)
            tensor.row_consistent[dist] = True
        elif tensor.row_consistent[dist] and not np.array_equal(references[dist], profile):
            tensor.row_consistent[dist] = False
            tensor.consistent = False
            if tensor.witness is None:
                jk_flat = int(np.argmax(references[dist] != profile))
                j, k = divmod(jk_flat, n + 1)
                ra, rb = ref_pair[dist]
                tensor.witness = (code.words[ra], code.words[rb],
                                  code.words[a], code.words[b], (j, k),
                                  int(references[dist][jk_flat]), int(profile[jk_flat]))
    tensor.relations = tuple(sorted(references))
    for i, profile in references.items():
        if not tensor.row_consistent[i]:
            continue
        for jk_flat in np.nonzero(profile)[0]:
            j, k = divmod(int(jk_flat), n + 1)
            tensor.delta[(i, j, k)] = int(profile[jk_flat])
    return tensor


def restriction_scheme_check(code: Code, mode: str = "full", seed: int | None = None,
                             trials: int = 100_000) -> IntersectionTensor:
    """Verify pair-independence of triple counts within each distance class.

    Full mode enumerates every ordered pair (the matrix-product route counts
    all |C|^3 triples exactly) and requires |C| <= 4096.  Sampled mode draws
    seeded random pairs; each sampled pair is still scanned against every
    codeword, so recorded counts are exact.
    """
    if code.size == 0:
        raise ValueError("empty code")
    if mode == "full":
        if code.size > FULL_MODE_SIZE_CAP:
            raise ValueError(f"full mode caps at {FULL_MODE_SIZE_CAP} words; use sampled mode")
        return _full_check(code)
    if mode == "sampled":
        if seed is None:
            raise ValueError("sampled mode requires a seed")
        return _sampled_check(code, seed, trials)
    raise ValueError(f"unknown mode {mode!r}")


def predicted_kerdock_deltas(n: int, d: int) -> tuple[int, int]:
    """Closed-form scheme entries for the extended doubly shortened Kerdock code.

    Returns ((n^2 - 6n - 2nd + 8d) / (4(n - 2d)), (n^2 - 2nd + 2n) / (4(n - 2d)))
    as exact integers; raises if the parameters are not Kerdock-shaped or a
    division is not exact.
    """
    root = isqrt(n)
    if root * root != n or d != (n - root) // 2:
        raise ValueError(f"(n={n}, d={d}) are not Kerdock parameters")
    den = 4 * (n - 2 * d)
    num_a = n * n - 6 * n - 2 * n * d + 8 * d
    num_b = n * n - 2 * n * d + 2 * n
    if num_a % den or num_b % den:
        raise ValueError("closed forms are not integral at these parameters")
    return num_a // den, num_b // den


@dataclass
class ExtensionIdentityReport:
    """Outcome of checking the base-vs-extension intersection identities."""

    ok: bool
    precondition_disjoint: bool
    relations_ok: bool
    entries_checked: int
    mismatches: list[tuple] = field(default_factory=list)


def _extension_entry_prediction(v1: int, v2: int, v3: int, base: IntersectionTensor,
                                base_rels: frozenset[int], n: int) -> list[int]:
    """Predicted extension-tensor entries from the base tensor.

    A distance v in the extension reads as a base distance v (pair inside one
    half) and/or as n - v (pair across halves).  Counting z over both halves
    gives, for an inside pair, delta(v1, v2, v3) + delta(v1, n-v2, n-v3), and
    for a cross pair, delta(n-v1, v2, n-v3) + delta(n-v1, n-v2, v3); terms
    with any index outside the base relations vanish.  Both applicable sums
    are returned (they must agree if the extension row is pair-independent).
    """
    def term(i: int, j: int, k: int) -> int:
        if i in base_rels and j in base_rels and k in base_rels:
            return base.delta[(i, j, k)]
        return 0

    sums = []
    if v1 in base_rels:
        sums.append(term(v1, v2, v3) + term(v1, n - v2, n - v3))
    if (n - v1) in base_rels:
        sums.append(term(n - v1, v2, n - v3) + term(n - v1, n - v2, v3))
    return sums


def extension_relation_check(base: IntersectionTensor,
                             ext: IntersectionTensor) -> ExtensionIdentityReport:
    """Check every well-defined extension entry against the base tensor.

    When the base distance set is disjoint from its reflection {n - i}, the
    predictions reduce to the single-term identities (entries with an odd
    number of reflected indices vanish, the rest equal the base entries).
    The report carries that disjointness verdict; predictions are verified
    either way, restricted to extension rows that are pair-independent.
    """
    if base.n != ext.n:
        raise ValueError("tensors have different lengths")
    if not base.consistent:
        raise ValueError("base tensor must be fully consistent")
    n = base.n
    base_rels = frozenset(base.relations)
    expected_rels = sorted(base_rels | {n - i for i in base_rels})
    relations_ok = list(ext.relations) == expected_rels
    disjoint = base_rels.isdisjoint({n - i for i in base_rels})

    mismatches: list[tuple] = []
    checked = 0
    for (v1, v2, v3), actual in ext.delta.items():
        sums = _extension_entry_prediction(v1, v2, v3, base, base_rels, n)
        checked += 1
        if any(actual != s for s in sums):
            mismatches.append(((v1, v2, v3), sums, actual))
    return ExtensionIdentityReport(ok=relations_ok and not mismatches,
                                   precondition_disjoint=disjoint,
                                   relations_ok=relations_ok,
                                   entries_checked=checked,
                                   mismatches=mismatches)
