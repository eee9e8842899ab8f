"""Connectivity of minimum-distance-with-flip graphs and related structure.

For a code C with minimum distance d, the graph at coordinate i joins
codewords at distance d whose i-th bits differ.  Its connected components
("i-components") are computed two ways: a direct graph route (pairwise
distances + union-find / sparse connected components) and, for linear codes,
a span-rank route: the component of 0 is the GF(2) span of the minimum-weight
words with a 1 at position i, so the component count is 2^(dim - rank).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .bitops import RankAccumulator, bit_columns, gf2_rank, pairwise_distances
from .codes import BchParityCheck, Code, build_rm1
from .gf2m import GaloisField

GRAPH_SIZE_CAP = 1 << 17
_NUMPY_PATH_MIN_SIZE = 512


@dataclass
class ComponentReport:
    coordinate: int
    d_used: int
    component_count: int
    component_sizes: list[int]          # descending
    method: str                         # "graph" | "span"
    assumed_min_distance: bool = False
    parity_split: bool | None = None    # set by the parity classification check


class UnionFind:
    """Disjoint sets over 0..n-1 with union by size and path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]

    def component_sizes(self) -> list[int]:
        roots: dict[int, int] = {}
        for x in range(len(self.parent)):
            r = self.find(x)
            roots[r] = roots.get(r, 0) + 1
        return sorted(roots.values(), reverse=True)


def _component_labels_numpy(code: Code, coords: list[int], d: int):
    """Yield (coordinate, labels array) sharing one distance-matrix pass."""
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    dist = pairwise_distances(code.packed())
    edge_a, edge_b = np.nonzero(np.triu(dist == d, k=1))
    bits = bit_columns(code.packed(), code.n)
    n_words = code.size
    for i in coords:
        keep = bits[edge_a, i] != bits[edge_b, i]
        graph = coo_matrix((np.ones(int(keep.sum()), dtype=np.int8),
                            (edge_a[keep], edge_b[keep])), shape=(n_words, n_words))
        _, labels = connected_components(graph, directed=False)
        yield i, labels


def _component_labels_python(code: Code, coords: list[int], d: int):
    words = code.words
    n_words = len(words)
    edges = [(a, b) for a in range(n_words) for b in range(a + 1, n_words)
             if (words[a] ^ words[b]).bit_count() == d]
    for i in coords:
        uf = UnionFind(n_words)
        for a, b in edges:
            if ((words[a] >> i) ^ (words[b] >> i)) & 1:
                uf.union(a, b)
        yield i, np.array([uf.find(x) for x in range(n_words)])


def _component_labels(code: Code, coords: list[int], d: int):
    if code.n <= 64 and code.size >= _NUMPY_PATH_MIN_SIZE:
        yield from _component_labels_numpy(code, coords, d)
    else:
        yield from _component_labels_python(code, coords, d)


def i_components_sweep(code: Code, coordinates: list[int] | None = None,
                       d: int | None = None) -> list[ComponentReport]:
    """Graph-method component reports for several coordinates at once.

    The minimum-distance edge set is derived once and filtered per
    coordinate, which is what makes whole-code sweeps cheap.
    """
    if code.size > GRAPH_SIZE_CAP:
        raise ValueError(f"graph method caps at {GRAPH_SIZE_CAP} words; use the span method")
    if coordinates is None:
        coordinates = list(range(code.n))
    for i in coordinates:
        if not 0 <= i < code.n:
            raise ValueError(f"coordinate {i} out of range for length {code.n}")
    if code.size == 1:
        return [ComponentReport(coordinate=i, d_used=0, component_count=1,
                                component_sizes=[1], method="graph") for i in coordinates]
    d_used = code.min_distance() if d is None else d
    out = []
    for i, labels in _component_labels(code, coordinates, d_used):
        _, counts = np.unique(labels, return_counts=True)
        out.append(ComponentReport(coordinate=i, d_used=d_used,
                                   component_count=len(counts),
                                   component_sizes=sorted((int(c) for c in counts), reverse=True),
                                   method="graph"))
    return out


def i_components(code: Code, i: int) -> ComponentReport:
    """Components of the minimum-distance-with-flip graph at one coordinate."""
    return i_components_sweep(code, [i])[0]


def parity_classification_check(kerdock: Code, p: int, coordinates: list[int] | None = None) -> bool:
    """After puncturing at p, each coordinate's two components split by parity.

    The classes are the words whose weight, ignoring the probe coordinate i,
    is even resp. odd.  Returns True when every requested coordinate yields
    exactly two components equal to those classes.
    """
    punct = kerdock.puncture(p)
    if coordinates is None:
        coordinates = list(range(punct.n))
    d_used = punct.min_distance()
    weights = np.array([w.bit_count() for w in punct.words])
    bits = bit_columns(punct.packed(), punct.n) if punct.n <= 64 else None
    for i, labels in _component_labels(punct, coordinates, d_used):
        if bits is not None:
            parity = (weights - bits[:, i]) % 2
        else:
            parity = np.array([(w.bit_count() - ((w >> i) & 1)) % 2 for w in punct.words])
        if len(np.unique(labels)) != 2:
            return False
        # Partition equality: labels constant on each parity class, and the
        # classes land on different labels.
        lab_even = set(labels[parity == 0].tolist())
        lab_odd = set(labels[parity == 1].tolist())
        if len(lab_even) != 1 or len(lab_odd) != 1 or lab_even == lab_odd:
            return False
    return True


# ---------------------------------------------------------------------------
# Span-rank route for linear codes
# ---------------------------------------------------------------------------

def min_weight_words_through(pc: BchParityCheck, i: int,
                             pair_index: dict[int, list[tuple[int, int]]] | None = None) -> list[int]:
    """All weight-5 codewords of the parity-check code with a 1 at position i.

    Meet-in-the-middle over position pairs: the remaining four support
    positions {a,b,c,d} split into two pairs whose syndromes XOR to the
    syndrome of {i}.  The designed-distance bound rules out lighter words, so
    any overlap between candidate pairs would imply an impossible codeword
    and is filtered by the distinctness check.
    """
    if not 0 <= i < pc.n:
        raise ValueError(f"coordinate {i} out of range for length {pc.n}")
    if pair_index is None:
        pair_index = syndrome_pair_index(pc)
    field = GaloisField(pc.m)
    powers = field.power_table()

    def key(p: int) -> int:
        return powers[p] | (powers[(3 * p) % pc.n] << pc.m)

    target = key(i)
    assert target != 0
    found: set[frozenset[int]] = set()
    for k1, plist in pair_index.items():
        k2 = k1 ^ target
        if k2 < k1:
            continue
        qlist = pair_index.get(k2)
        if not qlist:
            continue
        for a, b in plist:
            for c, d in qlist:
                support = {a, b, c, d, i}
                if len(support) == 5:
                    found.add(frozenset(support))
    words = [sum(1 << p for p in s) for s in sorted(map(sorted, found))]
    assert all(pc.is_codeword(w) for w in words)
    return words


def syndrome_pair_index(pc: BchParityCheck) -> dict[int, list[tuple[int, int]]]:
    """Syndrome -> position pairs map, shared across per-coordinate searches."""
    field = GaloisField(pc.m)
    powers = field.power_table()
    keys = [powers[p] | (powers[(3 * p) % pc.n] << pc.m) for p in range(pc.n)]
    index: dict[int, list[tuple[int, int]]] = {}
    for p, q in combinations(range(pc.n), 2):
        index.setdefault(keys[p] ^ keys[q], []).append((p, q))
    return index


def linear_span_components(code: Code | BchParityCheck, i: int, w: int | None = None,
                           pair_index=None) -> ComponentReport:
    """Component count of a linear code via the rank of its flip connectors.

    Translation preserves the graph's edges in a linear code, so the
    component of 0 is the span of V_i = {v in C : w(v) = d, v_i = 1} and the
    count is 2^(dim - rank(V_i)).  Enumerated codes use their exact minimum
    distance; parity-check descriptions take the designed distance 5, flagged
    in the report (finding any weight-5 word then pins the true distance).
    """
    if isinstance(code, BchParityCheck):
        rows = min_weight_words_through(code, i, pair_index=pair_index)
        if not rows:
            raise ValueError(f"no minimum-weight words through coordinate {i}")
        rank = gf2_rank(rows)
        dim = code.dimension
        return ComponentReport(coordinate=i, d_used=code.designed_distance,
                               component_count=1 << (dim - rank),
                               component_sizes=[1 << rank] * (1 << (dim - rank)),
                               method="span", assumed_min_distance=True)
    if not code.is_linear():
        raise ValueError("span method requires a linear code")
    if not 0 <= i < code.n:
        raise ValueError(f"coordinate {i} out of range for length {code.n}")
    d_used = code.min_distance() if w is None else w
    acc = RankAccumulator()
    seen = 0
    for v in code.words:
        if (v >> i) & 1 and v.bit_count() == d_used:
            seen += 1
            acc.add(v)
    if seen == 0:
        raise ValueError(f"no weight-{d_used} words through coordinate {i}")
    dim = code.dimension()
    count = 1 << (dim - acc.rank)
    return ComponentReport(coordinate=i, d_used=d_used, component_count=count,
                           component_sizes=[1 << acc.rank] * count, method="span")


def span_rank_sweep(code: Code, coordinates: list[int] | None = None) -> dict[int, int]:
    """rank(V_i) for many coordinates of an enumerated linear code at once."""
    if not code.is_linear():
        raise ValueError("span method requires a linear code")
    d = code.min_distance()
    rows = [v for v in code.words if v.bit_count() == d]
    if coordinates is None:
        coordinates = list(range(code.n))
    dim = code.dimension()
    out: dict[int, int] = {}
    for i in coordinates:
        acc = RankAccumulator()
        for v in rows:
            if (v >> i) & 1 and acc.add(v) and acc.rank == dim:
                break
        out[i] = acc.rank
    return out


# ---------------------------------------------------------------------------
# Switching
# ---------------------------------------------------------------------------

def _transpose_bits(word: int, p: int, q: int) -> int:
    bp = (word >> p) & 1
    bq = (word >> q) & 1
    word &= ~((1 << p) | (1 << q))
    return word | (bq << p) | (bp << q)


def switching_check(kerdock: Code, p: int, q: int) -> bool:
    """Flipping one parity class across coordinate pairs only permutes coordinates.

    Splits the code by the bit pattern at (p, q), represents the mixed
    patterns as a Reed-Muller translate with pattern 01, swaps it for the
    pattern-10 translate, and verifies the result equals the original code
    with coordinates p and q transposed.
    """
    if p == q:
        raise ValueError("positions must differ")
    m = kerdock.n.bit_length() - 1
    rm = build_rm1(m)
    same = [w for w in kerdock.words if ((w >> p) ^ (w >> q)) & 1 == 0]
    pattern = next((x for x in rm.words if not (x >> p) & 1 and (x >> q) & 1), None)
    if pattern is None:
        raise ValueError("no Reed-Muller word with pattern 01 at the chosen pair")
    rebuilt = set(same) | {w ^ pattern for w in same}
    if rebuilt != kerdock.word_set:
        return False
    switched = set(same) | {w ^ pattern ^ (1 << p) ^ (1 << q) for w in same}
    transposed = {_transpose_bits(w, p, q) for w in kerdock.words}
    return switched == transposed


def random_coordinate_pairs(n: int, count: int, seed: int) -> list[tuple[int, int]]:
    """Deterministic sample of distinct coordinate pairs."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = rng.randrange(n)
        q = rng.randrange(n - 1)
        if q >= p:
            q += 1
        out.append((p, q))
    return out
