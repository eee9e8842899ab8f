"""Arithmetic in the Galois ring GR(4, t) and the Gray map.

Elements are tuples of t coordinates mod 4 w.r.t. the basis 1, xi, ...,
xi^(t-1) of Z4[x]/(h), where h is the Hensel lift of the degree-t binary
primitive polynomial from the GF(2^m) table.  This is the machinery behind
the Kerdock code generator in :mod:`kerdocklab.codes`.
"""

from __future__ import annotations

from .gf2m import PRIMITIVE_POLYS

RingElement = tuple[int, ...]

# Gray image of a Z4 symbol: (bit at even slot, bit at odd slot).
GRAY_PAIRS = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}

LEE_WEIGHT = {0: 0, 1: 1, 2: 2, 3: 1}


def hensel_lift(f_mask: int) -> tuple[int, ...]:
    """Lift a binary primitive polynomial to Z4 via the Graeffe square trick.

    The lift h satisfies h(x^2) = +-f(x) f(-x) mod 4, so h == f mod 2 and the
    class of x keeps multiplicative order 2^t - 1.  Coefficients are returned
    low degree first, length t+1, monic.
    """
    t = f_mask.bit_length() - 1
    f = [(f_mask >> i) & 1 for i in range(t + 1)]
    f_neg = [c * (-1) ** i % 4 for i, c in enumerate(f)]
    prod = [0] * (2 * t + 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(f_neg):
                prod[i + j] = (prod[i + j] + a * b) % 4
    if t % 2:
        prod = [-c % 4 for c in prod]
    if any(prod[i] for i in range(1, 2 * t + 1, 2)):
        raise ValueError("Graeffe product has odd-degree terms; input not a valid lift candidate")
    h = tuple(prod[2 * i] for i in range(t + 1))
    if tuple(c % 2 for c in h) != tuple(f):
        raise ValueError("lift does not reduce to the input polynomial mod 2")
    return h


class GaloisRing:
    """GR(4, t) = Z4[x]/(h) for odd t, with Frobenius, trace and Teichmueller set."""

    def __init__(self, t: int):
        if t % 2 == 0:
            raise ValueError(f"degree t={t} must be odd")
        if t not in PRIMITIVE_POLYS:
            raise ValueError(f"no primitive polynomial tabulated for t={t}")
        self.t = t
        self.h = hensel_lift(PRIMITIVE_POLYS[t])
        self.zero: RingElement = (0,) * t
        self.one: RingElement = (1,) + (0,) * (t - 1)
        xi: RingElement = tuple(1 if i == 1 else 0 for i in range(t))
        self.xi = xi

        # Teichmueller set {0, 1, xi, ..., xi^(2^t-2)}; xi must have order 2^t-1.
        teich = [self.zero, self.one]
        p = xi
        for _ in range(2 ** t - 2):
            if p == self.one:
                raise ValueError("xi has too small an order; lift is not basic primitive")
            teich.append(p)
            p = self.mul(p, xi)
        if p != self.one:
            raise ValueError("xi does not have order 2^t - 1")
        self.teichmueller: list[RingElement] = teich
        # Residue image (coords mod 2, as a t-bit int) indexes the set uniquely.
        self._teich_by_residue = {self.residue(u): u for u in teich}
        assert len(self._teich_by_residue) == 2 ** t

    # -- elementary ops --------------------------------------------------

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        return tuple((x + y) % 4 for x, y in zip(a, b))

    def scalar_mul(self, c: int, a: RingElement) -> RingElement:
        return tuple((c * x) % 4 for x in a)

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        t, h = self.t, self.h
        prod = [0] * (2 * t - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % 4
        for deg in range(2 * t - 2, t - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i in range(t):
                    prod[deg - t + i] = (prod[deg - t + i] - c * h[i]) % 4
        return tuple(prod[:t])

    def residue(self, a: RingElement) -> int:
        """Image in the residue field GF(2^t), packed as a t-bit int."""
        r = 0
        for i, c in enumerate(a):
            r |= (c & 1) << i
        return r

    # -- structure maps ---------------------------------------------------

    def two_adic(self, a: RingElement) -> tuple[RingElement, RingElement]:
        """Unique decomposition a = u + 2v with u, v in the Teichmueller set."""
        u = self._teich_by_residue[self.residue(a)]
        diff = tuple((x - y) % 4 for x, y in zip(a, u))
        assert all(c % 2 == 0 for c in diff)
        v = self._teich_by_residue[sum(((c >> 1) & 1) << i for i, c in enumerate(diff))]
        return u, v

    def frobenius(self, a: RingElement) -> RingElement:
        """Ring automorphism u + 2v -> u^2 + 2v^2."""
        u, v = self.two_adic(a)
        return self.add(self.mul(u, u), self.scalar_mul(2, self.mul(v, v)))

    def trace(self, a: RingElement) -> int:
        """Z4-valued trace: sum of the t Frobenius conjugates."""
        s = self.zero
        x = a
        for _ in range(self.t):
            s = self.add(s, x)
            x = self.frobenius(x)
        assert all(c == 0 for c in s[1:]), "trace landed outside Z4"
        return s[0]


def gray_map(symbols) -> int:
    """Binary image of a Z4 word; symbol i fills bit positions 2i and 2i+1.

    The Lee weight of the input equals the Hamming weight of the image.
    """
    w = 0
    for i, s in enumerate(symbols):
        g0, g1 = GRAY_PAIRS[s % 4]
        w |= g0 << (2 * i)
        w |= g1 << (2 * i + 1)
    return w


def lee_weight(symbols) -> int:
    return sum(LEE_WEIGHT[s % 4] for s in symbols)
