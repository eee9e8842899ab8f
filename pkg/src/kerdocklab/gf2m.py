"""Arithmetic in GF(2^m) for 3 <= m <= 10.

Elements are machine ints in [0, 2^m) holding polynomial-basis coordinates;
multiplication is carry-less with reduction by a fixed primitive modulus, so
outputs are reproducible bit-for-bit across platforms.
"""

from __future__ import annotations

from functools import reduce

# Fixed primitive modulus per extension degree (bitmask, degree-m bit set).
PRIMITIVE_POLYS: dict[int, int] = {
    3: 0b1011,           # x^3 + x + 1
    4: 0b10011,          # x^4 + x + 1
    5: 0b100101,         # x^5 + x^2 + 1
    6: 0b1000011,        # x^6 + x + 1
    7: 0b10001001,       # x^7 + x^3 + 1
    8: 0b100011101,      # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,     # x^9 + x^4 + 1
    10: 0b10000001001,   # x^10 + x^3 + 1
}


class GaloisField:
    """GF(2^m) with generator alpha = the class of x (always primitive here)."""

    def __init__(self, m: int, check: bool = True):
        if m not in PRIMITIVE_POLYS:
            raise ValueError(f"unsupported extension degree m={m}; need 3 <= m <= 10")
        self.m = m
        self.modulus = PRIMITIVE_POLYS[m]
        self.size = 1 << m
        self.order = self.size - 1
        self.generator = 2
        if check and self.element_order(self.generator) != self.order:
            raise ValueError(f"modulus {self.modulus:#x} is not primitive for m={m}")

    def mul(self, a: int, b: int) -> int:
        """Carry-less product reduced modulo the field polynomial."""
        m, mod = self.m, self.modulus
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if (a >> m) & 1:
                a ^= mod
        return r

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k else 1
        k %= self.order
        r = 1
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def trace(self, a: int) -> int:
        """Absolute trace to GF(2): sum of the m Frobenius conjugates."""
        s = 0
        x = a
        for _ in range(self.m):
            s ^= x
            x = self.mul(x, x)
        assert s in (0, 1)
        return s

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("order of 0 is undefined")
        p, k = a, 1
        while p != 1:
            p = self.mul(p, a)
            k += 1
            if k > self.order:
                raise AssertionError("element order exceeds group order")
        return k

    def power_table(self) -> list[int]:
        """[alpha^0, alpha^1, ..., alpha^(2^m-2)]."""
        out = [1]
        for _ in range(self.order - 1):
            out.append(self.mul(out[-1], self.generator))
        return out

    def cyclotomic_coset(self, s: int) -> list[int]:
        """Exponent coset {s, 2s, 4s, ...} mod 2^m-1, sorted."""
        coset = set()
        c = s % self.order
        while c not in coset:
            coset.add(c)
            c = (2 * c) % self.order
        return sorted(coset)

    def minimal_polynomial(self, s: int) -> list[int]:
        """GF(2) coefficients (low degree first) of the minimal polynomial of alpha^s."""
        poly = [1]
        for e in self.cyclotomic_coset(s):
            root = self.pow(self.generator, e)
            nxt = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i] ^= self.mul(c, root)
                nxt[i + 1] ^= c
            poly = nxt
        assert all(c in (0, 1) for c in poly), "minimal polynomial left the base field"
        return poly


def field_new(m: int) -> GaloisField:
    """Field with the fixed table modulus for the given degree."""
    return GaloisField(m)


def poly_mul_gf2(a: list[int], b: list[int]) -> list[int]:
    """Product of two GF(2)[x] polynomials given as 0/1 coefficient lists."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] ^= y
    return out


def poly_to_mask(coeffs: list[int]) -> int:
    """Coefficient list (low first) to a bitmask with coefficient i at bit i."""
    return reduce(lambda acc, c: (acc << 1) | c, reversed(coeffs), 0)
