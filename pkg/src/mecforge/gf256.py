"""GF(2^8) arithmetic and univariate polynomial interpolation.

Multiplication uses log/antilog tables built for the chosen reduction
polynomial (default 0x11B, the one under which the AES S-box has the
classic 9-term algebraic expression).
"""

from dataclasses import dataclass
from functools import lru_cache

DEFAULT_POLY = 0x11B


def _raw_mul(a: int, b: int, poly: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        if a & 0x100:
            a ^= poly
        b >>= 1
    return r


@lru_cache(maxsize=None)
def _tables(poly: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(log, exp) tables over a generator of the multiplicative group."""
    for g in range(2, 256):
        exp = [1]
        x = 1
        for _ in range(254):
            x = _raw_mul(x, g, poly)
            exp.append(x)
        if len(set(exp)) == 255:
            log = [0] * 256
            for i, v in enumerate(exp):
                log[v] = i
            return tuple(log), tuple(exp)
    raise ValueError(f"0x{poly:X} is not a valid GF(2^8) reduction polynomial")


def mul(a: int, b: int, poly: int = DEFAULT_POLY) -> int:
    if a == 0 or b == 0:
        return 0
    log, exp = _tables(poly)
    return exp[(log[a] + log[b]) % 255]


def inv(a: int, poly: int = DEFAULT_POLY) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(2^8)")
    log, exp = _tables(poly)
    return exp[(255 - log[a]) % 255]


def gf_pow(a: int, e: int, poly: int = DEFAULT_POLY) -> int:
    if a == 0:
        return 0 if e else 1
    log, exp = _tables(poly)
    return exp[log[a] * e % 255]


@dataclass(frozen=True)
class Gf256Element:
    """A field element; arithmetic delegates to the table-driven functions."""

    bits: int
    reduction_poly: int = DEFAULT_POLY

    def __post_init__(self):
        if not 0 <= self.bits <= 0xFF:
            raise ValueError(f"{self.bits} is not an 8-bit value")

    def _wrap(self, bits: int) -> "Gf256Element":
        return Gf256Element(bits, self.reduction_poly)

    def __add__(self, other: "Gf256Element") -> "Gf256Element":
        return self._wrap(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "Gf256Element") -> "Gf256Element":
        return self._wrap(mul(self.bits, other.bits, self.reduction_poly))

    def inverse(self) -> "Gf256Element":
        return self._wrap(inv(self.bits, self.reduction_poly))

    def __int__(self) -> int:
        return self.bits


def poly_eval(coeffs: list[int], x: int, poly: int = DEFAULT_POLY) -> int:
    """Horner evaluation; coeffs[i] is the coefficient of x^i."""
    acc = 0
    for c in reversed(coeffs):
        acc = mul(acc, x, poly) ^ c
    return acc


def interpolate(values: list[int], poly: int = DEFAULT_POLY) -> list[int]:
    """Coefficients of the unique polynomial with P(i) = values[i] for all i in [0, 255].

    Lagrange form: the master product M(x) = prod(x - x_j) over all of
    GF(2^8) is x^256 + x, each basis numerator is M(x) / (x - x_i) by
    synthetic division, and the denominator is its value at x_i.
    """
    if len(values) != 256:
        raise ValueError("interpolation is defined on all 256 field points")
    coeffs = [0] * 256
    # M(x) = x^256 + x; synthetic division by (x - xi) never needs the x^256
    # term explicitly: M/(x - xi) has degree 255.
    master = [0] * 257
    master[256] = 1
    master[1] = 1
    for xi, yi in enumerate(values):
        if yi == 0:
            continue
        # quotient q of M(x) / (x + xi), degree 255
        q = [0] * 256
        carry = master[256]
        for d in range(255, -1, -1):
            q[d] = carry
            carry = master[d] ^ mul(carry, xi, poly)
        denom = poly_eval(q, xi, poly)
        scale = mul(yi, inv(denom, poly), poly)
        for d in range(256):
            if q[d]:
                coeffs[d] ^= mul(scale, q[d], poly)
    return coeffs
