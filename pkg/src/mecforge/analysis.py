"""Cryptographic quality metrics for S-boxes and randomness tests for sequences.

S-box metrics (nonlinearity, linear/differential approximation probability,
algebraic complexity, avalanche and bit-independence matrices) require the
table size to be a power of two; probabilities are exact fractions.
Sequence tests (histogram, entropy, period) apply to any finite sequence.
"""

import json
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from statistics import correlation as _pearson
from typing import Optional, Sequence

from . import gf256
from .errors import EmptySequence, NotPowerOfTwo, SizeMismatch, UnsupportedSize
from .generator import SBox, SprnSequence


def _nbits(sbox: SBox) -> int:
    n = (sbox.m - 1).bit_length()
    if sbox.m < 2 or sbox.m != 1 << n:
        raise NotPowerOfTwo(f"S-box size {sbox.m} is not a power of two")
    return n


def _walsh_spectrum_row(component: Sequence[int]) -> list[int]:
    """In-place fast Walsh-Hadamard transform of a +-1 component function."""
    w = list(component)
    h = 1
    while h < len(w):
        for i in range(0, len(w), h * 2):
            for j in range(i, i + h):
                u, v = w[j], w[j + h]
                w[j], w[j + h] = u + v, u - v
        h *= 2
    return w


def _max_abs_walsh(sbox: SBox) -> int:
    """max over non-zero output masks a and all input masks b of |W(a, b)|."""
    _nbits(sbox)
    size = sbox.m
    best = 0
    for a in range(1, size):
        comp = [1 if bin(a & v).count("1") % 2 == 0 else -1 for v in sbox.table]
        best = max(best, max(abs(w) for w in _walsh_spectrum_row(comp)))
    return best


def nonlinearity(sbox: SBox) -> int:
    """Minimum distance of any non-trivial component function to the affine functions."""
    n = _nbits(sbox)
    return (1 << (n - 1)) - _max_abs_walsh(sbox) // 2


def lap(sbox: SBox) -> Fraction:
    """Max bias of any linear approximation, over all input masks and non-zero output masks."""
    n = _nbits(sbox)
    return Fraction(_max_abs_walsh(sbox), 1 << (n + 1))


def dap(sbox: SBox) -> Fraction:
    """Largest differential propagation probability over non-zero input differences."""
    n = _nbits(sbox)
    size = sbox.m
    table = sbox.table
    best = 0
    for dx in range(1, size):
        counts = [0] * size
        for x in range(size):
            counts[table[x ^ dx] ^ table[x]] += 1
        best = max(best, max(counts))
    return Fraction(best, 1 << n)


def algebraic_complexity(sbox: SBox, reduction_poly: int = gf256.DEFAULT_POLY) -> int:
    """Number of non-zero coefficients of the S-box interpolated over GF(2^8)."""
    if sbox.m != 256:
        raise UnsupportedSize("algebraic complexity is defined for 256-entry S-boxes")
    coeffs = gf256.interpolate(list(sbox.table), reduction_poly)
    return sum(1 for c in coeffs if c)


def _bit(value: int, i: int) -> int:
    return (value >> i) & 1


def sac_matrix(sbox: SBox) -> list[list[Fraction]]:
    """entry[i][j]: probability that flipping input bit j flips output bit i."""
    n = _nbits(sbox)
    size = sbox.m
    table = sbox.table
    matrix = []
    for i in range(n):
        row = []
        for j in range(n):
            flips = sum(_bit(table[x ^ (1 << j)] ^ table[x], i) for x in range(size))
            row.append(Fraction(flips, size))
        matrix.append(row)
    return matrix


def bic_matrix(sbox: SBox) -> list[list[Optional[Fraction]]]:
    """entry[i][r]: avalanche probability of output-bit pair (i, r), averaged
    over all single-bit input flips.  Diagonal entries are None.
    """
    n = _nbits(sbox)
    size = sbox.m
    table = sbox.table
    matrix: list[list[Optional[Fraction]]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for r in range(i + 1, n):
            total = 0
            for j in range(n):
                for x in range(size):
                    d = table[x ^ (1 << j)] ^ table[x]
                    total += _bit(d, i) ^ _bit(d, r)
            value = Fraction(total, n * size)
            matrix[i][r] = matrix[r][i] = value
    return matrix


def sac_range(sbox: SBox) -> tuple[Fraction, Fraction]:
    entries = [e for row in sac_matrix(sbox) for e in row]
    return min(entries), max(entries)


def bic_range(sbox: SBox) -> tuple[Fraction, Fraction]:
    entries = [e for row in bic_matrix(sbox) for e in row if e is not None]
    return min(entries), max(entries)


def fixed_points(sbox: SBox) -> int:
    return sum(1 for i, v in enumerate(sbox.table) if i == v)


def correlation(s1: SBox, s2: SBox) -> float:
    """Pearson correlation of the two tables viewed as integer sequences."""
    if s1.m != s2.m:
        raise SizeMismatch(f"sizes differ: {s1.m} vs {s2.m}")
    return _pearson(s1.table, s2.table)


def distinct_count(family: Sequence[SBox]) -> int:
    return len({sbox.table for sbox in family})


@dataclass(frozen=True)
class AnalysisReport:
    nl: int
    lap: Fraction
    dap: Fraction
    ac: Optional[int]
    sac_min: Fraction
    sac_max: Fraction
    bic_min: Fraction
    bic_max: Fraction
    fixed_points: int

    def to_json(self, indent: Optional[int] = None) -> str:
        def frac(f: Fraction) -> dict:
            return {"num": f.numerator, "den": f.denominator, "approx": round(float(f), 4)}

        payload = {
            "nl": self.nl,
            "lap": frac(self.lap),
            "dap": frac(self.dap),
            "ac": self.ac if self.ac is not None else "n/a",
            "sac": {"min": frac(self.sac_min), "max": frac(self.sac_max)},
            "bic": {"min": frac(self.bic_min), "max": frac(self.bic_max)},
            "fixed_points": self.fixed_points,
        }
        return json.dumps(payload, indent=indent)


def analyze_sbox(sbox: SBox) -> AnalysisReport:
    """Full metric battery; AC is reported as None for sizes other than 256."""
    sac_lo, sac_hi = sac_range(sbox)
    bic_lo, bic_hi = bic_range(sbox)
    ac = algebraic_complexity(sbox) if sbox.m == 256 else None
    return AnalysisReport(
        nl=nonlinearity(sbox),
        lap=lap(sbox),
        dap=dap(sbox),
        ac=ac,
        sac_min=sac_lo,
        sac_max=sac_hi,
        bic_min=bic_lo,
        bic_max=bic_hi,
        fixed_points=fixed_points(sbox),
    )


@dataclass(frozen=True)
class Histogram:
    frequencies: dict[int, int]
    length: int

    def frequency(self, symbol: int) -> int:
        return self.frequencies.get(symbol, 0)

    def is_uniform(self) -> bool:
        return len(set(self.frequencies.values())) == 1


def histogram(seq: SprnSequence | Sequence[int]) -> Histogram:
    values = seq.values if isinstance(seq, SprnSequence) else tuple(seq)
    return Histogram(dict(Counter(values)), len(values))


def entropy(seq: SprnSequence | Sequence[int]) -> float:
    """Shannon entropy in bits over the observed symbols."""
    values = seq.values if isinstance(seq, SprnSequence) else tuple(seq)
    if not values:
        raise EmptySequence("entropy of an empty sequence")
    n = len(values)
    return -sum(f / n * math.log2(f / n) for f in Counter(values).values())


def period(seq: SprnSequence | Sequence[int]) -> int:
    """Least h >= 1 with values[i + h] == values[i] wherever both are defined."""
    values = seq.values if isinstance(seq, SprnSequence) else tuple(seq)
    if not values:
        raise EmptySequence("period of an empty sequence")
    n = len(values)
    for h in range(1, n):
        if all(values[i + h] == values[i] for i in range(n - h)):
            return h
    return n
