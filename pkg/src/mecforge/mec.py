"""Mordell elliptic curves y^2 = x^3 + b over F_p with p = 2 (mod 3).

Because cubing is a bijection on F_p for such primes, every y in [0, p-1]
appears exactly once as a y-coordinate, so the curve has exactly p affine
points and point lookup by y-coordinate is a single cube root.  The group
law is never used; all downstream machinery only needs point enumeration,
total orders, and the isomorphism (x, y) -> (t^2 x, t^3 y).
"""

import os
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

from .errors import TooLarge, ZeroParameter
from .field import PrimeModulus

DEFAULT_MAX_ENUM_P = 1 << 26


class CurvePoint(NamedTuple):
    x: int
    y: int


class CurveClass(Enum):
    """Isomorphism class of a Mordell curve; only two exist for p = 2 (mod 3)."""

    C1 = "C1"
    C2 = "C2"


@dataclass(frozen=True)
class MordellCurve:
    modulus: PrimeModulus
    b: int

    def __post_init__(self):
        if not self.modulus.mec_admissible:
            raise ValueError(f"p = {self.p} is not admissible (need p = 2 mod 3, p > 3)")
        if not 1 <= self.b <= self.p - 1:
            raise ValueError(f"b = {self.b} must lie in [1, p-1]")

    @property
    def p(self) -> int:
        return self.modulus.p

    def contains(self, point: CurvePoint) -> bool:
        x, y = point
        return (y * y - (x * x % self.p) * x - self.b) % self.p == 0


def x_for_y(curve: MordellCurve, y: int) -> int:
    """The unique x with (x, y) on the curve: x = cbrt(y^2 - b)."""
    return curve.modulus.cube_root((y * y - curve.b) % curve.p)


def point_for_y(curve: MordellCurve, y: int) -> CurvePoint:
    return CurvePoint(x_for_y(curve, y), y)


def _enum_guard() -> int:
    value = os.environ.get("MECFORGE_MAX_P")
    return int(value) if value else DEFAULT_MAX_ENUM_P


def enumerate_points(curve: MordellCurve, max_p: Optional[int] = None) -> list[CurvePoint]:
    """All p affine points, one per y in [0, p-1].  Identity excluded."""
    guard = max_p if max_p is not None else _enum_guard()
    if curve.p > guard:
        raise TooLarge(f"p = {curve.p} exceeds the enumeration guard {guard}")
    return [point_for_y(curve, y) for y in range(curve.p)]


def classify(curve: MordellCurve) -> CurveClass:
    """C1 iff b is a quadratic residue (iff the curve has a point with x = 0)."""
    return CurveClass.C1 if curve.modulus.is_quadratic_residue(curve.b) else CurveClass.C2


def representative(modulus: PrimeModulus, curve_class: CurveClass) -> int:
    """Canonical b for each class: 1 for C1, the smallest QNR for C2."""
    return 1 if curve_class is CurveClass.C1 else modulus.smallest_qnr()


def iso_map_point(point: CurvePoint, t: int, modulus: PrimeModulus) -> CurvePoint:
    """Image (t^2 x, t^3 y) of a point under the isomorphism with parameter t.

    Maps E_{p,b} onto E_{p, t^6 b}.
    """
    p = modulus.p
    if t % p == 0:
        raise ZeroParameter("isomorphism parameter t must be non-zero")
    t2 = t * t % p
    return CurvePoint(t2 * point.x % p, t2 * t % p * point.y % p)


def iso_param_between(b1: int, b2: int, modulus: PrimeModulus) -> Optional[int]:
    """The isomorphism parameter t in [1, (p-1)/2] with t^6 b1 = b2, or None.

    None means the curves lie in different classes (b2/b1 has no sixth root).
    """
    s = modulus.cube_root(b2 * modulus.inverse(b1) % modulus.p)
    if not modulus.is_quadratic_residue(s):
        return None
    lo, hi = modulus.sqrt(s)
    return lo if 1 <= lo <= (modulus.p - 1) // 2 else hi
