"""Arithmetic over the prime field F_p.

Includes quadratic-residue testing, modular square roots and the cube-root
bijection that exists exactly when p = 2 (mod 3).  All values are canonical
residues in [0, p-1]; all operations are pure.
"""

from dataclasses import dataclass, field

from .errors import NonResidue, NotAdmissible, NotPrime, ZeroInput, ZeroInverse

# Deterministic Miller-Rabin witness set, valid for every n < 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin with a witness set that is deterministic below 2^64."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeModulus:
    """A validated odd prime modulus.

    ``mec_admissible`` is true exactly when p = 2 (mod 3), the condition
    under which the Mordell curve y^2 = x^3 + b carries every residue
    exactly once as a y-coordinate.
    """

    p: int
    mec_admissible: bool = field(init=False)

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0 or not is_prime(self.p):
            raise NotPrime(f"{self.p} is not an odd prime")
        object.__setattr__(self, "mec_admissible", self.p % 3 == 2)

    def _check(self, a: int) -> int:
        if not 0 <= a < self.p:
            raise ValueError(f"{a} is not a canonical residue mod {self.p}")
        return a

    def pow(self, base: int, exp: int) -> int:
        """base^exp mod p for exp >= 0."""
        if exp < 0:
            raise ValueError("exponent must be non-negative")
        return pow(self._check(base), exp, self.p)

    def inverse(self, a: int) -> int:
        """Multiplicative inverse of a, a != 0."""
        if self._check(a) == 0:
            raise ZeroInverse(f"0 has no inverse mod {self.p}")
        return pow(a, -1, self.p)

    def is_quadratic_residue(self, a: int) -> bool:
        """Euler criterion: a is a QR iff a^((p-1)/2) = 1 (mod p)."""
        if self._check(a) == 0:
            raise ZeroInput("0 is neither a QR nor a QNR")
        return pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a: int) -> tuple[int, int]:
        """Both square roots {r, p-r} of a quadratic residue a.

        Uses the (p+1)/4 exponent when p = 3 (mod 4), Tonelli-Shanks
        otherwise.  Returns (0, 0) for a = 0.
        """
        p = self.p
        if self._check(a) == 0:
            return (0, 0)
        if not self.is_quadratic_residue(a):
            raise NonResidue(f"{a} is not a quadratic residue mod {p}")
        if p % 4 == 3:
            r = pow(a, (p + 1) // 4, p)
        else:
            r = self._tonelli_shanks(a)
        return (r, p - r) if r <= p - r else (p - r, r)

    def _tonelli_shanks(self, a: int) -> int:
        p = self.p
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = self.smallest_qnr()
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            t2, i = t, 0
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return r

    def cube_root(self, a: int) -> int:
        """The unique cube root of a; cubing is a bijection when p = 2 (mod 3).

        The inverse exponent is d = (2p-1)/3, since 3d = 1 (mod p-1).
        """
        if not self.mec_admissible:
            raise NotAdmissible(f"p = {self.p} is not 2 (mod 3)")
        return pow(self._check(a), (2 * self.p - 1) // 3, self.p)

    def smallest_qnr(self) -> int:
        """Smallest quadratic non-residue in [2, p-1]."""
        for a in range(2, self.p):
            if not self.is_quadratic_residue(a):
                return a
        raise AssertionError("unreachable: every odd prime has a QNR")


def mod_pow(base: int, exp: int, modulus: PrimeModulus) -> int:
    return modulus.pow(base, exp)


def mod_inverse(a: int, modulus: PrimeModulus) -> int:
    return modulus.inverse(a)


def is_quadratic_residue(a: int, modulus: PrimeModulus) -> bool:
    return modulus.is_quadratic_residue(a)


def sqrt_mod(a: int, modulus: PrimeModulus) -> tuple[int, int]:
    return modulus.sqrt(a)


def cube_root(a: int, modulus: PrimeModulus) -> int:
    return modulus.cube_root(a)


def smallest_qnr(modulus: PrimeModulus) -> int:
    return modulus.smallest_qnr()
