"""Exception hierarchy shared by all mecforge modules."""


class MecforgeError(Exception):
    """Base class for all errors raised by this package."""


# --- field arithmetic ---

class ZeroInverse(MecforgeError):
    """Multiplicative inverse of zero was requested."""


class ZeroInput(MecforgeError):
    """Zero passed where a non-zero residue is required (QR test)."""


class NonResidue(MecforgeError):
    """Square root of a quadratic non-residue was requested."""


class NotAdmissible(MecforgeError):
    """Operation requires a prime p with p = 2 (mod 3)."""


class NotPrime(MecforgeError):
    """Modulus failed the primality check."""


# --- curves ---

class ZeroParameter(MecforgeError):
    """Isomorphism parameter t must be non-zero."""


class TooLarge(MecforgeError):
    """Exhaustive enumeration guard exceeded."""


# --- complete sets / generators ---

class InvalidCompleteSet(MecforgeError):
    """Candidate set is not an (m, p)-complete set."""


class DuplicateResidue(InvalidCompleteSet):
    """Two elements are congruent modulo m."""


class OutOfRange(InvalidCompleteSet):
    """An element lies outside [0, p-1]."""


class WrongSize(InvalidCompleteSet):
    """Set size does not match the declared m."""


class EmptySet(MecforgeError):
    """Sequence generation requires a non-empty input set."""


class BadModulus(MecforgeError):
    """Sequence modulus m must satisfy 1 <= m <= |A|."""


# --- analysis ---

class NotPowerOfTwo(MecforgeError):
    """Metric requires an S-box whose size is a power of two."""


class UnsupportedSize(MecforgeError):
    """Metric is only defined for 256-entry S-boxes."""


class SizeMismatch(MecforgeError):
    """Two S-boxes of different sizes were compared."""


class EmptySequence(MecforgeError):
    """Statistic requires a non-empty sequence."""
