"""Independent reference implementations used to cross-check the fast paths.

Everything here is deliberately brute force and shares no code with the
package internals beyond the public data types.
"""

from itertools import product

from mecforge.generator import SBox
from mecforge.ordering import Ordering


def brute_force_points(p: int, b: int) -> list[tuple[int, int]]:
    """All affine (x, y) with y^2 = x^3 + b (mod p), by full scan."""
    return [(x, y) for x in range(p) for y in range(p)
            if (y * y - x * x * x - b) % p == 0]


def brute_force_squares(p: int) -> set[int]:
    return {x * x % p for x in range(1, p)}


def ordering_key(kind: Ordering, p: int):
    if kind is Ordering.NATURAL:
        return lambda pt: (pt[0], pt[1])
    if kind is Ordering.DIFFUSION:
        return lambda pt: (pt[0] + pt[1], pt[0])
    return lambda pt: ((pt[0] + pt[1]) % p, pt[0])


def sbox_trial_loop(p: int, b: int, kind: Ordering, elements, k: int) -> SBox:
    """S-box built exactly as the O(mp) construction prescribes.

    For each seed y the x-partner is found by trying every x in [0, p-1]
    until the curve equation holds; no cube roots.
    """
    points = []
    for y in elements:
        target = (y * y - b) % p
        for x in range(p):
            if (x * x % p) * x % p == target:
                points.append((x, y))
                break
        else:
            raise AssertionError(f"no x found for y={y}")
    points.sort(key=ordering_key(kind, p))
    m = len(points)
    seq = [y % m for _, y in points]
    table = tuple(seq[(i + k) % m] for i in range(m))
    return SBox(table, m)


def sprn_trial_loop(p: int, b: int, kind: Ordering, y_set, m: int, k: int) -> list[int]:
    points = []
    for y in sorted(set(y_set)):
        target = (y * y - b) % p
        for x in range(p):
            if (x * x % p) * x % p == target:
                points.append((x, y))
                break
    points.sort(key=ordering_key(kind, p))
    n = len(points)
    return [points[(i + k) % n][1] % m for i in range(n)]


def count_complete_sets_exhaustive(p: int, m: int) -> int:
    """Enumerate every (m, p)-complete set explicitly and count them."""
    classes = [[v for v in range(p) if v % m == r] for r in range(m)]
    count = 0
    for candidate in product(*classes):
        assert len({v % m for v in candidate}) == m
        count += 1
    return count


def nonlinearity_direct(sbox: SBox) -> int:
    """Definitional nonlinearity: exhaustive distance to every affine function."""
    n = (sbox.m - 1).bit_length()
    size = sbox.m
    best = size
    for a in range(1, size):
        comp = [bin(a & v).count("1") & 1 for v in sbox.table]
        for beta in range(size):
            lin = [bin(beta & x).count("1") & 1 for x in range(size)]
            d = sum(c ^ l for c, l in zip(comp, lin))
            best = min(best, d, size - d)
    return best
