"""Constant-weight encoding between bit strings and weight-t vectors.

The encoding is the colexicographic combinadic: a t-subset
{c_0 < c_1 < ... < c_{t-1}} of [0, n) has rank sum(C(c_i, i+1)).  Ranks
below 2^kappa are exactly the encodable bit strings; weight-t vectors
whose rank is >= 2^kappa are outside the image and decode to None.
"""

from __future__ import annotations

from math import comb

import numpy as np


def kappa(n: int, t: int) -> int:
    """floor(log2(C(n, t))), from the exact big-integer binomial."""
    if not 0 <= t <= n:
        raise ValueError("need 0 <= t <= n")
    return comb(n, t).bit_length() - 1


def rank_support(support) -> int:
    """Colex rank of a strictly increasing index sequence."""
    return sum(comb(int(c), i + 1) for i, c in enumerate(support))


def unrank_support(r: int, n: int, t: int) -> list[int]:
    """t-subset of [0, n) with colex rank r."""
    if not 0 <= r < comb(n, t):
        raise ValueError("rank out of range")
    support = [0] * t
    k = t
    while k > 0:
        n -= 1
        offset = comb(n, k)
        if r >= offset:
            r -= offset
            k -= 1
            support[k] = n
    return support


def bits_to_int(bits: np.ndarray) -> int:
    """LSB-first bit vector to integer."""
    v = 0
    for i, b in enumerate(np.asarray(bits, dtype=np.uint8)):
        if b:
            v |= 1 << i
    return v


def int_to_bits(v: int, nbits: int) -> np.ndarray:
    return np.array([(v >> i) & 1 for i in range(nbits)], dtype=np.uint8)


def phi(y: np.ndarray, n: int, t: int) -> np.ndarray:
    """Encode kappa(n, t) bits into a length-n weight-t binary vector."""
    if len(y) != kappa(n, t):
        raise ValueError("input must have exactly kappa(n, t) bits")
    support = unrank_support(bits_to_int(y), n, t)
    sigma = np.zeros(n, dtype=np.uint8)
    sigma[support] = 1
    return sigma


def phi_inv(sigma: np.ndarray, t: int) -> np.ndarray | None:
    """Left inverse of phi; None when the vector is outside phi's image."""
    sigma = np.asarray(sigma, dtype=np.uint8)
    support = np.nonzero(sigma)[0]
    if len(support) != t:
        return None
    n = len(sigma)
    k = kappa(n, t)
    r = rank_support(support)
    if r >= (1 << k):
        return None
    return int_to_bits(r, k)
