"""Randomness-recycling McEliece encryption over a permuted Goppa subcode.

Encryption coins are derived from the plaintext and the error vector is
the constant-weight encoding of the coin, so decryption can re-encrypt
and reject anything that was not honestly produced.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .cwencode import phi, phi_inv
from .goppa import ReceiverPublicKey, ReceiverSecretKey, decode_permuted
from .hashes import H1, H3, hash_bits
from .linalg import invert_matrix, vecmat


class PkeCiphertext(NamedTuple):
    c0: np.ndarray  # n_r bits
    c1: np.ndarray  # k_tilde + ell bits


def pke_encrypt(pk: ReceiverPublicKey, x: np.ndarray, y: np.ndarray,
                t: int) -> PkeCiphertext:
    """Encrypt x (k_tilde + ell bits) under coin y (kappa bits)."""
    k_tilde, n_r = pk.G.shape
    r = hash_bits(H1, [x, y], k_tilde)
    sigma = phi(y, n_r, t)
    c0 = vecmat(r, pk.G, 2) ^ sigma
    c1 = hash_bits(H3, [sigma], len(x)) ^ np.asarray(x, dtype=np.uint8)
    return PkeCiphertext(c0, c1)


def pke_decrypt(sk: ReceiverSecretKey, c: PkeCiphertext, t: int):
    """Recover (x, y) or None.  Fails on decoding failure, a non-encodable
    error vector, or a failed re-encryption check."""
    res = decode_permuted(sk, c.c0)
    if res is None:
        return None
    _, sigma = res
    y = phi_inv(sigma, t)
    if y is None:
        return None
    x = c.c1 ^ hash_bits(H3, [sigma], len(c.c1))
    k_tilde = sk.G_pk.shape[0]
    r = hash_bits(H1, [x, y], k_tilde)
    if np.any(vecmat(r, sk.G_pk, 2) ^ sigma != c.c0):
        return None
    return x, y


def recover_message(G_pk: np.ndarray, c0: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    """Solve r @ G_pk = c0 xor sigma via k-tilde independent columns."""
    from .linalg import mat_reduce

    _, rank, pivots = mat_reduce(G_pk, 2)
    if rank != G_pk.shape[0]:
        raise ValueError("public generator not full rank")
    u = (np.asarray(c0, dtype=np.uint8) ^ np.asarray(sigma, dtype=np.uint8))[pivots]
    inv = invert_matrix(G_pk[:, pivots], 2)
    return vecmat(u, inv, 2)
