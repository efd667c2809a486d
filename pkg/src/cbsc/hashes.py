"""Domain-separated hashing built on SHAKE-256.

Five roles share one XOF, separated by a one-byte prefix: four random
oracles (bit output for roles 0, 1, 3; trit output for role 2) and the
DEM keystream (role 4).  Inputs are sequences of fields; each field is
framed as an 8-byte big-endian bit count followed by its LSB-first byte
packing, so variable-length concatenations are unambiguous.
"""

from __future__ import annotations

import hashlib
import struct

import numpy as np

from .linalg import pack_bits, unpack_bits

H0 = 0  # session key derivation, output length ell
H1 = 1  # k-tilde-bit oracle (tags, coins, PKE randomness)
H2 = 2  # ternary syndrome target, output length r_s trits
H3 = 3  # (k-tilde + ell)-bit one-time pad over the PKE payload
DEM = 4  # symmetric keystream

_TRIT_REJECT = 243  # bytes >= 3^5 are rejected; acceptance rate 243/256


def _encode_field(field) -> bytes:
    if isinstance(field, (bytes, bytearray)):
        nbits = 8 * len(field)
        data = bytes(field)
    else:
        arr = np.asarray(field, dtype=np.uint8)
        nbits = arr.size
        data = pack_bits(arr)
    return struct.pack(">Q", nbits) + data


def _shake(domain: int, fields) -> "hashlib._hashlib.HASHXOF":
    xof = hashlib.shake_256()
    xof.update(bytes([domain]))
    for f in fields:
        xof.update(_encode_field(f))
    return xof


def hash_bytes(domain: int, fields, nbytes: int) -> bytes:
    return _shake(domain, fields).digest(nbytes)


def hash_bits(domain: int, fields, out_len_bits: int) -> np.ndarray:
    data = hash_bytes(domain, fields, (out_len_bits + 7) // 8)
    return unpack_bits(data, out_len_bits)


def hash_trits(fields, r_s: int) -> np.ndarray:
    """r_s exactly uniform trits via rejection sampling from the H2 stream.

    Each accepted byte b < 243 yields 5 base-3 digits, least significant
    first.  SHAKE output is prefix-stable, so extending the read on a
    rejection-heavy input is consistent.
    """
    if r_s < 1:
        raise ValueError("r_s must be >= 1")
    xof = _shake(H2, fields)
    need = (r_s + 4) // 5
    trits: list[int] = []
    nbytes = need + 8
    offset = 0
    stream = xof.digest(nbytes)
    while len(trits) < r_s:
        if offset == len(stream):
            nbytes *= 2
            stream = xof.digest(nbytes)
        b = stream[offset]
        offset += 1
        if b >= _TRIT_REJECT:
            continue
        for _ in range(5):
            trits.append(b % 3)
            b //= 3
    return np.array(trits[:r_s], dtype=np.uint8)


def keystream(key_bits: np.ndarray, nbytes: int) -> bytes:
    return hash_bytes(DEM, [key_bits], nbytes)
