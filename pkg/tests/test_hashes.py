"""Hash roles: frozen regression vectors, framing unambiguity, and
statistical sanity of the uniform trit extraction."""

import numpy as np
import pytest

from cbsc.hashes import (
    DEM,
    H0,
    H1,
    H2,
    H3,
    hash_bits,
    hash_bytes,
    hash_trits,
    keystream,
)

# regression vectors computed with an independent SHAKE-256 framing
# implementation and frozen
V_H0_ABC = "bb8765472c920d70bd82db89a712576e"
V_H1_ABC = "eaa12361c94f2df9bd63290d662dd9ea"
V_H1_AB_C = "b6fed7cb0fe1dddf7a3f3fdbed405102"
V_H3_BITS = [1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 0, 1, 0, 1]
V_H2_TRITS = [2, 0, 1, 2, 2, 2, 1, 2, 2, 2, 1, 0, 0, 2, 1, 2, 1, 2, 1, 1,
              0, 2, 1, 2]


def test_frozen_vectors():
    assert hash_bytes(H0, [b"abc"], 16).hex() == V_H0_ABC
    assert hash_bytes(H1, [b"abc"], 16).hex() == V_H1_ABC
    assert hash_bytes(H1, [b"ab", b"c"], 16).hex() == V_H1_AB_C
    bits = hash_bits(H3, [np.array([1, 0, 1, 1, 0], dtype=np.uint8), b"xy"], 19)
    assert list(bits) == V_H3_BITS
    trits = hash_trits([b"tag", np.array([1, 1, 0, 0], dtype=np.uint8)], 24)
    assert list(trits) == V_H2_TRITS


def test_domains_separate():
    outs = {hash_bytes(d, [b"same input"], 16) for d in (H0, H1, H2, H3, DEM)}
    assert len(outs) == 5


def test_field_framing_unambiguous():
    # same concatenated bytes, different field boundaries
    assert hash_bytes(H0, [b"ab", b"c"], 8) != hash_bytes(H0, [b"abc"], 8)
    assert hash_bytes(H0, [b"a", b"bc"], 8) != hash_bytes(H0, [b"ab", b"c"], 8)


def test_bit_length_disambiguates():
    # 12 zero bits and 16 zero bits pack to the same bytes but hash apart
    a = hash_bytes(H0, [np.zeros(12, dtype=np.uint8)], 8)
    b = hash_bytes(H0, [np.zeros(16, dtype=np.uint8)], 8)
    assert a != b


def test_bit_array_vs_equivalent_bytes():
    # an 8-bit array frames identically to its packed byte
    arr = np.array([1, 1, 0, 0, 0, 0, 0, 0], dtype=np.uint8)
    assert hash_bytes(H0, [arr], 8) == hash_bytes(H0, [b"\x03"], 8)


def test_hash_bits_length_and_determinism():
    for n in (1, 7, 8, 9, 64, 513):
        out = hash_bits(H1, [b"x"], n)
        assert out.shape == (n,) and out.dtype == np.uint8
        assert set(np.unique(out)) <= {0, 1}
        assert np.array_equal(out, hash_bits(H1, [b"x"], n))


def test_hash_trits_length_and_range():
    for n in (1, 4, 5, 6, 100, 2887):
        out = hash_trits([b"y"], n)
        assert out.shape == (n,)
        assert set(np.unique(out)) <= {0, 1, 2}


def test_hash_trits_prefix_stable():
    long = hash_trits([b"prefix"], 500)
    short = hash_trits([b"prefix"], 60)
    assert np.array_equal(long[:60], short)


def test_hash_trits_uniform_chi_square():
    # 30k trits over many inputs; chi-square with 2 dof, reject at p=0.001
    counts = np.zeros(3)
    total = 0
    for i in range(100):
        t = hash_trits([i.to_bytes(2, "big")], 300)
        counts += np.bincount(t, minlength=3)
        total += 300
    expected = total / 3
    stat = float(((counts - expected) ** 2 / expected).sum())
    assert stat < 13.82, f"chi-square {stat} (counts {counts})"


def test_hash_trits_rejects_bad_length():
    with pytest.raises(ValueError):
        hash_trits([b"z"], 0)


def test_keystream_matches_dem_domain():
    K = np.array([1, 0, 1, 1, 0, 0, 1, 0], dtype=np.uint8)
    assert keystream(K, 32) == hash_bytes(DEM, [K], 32)
    assert keystream(K, 32)[:8] == keystream(K, 8)
