#!/usr/bin/env python3
"""End-to-end demo at the toy profile: key generation, signcryption,
tamper rejection, and timing over a batch of messages."""

import time

import numpy as np

from cbsc.hybrid import signcrypt, unsigncrypt
from cbsc.params import TOY
from cbsc.sctkem import keygen_receiver_params, keygen_sender_params
from cbsc.serial import ser_message


def main():
    rng = np.random.default_rng()
    print(f"profile: {TOY.name}  (n_s={TOY.n_s}, n_r={TOY.n_r}, "
          f"t={TOY.t}, k~={TOY.k_tilde}, omega={TOY.omega})")

    t0 = time.perf_counter()
    sk_r, pk_r = keygen_receiver_params(TOY, rng)
    sk_s, pk_s = keygen_sender_params(TOY, rng)
    print(f"keygen: {time.perf_counter() - t0:.3f}s")

    msg = b"signcryption demo payload"
    sc = signcrypt(TOY, sk_s, pk_r, msg, rng)
    print(f"wire size for {len(msg)}-byte message: "
          f"{len(ser_message(TOY, sc))} bytes")
    assert unsigncrypt(TOY, sk_r, pk_s, sc) == msg
    print("round trip: ok")

    sc.C = bytes([sc.C[0] ^ 1]) + sc.C[1:]
    assert unsigncrypt(TOY, sk_r, pk_s, sc) is None
    print("tampered payload: rejected")

    n = 200
    t0 = time.perf_counter()
    for i in range(n):
        m = bytes(rng.integers(0, 256, size=32, dtype=np.uint8))
        assert unsigncrypt(TOY, sk_r, pk_s,
                           signcrypt(TOY, sk_s, pk_r, m, rng)) == m
    dt = time.perf_counter() - t0
    print(f"{n} round trips: {dt:.2f}s ({1e3 * dt / n:.1f} ms each)")


if __name__ == "__main__":
    main()
