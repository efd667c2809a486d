"""Ternary (U, U+V) trapdoor signatures with prescribed high weight.

The secret parity check keeps the block shape [[H_U, 0], [-H_V, H_V]];
the trapdoor decodes a syndrome to an error of exact weight omega by
solving the V half first and then steering the free variables of the U
half toward the weight target, retrying until it lands exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hashes import hash_trits
from .linalg import (
    AffineSolver,
    Monomial,
    invert_matrix,
    mat_mono,
    matmul,
    mono_apply,
    random_full_rank,
    random_monomial,
    vecmat,
)


class RetryExhausted(RuntimeError):
    """Weight target not reached within the retry budget."""


@dataclass
class SenderSecretKey:
    S: np.ndarray          # r_s x r_s invertible over GF(3)
    S_inv: np.ndarray
    H_sk: np.ndarray       # r_s x n_s, block (U, U+V) parity check
    P: Monomial            # monomial over GF(3)
    k_U: int
    k_V: int

    @property
    def n_s(self) -> int:
        return self.H_sk.shape[1]

    @property
    def r_s(self) -> int:
        return self.H_sk.shape[0]

    @property
    def H_U(self) -> np.ndarray:
        half = self.n_s // 2
        return self.H_sk[: half - self.k_U, :half]

    @property
    def H_V(self) -> np.ndarray:
        half = self.n_s // 2
        return self.H_sk[half - self.k_U:, half:]


@dataclass
class SenderPublicKey:
    H: np.ndarray          # r_s x n_s over GF(3)

    @property
    def n_s(self) -> int:
        return self.H.shape[1]

    @property
    def r_s(self) -> int:
        return self.H.shape[0]


@dataclass
class Signature:
    e: np.ndarray          # n_s trits, weight omega
    salt: np.ndarray       # salt_bits bits


def build_uuv_parity_check(H_U: np.ndarray, H_V: np.ndarray) -> np.ndarray:
    """[[H_U, 0], [-H_V, H_V]]: checks u in U and (second - first) in V."""
    rU, half = H_U.shape
    rV = H_V.shape[0]
    H = np.zeros((rU + rV, 2 * half), dtype=np.uint8)
    H[:rU, :half] = H_U
    H[rU:, :half] = (3 - H_V) % 3
    H[rU:, half:] = H_V
    return H


def keygen_sender(n_s: int, k_U: int, k_V: int, rng):
    if n_s % 2:
        raise ValueError("n_s must be even")
    half = n_s // 2
    if not (0 < k_U < half and 0 < k_V < half):
        raise ValueError("need 0 < k_U, k_V < n_s/2")
    H_U = random_full_rank(half - k_U, half, 3, rng)
    H_V = random_full_rank(half - k_V, half, 3, rng)
    H_sk = build_uuv_parity_check(H_U, H_V)
    r_s = n_s - k_U - k_V
    while True:
        S = rng.integers(0, 3, size=(r_s, r_s), dtype=np.uint8)
        try:
            S_inv = invert_matrix(S, 3)
            break
        except ValueError:
            continue
    P = random_monomial(n_s, 3, rng)
    H_pk = mat_mono(matmul(S, H_sk, 3), P, 3)
    sk = SenderSecretKey(S=S, S_inv=S_inv, H_sk=H_sk, P=P, k_U=k_U, k_V=k_V)
    return sk, SenderPublicKey(H=H_pk)


def _steered_free_values(solver: AffineSolver, e_other: np.ndarray,
                         p_two: float, rng) -> np.ndarray:
    # pick each free variable to contribute 2 to the weight with prob p_two
    vals = np.zeros(len(solver.free), dtype=np.uint8)
    for k, i in enumerate(solver.free):
        other = int(e_other[i])
        if rng.random() < p_two:
            if other == 0:
                vals[k] = rng.integers(1, 3)
            else:
                # nonzero and not cancelling the second half
                vals[k] = next(v for v in (1, 2) if (v + other) % 3 != 0)
        else:
            vals[k] = 0 if other == 0 else rng.choice([0, (3 - other) % 3])
    return vals


def uuv_decode(sk: SenderSecretKey, s: np.ndarray, omega: int, rng,
               max_attempts: int = 10_000) -> np.ndarray:
    """e with e @ H_sk.T = s and wt(e) = omega exactly."""
    n_s = sk.n_s
    half = n_s // 2
    if not 0 <= omega <= n_s:
        raise ValueError("omega out of range")
    rU = half - sk.k_U
    s = np.asarray(s, dtype=np.uint8) % 3
    if len(s) != sk.r_s:
        raise ValueError("syndrome length mismatch")
    s_U, s_V = s[:rU], s[rU:]
    solver_U = AffineSolver(sk.H_U, 3)
    solver_V = AffineSolver(sk.H_V, 3)
    target = omega / n_s
    for _ in range(max_attempts):
        p = min(1.0, max(0.0, target + rng.normal(0.0, 0.15)))
        fv = (rng.integers(1, 3, size=len(solver_V.free), dtype=np.uint8)
              * (rng.random(len(solver_V.free)) < p)).astype(np.uint8)
        e_V = solver_V.solve(s_V, fv)
        if e_V is None:
            raise RetryExhausted("V system inconsistent")
        e1 = solver_U.solve(s_U, _steered_free_values(solver_U, e_V, p, rng))
        if e1 is None:
            raise RetryExhausted("U system inconsistent")
        e2 = (e1 + e_V) % 3
        e = np.concatenate([e1, e2]).astype(np.uint8)
        if int(np.count_nonzero(e)) == omega:
            return e
    raise RetryExhausted(f"no weight-{omega} solution in {max_attempts} attempts")


def sign(sk: SenderSecretKey, msg: bytes, omega: int, salt_bits: int, rng,
         max_attempts: int = 10_000) -> Signature:
    salt = rng.integers(0, 2, size=salt_bits, dtype=np.uint8)
    y_r = hash_trits([msg, salt], sk.r_s)
    s = vecmat(y_r, sk.S_inv.T, 3)
    e_inner = uuv_decode(sk, s, omega, rng, max_attempts)
    e = mono_apply(e_inner, sk.P, 3)
    return Signature(e=e, salt=salt)


def verify(pk: SenderPublicKey, msg: bytes, sig: Signature, omega: int) -> bool:
    e = np.asarray(sig.e, dtype=np.uint8) % 3
    if len(e) != pk.n_s or int(np.count_nonzero(e)) != omega:
        return False
    expected = hash_trits([msg, sig.salt], pk.r_s)
    return bool(np.array_equal(vecmat(e, pk.H.T, 3), expected))
