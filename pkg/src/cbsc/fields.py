"""Arithmetic in GF(2^m) and for polynomials over GF(2^m).

Field elements are plain ints holding the bit-vector of polynomial
coefficients over GF(2) (bit i = coefficient of x^i).  Polynomials over
GF(2^m) are lists of such ints, index = degree, with no trailing zeros.
"""

from __future__ import annotations

# One fixed irreducible modulus per extension degree.  Both sides of a
# key exchange must use the same representation, so this table is part
# of the wire format and must never change for a given format version.
IRREDUCIBLE_POLY = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0x11B,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}


def gf_mul(a: int, b: int, m: int) -> int:
    """Multiply two GF(2^m) elements."""
    mod = IRREDUCIBLE_POLY[m]
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> m:
            a ^= mod
    return r


def gf_pow(a: int, e: int, m: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = gf_mul(r, a, m)
        a = gf_mul(a, a, m)
        e >>= 1
    return r


def gf_inv(a: int, m: int) -> int:
    if a == 0:
        raise ZeroDivisionError("inverse of 0 in GF(2^m)")
    return gf_pow(a, (1 << m) - 2, m)


# ---------------------------------------------------------------------------
# polynomials over GF(2^m)

def poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_deg(p: list[int]) -> int:
    return len(p) - 1  # zero polynomial -> -1


def poly_add(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    r = list(p)
    for i, c in enumerate(q):
        r[i] ^= c
    return poly_trim(r)


def poly_scale(p: list[int], c: int, m: int) -> list[int]:
    if c == 0:
        return []
    return [gf_mul(x, c, m) for x in p]


def poly_mul(p: list[int], q: list[int], m: int) -> list[int]:
    if not p or not q:
        return []
    r = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b:
                r[i + j] ^= gf_mul(a, b, m)
    return poly_trim(r)


def poly_divmod(p: list[int], d: list[int], m: int) -> tuple[list[int], list[int]]:
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    q = [0] * max(0, len(p) - len(d) + 1)
    dlead_inv = gf_inv(d[-1], m)
    while len(r) >= len(d):
        c = gf_mul(r[-1], dlead_inv, m)
        shift = len(r) - len(d)
        q[shift] = c
        for i, dc in enumerate(d):
            r[shift + i] ^= gf_mul(c, dc, m)
        poly_trim(r)
        if not r:
            break
    return poly_trim(q), r


def poly_mod(p: list[int], d: list[int], m: int) -> list[int]:
    return poly_divmod(p, d, m)[1]


def poly_gcd(p: list[int], q: list[int], m: int) -> list[int]:
    while q:
        p, q = q, poly_mod(p, q, m)
    if p:
        p = poly_scale(p, gf_inv(p[-1], m), m)  # monic
    return p


def poly_inv_mod(p: list[int], mod: list[int], m: int) -> list[int]:
    """Inverse of p modulo mod (mod irreducible, p nonzero mod mod)."""
    r0, r1 = list(mod), poly_mod(p, mod, m)
    u0, u1 = [], [1]
    while r1:
        q, rem = poly_divmod(r0, r1, m)
        r0, r1 = r1, rem
        u0, u1 = u1, poly_add(u0, poly_mul(q, u1, m))
    if poly_deg(r0) != 0:
        raise ZeroDivisionError("element not invertible")
    return poly_mod(poly_scale(u0, gf_inv(r0[0], m), m), mod, m)


def poly_eval(p: list[int], x: int, m: int) -> int:
    r = 0
    for c in reversed(p):
        r = gf_mul(r, x, m) ^ c
    return r


def poly_square_mod(p: list[int], mod: list[int], m: int) -> list[int]:
    # (sum a_i x^i)^2 = sum a_i^2 x^(2i) in characteristic 2
    r = [0] * (2 * len(p) - 1) if p else []
    for i, c in enumerate(p):
        if c:
            r[2 * i] = gf_mul(c, c, m)
    return poly_mod(poly_trim(r), mod, m)


def poly_pow_q_mod(p: list[int], mod: list[int], m: int) -> list[int]:
    """p^(2^m) mod `mod`, i.e. one Frobenius power over GF(2^m)."""
    r = list(p)
    for _ in range(m):
        r = poly_square_mod(r, mod, m)
    return r


def poly_is_irreducible(p: list[int], m: int) -> bool:
    """Deterministic irreducibility test over GF(2^m).

    A reducible polynomial of degree t has an irreducible factor of
    degree <= t // 2, so it is caught by gcd(p, x^(q^i) - x).
    """
    t = poly_deg(p)
    if t <= 0:
        return False
    if t == 1:
        return True
    x = [0, 1]
    r = x
    for _ in range(t // 2):
        r = poly_pow_q_mod(r, p, m)
        g = poly_gcd(poly_add(r, x), p, m)
        if poly_deg(g) != 0:
            return False
    return True


def poly_sqrt_mod(p: list[int], mod: list[int], m: int) -> list[int]:
    """Square root in the field GF(2^m)[x]/(mod), mod irreducible degree t.

    The field has 2^(mt) elements, so sqrt(u) = u^(2^(mt-1)).
    """
    t = poly_deg(mod)
    r = poly_mod(p, mod, m)
    for _ in range(m * t - 1):
        r = poly_square_mod(r, mod, m)
    return r


def random_irreducible(t: int, m: int, rng) -> list[int]:
    """Uniform random monic irreducible polynomial of degree t over GF(2^m)."""
    q = 1 << m
    while True:
        coeffs = [int(rng.integers(0, q)) for _ in range(t)] + [1]
        if poly_is_irreducible(coeffs, m):
            return coeffs
