"""Elementary integer number theory used by the exact arithmetic layer.

Everything here operates on plain Python integers.  The routines are the
classical ones: deterministic Miller-Rabin for 64-bit-and-beyond primality,
Pollard's rho for splitting, Tonelli-Shanks for square roots modulo an odd
prime, and Hensel lifting for roots modulo prime powers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

# Deterministic Miller-Rabin witnesses, valid for all n < 3.3 * 10**24
# (Sorenson & Webster).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality test for the integer sizes we meet."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


def factor(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; ignores the sign.

    factor(0) and factor(+-1) return {}.
    """
    n = abs(n)
    out: dict[int, int] = {}
    if n <= 1:
        return out
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend([root, root])
            continue
        d = _pollard_rho(m)
        stack.extend([d, m // d])
    return out


def squarefree_part(n: int) -> int:
    """The squarefree integer s with n = s * t**2 (sign preserved)."""
    if n == 0:
        return 0
    s = -1 if n < 0 else 1
    for p, e in factor(n).items():
        if e % 2:
            s *= p
    return s


def is_square_int(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def is_square_fraction(x: Fraction) -> bool:
    """Exact test that a rational is the square of a rational."""
    return x >= 0 and is_square_int(x.numerator) and is_square_int(x.denominator)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) in {-1, 0, +1} for an odd prime p."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def val(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of zero is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def val_fraction(x: Fraction, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero is undefined")
    return val(x.numerator, p) - val(x.denominator, p)


def unit_mod(x: Fraction, p: int, modulus: int) -> int:
    """The p-free part of x reduced modulo `modulus` (a power of p).

    x = p**v * u with u a p-adic unit; returns u mod modulus, using the
    inverse of the denominator (valid because the denominator's p-free
    part is coprime to the modulus).
    """
    v = val_fraction(x, p)
    num = x.numerator // p ** max(v, 0) if v > 0 else x.numerator
    den = x.denominator
    if v < 0:
        den //= p ** (-v)
    return num * pow(den, -1, modulus) % modulus


def sqrt_mod_prime(a: int, p: int) -> int:
    """A square root of a modulo an odd prime p (Tonelli-Shanks).

    Requires a to be a quadratic residue; raises ValueError otherwise.
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        raise ValueError(f"{a} is not a residue mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t * t % p, 1
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


@lru_cache(maxsize=None)
def sqrt_mod_prime_power(a: int, p: int, k: int) -> int:
    """The Hensel lift to mod p**k of the smaller root of x^2 = a mod p.

    p odd, a a unit residue mod p.  Of the two roots r, p - r mod p the
    lift of min(r, p - r) is returned, giving a deterministic labeling of
    the two square roots (and hence of the two places over a split prime).
    """
    r = sqrt_mod_prime(a % p, p)
    r = min(r, p - r)
    mod = p
    while mod < p ** k:
        mod = min(mod * mod, p ** k)
        # Newton step: r <- r - (r^2 - a) / (2r)
        r = (r - (r * r - a) * pow(2 * r, -1, mod)) % mod
    return r % p ** k
