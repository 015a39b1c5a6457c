"""Independent oracles used to cross-check the library's arithmetic.

Everything here deliberately avoids the code paths under test: squares
and isotropy in p-adic fields are decided by brute-force enumeration of
residues with explicit lifting-precision bounds, quadratic residue
characters over F_p^2 are computed by exponentiation in a polynomial
model of the field, and sympy supplies an unrelated implementation of
Legendre symbols, modular square roots and factoring.  The oracles are
slow and simple on purpose.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import sympy

# ---------------------------------------------------------------------------
# p-adic squares over Q by enumeration


def qp_is_square(x: Fraction, p: int) -> bool:
    """Square test in Q_p: strip the p-part, then decide the unit.

    A p-adic unit u is a square iff u is a square mod p (odd p) or mod 8
    (p = 2); these moduli exceed twice the valuation of the derivative
    of t^2 - u, so a residue solution lifts.
    """
    x = Fraction(x)
    if x == 0:
        return False
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    if v % 2:
        return False
    modulus = 8 if p == 2 else p
    u = (num * pow(den, -1, modulus)) % modulus
    if p == 2:
        return u % 8 == 1
    return sympy.legendre_symbol(u, p) == 1


def qp_ternary_isotropic(a: int, b: int, c: int, p: int) -> bool:
    """Whether a x^2 + b y^2 + c z^2 = 0 has a nonzero solution over Q_p,
    by scanning primitive solutions modulo p^k.

    For odd p a primitive zero mod p^3 lifts (the form's gradient at a
    primitive point has valuation <= 1, and 3 > 2*1); for p = 2 a
    primitive zero mod 2^5 lifts (gradient valuation <= 2 after scaling,
    and 5 > 2*2).  Conversely a genuine zero reduces to a primitive zero
    mod any power.  Scaling x, y, z by p shows it suffices to scan
    triples where some coordinate is a unit.
    """
    k = 5 if p == 2 else 3
    mod = p**k
    squares = [(x * x) % mod for x in range(mod)]
    for x, y in product(range(mod), repeat=2):
        lhs = a * squares[x] + b * squares[y]
        for z in range(mod):
            if (lhs + c * squares[z]) % mod:
                continue
            if x % p and _lifts(a, x, p, k):
                return True
            if y % p and _lifts(b, y, p, k):
                return True
            if z % p and _lifts(c, z, p, k):
                return True
    return False


def _lifts(coeff: int, coord: int, p: int, k: int) -> bool:
    # gradient component 2*coeff*coord must not vanish too deeply
    g = 2 * coeff * coord
    v = 0
    while g and g % p == 0:
        g //= p
        v += 1
    return g != 0 and k > 2 * v


def qp_ternary_isotropic_fast(a: int, b: int, c: int, p: int) -> bool:
    """Same decision as :func:`qp_ternary_isotropic` but with the inner
    coordinate scan replaced by a hash join on z^2 residues."""
    k = 5 if p == 2 else 3
    mod = p**k
    zs: dict[int, list[int]] = {}
    for z in range(mod):
        zs.setdefault((z * z) % mod, []).append(z)
    for x in range(mod):
        ax2 = a * x * x
        for y in range(mod):
            need = (-(ax2 + b * y * y)) * pow(c, -1, mod) if c % p else None
            if need is None:
                break
            for z in zs.get(need % mod, ()):
                for coeff, coord in ((a, x), (b, y), (c, z)):
                    if coord % p and _lifts(coeff, coord, p, k):
                        return True
    if c % p == 0:
        return qp_ternary_isotropic(a, b, c, p)
    return False


def qp_hilbert(a: Fraction, b: Fraction, p: int) -> int:
    """Hilbert symbol over Q_p straight from its definition: +1 iff
    z^2 = a x^2 + b y^2 has a nontrivial solution, i.e. the ternary form
    a x^2 + b y^2 - z^2 is isotropic."""
    a, b = Fraction(a), Fraction(b)
    an = _squarefree_numerator(a)
    bn = _squarefree_numerator(b)
    return 1 if qp_ternary_isotropic_fast(an, bn, -1, p) else -1


def _squarefree_numerator(x: Fraction) -> int:
    """Integer in the same square class as x (multiply by den^2, strip
    square factors)."""
    n = x.numerator * x.denominator
    out = 1 if n > 0 else -1
    n = abs(n)
    for q, e in sympy.factorint(n).items():
        if e % 2:
            out *= q
    return out


def real_hilbert(a: Fraction, b: Fraction) -> int:
    return -1 if a < 0 and b < 0 else 1


# ---------------------------------------------------------------------------
# quadratic-field helpers, all in terms of rational data


def fp2_is_square(a0: Fraction, a1: Fraction, d: int, p: int) -> bool:
    """Whether a0 + a1 sqrt(d) is a nonzero square in F_{p^2} = F_p[t]/(t^2-d),
    for odd inert p, decided by computing u^((p^2-1)/2) by square-and-
    multiply in the polynomial model."""
    c0 = int(a0 % p) if a0.denominator == 1 else int(
        (a0.numerator * pow(a0.denominator, -1, p)) % p
    )
    c1 = int(a1 % p) if a1.denominator == 1 else int(
        (a1.numerator * pow(a1.denominator, -1, p)) % p
    )
    if c0 == 0 and c1 == 0:
        raise ValueError("zero residue")
    e = (p * p - 1) // 2
    r0, r1 = 1, 0
    b0, b1 = c0, c1
    dd = d % p
    while e:
        if e & 1:
            r0, r1 = (r0 * b0 + r1 * b1 * dd) % p, (r0 * b1 + r1 * b0) % p
        b0, b1 = (b0 * b0 + b1 * b1 * dd) % p, (2 * b0 * b1) % p
        e >>= 1
    return (r0, r1) == (1, 0)


def quadratic_norm(a0: Fraction, a1: Fraction, d: int) -> Fraction:
    return a0 * a0 - a1 * a1 * d


def split_prime_kind(p: int, d: int) -> str:
    """How p behaves in Q(sqrt(d)): by counting roots of t^2 - d."""
    if p == 2:
        if d % 8 == 1:
            return "split"
        return "inert" if d % 4 == 1 else "ramified"
    if d % p == 0:
        return "ramified"
    return "split" if sympy.legendre_symbol(d % p, p) == 1 else "inert"


def split_images(a0: Fraction, a1: Fraction, d: int, p: int, digits: int):
    """The two images of a0 + a1 sqrt(d) in Q_p under a split prime,
    as residues mod p^digits paired with the labeling convention that
    the first image substitutes the smaller lift of sqrt(d) mod p.

    Returns [(val, unit mod p^digits or None), ...] for both places;
    None marks precision exhaustion (the scan digits ran out before the
    unit emerged), which callers treat as a skip.
    """
    roots = sorted(sympy.sqrt_mod(d % p, p, all_roots=True))
    out = []
    for base_root in (roots[0], roots[1]):
        prec = digits + 40
        mod = p**prec
        r = base_root
        # Newton lifting of the chosen root of t^2 - d
        k = 1
        while k < prec:
            k = min(2 * k, prec)
            mk = p**k
            r = (r - (r * r - d) * pow(2 * r, -1, mk)) % mk
        num = a0.numerator * a1.denominator + a1.numerator * a0.denominator * r
        den = a0.denominator * a1.denominator
        v = 0
        while den % p == 0:
            den //= p
            v -= 1
        if num % mod == 0:
            out.append((None, None))
            continue
        while num % p == 0:
            num //= p
            v += 1
        unit_mod = p**digits
        out.append((v, (num * pow(den, -1, unit_mod)) % unit_mod))
    return out


# ---------------------------------------------------------------------------
# square tests in quadratic local rings by digit lifting
#
# A survivor of the breadth-first digit search certifies a genuine
# square root (high component precision dominates the derivative), and
# a true root always reduces; so for moderate valuations the search is
# an exact decision, independent of any closed residue criterion.


def _bfs_square(x0: int, x1: int, square_components, p: int, digits: int) -> bool:
    candidates = {(0, 0)}
    for k in range(1, digits + 1):
        mod = p**k
        step = p ** (k - 1)
        new = set()
        for y0, y1 in candidates:
            for d0 in range(p):
                for d1 in range(p):
                    z0, z1 = y0 + d0 * step, y1 + d1 * step
                    s0, s1 = square_components(z0, z1)
                    if (s0 - x0) % mod == 0 and (s1 - x1) % mod == 0:
                        new.add((z0 % mod, z1 % mod))
        if not new:
            return False
        if len(new) > 4096:
            raise RuntimeError("digit search exploded; input valuation too high")
        candidates = new
    return True


def quadratic_local_is_square(
    a0: Fraction, a1: Fraction, d: int, p: int, digits: int = 14
) -> bool:
    """Square test for a0 + a1 sqrt(d) in the completion of Q(sqrt(d))
    at the unique place over an inert/ramified prime p, by digit search.

    Denominators are cleared by squares first (odd parts squared, and
    4^s for the 2-part), which does not change the square class.  Works
    for p = 2 with d = 2, 3 mod 4 or d = 5 mod 8, and for odd p; keep
    the input's valuation modest so the certification bound applies.
    """
    den = (a0.denominator * a1.denominator) ** 2
    x0, x1 = a0 * den, a1 * den
    assert x0.denominator == 1 and x1.denominator == 1
    x0, x1 = int(x0), int(x1)
    if x0 == 0 and x1 == 0:
        raise ValueError("zero input")
    if p == 2 and d % 8 == 5:
        # integral basis 1, (1 + sqrt(d))/2: coordinates (x0 - x1, 2 x1)
        e = (d - 1) // 4
        c0, c1 = x0 - x1, 2 * x1
        return _bfs_square(
            c0, c1, lambda y0, y1: (y0 * y0 + e * y1 * y1, 2 * y0 * y1 + y1 * y1),
            2, digits,
        )
    if p == 2 and d % 8 == 1:
        raise ValueError("2 splits; not a single place")
    return _bfs_square(
        x0, x1, lambda y0, y1: (y0 * y0 + d * y1 * y1, 2 * y0 * y1), p, digits
    )


# ---------------------------------------------------------------------------
# recipes: algebras over Q with prescribed ramification


#: (a, b) -> ramification set over Q, each verified by classical results:
#: (-1, -p) for p = 3 mod 4 ramifies at {inf, p}; (2, 5): 2 and 5;
#: norms/Legendre checks done by hand in the decisions record.
KNOWN_RAMIFICATION = {
    (-1, -1): {"inf", "2"},
    (-1, -3): {"inf", "3"},
    (-2, -5): {"inf", "5"},
    (-1, -7): {"inf", "7"},
    (-1, -11): {"inf", "11"},
    (-7, -13): {"inf", "13"},
    (-3, -17): {"inf", "17"},
    (-1, -19): {"inf", "19"},
    (2, 5): {"2", "5"},
    (3, 5): {"3", "5"},
}
