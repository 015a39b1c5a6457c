"""Exact arithmetic in Q and real quadratic fields Q(sqrt(d)).

The module provides the base-field layer everything else sits on:

* :class:`Field` -- Q or Q(sqrt(d)) with d > 1 squarefree;
* :class:`FieldElement` -- exact elements a0 + a1*sqrt(d) with
  :class:`fractions.Fraction` coordinates;
* :class:`Place` -- real embeddings and finite places (primes of the
  field, tagged by how the rational prime below them splits);
* local predicates: exact signs at real embeddings, valuations, residue
  characters, and local/global square tests.

Dyadic completions of a quadratic field are supported when 2 is inert
(d = 5 mod 8) or ramified (d even or d = 3 mod 4).  When 2 splits
(d = 1 mod 8) the two dyadic completions are wild and unsupported;
operations that would need them raise
:class:`~quathyp.errors.UnsupportedDyadicPlaceError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import PlaceKindError, UnsupportedDyadicPlaceError
from .numtheory import (
    factor,
    is_prime,
    is_square_fraction,
    legendre,
    sqrt_mod_prime_power,
    squarefree_part,
    unit_mod,
    val,
    val_fraction,
)

Rationalish = Union[int, Fraction, str]


@dataclass(frozen=True)
class Field:
    """Q (``d is None``) or the real quadratic field Q(sqrt(d))."""

    d: int | None = None

    def __post_init__(self):
        if self.d is not None:
            if self.d <= 1:
                raise ValueError("d must be an integer > 1")
            if squarefree_part(self.d) != self.d:
                raise ValueError(f"d = {self.d} is not squarefree")

    @property
    def is_rational(self) -> bool:
        return self.d is None

    @property
    def discriminant(self) -> int:
        if self.d is None:
            return 1
        return self.d if self.d % 4 == 1 else 4 * self.d

    @property
    def degree(self) -> int:
        return 1 if self.d is None else 2

    def element(self, a0: Rationalish, a1: Rationalish = 0) -> "FieldElement":
        a0, a1 = Fraction(a0), Fraction(a1)
        if self.is_rational and a1 != 0:
            raise ValueError("rational field elements have no sqrt(d) part")
        return FieldElement(self, a0, a1)

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    @property
    def sqrt_d(self) -> "FieldElement":
        if self.is_rational:
            raise ValueError("Q has no adjoined square root")
        return self.element(0, 1)

    def real_places(self) -> tuple["Place", ...]:
        if self.is_rational:
            return (Place.real(self, 0),)
        return (Place.real(self, 0), Place.real(self, 1))

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"Q(sqrt({self.d}))"


QQ = Field()


def _coerce(field: Field, other) -> "FieldElement":
    if isinstance(other, FieldElement):
        if other.field != field:
            from .errors import FieldMismatchError

            raise FieldMismatchError(
                f"cannot combine elements of {field} and {other.field}"
            )
        return other
    if isinstance(other, (int, Fraction)):
        return field.element(other)
    return NotImplemented


@dataclass(frozen=True)
class FieldElement:
    """An exact element a0 + a1*sqrt(d) of its field (a1 = 0 over Q)."""

    field: Field
    a0: Fraction
    a1: Fraction

    def __bool__(self) -> bool:
        return self.a0 != 0 or self.a1 != 0

    @property
    def is_rational_value(self) -> bool:
        return self.a1 == 0

    def conjugate(self) -> "FieldElement":
        """The Galois conjugate a0 - a1*sqrt(d) (identity over Q)."""
        return FieldElement(self.field, self.a0, -self.a1)

    def norm(self) -> Fraction:
        """Norm down to Q: x * conjugate(x) = a0^2 - a1^2 * d."""
        if self.field.is_rational:
            return self.a0
        return self.a0 * self.a0 - self.a1 * self.a1 * self.field.d

    def trace(self) -> Fraction:
        return self.a0 if self.field.is_rational else 2 * self.a0

    def __add__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.a0 + other.a0, self.a1 + other.a1)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, -self.a0, -self.a1)

    def __sub__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        d = self.field.d or 0
        return FieldElement(
            self.field,
            self.a0 * other.a0 + self.a1 * other.a1 * d,
            self.a0 * other.a1 + self.a1 * other.a0,
        )

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("field element 0 has no inverse")
        n = self.norm()
        if self.field.is_rational:
            return FieldElement(self.field, 1 / self.a0, Fraction(0))
        return FieldElement(self.field, self.a0 / n, -self.a1 / n)

    def __truediv__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __str__(self) -> str:
        if self.a1 == 0:
            return str(self.a0)
        d = self.field.d
        root = f"sqrt({d})"
        if self.a1 == 1:
            second = root
        elif self.a1 == -1:
            second = f"-{root}"
        else:
            second = f"{self.a1}*{root}"
        if self.a0 == 0:
            return second
        sign = "+" if self.a1 > 0 else "-"
        mag = second.lstrip("-")
        return f"{self.a0} {sign} {mag}"


# ---------------------------------------------------------------------------
# Places
# ---------------------------------------------------------------------------

SPLIT_FIRST = "split-first"
SPLIT_SECOND = "split-second"
INERT = "inert"
RAMIFIED = "ramified"
RATIONAL = "rational"  # the single place of Q over p

_POSITION_ORDER = {RATIONAL: 0, SPLIT_FIRST: 0, SPLIT_SECOND: 1, INERT: 0, RAMIFIED: 0}


@dataclass(frozen=True)
class Place:
    """A place of the base field.

    Real places carry the embedding index (0: sqrt(d) -> +sqrt(d),
    1: sqrt(d) -> -sqrt(d)); finite places carry the rational prime p
    below them and their position over p.
    """

    field: Field
    kind: str  # "real" | "finite"
    embedding: int = 0
    p: int = 0
    position: str = RATIONAL

    @classmethod
    def real(cls, field: Field, embedding: int = 0) -> "Place":
        if embedding not in (0, 1) or (embedding == 1 and field.is_rational):
            raise ValueError(f"no real embedding {embedding} for {field}")
        return cls(field, "real", embedding=embedding)

    @classmethod
    def finite(cls, field: Field, p: int, position: str | None = None) -> "Place":
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        kind = split_prime(p, field)
        if kind == "split":
            if position not in (SPLIT_FIRST, SPLIT_SECOND):
                raise ValueError(f"{p} splits in {field}; specify which place")
        else:
            expected = RATIONAL if field.is_rational else kind
            if position is None:
                position = expected
            if position != expected:
                raise ValueError(f"{p} is {expected} in {field}, not {position}")
        return cls(field, "finite", p=p, position=position)

    @property
    def is_real(self) -> bool:
        return self.kind == "real"

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_dyadic(self) -> bool:
        return self.is_finite and self.p == 2

    def sort_key(self):
        if self.is_real:
            return (0, self.embedding, 0)
        return (1, self.p, _POSITION_ORDER[self.position])

    def __str__(self) -> str:
        if self.is_real:
            if self.field.is_rational:
                return "inf"
            return f"inf_{self.embedding}"
        if self.position in (RATIONAL, INERT, RAMIFIED):
            tag = "" if self.position == RATIONAL else f" ({self.position})"
            return f"{self.p}{tag}"
        which = "1" if self.position == SPLIT_FIRST else "2"
        return f"{self.p} (split #{which})"


def split_prime(p: int, field: Field) -> str:
    """How the rational prime p behaves in the field.

    Returns "split", "inert" or "ramified" for quadratic fields and the
    degenerate marker "rational" for Q (a single place, no splitting).
    """
    if field.is_rational:
        return RATIONAL
    d = field.d
    if p == 2:
        if d % 8 == 1:
            return "split"
        if d % 8 == 5:
            return INERT
        return RAMIFIED  # d even or d = 3 mod 4: 2 divides the discriminant
    if d % p == 0:
        return RAMIFIED
    return "split" if legendre(d, p) == 1 else INERT


def places_above(field: Field, p: int) -> tuple[Place, ...]:
    """All places of the field over the rational prime p."""
    kind = split_prime(p, field)
    if kind == "split":
        return (
            Place.finite(field, p, SPLIT_FIRST),
            Place.finite(field, p, SPLIT_SECOND),
        )
    return (Place.finite(field, p),)


def conjugate_place(v: Place) -> Place:
    """Image of a place under the nontrivial Galois automorphism.

    Swaps the two real embeddings and the two places over a split prime;
    fixes inert and ramified places.  Identity over Q.
    """
    if v.field.is_rational:
        return v
    if v.is_real:
        return Place.real(v.field, 1 - v.embedding)
    if v.position == SPLIT_FIRST:
        return Place.finite(v.field, v.p, SPLIT_SECOND)
    if v.position == SPLIT_SECOND:
        return Place.finite(v.field, v.p, SPLIT_FIRST)
    return v


# ---------------------------------------------------------------------------
# Real embeddings
# ---------------------------------------------------------------------------


def sign_at_real_place(x: FieldElement, v: Place) -> int:
    """Exact sign (+1, -1 or 0) of the image of x under the embedding v.

    Decided by comparing a0^2 against a1^2 * d, never by floating point:
    a0 + a1*sqrt(d) and a0 share a sign exactly when a0^2 > a1^2 * d.
    """
    if not v.is_real:
        raise PlaceKindError(f"{v} is not a real embedding")
    if v.field != x.field:
        from .errors import FieldMismatchError

        raise FieldMismatchError("element and place belong to different fields")
    a0, a1 = x.a0, x.a1
    if v.embedding == 1:
        a1 = -a1
    if a1 == 0:
        return 0 if a0 == 0 else (1 if a0 > 0 else -1)
    if a0 == 0:
        return 1 if a1 > 0 else -1
    if (a0 > 0) == (a1 > 0):
        return 1 if a0 > 0 else -1
    # opposite signs: the larger of a0^2, a1^2 d wins (they are never equal
    # because d is not a rational square)
    if a0 * a0 > a1 * a1 * x.field.d:
        return 1 if a0 > 0 else -1
    return 1 if a1 > 0 else -1


# ---------------------------------------------------------------------------
# Valuations and residue characters at finite places
# ---------------------------------------------------------------------------


def _require_nonzero(x: FieldElement):
    if not x:
        raise ValueError("operation undefined at 0")


def _check_dyadic_supported(v: Place):
    if v.is_dyadic and v.position in (SPLIT_FIRST, SPLIT_SECOND):
        raise UnsupportedDyadicPlaceError(
            f"2 splits in {v.field}; its dyadic completions are unsupported"
        )


def _split_image(x: FieldElement, v: Place, digits: int) -> tuple[int, int]:
    """Valuation and unit part (mod p**digits) of x in the completion at
    a split place.

    The completion is Q_p; sqrt(d) goes to the canonically labeled root
    (split-first: the Hensel lift of the smaller square root of d mod p,
    split-second: its negative).
    """
    p = v.p
    lcm = math.lcm(x.a0.denominator, x.a1.denominator)
    A0, A1 = int(x.a0 * lcm), int(x.a1 * lcm)
    # The valuation of A0 + A1*r is at most v_p of the integer norm
    # A0^2 - A1^2 d, because the conjugate image is also a p-adic integer.
    nrm = A0 * A0 - A1 * A1 * x.field.d
    m = val(nrm, p) + digits
    r = sqrt_mod_prime_power(x.field.d, p, m)
    if v.position == SPLIT_SECOND:
        r = p**m - r
    t = (A0 + A1 * r) % p**m
    vt = val(t, p)
    unit = (t // p**vt) % p**digits
    return vt - val(lcm, p), unit


def local_valuation(x: FieldElement, v: Place) -> int:
    """Normalized valuation of x at a finite place (uniformizer -> 1)."""
    _require_nonzero(x)
    if not v.is_finite:
        raise PlaceKindError(f"{v} is not a finite place")
    _check_dyadic_supported(v)
    p = v.p
    if v.position == RATIONAL:
        return val_fraction(x.a0, p)
    if v.position in (SPLIT_FIRST, SPLIT_SECOND):
        return _split_image(x, v, 1)[0]
    if v.position == INERT:
        if p == 2:
            c0, c1 = _omega_coords(x)
            return min(val_fraction(c, 2) for c in (c0, c1) if c != 0)
        vals = [val_fraction(c, p) for c in (x.a0, x.a1) if c != 0]
        return min(vals)
    # ramified: v(x) = v_p(norm(x)); sqrt(d) (or 1+sqrt(d) at 2) has
    # valuation 1 and p valuation 2 (odd p: valuation 2 of p means e = 2)
    if v.position == RAMIFIED:
        return val_fraction(x.norm(), p)
    raise AssertionError(f"unknown position {v.position}")  # pragma: no cover


def residue_character(x: FieldElement, v: Place) -> int:
    """Quadratic character of the unit part of x in the residue field.

    Defined for odd finite places only.  Writing x = pi^n * u with u a
    unit, returns +1 if the residue of u is a square in the residue
    field, else -1.  For inert places the residue field has p^2 elements
    and the character is computed through the norm (an element of
    F_{p^2}^* is a square exactly when its norm to F_p^* is).
    """
    _require_nonzero(x)
    if not v.is_finite or v.p == 2:
        raise PlaceKindError(f"residue character requires an odd finite place, got {v}")
    p = v.p
    if v.position == RATIONAL:
        return legendre(unit_mod(x.a0, p, p), p)
    if v.position in (SPLIT_FIRST, SPLIT_SECOND):
        return legendre(_split_image(x, v, 1)[1], p)
    if v.position == INERT:
        return legendre(unit_mod(x.norm(), p, p), p)
    # ramified: divide by the uniformizer sqrt(d); the unit's residue is
    # its rational coordinate a0/d^(n/2) (n even) or a1/d^((n-1)/2) (n odd)
    n = val_fraction(x.norm(), p)
    if n % 2 == 0:
        u0 = x.a0 / Fraction(x.field.d) ** (n // 2)
    else:
        u0 = x.a1 / Fraction(x.field.d) ** ((n - 1) // 2)
    return legendre(unit_mod(u0, p, p), p)


# ---------------------------------------------------------------------------
# Local and global square tests
# ---------------------------------------------------------------------------


def _omega_coords(x: FieldElement) -> tuple[Fraction, Fraction]:
    """Coordinates of x in the basis {1, omega}, omega = (1+sqrt(d))/2.

    Used at the inert dyadic place (d = 5 mod 8), where Z[sqrt(d)] is not
    2-maximal but Z[omega] is: omega is integral with omega^2 = omega + e,
    e = (d-1)/4.
    """
    return x.a0 - x.a1, 2 * x.a1


def _frac_mod(c: Fraction, modulus: int) -> int:
    """c mod modulus for a fraction whose denominator is coprime to it."""
    return c.numerator * pow(c.denominator, -1, modulus) % modulus


def _is_square_dyadic_inert(x: FieldElement) -> bool:
    d = x.field.d
    c0, c1 = _omega_coords(x)
    n = min(val_fraction(c, 2) for c in (c0, c1) if c != 0)
    u0, u1 = c0 / 2**n, c1 / 2**n
    if n % 2:
        return False
    # Unit test by exhaustion mod 8: Hensel's lemma for Y^2 - u over the
    # unramified dyadic quadratic field applies once a trial square agrees
    # with u to valuation 2*v(2)+1 = 3, i.e. mod 8 in both omega
    # coordinates; conversely an exact root reduces to such a trial value.
    e = (d - 1) // 4 % 8
    t0, t1 = _frac_mod(u0, 8), _frac_mod(u1, 8)
    for y0 in range(8):
        for y1 in range(8):
            if (y0 * y0 + e * y1 * y1) % 8 == t0 and (2 * y0 * y1 + y1 * y1) % 8 == t1:
                return True
    return False


def _is_square_dyadic_ramified(x: FieldElement) -> bool:
    field = x.field
    d = field.d
    pi = field.sqrt_d if d % 2 == 0 else field.element(1, 1)
    n = val_fraction(x.norm(), 2)  # valuation of x: e = 2 here
    if n % 2:
        return False
    u = x / pi**n
    # Exhaust candidate roots with integer coordinates mod 8.  Hensel needs
    # agreement to valuation 2*v(2)+1 = 5; an exact integral root z has
    # coordinates in Z_2, and any mod-8 representative y of z satisfies
    # v(y^2 - z^2) >= v(8) = 6 >= 5, so the 64 candidates are exhaustive.
    for y0 in range(8):
        for y1 in range(8):
            e = field.element(y0, y1) ** 2 - u
            if not e:
                return True
            if val_fraction(e.norm(), 2) >= 5:
                return True
    return False


def is_local_square(x: FieldElement, v: Place) -> bool:
    """Whether x is a square in the completion of its field at v.

    Real places: positive sign.  Odd finite places: even valuation and
    trivial residue character.  The dyadic place of Q: even valuation and
    unit part = 1 mod 8.  The single dyadic place of a quadratic field
    (2 inert or ramified): even valuation and a Hensel-certified unit
    square; 2 split raises UnsupportedDyadicPlaceError.
    """
    _require_nonzero(x)
    if x.field != v.field:
        from .errors import FieldMismatchError

        raise FieldMismatchError("element and place belong to different fields")
    if v.is_real:
        return sign_at_real_place(x, v) > 0
    _check_dyadic_supported(v)
    if v.p != 2:
        return local_valuation(x, v) % 2 == 0 and residue_character(x, v) == 1
    if v.position == RATIONAL:
        return val_fraction(x.a0, 2) % 2 == 0 and unit_mod(x.a0, 2, 8) == 1
    if v.position == INERT:
        return _is_square_dyadic_inert(x)
    return _is_square_dyadic_ramified(x)


def fraction_sqrt(x: Fraction) -> Fraction:
    """Exact square root of a rational square."""
    return Fraction(math.isqrt(x.numerator), math.isqrt(x.denominator))


def is_global_square(x: FieldElement) -> bool:
    """Exact test that x is a square in its field.

    Over Q(sqrt(d)): x = (y0 + y1*sqrt(d))^2 forces norm(x) = s^2 with
    s = +-(y0^2 - y1^2 d) rational, and then 2*y0^2 = a0 +- s.  So x is a
    square iff norm(x) is a rational square and one of (a0 +- s)/2 is a
    nonzero rational square (x with a1 = 0 reduces to a0 or a0*d being a
    rational square).
    """
    if not x:
        return True
    if x.field.is_rational:
        return is_square_fraction(x.a0)
    if x.a1 == 0:
        return is_square_fraction(x.a0) or is_square_fraction(x.a0 * x.field.d)
    n = x.norm()
    if not is_square_fraction(n):
        return False
    s = fraction_sqrt(n)
    for u in ((x.a0 + s) / 2, (x.a0 - s) / 2):
        if u != 0 and is_square_fraction(u):
            return True
    return False


def element_support_primes(x: FieldElement) -> set[int]:
    """Odd rational primes at which some place could see x non-unit.

    Covers the numerator and denominator of the norm and the coordinate
    denominators: at a split place the two valuations only sum to
    v_p(norm), so a clean norm does not preclude opposite nonzero
    valuations at the two places -- those need p in a denominator.
    """
    _require_nonzero(x)
    primes: set[int] = set()
    n = x.norm()
    for source in (n.numerator, n.denominator, x.a0.denominator, x.a1.denominator):
        primes.update(factor(source))
    primes.discard(2)
    return primes
