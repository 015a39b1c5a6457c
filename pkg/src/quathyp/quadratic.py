"""Diagonal quadratic forms over Q and Q(sqrt(d)).

Forms are ordered tuples of nonzero field coefficients.  The module
computes the classifying local data (dimension, determinant square
class, Hasse invariant, real signatures), decides isometry by
local-global comparison, and decides isotropy locally and globally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatchError, PlaceKindError
from .fields import (
    Field,
    FieldElement,
    Place,
    is_global_square,
    is_local_square,
    sign_at_real_place,
)
from .numtheory import squarefree_part
from .symbols import hilbert_symbol, support_with


@dataclass(frozen=True)
class QuadraticForm:
    """The diagonal form <a_1, ..., a_n> over its field."""

    field: Field
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a quadratic form needs at least one coefficient")
        for i, c in enumerate(self.coeffs):
            if not isinstance(c, FieldElement) or c.field != self.field:
                raise FieldMismatchError(f"coefficient {i} is not over {self.field}")
            if not c:
                raise ValueError(f"coefficient {i} is zero")

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def det(self) -> FieldElement:
        out = self.field.one
        for c in self.coeffs:
            out = out * c
        return out

    def scaled(self, factor: FieldElement) -> "QuadraticForm":
        return QuadraticForm(self.field, tuple(factor * c for c in self.coeffs))

    def __str__(self) -> str:
        return "<" + ", ".join(str(c) for c in self.coeffs) + ">"


def diagonal_form(field: Field, *entries) -> QuadraticForm:
    """Convenience constructor coercing ints/Fractions to field elements."""
    coeffs = tuple(
        e if isinstance(e, FieldElement) else field.element(e) for e in entries
    )
    return QuadraticForm(field, coeffs)


def orthogonal_sum(q1: QuadraticForm, q2: QuadraticForm) -> QuadraticForm:
    if q1.field != q2.field:
        raise FieldMismatchError("cannot sum forms over different fields")
    return QuadraticForm(q1.field, q1.coeffs + q2.coeffs)


@dataclass(frozen=True)
class LocalQuadInvariants:
    """dim, det square class and Hasse invariant at one place (plus the
    signature when the place is real)."""

    dim: int
    det_class: FieldElement
    hasse: int
    signature: tuple[int, int] | None = None


def square_class_rep(x: FieldElement) -> FieldElement:
    """A reduced representative of x modulo nonzero squares.

    Over Q: the squarefree integer with x's sign.  Over Q(sqrt(d)):
    denominators are cleared by squares and the coordinate gcd's square
    part is divided out (rational values reduce to their squarefree
    part); class equality testing always goes through the exact square
    test on ratios, so this is a normalization, not a decision procedure.
    """
    if not x:
        raise ValueError("0 has no square class")
    field = x.field
    if x.a1 == 0:
        return field.element(squarefree_part(x.a0.numerator * x.a0.denominator))
    denom = x.a0.denominator * x.a1.denominator
    y = x * field.element(denom) ** 2
    g = math.gcd(int(y.a0), int(y.a1))
    t2 = g // squarefree_part(g)  # largest square dividing the gcd
    return field.element(y.a0 / Fraction(t2), y.a1 / Fraction(t2))


def same_square_class(x: FieldElement, y: FieldElement) -> bool:
    return is_global_square(x / y)


def signature_at(q: QuadraticForm, v: Place) -> tuple[int, int]:
    """Counts of positive and negative coefficient signs under v."""
    if not v.is_real:
        raise PlaceKindError(f"signature requires a real place, got {v}")
    plus = sum(1 for c in q.coeffs if sign_at_real_place(c, v) > 0)
    return plus, q.dim - plus


def hasse_invariant(q: QuadraticForm, v: Place) -> int:
    """Product of the Hilbert symbols (a_i, a_j)_v over all pairs i < j."""
    out = 1
    for i in range(q.dim):
        for j in range(i + 1, q.dim):
            out *= hilbert_symbol(q.coeffs[i], q.coeffs[j], v)
    return out


def local_invariants(q: QuadraticForm, v: Place) -> LocalQuadInvariants:
    sig = signature_at(q, v) if v.is_real else None
    return LocalQuadInvariants(
        dim=q.dim,
        det_class=square_class_rep(q.det()),
        hasse=hasse_invariant(q, v),
        signature=sig,
    )


def form_support(q: QuadraticForm) -> tuple[Place, ...]:
    """Places outside which all of q's local data is trivial: the real
    places plus the joint symbol support of the coefficients."""
    return support_with(q.field, *q.coeffs)


def forms_isometric(q1: QuadraticForm, q2: QuadraticForm) -> bool:
    """Exact isometry test over the common base field.

    Equal dimension, determinants in one square class, equal signatures
    at the real places, and equal Hasse invariants everywhere; outside
    the joint support both Hasse invariants are +1, so only the support
    places are compared.
    """
    if q1.field != q2.field:
        raise FieldMismatchError("cannot compare forms over different fields")
    if q1.dim != q2.dim:
        return False
    if not same_square_class(q1.det(), q2.det()):
        return False
    places = set(form_support(q1)) | set(form_support(q2))
    for v in sorted(places, key=Place.sort_key):
        if v.is_real:
            if signature_at(q1, v) != signature_at(q2, v):
                return False
        elif hasse_invariant(q1, v) != hasse_invariant(q2, v):
            return False
    return True


def isotropic_at(q: QuadraticForm, v: Place) -> bool:
    """Whether q represents 0 nontrivially over the completion at v."""
    if v.is_real:
        plus, minus = signature_at(q, v)
        return plus > 0 and minus > 0
    n = q.dim
    if n == 1:
        return False
    det = q.det()
    if n == 2:
        return is_local_square(-det, v)
    if n == 3:
        return hasse_invariant(q, v) == hilbert_symbol(
            q.field.element(-1), -det, v
        )
    if n == 4:
        if is_local_square(det, v):
            minus_one = q.field.element(-1)
            return hasse_invariant(q, v) == hilbert_symbol(minus_one, minus_one, v)
        return True
    return True  # dim >= 5: every form over a p-adic field is isotropic


def isotropic_global(q: QuadraticForm) -> bool:
    """Isotropy over the base field, by local-global comparison.

    Dimensions 3 and 4 are checked at every real place and every support
    place; a binary form cannot use that route -- <1, -u> is anisotropic
    exactly where u is a nonsquare, and a global nonsquare u can be a
    local square at every place of any fixed finite set (the places
    detecting it have density 1/2 but need not include the support), so
    dimension 2 gets the exact global square test instead.
    """
    n = q.dim
    if n == 1:
        return False
    if n == 2:
        return is_global_square(-q.det())
    for v in q.field.real_places():
        if not isotropic_at(q, v):
            return False
    if n >= 5:
        return True  # isotropic at every finite place automatically
    return all(isotropic_at(q, v) for v in form_support(q) if v.is_finite)
