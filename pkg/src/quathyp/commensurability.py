"""Admissible triples and commensurability decisions.

A triple (field, distinguished real place, quaternion algebra ramified
at every real place) pins down a commensurability class of finite-volume
quaternionic hyperbolic orbifolds; two triples give commensurable
classes exactly when a field automorphism matches them up.  This module
provides that parametrization: extraction of the triple from a Hermitian
descriptor, canonical forms, equivalence, the commensurability decision
for general type-C_n classes (split and nonsplit), and the compactness
criterion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import (
    QuaternionAlgebra,
    algebras_isomorphic,
    conjugate_algebra,
    is_division,
    ramification_set,
)
from .errors import (
    DimensionMismatchError,
    NotQuaternionicHyperbolicError,
    UnsupportedRankError,
)
from .fields import Field, FieldElement, Place, conjugate_place
from .hermitian import HermitianForm, signature_at_ramified

IDENTITY = "id"
CONJUGATION = "conj"


def field_automorphisms(field: Field) -> tuple[str, ...]:
    return (IDENTITY,) if field.is_rational else (IDENTITY, CONJUGATION)


def place_image(tau: str, v: Place) -> Place:
    return v if tau == IDENTITY else conjugate_place(v)


def algebra_image(tau: str, D: QuaternionAlgebra) -> QuaternionAlgebra:
    return D if tau == IDENTITY else conjugate_algebra(D)


def hermitian_image(tau: str, h: HermitianForm) -> HermitianForm:
    if tau == IDENTITY:
        return h
    return HermitianForm(
        conjugate_algebra(h.algebra), tuple(c.conjugate() for c in h.coeffs)
    )


@dataclass(frozen=True)
class AdmissibleTriple:
    """(field, distinguished real place, algebra); admissibility itself
    (all real places ramified) is decided by :func:`is_admissible`."""

    field: Field
    v0: Place
    algebra: QuaternionAlgebra

    def __post_init__(self):
        if not self.v0.is_real or self.v0.field != self.field:
            raise ValueError(f"v0 must be a real place of {self.field}")
        if self.algebra.field != self.field:
            raise ValueError("algebra and triple must share the field")

    def __str__(self) -> str:
        return f"({self.field}, {self.v0}, {self.algebra})"


def is_admissible(t: AdmissibleTriple) -> bool:
    """Totally real field (always, here) and algebra ramified at every
    real place."""
    ram = ramification_set(t.algebra)
    return all(v in ram for v in t.field.real_places())


def triples_equivalent(t1: AdmissibleTriple, t2: AdmissibleTriple) -> bool:
    """Whether a field isomorphism carries t2 to t1.

    The only candidates are the identity and (for quadratic fields) the
    Galois conjugation; the isomorphism must send t2's distinguished
    place to t1's and make the algebras isomorphic.
    """
    if t1.field != t2.field:
        return False
    for tau in field_automorphisms(t1.field):
        if place_image(tau, t2.v0) != t1.v0:
            continue
        if algebras_isomorphic(t1.algebra, algebra_image(tau, t2.algebra)):
            return True
    return False


def canonical_hermitian(t: AdmissibleTriple, m: int) -> HermitianForm:
    """The canonical (m+1)-dimensional form <1, ..., 1, lam> for the
    triple: lam negative exactly at the distinguished place.

    Over Q: lam = -1.  Over Q(sqrt(d)): lam = -sqrt(d) when v0 is the
    embedding sending sqrt(d) to +sqrt(d), and +sqrt(d) when v0 is the
    other one.
    """
    if m < 2:
        raise ValueError("ambient quaternionic dimension must be at least 2")
    if not is_admissible(t):
        raise ValueError(f"{t} is not admissible")
    field = t.field
    if field.is_rational:
        lam = field.element(-1)
    elif t.v0.embedding == 0:
        lam = -field.sqrt_d
    else:
        lam = field.sqrt_d
    h = HermitianForm(t.algebra, (field.one,) * m + (lam,))
    for v in field.real_places():
        expected = (m, 1) if v == t.v0 else (m + 1, 0)
        if signature_at_ramified(h, v) != expected:  # pragma: no cover
            raise RuntimeError(f"canonical form has wrong signature at {v}")
    return h


@dataclass(frozen=True)
class OrbifoldClassDescriptor:
    """A commensurability-class descriptor: split type carries (field, n),
    nonsplit type carries a Hermitian form over a division algebra."""

    kind: str
    field: Field | None = None
    rank: int | None = None
    form: HermitianForm | None = None

    @classmethod
    def split(cls, field: Field, n: int) -> "OrbifoldClassDescriptor":
        if n < 1:
            raise ValueError("rank must be positive")
        return cls(kind="split", field=field, rank=n)

    @classmethod
    def nonsplit(cls, form: HermitianForm) -> "OrbifoldClassDescriptor":
        if not is_division(form.algebra):
            raise NotQuaternionicHyperbolicError(
                "nonsplit descriptors need a division algebra"
            )
        return cls(kind="nonsplit", field=form.field, form=form)

    @property
    def n(self) -> int:
        return self.rank if self.kind == "split" else self.form.dim


def triple_of(desc: OrbifoldClassDescriptor) -> AdmissibleTriple:
    """Extract (field, v0, algebra) from a nonsplit descriptor.

    Checks the quaternionic-hyperbolic conditions and reports the first
    failure: the algebra must ramify at every real place, the form must
    be indefinite at exactly one real place, and there its signature
    must be (n-1, 1).  The distinguished place is the indefinite one.
    """
    if desc.kind != "nonsplit":
        raise NotQuaternionicHyperbolicError("split descriptors carry no triple")
    h = desc.form
    field, D = h.field, h.algebra
    ram = ramification_set(D)
    for v in field.real_places():
        if v not in ram:
            raise NotQuaternionicHyperbolicError(
                f"algebra does not ramify at the real place {v}"
            )
    mixed = [
        v
        for v in field.real_places()
        if 0 not in signature_at_ramified(h, v)
    ]
    if not mixed:
        raise NotQuaternionicHyperbolicError(
            "form is definite at every real place; no distinguished place"
        )
    if len(mixed) > 1:
        raise NotQuaternionicHyperbolicError(
            "form is indefinite at more than one real place"
        )
    v0 = mixed[0]
    sig = signature_at_ramified(h, v0)
    if sig != (h.dim - 1, 1):
        raise NotQuaternionicHyperbolicError(
            f"signature at {v0} is {sig}, not ({h.dim - 1}, 1)"
        )
    return AdmissibleTriple(field, v0, D)


def quaternionic_commensurable(
    d1: OrbifoldClassDescriptor, d2: OrbifoldClassDescriptor
) -> bool:
    """Commensurability of two quaternionic hyperbolic classes: equal
    dimension and equivalent triples."""
    t1, t2 = triple_of(d1), triple_of(d2)
    if d1.form.dim != d2.form.dim:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {d1.form.dim - 1} vs {d2.form.dim - 1}"
        )
    return triples_equivalent(t1, t2)


def _unordered(sig: tuple[int, int]) -> frozenset[tuple[int, int]]:
    # a similarity scaling can flip all signs at a real place
    # independently of the others, so only the unordered pair matters
    return frozenset((sig, (sig[1], sig[0])))


def general_cn_commensurable(
    d1: OrbifoldClassDescriptor, d2: OrbifoldClassDescriptor
) -> bool:
    """Commensurability decision for type C_n classes, n >= 3.

    Split/split: same field and same rank.  Split/nonsplit: never.
    Nonsplit/nonsplit: same rank, isomorphic fields, and some field
    automorphism making the algebras isomorphic while matching, place by
    place, the unordered signature pairs at the real places where the
    algebras ramify.
    """
    if d1.n < 3 or d2.n < 3:
        raise UnsupportedRankError("type C_n decisions require n >= 3")
    if d1.kind != d2.kind:
        return False
    if d1.kind == "split":
        return d1.field == d2.field and d1.n == d2.n
    if d1.n != d2.n or d1.field != d2.field:
        return False
    h1, h2 = d1.form, d2.form
    D1 = h1.algebra
    for tau in field_automorphisms(d1.field):
        if not algebras_isomorphic(D1, algebra_image(tau, h2.algebra)):
            continue
        ram_reals = [v for v in d1.field.real_places() if v in ramification_set(D1)]
        if all(
            _unordered(signature_at_ramified(h1, v))
            == _unordered(signature_at_ramified(h2, place_image(tau, v)))
            for v in ram_reals
        ):
            return True
    return False


def is_compact(t: AdmissibleTriple) -> bool:
    """Whether the orbifolds of the triple's class are compact.

    Compactness is equivalent to anisotropy of the defining forms.  Over
    Q the single real place is indefinite and the (large) trace form is
    isotropic everywhere locally, hence globally; over a quadratic field
    the second real place carries a definite form, which blocks global
    isotropy.  So the decision reduces to the field.
    """
    if not is_admissible(t):
        raise ValueError(f"{t} is not admissible")
    return not t.field.is_rational
