"""Tests for admissible triples, canonical forms, and commensurability."""

import pytest

from quathyp.algebras import (
    algebras_isomorphic,
    conjugate_algebra,
    quaternion_algebra,
    ramification_set,
)
from quathyp.commensurability import (
    CONJUGATION,
    IDENTITY,
    AdmissibleTriple,
    OrbifoldClassDescriptor,
    algebra_image,
    canonical_hermitian,
    field_automorphisms,
    general_cn_commensurable,
    hermitian_image,
    is_admissible,
    is_compact,
    place_image,
    quaternionic_commensurable,
    triple_of,
    triples_equivalent,
)
from quathyp.errors import (
    DimensionMismatchError,
    NotQuaternionicHyperbolicError,
    UnsupportedRankError,
)
from quathyp.fields import QQ, Field, places_above
from quathyp.hermitian import hermitian_form, signature_at_ramified


def rational_triple(a, b):
    return AdmissibleTriple(QQ, QQ.real_places()[0], quaternion_algebra(QQ, a, b))


def hamilton_over(k):
    return quaternion_algebra(k, k.element(-1), k.element(-1))


class TestFieldAutomorphisms:
    def test_enumeration(self):
        assert field_automorphisms(QQ) == (IDENTITY,)
        assert field_automorphisms(Field(5)) == (IDENTITY, CONJUGATION)

    def test_place_transport(self):
        k = Field(5)
        v0, v1 = k.real_places()
        assert place_image(IDENTITY, v0) == v0
        assert place_image(CONJUGATION, v0) == v1
        assert place_image(CONJUGATION, v1) == v0
        w1, w2 = places_above(k, 11)
        assert place_image(CONJUGATION, w1) == w2
        inert = places_above(k, 3)[0]
        assert place_image(CONJUGATION, inert) == inert

    def test_algebra_transport(self):
        k = Field(5)
        D = quaternion_algebra(k, k.sqrt_d, k.element(1, 1))
        img = algebra_image(CONJUGATION, D)
        assert img.a == -k.sqrt_d
        assert img.b == k.element(1, -1)
        assert algebra_image(IDENTITY, D) is D

    def test_hermitian_transport(self):
        k = Field(5)
        h = hermitian_form(hamilton_over(k), k.one, k.sqrt_d)
        img = hermitian_image(CONJUGATION, h)
        assert img.coeffs[1] == -k.sqrt_d


class TestAdmissibleTriples:
    def test_validation(self):
        H = quaternion_algebra(QQ, -1, -1)
        with pytest.raises(Exception):
            AdmissibleTriple(QQ, places_above(QQ, 2)[0], H)
        k = Field(5)
        with pytest.raises(Exception):
            AdmissibleTriple(QQ, k.real_places()[0], H)
        with pytest.raises(Exception):
            AdmissibleTriple(k, k.real_places()[0], H)

    def test_admissibility_requires_full_real_ramification(self):
        assert is_admissible(rational_triple(-1, -1))
        assert is_admissible(rational_triple(-2, -5))
        assert not is_admissible(rational_triple(2, 5))
        assert not is_admissible(rational_triple(1, -1))
        k = Field(5)
        assert is_admissible(AdmissibleTriple(k, k.real_places()[0], hamilton_over(k)))
        split_at_reals = quaternion_algebra(k, k.element(4, 1), k.element(-1))
        assert not is_admissible(AdmissibleTriple(k, k.real_places()[0], split_at_reals))

    def test_compactness_tracks_the_field(self):
        assert not is_compact(rational_triple(-1, -1))
        k = Field(5)
        assert is_compact(AdmissibleTriple(k, k.real_places()[0], hamilton_over(k)))

    def test_compactness_requires_admissibility(self):
        with pytest.raises(ValueError):
            is_compact(rational_triple(2, 5))


class TestTripleEquivalence:
    def test_isomorphic_algebras_same_place(self):
        t1 = rational_triple(-1, -1)
        t2 = rational_triple(-1, -4)  # same class: -4 = -1 * 2^2
        assert triples_equivalent(t1, t2)
        assert not triples_equivalent(t1, rational_triple(-1, -3))

    def test_conjugation_can_move_the_distinguished_place(self):
        k = Field(5)
        v0, v1 = k.real_places()
        Hk = hamilton_over(k)
        assert triples_equivalent(
            AdmissibleTriple(k, v0, Hk), AdmissibleTriple(k, v1, Hk)
        )

    def test_conjugation_must_match_algebra_and_place_together(self):
        # D ramifies at one place over 11 only, so it is not isomorphic to
        # its conjugate; twisting works only if the place moves along.
        k = Field(5)
        v0, v1 = k.real_places()
        D = quaternion_algebra(k, k.element(-1), -k.element(4, 1))
        assert {str(v) for v in ramification_set(D)} >= {"inf_0", "inf_1"}
        assert not algebras_isomorphic(D, conjugate_algebra(D))
        t = AdmissibleTriple(k, v0, D)
        assert triples_equivalent(t, AdmissibleTriple(k, v1, conjugate_algebra(D)))
        assert not triples_equivalent(t, AdmissibleTriple(k, v0, conjugate_algebra(D)))
        assert not triples_equivalent(t, AdmissibleTriple(k, v1, D))

    def test_different_fields_never_equivalent(self):
        k2, k5 = Field(2), Field(5)
        t2 = AdmissibleTriple(k2, k2.real_places()[0], hamilton_over(k2))
        t5 = AdmissibleTriple(k5, k5.real_places()[0], hamilton_over(k5))
        assert not triples_equivalent(t2, t5)


class TestCanonicalForms:
    def test_rational_reference(self):
        c = canonical_hermitian(rational_triple(-1, -1), 2)
        assert [x.a0 for x in c.coeffs] == [1, 1, -1]

    def test_quadratic_field_scales_by_sqrt_d(self):
        k = Field(5)
        v0, v1 = k.real_places()
        Hk = hamilton_over(k)
        c0 = canonical_hermitian(AdmissibleTriple(k, v0, Hk), 2)
        c1 = canonical_hermitian(AdmissibleTriple(k, v1, Hk), 2)
        assert c0.coeffs[-1] == -k.sqrt_d
        assert c1.coeffs[-1] == k.sqrt_d

    @pytest.mark.parametrize("m", [2, 3, 5])
    def test_signatures(self, m):
        k = Field(5)
        v0, v1 = k.real_places()
        c = canonical_hermitian(AdmissibleTriple(k, v0, hamilton_over(k)), m)
        assert c.dim == m + 1
        assert signature_at_ramified(c, v0) == (m, 1)
        assert signature_at_ramified(c, v1) == (m + 1, 0)

    def test_rank_below_two_rejected(self):
        with pytest.raises(ValueError):
            canonical_hermitian(rational_triple(-1, -1), 1)

    def test_inadmissible_triple_rejected(self):
        with pytest.raises(ValueError):
            canonical_hermitian(rational_triple(2, 5), 2)


class TestDescriptors:
    def test_split_descriptor(self):
        s = OrbifoldClassDescriptor.split(QQ, 3)
        assert s.kind == "split" and s.n == 3 and s.field is QQ

    def test_nonsplit_descriptor_rank_is_form_dimension(self):
        c = canonical_hermitian(rational_triple(-1, -1), 2)
        d = OrbifoldClassDescriptor.nonsplit(c)
        assert d.kind == "nonsplit" and d.n == 3

    def test_nonsplit_requires_division_algebra(self):
        M = quaternion_algebra(QQ, 1, 3)
        with pytest.raises(NotQuaternionicHyperbolicError, match="division"):
            OrbifoldClassDescriptor.nonsplit(hermitian_form(M, 1, 1, -1))


class TestTripleExtraction:
    def test_roundtrip_from_canonical_form(self):
        t = rational_triple(-2, -5)
        desc = OrbifoldClassDescriptor.nonsplit(canonical_hermitian(t, 3))
        back = triple_of(desc)
        assert back.field is QQ
        assert back.v0 == t.v0
        assert algebras_isomorphic(back.algebra, t.algebra)

    def test_split_descriptors_carry_no_triple(self):
        with pytest.raises(NotQuaternionicHyperbolicError, match="no triple"):
            triple_of(OrbifoldClassDescriptor.split(QQ, 3))

    def test_definite_forms_rejected(self):
        H = quaternion_algebra(QQ, -1, -1)
        with pytest.raises(NotQuaternionicHyperbolicError, match="definite"):
            triple_of(OrbifoldClassDescriptor.nonsplit(hermitian_form(H, 1, 1, 1)))

    def test_wrong_signature_rejected(self):
        H = quaternion_algebra(QQ, -1, -1)
        with pytest.raises(NotQuaternionicHyperbolicError, match=r"\(1, 2\)"):
            triple_of(OrbifoldClassDescriptor.nonsplit(hermitian_form(H, 1, -1, -1)))

    def test_unramified_real_place_rejected(self):
        D = quaternion_algebra(QQ, 2, 5)
        with pytest.raises(NotQuaternionicHyperbolicError, match="does not ramify"):
            triple_of(OrbifoldClassDescriptor.nonsplit(hermitian_form(D, 1, 1, -1)))

    def test_two_indefinite_places_rejected(self):
        k = Field(5)
        h = hermitian_form(hamilton_over(k), k.one, k.one, k.element(-1))
        with pytest.raises(NotQuaternionicHyperbolicError, match="more than one"):
            triple_of(OrbifoldClassDescriptor.nonsplit(h))


class TestQuaternionicCommensurability:
    def test_distinct_rational_classes(self):
        descs = []
        for a, b in [(-1, -1), (-1, -3), (-2, -5)]:
            t = rational_triple(a, b)
            descs.append(OrbifoldClassDescriptor.nonsplit(canonical_hermitian(t, 2)))
        for i in range(3):
            for j in range(3):
                expected = i == j
                assert quaternionic_commensurable(descs[i], descs[j]) == expected

    def test_representation_changes_do_not_matter(self):
        t = rational_triple(-1, -1)
        canonical = canonical_hermitian(t, 2)
        H4 = quaternion_algebra(QQ, -4, -9)  # same class as (-1, -1)
        rearranged = hermitian_form(H4, 1, -25, 4)
        d1 = OrbifoldClassDescriptor.nonsplit(canonical)
        d2 = OrbifoldClassDescriptor.nonsplit(rearranged)
        assert quaternionic_commensurable(d1, d2)

    def test_distinguished_place_twist(self):
        k = Field(5)
        v0, v1 = k.real_places()
        Hk = hamilton_over(k)
        d0 = OrbifoldClassDescriptor.nonsplit(
            canonical_hermitian(AdmissibleTriple(k, v0, Hk), 2)
        )
        d1 = OrbifoldClassDescriptor.nonsplit(
            canonical_hermitian(AdmissibleTriple(k, v1, Hk), 2)
        )
        assert quaternionic_commensurable(d0, d1)

    def test_dimension_mismatch_raises(self):
        t = rational_triple(-1, -1)
        d2 = OrbifoldClassDescriptor.nonsplit(canonical_hermitian(t, 2))
        d3 = OrbifoldClassDescriptor.nonsplit(canonical_hermitian(t, 3))
        with pytest.raises(DimensionMismatchError, match="ambient dimensions"):
            quaternionic_commensurable(d2, d3)

    def test_fields_must_agree(self):
        k = Field(5)
        dq = OrbifoldClassDescriptor.nonsplit(
            canonical_hermitian(rational_triple(-1, -1), 2)
        )
        dk = OrbifoldClassDescriptor.nonsplit(
            canonical_hermitian(AdmissibleTriple(k, k.real_places()[0], hamilton_over(k)), 2)
        )
        assert not quaternionic_commensurable(dq, dk)


class TestGeneralCnCommensurability:
    def test_split_classes_compare_by_field_and_rank(self):
        assert general_cn_commensurable(
            OrbifoldClassDescriptor.split(QQ, 3), OrbifoldClassDescriptor.split(QQ, 3)
        )
        assert not general_cn_commensurable(
            OrbifoldClassDescriptor.split(QQ, 3), OrbifoldClassDescriptor.split(QQ, 4)
        )
        assert not general_cn_commensurable(
            OrbifoldClassDescriptor.split(QQ, 3),
            OrbifoldClassDescriptor.split(Field(5), 3),
        )

    def test_split_never_matches_nonsplit(self):
        c = canonical_hermitian(rational_triple(-1, -1), 2)
        assert not general_cn_commensurable(
            OrbifoldClassDescriptor.split(QQ, 3), OrbifoldClassDescriptor.nonsplit(c)
        )

    def test_agrees_with_quaternionic_decision(self):
        pairs = [((-1, -1), (-1, -4)), ((-1, -1), (-1, -3)), ((-2, -5), (-2, -5))]
        for (a1, b1), (a2, b2) in pairs:
            d1 = OrbifoldClassDescriptor.nonsplit(
                canonical_hermitian(rational_triple(a1, b1), 2)
            )
            d2 = OrbifoldClassDescriptor.nonsplit(
                canonical_hermitian(rational_triple(a2, b2), 2)
            )
            assert general_cn_commensurable(d1, d2) == quaternionic_commensurable(d1, d2)

    def test_low_rank_rejected(self):
        with pytest.raises(UnsupportedRankError, match="n >= 3"):
            general_cn_commensurable(
                OrbifoldClassDescriptor.split(QQ, 2), OrbifoldClassDescriptor.split(QQ, 2)
            )

    def test_conjugation_twist_in_rank_three(self):
        k = Field(5)
        v0, v1 = k.real_places()
        Hk = hamilton_over(k)
        d0 = OrbifoldClassDescriptor.nonsplit(
            canonical_hermitian(AdmissibleTriple(k, v0, Hk), 2)
        )
        d1 = OrbifoldClassDescriptor.nonsplit(
            canonical_hermitian(AdmissibleTriple(k, v1, Hk), 2)
        )
        assert general_cn_commensurable(d0, d1)
