"""
Tests for radical_lab.core: table validation, quotients, products and homomorphisms.
"""

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from radical_lab.catalog import catalog_rings
from radical_lab.config import Settings
from radical_lab.core import (
    Kind,
    build_ring_from_tables,
    component_projection,
    compose,
    direct_product,
    identity_hom,
    image_of,
    module_from_action,
    module_hom,
    preimage_of,
    quotient_module,
    quotient_ring,
    regular_module,
    submodule_as_module,
)
from radical_lab.errors import (
    AxiomViolation,
    DegenerateRing,
    EmptyList,
    KindMismatch,
    ParentMismatch,
    RingMismatch,
    SizeGuardExceeded,
)
from radical_lab.substructures import generated_substructure, make_substructure

RINGS = catalog_rings(Settings())

Z2_ADD = [[0, 1], [1, 0]]


# ==============================================================================
# Ring validation
# ==============================================================================


class TestBuildRing:
    """Tests for build_ring_from_tables."""

    def test_z2_validates(self):
        """Z2 given by its tables is accepted and tagged commutative."""
        ring = build_ring_from_tables(Z2_ADD, [[0, 0], [0, 1]], label="F2")
        assert ring.size == 2
        assert ring.one == 1
        assert ring.zero == 0
        assert "commutative" in ring.tags

    def test_noncommutative_addition_rejected(self):
        """A non-commutative addition table names the failing axiom."""
        with pytest.raises(AxiomViolation) as err:
            build_ring_from_tables([[0, 1], [0, 1]], [[0, 0], [0, 1]])
        assert err.value.axiom in ("additive identity", "additive commutativity", "additive inverse")

    def test_missing_identity_rejected(self):
        """The zero multiplication has no identity."""
        with pytest.raises(AxiomViolation) as err:
            build_ring_from_tables(Z2_ADD, [[0, 0], [0, 0]])
        assert err.value.axiom == "multiplicative identity"

    def test_entry_out_of_range(self):
        """Entries must be element indices."""
        with pytest.raises(AxiomViolation) as err:
            build_ring_from_tables(Z2_ADD, [[0, 0], [0, 2]])
        assert err.value.axiom == "table-range"

    def test_wrong_shape(self):
        """Tables must be square and of matching size."""
        with pytest.raises(AxiomViolation) as err:
            build_ring_from_tables(Z2_ADD, [[0, 0, 0], [0, 1, 0]])
        assert err.value.axiom == "table-shape"

    def test_size_guard(self):
        """Rings over the configured size are refused before validation."""
        with pytest.raises(SizeGuardExceeded):
            build_ring_from_tables(Z2_ADD, [[0, 0], [0, 1]], settings=Settings(max_ring_size=1))

    def test_tables_are_read_only(self, z4):
        """Validated tables cannot be modified in place."""
        with pytest.raises(ValueError):
            z4.mul[0, 0] = 1

    def test_power_sequences(self, z4):
        """Distinct powers stop at the first repeat."""
        assert z4.powers(2) == (2, 0)
        assert z4.powers(3) == (3, 1)
        assert z4.powers(1) == (1,)


class TestElements:
    """Tests for the element wrappers."""

    def test_ring_arithmetic(self, z4):
        """+, -, * and ** follow the tables."""
        two, three = z4[2], z4[3]
        assert (two * two).index == 0
        assert (three + three).index == 2
        assert (two - three).index == 3
        assert (three ** 2).index == 1

    def test_action(self, z4_regular, z4):
        """A ring element times a module element uses the action table."""
        assert (z4[2] * z4_regular[3]).index == 2

    def test_mixed_rings_rejected(self, z4, z6):
        """Elements of different rings cannot be combined."""
        with pytest.raises(RingMismatch):
            z4[1] + z6[1]

    def test_index_out_of_range(self, z4):
        with pytest.raises(IndexError):
            z4[4]


# ==============================================================================
# Modules
# ==============================================================================


class TestModules:
    """Tests for module_from_action and regular_module."""

    def test_regular_module_tags(self, z4_regular):
        """The regular module is tagged free and projective."""
        assert {"regular", "free", "projective"} <= z4_regular.tags
        assert z4_regular.is_projective

    def test_regular_module_is_cached(self, z4):
        assert regular_module(z4) is regular_module(z4)

    def test_zero_ring_base_rejected(self):
        """The zero ring cannot act on a module."""
        zero_ring = build_ring_from_tables([[0]], [[0]])
        with pytest.raises(DegenerateRing):
            module_from_action(zero_ring, [[0]], [[0]])

    def test_non_unital_action_rejected(self, z2):
        """The action of 1 must be the identity."""
        with pytest.raises(AxiomViolation) as err:
            module_from_action(z2, Z2_ADD, [[0, 0], [0, 0]])
        assert err.value.axiom == "unital action"

    def test_zero_module(self, zero_module):
        assert zero_module.size == 1
        assert zero_module.zero == 0


class TestQuotients:
    """Tests for quotient_ring and quotient_module."""

    def test_quotient_ring(self, z4):
        """Z4/(2) has two cosets."""
        ideal = generated_substructure(z4, Kind.TWO_SIDED_IDEAL, [2])
        quotient, projection = quotient_ring(z4, ideal)
        assert quotient.size == 2
        assert projection.tolist() == [0, 1, 0, 1]

    def test_quotient_ring_needs_two_sided_ideal(self, z4):
        ideal = generated_substructure(z4, Kind.LEFT_IDEAL, [2])
        with pytest.raises(KindMismatch):
            quotient_ring(z4, ideal)

    def test_quotient_ring_wrong_parent(self, z4, z6):
        ideal = generated_substructure(z6, Kind.TWO_SIDED_IDEAL, [3])
        with pytest.raises(ParentMismatch):
            quotient_ring(z4, ideal)

    def test_quotient_module(self, z4_regular):
        """The projection onto M/N is surjective with kernel N."""
        sub = make_substructure(z4_regular, Kind.SUBMODULE, [0, 2])
        quotient, projection = quotient_module(z4_regular, sub)
        assert quotient.size == 2
        assert projection.is_surjective
        assert projection.kernel.members == frozenset({0, 2})


class TestProducts:
    """Tests for direct_product."""

    def test_empty_list(self):
        with pytest.raises(EmptyList):
            direct_product([])

    def test_ring_product(self, z2):
        product = direct_product([z2, z2])
        assert product.size == 4
        assert product.is_commutative

    def test_module_product_keeps_free_tag(self, z2):
        free = direct_product([regular_module(z2)] * 2)
        assert free.size == 4
        assert {"free", "projective"} <= free.tags
        assert len(free.components) == 2

    def test_mixed_kinds(self, z2):
        with pytest.raises(KindMismatch):
            direct_product([z2, regular_module(z2)])

    def test_different_rings(self, z2, z4):
        with pytest.raises(RingMismatch):
            direct_product([regular_module(z2), regular_module(z4)])


class TestHomomorphisms:
    """Tests for module_hom, compose, projections, images and preimages."""

    def test_non_additive_map_rejected(self, z4_regular):
        with pytest.raises(AxiomViolation) as err:
            module_hom(z4_regular, z4_regular, [0, 1, 1, 1])
        assert err.value.axiom == "hom additive"

    def test_doubling_is_a_hom(self, z4_regular):
        """m ↦ 2m is linear with kernel {0, 2}."""
        hom = module_hom(z4_regular, z4_regular, [0, 2, 0, 2])
        assert hom.kernel.members == frozenset({0, 2})
        assert not hom.is_surjective

    def test_component_projection(self, z2):
        free = direct_product([regular_module(z2)] * 2)
        projection = component_projection(free, 0)
        assert projection.is_surjective
        assert len(projection.kernel) == 2

    def test_compose_with_identity(self, z2):
        free = direct_product([regular_module(z2)] * 2)
        projection = component_projection(free, 1)
        composed = compose(identity_hom(free), projection)
        assert np.array_equal(composed.map, projection.map)

    def test_image_and_preimage(self, z4_regular):
        sub = make_substructure(z4_regular, Kind.SUBMODULE, [0, 2])
        _, projection = quotient_module(z4_regular, sub)
        image = image_of(projection, sub)
        assert image.is_zero
        assert preimage_of(projection, image).members == sub.members

    def test_submodule_as_module(self, z4_regular):
        """{0, 2} regarded as a module has two elements and includes back into Z4."""
        sub = make_substructure(z4_regular, Kind.SUBMODULE, [0, 2])
        restricted, inclusion = submodule_as_module(z4_regular, sub)
        assert restricted.size == 2
        assert inclusion.is_injective
        assert inclusion.image.members == sub.members


# ==============================================================================
# Axioms on catalog rings
# ==============================================================================


class TestRingAxioms:
    """Property tests: the validated tables satisfy the ring axioms elementwise."""

    @given(data=st.data(), ring=st.sampled_from(RINGS))
    @hyp_settings(max_examples=60, deadline=None)
    def test_distributive_and_associative(self, data, ring):
        element = st.integers(min_value=0, max_value=ring.size - 1)
        a, b, c = (ring[data.draw(element)] for _ in range(3))
        assert (a * (b + c)).index == (a * b + a * c).index
        assert ((a + b) * c).index == (a * c + b * c).index
        assert ((a * b) * c).index == (a * (b * c)).index

    @given(data=st.data(), ring=st.sampled_from(RINGS))
    @hyp_settings(max_examples=60, deadline=None)
    def test_regular_action_is_unital(self, data, ring):
        module = regular_module(ring)
        m = module[data.draw(st.integers(min_value=0, max_value=module.size - 1))]
        assert (ring[ring.one] * m).index == m.index
        assert (m - m).index == module.zero
