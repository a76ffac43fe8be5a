"""
Tests for radical_lab.radicals on small rings and modules whose radicals are known by hand.

Z4 and Z8 have nil radical (2); Z6 is semisimple; U2(Z2) has radical spanned by e12;
M2(Z2) is simple but not 2-primal, and the constant-row module over it is prime without
being completely prime.
"""

import numpy as np
import pytest

from radical_lab.core import Kind, identity_hom, quotient_module, regular_module, submodule_as_module
from radical_lab.errors import InvariantBreach, KernelNotContained, NotEpimorphism, NotProper
from radical_lab.radicals import (
    ENVELOPE_CACHE_SIZE,
    MODULE_FLAGS,
    _envelope,
    Verdict,
    beta,
    beta_co,
    beta_co_s,
    beta_s,
    completely_prime_submodules,
    envelope,
    envelope_submodule,
    eventually_annihilating,
    hom_transfer_check,
    is_completely_prime_ideal,
    is_completely_prime_submodule,
    is_completely_semiprime_ideal,
    is_completely_semiprime_submodule,
    is_ideal_torsion_free_quotient,
    is_nil_left_ideal,
    is_prime_ideal,
    is_prime_submodule,
    is_semiprime_ideal,
    is_semiprime_submodule,
    is_torsion_free_quotient,
    is_two_primal_ideal,
    is_two_primal_module,
    is_two_primal_ring,
    is_two_primal_submodule,
    module_class_flags,
    nil_elements,
    prime_submodules,
    radical_report,
    ring_properties,
    ring_radicals,
    satisfies_crf,
    satisfies_rf,
    strongly_nilpotent_submodule,
    subdirect_decomposition,
    submodule_satisfies_crf,
    submodule_satisfies_rf,
)
from radical_lab.substructures import (
    all_substructures,
    full_substructure,
    generated_substructure,
    make_substructure,
    zero_substructure,
)


def _zero(module):
    return zero_substructure(module, Kind.SUBMODULE)


def _sub(module, members):
    return make_substructure(module, Kind.SUBMODULE, members)


# ==============================================================================
# Verdicts
# ==============================================================================


class TestVerdict:
    """Verdicts carry a witness whenever they fail."""

    def test_failure_needs_witness(self):
        with pytest.raises(InvariantBreach):
            Verdict(False)

    def test_truthiness(self):
        assert Verdict(True)
        assert not Verdict(False, {"a": 1})

    def test_to_dict(self):
        assert Verdict(False, {"a": 1}, "x").to_dict()["witness"] == {"a": 1}


# ==============================================================================
# Envelopes
# ==============================================================================


class TestEnvelope:
    """E_M(N) and its generated submodule."""

    def test_z4_zero(self, z4_regular):
        assert envelope(z4_regular, _zero(z4_regular)) == frozenset({0, 2})

    def test_z6_zero(self, z6_regular):
        assert envelope(z6_regular, _zero(z6_regular)) == frozenset({0})

    def test_envelope_contains_submodule(self, z8):
        module = regular_module(z8)
        for sub in all_substructures(module, Kind.SUBMODULE):
            assert sub.members <= envelope(module, sub)

    def test_envelope_of_full(self, z4_regular):
        full = full_substructure(z4_regular, Kind.SUBMODULE)
        assert envelope_submodule(z4_regular, full).is_full

    def test_exx_envelope_fills_module(self, exx):
        """e12 and e21 square to zero and move both nonzero rows, so ⟨E(0)⟩ = M."""
        assert envelope_submodule(exx, _zero(exx)).is_full

    def test_matrix_ring_envelope_size(self, m2):
        """E(0) of M2(Z2) is the zero matrix plus the nine matrices with a nilpotent factor."""
        assert len(ring_radicals(m2).envelope_zero) == 10

    def test_envelope_cache_is_bounded(self, z4_regular):
        assert _envelope.cache_info().maxsize == ENVELOPE_CACHE_SIZE
        _envelope.cache_clear()
        assert envelope(z4_regular, _zero(z4_regular)) == frozenset({0, 2})


# ==============================================================================
# Prime-type submodules
# ==============================================================================


class TestPrimeSubmodules:
    """Prime, completely prime, semiprime and completely semiprime submodules."""

    def test_z4_zero_not_prime(self, z4_regular):
        verdict = is_prime_submodule(z4_regular, _zero(z4_regular))
        assert not verdict
        assert verdict.witness == {"ideal": [0, 2], "submodule": [0, 2]}

    def test_z4_two_is_prime(self, z4_regular):
        sub = _sub(z4_regular, [0, 2])
        assert is_prime_submodule(z4_regular, sub)
        assert is_completely_prime_submodule(z4_regular, sub)

    def test_full_submodule_is_not_proper(self, z4_regular):
        with pytest.raises(NotProper):
            is_prime_submodule(z4_regular, full_substructure(z4_regular, Kind.SUBMODULE))

    def test_z4_zero_not_completely_semiprime(self, z4_regular):
        verdict = is_completely_semiprime_submodule(z4_regular, _zero(z4_regular))
        assert not verdict
        assert verdict.witness == {"a": 2, "m": 1}

    def test_z6_zero_semiprime(self, z6_regular):
        zero = _zero(z6_regular)
        assert is_semiprime_submodule(z6_regular, zero)
        assert is_completely_semiprime_submodule(z6_regular, zero)
        assert not is_prime_submodule(z6_regular, zero)

    def test_exx_zero_prime_not_completely_prime(self, exx):
        zero = _zero(exx)
        assert is_prime_submodule(exx, zero)
        assert not is_completely_prime_submodule(exx, zero)

    def test_families(self, z6_regular):
        primes = [sorted(p.members) for p in prime_submodules(z6_regular)]
        assert primes == [[0, 3], [0, 2, 4]]
        assert [sorted(p.members) for p in completely_prime_submodules(z6_regular)] == primes


# ==============================================================================
# Radicals
# ==============================================================================


class TestRadicals:
    """β, β_co and their relative versions."""

    def test_z4(self, z4_regular):
        assert sorted(beta(z4_regular).members) == [0, 2]
        assert sorted(beta_co(z4_regular).members) == [0, 2]

    def test_z8_strongly_nilpotent(self, z8):
        module = regular_module(z8)
        assert sorted(strongly_nilpotent_submodule(module).members) == [0, 2, 4, 6]
        assert sorted(beta(module).members) == [0, 2, 4, 6]

    def test_exx(self, exx):
        assert beta(exx).is_zero
        assert beta_co(exx).is_full

    def test_relative_radicals_of_full_submodule(self, z4_regular):
        full = full_substructure(z4_regular, Kind.SUBMODULE)
        assert beta_s(z4_regular, full).is_full
        assert beta_co_s(z4_regular, full).is_full

    def test_relative_radical_contains_submodule(self, z6_regular):
        sub = _sub(z6_regular, [0, 3])
        assert sub <= beta_s(z6_regular, sub) <= beta_co_s(z6_regular, sub)


class TestNilpotence:
    """Nilpotent elements and the eventually-annihilating table."""

    def test_nil_elements(self, z4, z8, m2):
        assert nil_elements(z4) == frozenset({0, 2})
        assert nil_elements(z8) == frozenset({0, 2, 4, 6})
        assert len(nil_elements(m2)) == 4

    def test_nil_left_ideal(self, z4):
        assert is_nil_left_ideal(z4, generated_substructure(z4, Kind.LEFT_IDEAL, [2]))
        verdict = is_nil_left_ideal(z4, generated_substructure(z4, Kind.LEFT_IDEAL, [1]))
        assert verdict.witness == {"element": 1}

    def test_eventually_annihilating(self, z4_regular):
        table = eventually_annihilating(z4_regular)
        assert table[2, 1] and table[0, 3]
        assert not table[1, 1]
        assert not table.flags.writeable

    def test_z6_strongly_nilpotent_zero(self, z6_regular):
        assert strongly_nilpotent_submodule(z6_regular).is_zero


# ==============================================================================
# Module classes and 2-primality
# ==============================================================================


class TestClassFlags:
    """IFP, symmetric, semi-symmetric and Lee-Zhou reduced modules."""

    def test_commutative_ring_has_ifp(self, z4_regular):
        flags = module_class_flags(z4_regular)
        assert flags["IFP"] and flags["symmetric"]
        assert not flags["lee_zhou_reduced"]

    def test_z6_reduced(self, z6_regular):
        assert all(module_class_flags(z6_regular).values())

    def test_exx_not_ifp(self, exx):
        verdict = module_class_flags(exx)["IFP"]
        assert not verdict
        assert set(verdict.witness) == {"a", "m"}


class TestTwoPrimal:
    """2-primal rings, modules, submodules and ideals."""

    def test_rings(self, z4, u2, m2):
        assert is_two_primal_ring(z4)
        assert is_two_primal_ring(u2)
        verdict = is_two_primal_ring(m2)
        assert not verdict
        assert not any(verdict.details[key] for key in
                       ("nil_equals_beta", "beta_co_equals_beta", "beta_equals_envelope"))

    def test_matrix_radicals(self, m2):
        rad = ring_radicals(m2)
        assert len(rad.nil) == 4
        assert rad.beta == frozenset({0})
        assert len(rad.beta_co) == 16

    def test_upper_triangular_radicals(self, u2):
        rad = ring_radicals(u2)
        assert rad.nil == rad.beta == rad.beta_co == frozenset({0, 2})

    def test_modules(self, z4_regular, exx):
        assert is_two_primal_module(z4_regular)
        assert not is_two_primal_module(exx)

    def test_submodule(self, z4_regular):
        assert is_two_primal_submodule(z4_regular, _sub(z4_regular, [0, 2]))

    def test_ideals(self, z4, m2):
        assert is_two_primal_ideal(z4, generated_substructure(z4, Kind.TWO_SIDED_IDEAL, [2]))
        assert not is_two_primal_ideal(m2, zero_substructure(m2, Kind.TWO_SIDED_IDEAL))
        assert is_two_primal_ideal(m2, full_substructure(m2, Kind.TWO_SIDED_IDEAL))


# ==============================================================================
# Radical formulas and transfer
# ==============================================================================


class TestRadicalFormulas:
    """⟨E(N)⟩ against β^s(N) and β_co^s(N)."""

    def test_z4_satisfies_both(self, z4_regular):
        assert satisfies_rf(z4_regular)
        assert satisfies_crf(z4_regular)

    def test_exx_crf_without_rf(self, exx):
        zero = _zero(exx)
        assert submodule_satisfies_crf(exx, zero)
        assert not submodule_satisfies_rf(exx, zero)
        verdict = satisfies_rf(exx)
        assert not verdict
        assert verdict.witness["submodule"] == [0]
        assert satisfies_crf(exx)


class TestHomTransfer:
    """Transfer of the radical formulas along epimorphisms."""

    def test_identity(self, z4_regular):
        assert hom_transfer_check(identity_hom(z4_regular), _zero(z4_regular))

    def test_projection(self, z4_regular):
        sub = _sub(z4_regular, [0, 2])
        _, projection = quotient_module(z4_regular, sub)
        verdict = hom_transfer_check(projection, sub)
        assert verdict
        assert verdict.details["crf"] == {"N": True, "image": True, "preimage": True}

    def test_not_surjective(self, z4_regular):
        sub = _sub(z4_regular, [0, 2])
        _, inclusion = submodule_as_module(z4_regular, sub)
        with pytest.raises(NotEpimorphism):
            hom_transfer_check(inclusion, _zero(inclusion.source))

    def test_kernel_not_contained(self, z4_regular):
        _, projection = quotient_module(z4_regular, _sub(z4_regular, [0, 2]))
        with pytest.raises(KernelNotContained):
            hom_transfer_check(projection, _zero(z4_regular))


class TestSubdirect:
    """Subdirect products of completely prime factors."""

    def test_z6(self, z6_regular):
        result = subdirect_decomposition(z6_regular)
        assert result.verdict
        assert sorted(f.target.size for f in result.factors) == [2, 3]

    def test_exx_absent(self, exx):
        result = subdirect_decomposition(exx)
        assert result.factors is None
        assert result.verdict.witness == {"beta_co": [0, 1, 2, 3]}


# ==============================================================================
# Ring properties and torsion
# ==============================================================================


class TestRingLevel:
    """Prime ideals, torsion and ring-level properties."""

    def test_prime_ideals_of_z6(self, z6):
        three = generated_substructure(z6, Kind.TWO_SIDED_IDEAL, [3])
        assert is_prime_ideal(z6, three)
        assert is_completely_prime_ideal(z6, three)
        assert not is_prime_ideal(z6, zero_substructure(z6, Kind.TWO_SIDED_IDEAL))

    def test_matrix_zero_ideal(self, m2):
        """0 is prime in the simple ring M2(Z2) but not completely prime."""
        zero = zero_substructure(m2, Kind.TWO_SIDED_IDEAL)
        assert is_prime_ideal(m2, zero)
        assert not is_completely_prime_ideal(m2, zero)

    def test_semiprime_ideals_of_z4(self, z4):
        two = generated_substructure(z4, Kind.TWO_SIDED_IDEAL, [2])
        zero = zero_substructure(z4, Kind.TWO_SIDED_IDEAL)
        assert is_semiprime_ideal(z4, two)
        assert is_completely_semiprime_ideal(z4, two)
        assert is_semiprime_ideal(z4, zero).witness == {"a": 2}
        assert is_completely_semiprime_ideal(z4, zero).witness == {"a": 2}

    def test_matrix_zero_ideal_semiprime_only(self, m2):
        """M2(Z2) is a prime ring, yet [[0,0],[1,0]] squares to zero."""
        zero = zero_substructure(m2, Kind.TWO_SIDED_IDEAL)
        assert is_semiprime_ideal(m2, zero)
        assert is_completely_semiprime_ideal(m2, zero).witness == {"a": 2}

    def test_semiprime_ideal_must_be_proper(self, z4):
        with pytest.raises(NotProper):
            is_semiprime_ideal(z4, full_substructure(z4, Kind.TWO_SIDED_IDEAL))

    def test_beta_semiprime_properties(self, u2, m2):
        u2_props = ring_properties(u2)
        assert u2_props["beta_semiprime"]
        assert u2_props["beta_completely_semiprime"]
        m2_props = ring_properties(m2)
        assert m2_props["beta_semiprime"]
        assert not m2_props["beta_completely_semiprime"]

    def test_torsion(self, z4_regular, exx):
        two = _sub(z4_regular, [0, 2])
        assert is_torsion_free_quotient(z4_regular, two)
        assert not is_torsion_free_quotient(exx, _zero(exx))
        assert is_ideal_torsion_free_quotient(exx, _zero(exx))

    def test_properties(self, z4, z6, m2):
        z6_props = ring_properties(z6)
        assert all(z6_props.values())
        z4_props = ring_properties(z4)
        assert not z4_props["is_semisimple"]
        assert z4_props["is_semisimple"].witness == {"jacobson": [0, 2]}
        m2_props = ring_properties(m2)
        assert m2_props["is_semisimple"]
        assert m2_props["dedekind_finite"]
        assert not m2_props["primes_completely_prime"]
        assert not m2_props["nil_is_ideal"]


# ==============================================================================
# Reports
# ==============================================================================


class TestRadicalReport:
    """The assembled report for one module."""

    def test_z4(self, z4_regular):
        report = radical_report(z4_regular)
        assert sorted(report.beta.members) == [0, 2]
        assert set(report.class_flags) == set(MODULE_FLAGS)
        assert report.class_flags["two_primal"]
        assert not report.class_flags["prime"]
        assert report.to_dict()["envelope_zero"] == [0, 2]

    def test_exx(self, exx):
        flags = radical_report(exx).class_flags
        assert flags["prime"] and flags["satisfies_crf"]
        assert not flags["completely_prime"]
        assert not flags["IFP"]
        assert not flags["two_primal"]
        assert not flags["satisfies_rf"]

    def test_zero_module(self, zero_module):
        flags = radical_report(zero_module).class_flags
        for name in ("prime", "completely_prime", "semiprime", "completely_semiprime"):
            assert not flags[name]
            assert "reason" in flags[name].witness
        assert flags["IFP"] and flags["two_primal"] and flags["satisfies_rf"]

    def test_chain(self, catalog):
        for module in catalog.modules[:12]:
            report = radical_report(module)
            assert report.strongly_nilpotent <= report.envelope_zero <= report.beta_co
            assert np.all(report.beta.mask <= report.beta_co.mask)
