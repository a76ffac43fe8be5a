# Envelopes, prime-type submodules, the prime and completely prime radicals, strongly nilpotent
# elements, element-condition module classes, 2-primality and the (complete) radical formula

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .config import resolve
from .core import Kind, Substructure, image_of, preimage_of, quotient_module, quotient_ring, regular_module
from .errors import (
    AxiomViolation,
    CharacterizationMismatch,
    InvariantBreach,
    KernelNotContained,
    KindMismatch,
    NotEpimorphism,
    NotProper,
)
from .substructures import (
    additive_span,
    all_substructures,
    generated_substructure,
    intersect_family,
    make_substructure,
    maximal_substructures,
    sum_substructures,
    zero_substructure,
)

logger = logging.getLogger(__name__)

ENVELOPE_CACHE_SIZE = 4096
FAMILY_CACHE_SIZE = 256

MODULE_FLAGS = (
    "prime", "completely_prime", "semiprime", "completely_semiprime",
    "IFP", "symmetric", "semi_symmetric", "lee_zhou_reduced",
    "two_primal", "satisfies_rf", "satisfies_crf",
)


@dataclass
class Verdict:
    """Outcome of a quantified check; a failure always carries a re-checkable witness."""

    holds: bool
    witness: dict | None = None
    checked: str = ""
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        self.holds = bool(self.holds)
        if not self.holds and not self.witness:
            raise InvariantBreach(f"failing verdict without a witness ({self.checked})")

    def __bool__(self):
        return self.holds

    def to_dict(self):
        return {"holds": self.holds, "witness": self.witness, "checked": self.checked, "details": self.details}


def _members(sub):
    return sorted(sub.members) if isinstance(sub, Substructure) else sorted(sub)


def _first(mask):
    hit = np.argwhere(mask)
    return None if hit.size == 0 else tuple(int(x) for x in hit[0])


def _submodule_of(module, sub):
    if sub.kind is not Kind.SUBMODULE or sub.parent is not module:
        raise KindMismatch(f"expected a submodule of {module.label}")


def _proper(module, sub):
    _submodule_of(module, sub)
    if sub.is_full:
        raise NotProper(f"{module.label} itself is not a proper submodule")


def _ideal_of(ring, ideal, kinds=(Kind.TWO_SIDED_IDEAL,)):
    if ideal.parent is not ring or ideal.kind not in kinds:
        raise KindMismatch(f"expected a {' or '.join(k.value for k in kinds)} of {ring.label}")


# ---------------------------------------------------------------------------
# Envelopes
# ---------------------------------------------------------------------------

def envelope(module, sub):
    """E_M(N) = {r·m : r^k·m ∈ N for some k ≥ 1}, as a set of element indices."""
    _submodule_of(module, sub)
    return _envelope(module, sub)


@lru_cache(maxsize=ENVELOPE_CACHE_SIZE)
def _envelope(module, sub):
    ring = module.ring
    in_sub = sub.mask[module.action]
    reached = set()
    for r in ring.elements():
        # r^k runs through the distinct powers before the sequence repeats
        qualifies = in_sub[list(ring.powers(r))].any(axis=0)
        reached.update(module.action[r, qualifies].tolist())
    return frozenset(reached)


def envelope_submodule(module, sub):
    """⟨E_M(N)⟩, the submodule generated by the envelope."""
    return generated_substructure(module, Kind.SUBMODULE, envelope(module, sub))


# ---------------------------------------------------------------------------
# Prime-type submodules
# ---------------------------------------------------------------------------

def is_prime_submodule(module, sub, *, settings=None):
    """𝒜N ⊆ P implies N ⊆ P or 𝒜M ⊆ P, over two-sided ideals 𝒜 and submodules N."""
    _proper(module, sub)
    ideals = all_substructures(module.ring, Kind.TWO_SIDED_IDEAL, settings=settings)
    checked = f"two-sided ideals of {module.ring.label} × submodules of {module.label}"
    for ideal in ideals:
        products_in = sub.mask[module.action[ideal.indices]]
        if products_in.all():
            continue
        # {m : 𝒜m ⊆ P} is itself a submodule, the largest N with 𝒜N ⊆ P
        largest = products_in.all(axis=0)
        if not (largest & ~sub.mask).any():
            continue
        witness = next(
            n for n in all_substructures(module, Kind.SUBMODULE, settings=settings)
            if largest[n.indices].all() and not n.members <= sub.members
        )
        return Verdict(False, {"ideal": _members(ideal), "submodule": _members(witness)}, checked)
    return Verdict(True, checked=checked)


def is_completely_prime_submodule(module, sub):
    """r·m ∈ P implies m ∈ P or rM ⊆ P."""
    _proper(module, sub)
    in_sub = sub.mask[module.action]
    bad = in_sub & ~sub.mask[None, :] & ~in_sub.all(axis=1)[:, None]
    checked = f"pairs (r, m) in {module.ring.label} × {module.label}"
    hit = _first(bad)
    if hit is None:
        return Verdict(True, checked=checked)
    r, m = hit
    return Verdict(False, {"r": r, "m": m, "rm": int(module.action[r, m])}, checked)


def is_semiprime_submodule(module, sub):
    """aRa·m ⊆ P implies a·m ∈ P."""
    _proper(module, sub)
    ring = module.ring
    in_sub = sub.mask[module.action]
    checked = f"pairs (a, m) with aRa in {ring.label}"
    for a in ring.elements():
        bad = in_sub[list(ring.sandwiches[a])].all(axis=0) & ~in_sub[a]
        if bad.any():
            return Verdict(False, {"a": a, "m": int(np.argmax(bad))}, checked)
    return Verdict(True, checked=checked)


def is_completely_semiprime_submodule(module, sub):
    """a²·m ∈ P implies a·m ∈ P."""
    _proper(module, sub)
    in_sub = sub.mask[module.action]
    hit = _first(in_sub[module.ring.squares] & ~in_sub)
    checked = f"pairs (a, m) in {module.ring.label} × {module.label}"
    if hit is None:
        return Verdict(True, checked=checked)
    return Verdict(False, {"a": hit[0], "m": hit[1]}, checked)


@lru_cache(maxsize=FAMILY_CACHE_SIZE)
def _prime_family(module, settings):
    return tuple(
        p for p in all_substructures(module, Kind.SUBMODULE, settings=settings)
        if not p.is_full and is_prime_submodule(module, p, settings=settings)
    )


@lru_cache(maxsize=FAMILY_CACHE_SIZE)
def _completely_prime_family(module, settings):
    return tuple(
        p for p in all_substructures(module, Kind.SUBMODULE, settings=settings)
        if not p.is_full and is_completely_prime_submodule(module, p)
    )


def prime_submodules(module, *, settings=None):
    return list(_prime_family(module, resolve(settings)))


def completely_prime_submodules(module, *, settings=None):
    return list(_completely_prime_family(module, resolve(settings)))


def beta(module, *, settings=None):
    """Prime radical β(M); M itself when there is no prime submodule."""
    return intersect_family(module, Kind.SUBMODULE, prime_submodules(module, settings=settings))


def beta_co(module, *, settings=None):
    """Completely prime radical β_co(M); M itself when there is no completely prime submodule."""
    return intersect_family(module, Kind.SUBMODULE, completely_prime_submodules(module, settings=settings))


def beta_s(module, sub, *, settings=None):
    _submodule_of(module, sub)
    family = [p for p in prime_submodules(module, settings=settings) if sub.members <= p.members]
    return intersect_family(module, Kind.SUBMODULE, family)


def beta_co_s(module, sub, *, settings=None):
    _submodule_of(module, sub)
    family = [p for p in completely_prime_submodules(module, settings=settings) if sub.members <= p.members]
    return intersect_family(module, Kind.SUBMODULE, family)


# ---------------------------------------------------------------------------
# Nilpotence
# ---------------------------------------------------------------------------

def nil_elements(ring):
    """𝒩(R), the nilpotent elements."""
    return frozenset(a for a in ring.elements() if ring.zero in ring.powers(a))


def is_nil_left_ideal(ring, ideal):
    _ideal_of(ring, ideal, (Kind.LEFT_IDEAL, Kind.TWO_SIDED_IDEAL))
    nil = nil_elements(ring)
    outside = sorted(ideal.members - nil)
    checked = f"members of a {ideal.kind.value} of {ring.label}"
    if not outside:
        return Verdict(True, checked=checked)
    return Verdict(False, {"element": outside[0]}, checked)


@lru_cache(maxsize=FAMILY_CACHE_SIZE)
def _eventually_annihilating(module):
    ring = module.ring
    persistent = (module.sandwich_products != module.zero).any(axis=1)
    # greatest fixpoint: keep a only while aRm ≠ 0 and some element of aRa is still kept
    changed = True
    while changed:
        changed = False
        for a in ring.elements():
            keep = persistent[a] & persistent[list(ring.sandwiches[a])].any(axis=0)
            if not np.array_equal(keep, persistent[a]):
                persistent[a] = keep
                changed = True
    result = ~persistent
    result.setflags(write=False)
    return result


def eventually_annihilating(module):
    """Boolean table [a, m]: every sequence a, a₂ ∈ aRa, ... reaches some a_k with a_k R m = 0."""
    return _eventually_annihilating(module)


def strongly_nilpotent_submodule(module):
    """𝒩_s(M): the additive closure of a·m over eventually-annihilating pairs."""
    table = eventually_annihilating(module)
    members = additive_span(module.add, module.zero, np.unique(module.action[table]))
    sub = Substructure(module, Kind.SUBMODULE, members)
    escaped = _first(~sub.mask[module.action[:, sub.indices]])
    if escaped is not None:
        r, position = escaped
        raise InvariantBreach(
            f"strongly nilpotent elements of {module.label} are not closed under the action: "
            f"r={r}, m={int(sub.indices[position])}"
        )
    return sub


# ---------------------------------------------------------------------------
# Element-condition module classes
# ---------------------------------------------------------------------------

def module_class_flags(module):
    """IFP, symmetric, semi-symmetric and Lee-Zhou reduced, each as a Verdict."""
    ring, zero = module.ring, module.zero
    act = module.action
    kills = act == zero
    kills_through_ring = (module.sandwich_products == zero).all(axis=1)
    kills_square = act[ring.squares] == zero
    flags = {}

    hit = _first(kills & ~kills_through_ring)
    flags["IFP"] = Verdict(
        hit is None, None if hit is None else {"a": hit[0], "m": hit[1]},
        "am = 0 implies aRm = 0",
    )

    products = act[ring.mul]
    hit = _first((products == zero) & (products.transpose(1, 0, 2) != zero))
    flags["symmetric"] = Verdict(
        hit is None, None if hit is None else {"a": hit[0], "b": hit[1], "m": hit[2]},
        "abm = 0 implies bam = 0",
    )

    witness = None
    for a in ring.elements():
        if not kills_square[a].any():
            continue
        ideal = generated_substructure(ring, Kind.TWO_SIDED_IDEAL, [a])
        square = np.unique(ring.mul[np.ix_(ideal.indices, ideal.indices)])
        bad = kills_square[a] & ~(act[square] == zero).all(axis=0)
        if bad.any():
            witness = {"a": a, "m": int(np.argmax(bad))}
            break
    flags["semi_symmetric"] = Verdict(witness is None, witness, "a²m = 0 implies (a)²m = 0")

    hit = _first(kills_square & ~kills_through_ring)
    flags["lee_zhou_reduced"] = Verdict(
        hit is None, None if hit is None else {"a": hit[0], "m": hit[1]},
        "a²m = 0 implies aRm = 0",
    )
    return flags


# ---------------------------------------------------------------------------
# 2-primality
# ---------------------------------------------------------------------------

def is_two_primal_module(module, *, settings=None):
    """β(M) = β_co(M)."""
    b, bc = beta(module, settings=settings), beta_co(module, settings=settings)
    details = {"beta": _members(b), "beta_co": _members(bc)}
    extra = sorted(bc.members - b.members)
    if not extra:
        return Verdict(True, checked="β(M) = β_co(M)", details=details)
    return Verdict(False, {"in_beta_co_not_beta": extra[0]}, "β(M) = β_co(M)", details)


def is_two_primal_submodule(module, sub, *, settings=None):
    """β(M/N) = β_co(M/N)."""
    _submodule_of(module, sub)
    quotient, _ = quotient_module(module, sub, settings=settings)
    verdict = is_two_primal_module(quotient, settings=settings)
    verdict.checked = f"β(M/N) = β_co(M/N) for N = {_members(sub)}"
    return verdict


@dataclass
class RingRadicals:
    nil: frozenset
    beta: frozenset
    beta_co: frozenset
    envelope_zero: frozenset
    strongly_nilpotent: frozenset


def ring_radicals(ring, *, settings=None):
    """𝒩(R), β(R), β_co(R), E_R(0) and 𝒩_s(R), computed through the regular module."""
    regular = regular_module(ring)
    zero = zero_substructure(regular, Kind.SUBMODULE)
    return RingRadicals(
        nil=nil_elements(ring),
        beta=beta(regular, settings=settings).members,
        beta_co=beta_co(regular, settings=settings).members,
        envelope_zero=envelope(regular, zero),
        strongly_nilpotent=strongly_nilpotent_submodule(regular).members,
    )


def is_two_primal_ring(ring, *, settings=None):
    """𝒩(R) = β(R), β_co(R) = β(R) and β(R) = E_R(0), which must all agree."""
    rad = ring_radicals(ring, settings=settings)
    criteria = {
        "nil_equals_beta": rad.nil == rad.beta,
        "beta_co_equals_beta": rad.beta_co == rad.beta,
        "beta_equals_envelope": rad.beta == rad.envelope_zero,
    }
    details = {
        **criteria,
        "nil": sorted(rad.nil), "beta": sorted(rad.beta),
        "beta_co": sorted(rad.beta_co), "envelope_zero": sorted(rad.envelope_zero),
    }
    if len(set(criteria.values())) > 1:
        raise CharacterizationMismatch(f"2-primality criteria disagree for {ring.label}: {criteria}")
    checked = "𝒩(R) = β(R), β_co(R) = β(R), β(R) = E_R(0)"
    if criteria["nil_equals_beta"]:
        return Verdict(True, checked=checked, details=details)
    outside = sorted((rad.nil | rad.beta_co) - rad.beta)
    return Verdict(False, {"outside_beta": outside[0]}, checked, details)


def is_two_primal_ideal(ring, ideal, *, settings=None):
    """β_co(R/I) = β(R/I)."""
    _ideal_of(ring, ideal)
    if ideal.is_full:
        return Verdict(True, checked="R/I is the zero ring, both radicals are the whole ring")
    quotient, _ = quotient_ring(ring, ideal, settings=settings)
    verdict = is_two_primal_ring(quotient, settings=settings)
    verdict.checked = f"R/I 2-primal for I = {_members(ideal)}"
    return verdict


# ---------------------------------------------------------------------------
# Radical formulas
# ---------------------------------------------------------------------------

def _formula(module, sub, radical, name, settings):
    lhs = envelope_submodule(module, sub)
    rhs = radical(module, sub, settings=settings)
    checked = f"⟨E_M(N)⟩ = {name} for N = {_members(sub)}"
    if lhs.members == rhs.members:
        return Verdict(True, checked=checked)
    witness = {"submodule": _members(sub), "envelope_closure": _members(lhs), "radical": _members(rhs)}
    return Verdict(False, witness, checked)


def submodule_satisfies_rf(module, sub, *, settings=None):
    return _formula(module, sub, beta_s, "β^s(N)", settings)


def submodule_satisfies_crf(module, sub, *, settings=None):
    return _formula(module, sub, beta_co_s, "β_co^s(N)", settings)


def _every_submodule(module, check, name, settings):
    subs = all_substructures(module, Kind.SUBMODULE, settings=settings)
    for sub in subs:
        verdict = check(module, sub, settings=settings)
        if not verdict:
            verdict.checked = f"{name} over all {len(subs)} submodules"
            return verdict
    return Verdict(True, checked=f"{name} over all {len(subs)} submodules")


def satisfies_rf(module, *, settings=None):
    return _every_submodule(module, submodule_satisfies_rf, "radical formula", settings)


def satisfies_crf(module, *, settings=None):
    return _every_submodule(module, submodule_satisfies_crf, "complete radical formula", settings)


def hom_transfer_check(hom, sub, *, settings=None):
    """Check the four transfer implications for an epimorphism φ and a submodule N ⊇ ker φ."""
    if not hom.is_surjective:
        raise NotEpimorphism(f"{hom} is not surjective")
    _submodule_of(hom.source, sub)
    if not hom.kernel.members <= sub.members:
        raise KernelNotContained("ker φ is not contained in N")
    source, target = hom.source, hom.target
    pushed = image_of(hom, sub)
    # N ⊇ ker φ gives φ⁻¹(φ(N)) = N, so each N covers its image for (ii) and (iv)
    pulled = preimage_of(hom, pushed)
    crf = (submodule_satisfies_crf(source, sub, settings=settings).holds,
           submodule_satisfies_crf(target, pushed, settings=settings).holds,
           submodule_satisfies_crf(source, pulled, settings=settings).holds)
    rf = (submodule_satisfies_rf(source, sub, settings=settings).holds,
          submodule_satisfies_rf(target, pushed, settings=settings).holds,
          submodule_satisfies_rf(source, pulled, settings=settings).holds)
    implications = {
        "i": not crf[0] or crf[1],
        "ii": not crf[1] or crf[2],
        "iii": not rf[0] or rf[1],
        "iv": not rf[1] or rf[2],
    }
    details = {
        "crf": {"N": crf[0], "image": crf[1], "preimage": crf[2]},
        "rf": {"N": rf[0], "image": rf[1], "preimage": rf[2]},
    }
    checked = "transfer of (complete) radical formula along φ and φ⁻¹"
    failures = sorted(key for key, holds in implications.items() if not holds)
    if not failures:
        return Verdict(True, checked=checked, details=details)
    witness = {"implications": failures, "submodule": _members(sub), "image": _members(pushed)}
    return Verdict(False, witness, checked, details)


# ---------------------------------------------------------------------------
# Subdirect decomposition
# ---------------------------------------------------------------------------

@dataclass
class SubdirectDecomposition:
    factors: list | None
    verdict: Verdict


def subdirect_decomposition(module, *, settings=None):
    """M → ∏ M/N_λ over all completely prime N_λ, present exactly when β_co(M) = 0."""
    radical = beta_co(module, settings=settings)
    if not radical.is_zero:
        return SubdirectDecomposition(
            None, Verdict(False, {"beta_co": _members(radical)}, "β_co(M) = 0")
        )
    factors = [
        quotient_module(module, p, settings=settings)[1]
        for p in completely_prime_submodules(module, settings=settings)
    ]
    if factors:
        joint = np.stack([f.map for f in factors], axis=1)
        injective = len(np.unique(joint, axis=0)) == module.size
    else:
        injective = module.size == 1
    surjective = all(f.is_surjective for f in factors)
    checked = f"joint map into {len(factors)} completely prime factors"
    if injective and surjective:
        return SubdirectDecomposition(factors, Verdict(True, checked=checked))
    raise InvariantBreach(f"subdirect embedding of {module.label} failed with β_co(M) = 0")


# ---------------------------------------------------------------------------
# Ring-level primality and torsion
# ---------------------------------------------------------------------------

def _proper_ideal(ring, ideal):
    _ideal_of(ring, ideal)
    if ideal.is_full:
        raise NotProper(f"{ring.label} itself is not a proper ideal")


def is_prime_ideal(ring, ideal, *, settings=None):
    """𝒜ℬ ⊆ 𝒫 implies 𝒜 ⊆ 𝒫 or ℬ ⊆ 𝒫, over two-sided ideals."""
    _proper_ideal(ring, ideal)
    ideals = all_substructures(ring, Kind.TWO_SIDED_IDEAL, settings=settings)
    outside = [i for i in ideals if not i.members <= ideal.members]
    for a in outside:
        for b in outside:
            if ideal.mask[ring.mul[np.ix_(a.indices, b.indices)]].all():
                return Verdict(False, {"A": _members(a), "B": _members(b)}, "pairs of two-sided ideals")
    return Verdict(True, checked="pairs of two-sided ideals")


def is_completely_prime_ideal(ring, ideal):
    """ab ∈ 𝒫 implies a ∈ 𝒫 or b ∈ 𝒫."""
    _proper_ideal(ring, ideal)
    inside = ideal.mask
    hit = _first(inside[ring.mul] & ~inside[:, None] & ~inside[None, :])
    if hit is None:
        return Verdict(True, checked="pairs (a, b)")
    return Verdict(False, {"a": hit[0], "b": hit[1]}, "pairs (a, b)")


def is_semiprime_ideal(ring, ideal):
    """aRa ⊆ 𝒫 implies a ∈ 𝒫."""
    _proper_ideal(ring, ideal)
    for a in ring.elements():
        if a not in ideal.members and all(x in ideal.members for x in ring.sandwiches[a]):
            return Verdict(False, {"a": a}, "elements a with aRa")
    return Verdict(True, checked="elements a with aRa")


def is_completely_semiprime_ideal(ring, ideal):
    """a² ∈ 𝒫 implies a ∈ 𝒫."""
    _proper_ideal(ring, ideal)
    hit = _first(ideal.mask[ring.squares] & ~ideal.mask)
    if hit is None:
        return Verdict(True, checked="elements a")
    return Verdict(False, {"a": hit[0]}, "elements a")


def is_torsion_free_quotient(module, sub):
    """M/N over R/(N:M) has no element torsion: r ∉ (N:M), m ∉ N imply r·m ∉ N."""
    _submodule_of(module, sub)
    in_sub = sub.mask[module.action]
    outside_ideal = ~in_sub.all(axis=1)
    hit = _first(in_sub & outside_ideal[:, None] & ~sub.mask[None, :])
    if hit is None:
        return Verdict(True, checked="pairs r ∉ (N:M), m ∉ N")
    return Verdict(False, {"r": hit[0], "m": hit[1]}, "pairs r ∉ (N:M), m ∉ N")


def is_ideal_torsion_free_quotient(module, sub, *, settings=None):
    """𝒜 ⊄ (N:M) and K ⊄ N imply 𝒜K ⊄ N, over two-sided ideals and submodules."""
    _submodule_of(module, sub)
    checked = "ideals 𝒜 ⊄ (N:M) × submodules K ⊄ N"
    for ideal in all_substructures(module.ring, Kind.TWO_SIDED_IDEAL, settings=settings):
        products_in = sub.mask[module.action[ideal.indices]]
        if products_in.all():
            continue
        killed = products_in.all(axis=0)
        if (killed & ~sub.mask).any():
            return Verdict(False, {"ideal": _members(ideal), "killed": sorted(np.flatnonzero(killed).tolist())}, checked)
    return Verdict(True, checked=checked)


# ---------------------------------------------------------------------------
# Ring properties
# ---------------------------------------------------------------------------

def ring_properties(ring, *, settings=None):
    """Dedekind finiteness, Köthe at finite scale, primes completely prime, semisimplicity."""
    props = {}
    one = ring.one
    hit = _first((ring.mul == one) & (ring.mul.T != one))
    props["dedekind_finite"] = Verdict(
        hit is None, None if hit is None else {"a": hit[0], "b": hit[1]}, "ab = 1 implies ba = 1"
    )

    nil = nil_elements(ring)
    left_ideals = all_substructures(ring, Kind.LEFT_IDEAL, settings=settings)
    nil_ideals = [i for i in left_ideals if i.members <= nil]
    witness = None
    for i, a in enumerate(nil_ideals):
        for b in nil_ideals[i + 1:]:
            if not sum_substructures(a, b).members <= nil:
                witness = {"I": _members(a), "J": _members(b)}
                break
        if witness:
            break
    props["kothe_finite_scale"] = Verdict(witness is None, witness, f"pairs of {len(nil_ideals)} nil left ideals")

    witness = None
    ideals = all_substructures(ring, Kind.TWO_SIDED_IDEAL, settings=settings)
    primes = [p for p in ideals if not p.is_full and is_prime_ideal(ring, p, settings=settings)]
    for p in primes:
        verdict = is_completely_prime_ideal(ring, p)
        if not verdict:
            witness = {"prime_ideal": _members(p), **verdict.witness}
            break
    props["primes_completely_prime"] = Verdict(
        witness is None, witness, f"{len(primes)} prime ideals",
        {"prime_ideals": [_members(p) for p in primes]},
    )

    jacobson = intersect_family(ring, Kind.LEFT_IDEAL, maximal_substructures(left_ideals))
    props["is_semisimple"] = Verdict(
        jacobson.is_zero, None if jacobson.is_zero else {"jacobson": _members(jacobson)},
        "intersection of maximal left ideals", {"jacobson": _members(jacobson)},
    )

    try:
        make_substructure(ring, Kind.TWO_SIDED_IDEAL, nil)
        props["nil_is_ideal"] = Verdict(True, checked="𝒩(R) is a two-sided ideal")
    except AxiomViolation as err:
        props["nil_is_ideal"] = Verdict(
            False, {"axiom": err.axiom, "elements": list(err.witness)}, "𝒩(R) is a two-sided ideal"
        )

    radical = beta(regular_module(ring), settings=settings).members
    bad = [a for a in ring.elements() if a not in radical and any(p in radical for p in ring.powers(a))]
    props["reduced_modulo_beta"] = Verdict(
        not bad, {"a": bad[0]} if bad else None, "a^k ∈ β(R) implies a ∈ β(R)"
    )

    # β(R) of a nonzero ring lies inside a maximal left ideal, so it is proper
    beta_ideal = make_substructure(ring, Kind.TWO_SIDED_IDEAL, radical)
    props["beta_semiprime"] = is_semiprime_ideal(ring, beta_ideal)
    props["beta_completely_semiprime"] = is_completely_semiprime_ideal(ring, beta_ideal)
    return props


# ---------------------------------------------------------------------------
# Full report
# ---------------------------------------------------------------------------

@dataclass
class RadicalReport:
    module: object
    envelope_zero: Substructure
    strongly_nilpotent: Substructure
    beta: Substructure
    beta_co: Substructure
    class_flags: dict

    def to_dict(self):
        return {
            "module": self.module.label,
            "size": self.module.size,
            "ring": self.module.ring.label,
            "tags": sorted(self.module.tags),
            "notes": list(self.module.notes),
            "envelope_zero": _members(self.envelope_zero),
            "strongly_nilpotent": _members(self.strongly_nilpotent),
            "beta": _members(self.beta),
            "beta_co": _members(self.beta_co),
            "class_flags": {name: self.class_flags[name].to_dict() for name in MODULE_FLAGS},
        }


def zero_submodule_flags(module, *, settings=None):
    """Prime-type predicates of the zero submodule, false with a witness for the zero module."""
    zero = zero_substructure(module, Kind.SUBMODULE)
    checks = {
        "prime": lambda: is_prime_submodule(module, zero, settings=settings),
        "completely_prime": lambda: is_completely_prime_submodule(module, zero),
        "semiprime": lambda: is_semiprime_submodule(module, zero),
        "completely_semiprime": lambda: is_completely_semiprime_submodule(module, zero),
    }
    if zero.is_full:
        reason = {"reason": "the zero module has no proper submodule"}
        return {name: Verdict(False, reason, "zero submodule is proper") for name in checks}
    return {name: check() for name, check in checks.items()}


def radical_report(module, *, settings=None):
    zero = zero_substructure(module, Kind.SUBMODULE)
    report = RadicalReport(
        module=module,
        envelope_zero=envelope_submodule(module, zero),
        strongly_nilpotent=strongly_nilpotent_submodule(module),
        beta=beta(module, settings=settings),
        beta_co=beta_co(module, settings=settings),
        class_flags={},
    )
    if not (report.strongly_nilpotent <= report.envelope_zero <= report.beta_co):
        raise InvariantBreach(f"𝒩_s ⊆ ⟨E(0)⟩ ⊆ β_co fails for {module.label}")
    if not report.beta <= report.beta_co:
        raise InvariantBreach(f"β ⊆ β_co fails for {module.label}")
    flags = zero_submodule_flags(module, settings=settings)
    flags.update(module_class_flags(module))
    flags["two_primal"] = is_two_primal_module(module, settings=settings)
    flags["satisfies_rf"] = satisfies_rf(module, settings=settings)
    flags["satisfies_crf"] = satisfies_crf(module, settings=settings)
    report.class_flags = flags
    return report
