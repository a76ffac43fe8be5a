# Theorem suites: each one re-checks a result about envelopes and radicals on every catalog instance

import concurrent.futures
import logging
from dataclasses import dataclass, field

from tqdm import tqdm

from .catalog import (
    Family,
    GeneratorSpec,
    all_cyclic_modules,
    default_catalog,
    module_example_exx,
    search_counterexample,
)
from .config import resolve
from .core import Kind, identity_hom, quotient_module, regular_module, submodule_as_module
from .errors import CharacterizationMismatch, UnknownSuite
from .radicals import (
    beta,
    beta_co,
    beta_co_s,
    completely_prime_submodules,
    envelope,
    envelope_submodule,
    eventually_annihilating,
    hom_transfer_check,
    is_completely_prime_ideal,
    is_completely_prime_submodule,
    is_completely_semiprime_submodule,
    is_ideal_torsion_free_quotient,
    is_prime_ideal,
    is_prime_submodule,
    is_semiprime_submodule,
    is_torsion_free_quotient,
    is_two_primal_module,
    is_two_primal_ring,
    module_class_flags,
    prime_submodules,
    ring_properties,
    ring_radicals,
    satisfies_crf,
    satisfies_rf,
    strongly_nilpotent_submodule,
    subdirect_decomposition,
    submodule_satisfies_crf,
    submodule_satisfies_rf,
)
from .substructures import all_substructures, annihilator, zero_substructure

logger = logging.getLogger(__name__)

# 2-primality of the default catalog rings, known independently of the engine
EXPECTED_TWO_PRIMAL = {
    "Z2": True, "Z3": True, "Z4": True, "Z6": True, "Z8": True,
    "Z2 × Z2": True, "U2(Z2)": True, "M2(Z2)": False,
}
EXPECTED_SEMISIMPLE = {
    "Z2": True, "Z3": True, "Z4": False, "Z6": True, "Z8": False,
    "Z2 × Z2": True, "U2(Z2)": False, "M2(Z2)": True,
}
SN_ORACLE_MAX_RING = 16
HOM_PAIR_MAX_MODULE = 16


@dataclass
class CheckRow:
    instance: str
    check: str
    passed: bool
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "instance": self.instance, "check": self.check, "passed": self.passed,
            "witness": self.witness, "details": self.details,
        }


@dataclass
class Suite:
    name: str
    description: str
    instances: object
    check: object
    summarize: object = None


@dataclass
class SuiteResult:
    suite: str
    rows: list

    @property
    def passed(self):
        return all(row.passed for row in self.rows)

    @property
    def failures(self):
        return [row for row in self.rows if not row.passed]


SUITES = {}


def suite(name, description, over="modules", summarize=None):
    def register(check):
        if callable(over):
            instances = over
        else:
            instances = {
                "modules": lambda catalog: list(catalog.modules),
                "rings": lambda catalog: list(catalog.rings),
            }[over]
        SUITES[name] = Suite(name, description, instances, check, summarize)
        return check
    return register


def _row(instance, check, verdict_or_bool, witness=None, **details):
    passed = bool(verdict_or_bool)
    if witness is None and hasattr(verdict_or_bool, "witness"):
        witness = verdict_or_bool.witness
    return CheckRow(instance.label, check, passed, None if passed else (witness or {}), details)


def _sorted(members):
    return sorted(members)


def _proper_submodules(module, settings):
    return [n for n in all_substructures(module, Kind.SUBMODULE, settings=settings) if not n.is_full]


def _chain(ring, settings):
    rad = ring_radicals(ring, settings=settings)
    return rad, rad.beta <= rad.nil <= rad.envelope_zero <= rad.beta_co


def _two_primal(ring, settings):
    return bool(is_two_primal_ring(ring, settings=settings))


# ---------------------------------------------------------------------------
# Ring suites
# ---------------------------------------------------------------------------

@suite("eq1-chain", "2-primal rings: E_R(0) = 𝒩(R) = 𝒩_s(R) = β(R) = β_co(R)", over="rings")
def _eq1_chain(ring, catalog, settings):
    rad = ring_radicals(ring, settings=settings)
    if not _two_primal(ring, settings):
        return [_row(ring, "equalities (not 2-primal, vacuous)", True)]
    sets = {
        "envelope_zero": rad.envelope_zero, "nil": rad.nil, "strongly_nilpotent": rad.strongly_nilpotent,
        "beta": rad.beta, "beta_co": rad.beta_co,
    }
    equal = len({frozenset(s) for s in sets.values()}) == 1
    return [_row(ring, "E_R(0) = 𝒩 = 𝒩_s = β = β_co", equal, {k: _sorted(v) for k, v in sets.items()})]


@suite("thm-prim", "R is 2-primal iff β(R) = E_R(0)", over="rings")
def _thm_prim(ring, catalog, settings):
    rad, chain = _chain(ring, settings)
    rows = [_row(ring, "β ⊆ 𝒩 ⊆ E_R(0) ⊆ β_co", chain, {"beta": _sorted(rad.beta), "beta_co": _sorted(rad.beta_co)})]
    try:
        verdict = is_two_primal_ring(ring, settings=settings)
    except CharacterizationMismatch as err:
        return rows + [_row(ring, "2-primal iff β = E_R(0)", False, {"error": str(err)})]
    agrees = verdict.holds == (rad.beta == rad.envelope_zero)
    rows.append(_row(ring, "2-primal iff β = E_R(0)", agrees, {"two_primal": verdict.holds}, two_primal=verdict.holds))
    return rows


@suite("cor-2m", "2-primal rings: β(R) = 𝒩(R) = E_R(0) = β_co(R)", over="rings")
def _cor_2m(ring, catalog, settings):
    rad, chain = _chain(ring, settings)
    rows = [_row(ring, "β ⊆ 𝒩 ⊆ E_R(0) ⊆ β_co", chain)]
    all_equal = rad.beta == rad.nil == rad.envelope_zero == rad.beta_co
    two_primal = _two_primal(ring, settings)
    rows.append(_row(
        ring, "all four equal iff 2-primal", all_equal == two_primal,
        {"two_primal": two_primal, "all_equal": all_equal}, two_primal=two_primal,
    ))
    return rows


@suite("prop-p-agreement", "the three 2-primality criteria for a ring agree", over="rings")
def _prop_p(ring, catalog, settings):
    try:
        verdict = is_two_primal_ring(ring, settings=settings)
    except CharacterizationMismatch as err:
        return [_row(ring, "𝒩 = β, β_co = β, β = E_R(0) agree", False, {"error": str(err)})]
    rows = [_row(ring, "𝒩 = β, β_co = β, β = E_R(0) agree", True, two_primal=verdict.holds)]
    expected = EXPECTED_TWO_PRIMAL.get(ring.label)
    if expected is not None:
        rows.append(_row(
            ring, "2-primality matches the known value", verdict.holds == expected,
            {"expected": expected, "computed": verdict.holds},
        ))
    return rows


@suite("ring-properties", "Dedekind finiteness, Köthe, primes completely prime, semisimplicity", over="rings")
def _ring_properties(ring, catalog, settings):
    props = ring_properties(ring, settings=settings)
    two_primal = _two_primal(ring, settings)
    rows = [
        _row(ring, "Dedekind finite", props["dedekind_finite"]),
        _row(ring, "Köthe at finite scale", props["kothe_finite_scale"]),
        _row(ring, "2-primal implies primes completely prime",
             not two_primal or props["primes_completely_prime"], props["primes_completely_prime"].witness),
        _row(ring, "𝒩(R) is an ideal iff 2-primal", props["nil_is_ideal"].holds == two_primal,
             {"nil_is_ideal": props["nil_is_ideal"].holds, "two_primal": two_primal}),
        _row(ring, "R/β(R) reduced iff 2-primal", props["reduced_modulo_beta"].holds == two_primal,
             {"reduced_modulo_beta": props["reduced_modulo_beta"].holds, "two_primal": two_primal}),
        _row(ring, "β(R) is a semiprime ideal", props["beta_semiprime"]),
        _row(ring, "β(R) completely semiprime iff 2-primal", props["beta_completely_semiprime"].holds == two_primal,
             {"beta_completely_semiprime": props["beta_completely_semiprime"].holds, "two_primal": two_primal}),
    ]
    expected = EXPECTED_SEMISIMPLE.get(ring.label)
    if expected is not None:
        computed = props["is_semisimple"].holds
        rows.append(_row(ring, "semisimplicity matches the known value", computed == expected,
                         {"expected": expected, "computed": computed}))
    return rows


@suite("prop-regular", "R is 2-primal iff its regular module is 2-primal", over="rings")
def _prop_regular(ring, catalog, settings):
    ring_verdict = _two_primal(ring, settings)
    module_verdict = bool(is_two_primal_module(regular_module(ring), settings=settings))
    return [_row(ring, "ring and regular module agree", ring_verdict == module_verdict,
                 {"ring": ring_verdict, "regular_module": module_verdict})]


@suite("thm-lt", "every module over a 2-primal ring is 2-primal", over="rings")
def _thm_lt(ring, catalog, settings):
    if not _two_primal(ring, settings):
        return [_row(ring, "modules 2-primal (ring not 2-primal, vacuous)", True)]
    return [
        _row(module, "2-primal over a 2-primal ring", is_two_primal_module(module, settings=settings))
        for module in catalog.modules_over(ring)
    ]


@suite("thm-fg", "finitely generated modules over 2-primal rings satisfy both formulas", over="rings")
def _thm_fg(ring, catalog, settings):
    if not _two_primal(ring, settings):
        return [_row(ring, "cyclic modules (ring not 2-primal, vacuous)", True)]
    modules = catalog.modules_over(ring)
    if not any("cyclic" in m.tags for m in modules):
        modules += all_cyclic_modules(ring, settings=settings)
    rows = []
    for module in modules:
        rows.append(_row(module, "radical formula", satisfies_rf(module, settings=settings)))
        rows.append(_row(module, "complete radical formula", satisfies_crf(module, settings=settings)))
        rows.append(_row(module, "2-primal", is_two_primal_module(module, settings=settings)))
        rows.append(_equality_row(module, settings))
    return rows


def _equality_row(module, settings):
    zero = zero_substructure(module, Kind.SUBMODULE)
    sets = {
        "strongly_nilpotent": strongly_nilpotent_submodule(module).members,
        "envelope_zero": envelope_submodule(module, zero).members,
        "beta_co": beta_co(module, settings=settings).members,
        "beta": beta(module, settings=settings).members,
    }
    equal = len(set(sets.values())) == 1
    return _row(module, "𝒩_s = ⟨E(0)⟩ = β_co = β", equal, {k: _sorted(v) for k, v in sets.items()})


# ---------------------------------------------------------------------------
# Module suites
# ---------------------------------------------------------------------------

@suite("lemma-ll-chain", "𝒩_s(M) ⊆ ⟨E_M(0)⟩ ⊆ β_co(M) and ⟨E_M(N)⟩ ⊆ β_co^s(N)")
def _lemma_ll(module, catalog, settings):
    zero = zero_substructure(module, Kind.SUBMODULE)
    sn, env = strongly_nilpotent_submodule(module), envelope_submodule(module, zero)
    b, bc = beta(module, settings=settings), beta_co(module, settings=settings)
    rows = [
        _row(module, "𝒩_s ⊆ ⟨E(0)⟩ ⊆ β_co", sn <= env <= bc,
             {"strongly_nilpotent": _sorted(sn), "envelope_zero": _sorted(env), "beta_co": _sorted(bc)}),
        _row(module, "β ⊆ β_co", b <= bc, {"beta": _sorted(b), "beta_co": _sorted(bc)}),
    ]
    bad = next(
        (n for n in all_substructures(module, Kind.SUBMODULE, settings=settings)
         if not envelope_submodule(module, n) <= beta_co_s(module, n, settings=settings)),
        None,
    )
    rows.append(_row(module, "⟨E(N)⟩ ⊆ β_co^s(N) for every N", bad is None,
                     None if bad is None else {"submodule": _sorted(bad)}))
    return rows


@suite("prop-pr", "E_M(N) = N iff N is completely semiprime")
def _prop_pr(module, catalog, settings):
    for n in _proper_submodules(module, settings):
        fixed = envelope(module, n) == n.members
        semiprime = is_completely_semiprime_submodule(module, n).holds
        if fixed != semiprime:
            return [_row(module, "E(N) = N iff completely semiprime", False,
                         {"submodule": _sorted(n), "envelope_fixed": fixed, "completely_semiprime": semiprime})]
    return [_row(module, "E(N) = N iff completely semiprime", True)]


@suite("cor-gd", "Lee-Zhou reduced iff IFP and E_M(0) = 0")
def _cor_gd(module, catalog, settings):
    flags = module_class_flags(module)
    zero = zero_substructure(module, Kind.SUBMODULE)
    envelope_trivial = envelope(module, zero) == zero.members
    lhs = flags["lee_zhou_reduced"].holds
    rhs = flags["IFP"].holds and envelope_trivial
    return [_row(module, "Lee-Zhou reduced iff IFP and E(0) = 0", lhs == rhs,
                 {"lee_zhou_reduced": lhs, "IFP": flags["IFP"].holds, "envelope_trivial": envelope_trivial})]


@suite("prop-annihilator", "N (completely) prime iff (N:M) is and M/N is torsion-free over R/(N:M)")
def _prop_annihilator(module, catalog, settings):
    ring = module.ring
    for n in _proper_submodules(module, settings):
        ideal = annihilator(n)
        cp = is_completely_prime_submodule(module, n).holds
        cp_rhs = is_completely_prime_ideal(ring, ideal).holds and is_torsion_free_quotient(module, n).holds
        if cp != cp_rhs:
            return [_row(module, "completely prime form", False, {"submodule": _sorted(n), "lhs": cp, "rhs": cp_rhs})]
        p = is_prime_submodule(module, n, settings=settings).holds
        p_rhs = (is_prime_ideal(ring, ideal, settings=settings).holds
                 and is_ideal_torsion_free_quotient(module, n, settings=settings).holds)
        if p != p_rhs:
            return [_row(module, "prime form", False, {"submodule": _sorted(n), "lhs": p, "rhs": p_rhs})]
    return [_row(module, "completely prime and prime forms", True)]


@suite("prop-pf", "CRF iff every completely semiprime submodule is an intersection of completely prime ones")
def _prop_pf(module, catalog, settings):
    crf = satisfies_crf(module, settings=settings).holds
    semiprimes = [n for n in _proper_submodules(module, settings) if is_completely_semiprime_submodule(module, n)]
    offending = next((n for n in semiprimes if beta_co_s(module, n, settings=settings).members != n.members), None)
    rhs = offending is None
    return [_row(module, "CRF iff completely semiprime = β_co^s", crf == rhs,
                 {"crf": crf, "offending": None if offending is None else _sorted(offending)})]


@suite("prop-ccc", "2-primal modules: CRF iff RF")
def _prop_ccc(module, catalog, settings):
    if not is_two_primal_module(module, settings=settings):
        return [_row(module, "CRF iff RF (not 2-primal, vacuous)", True)]
    crf = satisfies_crf(module, settings=settings).holds
    rf = satisfies_rf(module, settings=settings).holds
    return [_row(module, "CRF iff RF", crf == rf, {"crf": crf, "rf": rf})]


def _thm_rf_summary(rows):
    rows_with_flags = [r for r in rows if "conditions" in r.details]
    positive = any(all(r.details["conditions"].values()) for r in rows_with_flags)
    negative = any(not any(r.details["conditions"].values()) for r in rows_with_flags)
    witness = {"positive": positive, "negative": negative}
    return [CheckRow("<catalog>", "instances on both sides", positive and negative,
                     None if positive and negative else witness, witness)]


@suite("thm-rf", "CRF modules: completely semiprime iff ⟨E(0)⟩ = 0 iff β_co = 0 iff subdirect product",
       summarize=_thm_rf_summary)
def _thm_rf(module, catalog, settings):
    if module.size == 1:
        return [_row(module, "four-way equivalence (zero module, skipped)", True)]
    if not satisfies_crf(module, settings=settings):
        return [_row(module, "four-way equivalence (no CRF, vacuous)", True)]
    zero = zero_substructure(module, Kind.SUBMODULE)
    conditions = {
        "completely_semiprime": is_completely_semiprime_submodule(module, zero).holds,
        "envelope_zero_trivial": envelope_submodule(module, zero).is_zero,
        "beta_co_zero": beta_co(module, settings=settings).is_zero,
        "subdirect": subdirect_decomposition(module, settings=settings).factors is not None,
    }
    agree = len(set(conditions.values())) == 1
    return [_row(module, "four-way equivalence", agree, {"conditions": conditions}, conditions=conditions)]


@suite("cor-last", "RF modules over commutative rings: semiprime iff ⟨E(0)⟩ = 0 iff β = 0 iff subdirect product "
       "of primes", summarize=_thm_rf_summary)
def _cor_last(module, catalog, settings):
    if not module.ring.is_commutative:
        return [_row(module, "four-way equivalence (ring not commutative, not applicable)", True)]
    if module.size == 1:
        return [_row(module, "four-way equivalence (zero module, skipped)", True)]
    primes = {p.members for p in prime_submodules(module, settings=settings)}
    completely_primes = {p.members for p in completely_prime_submodules(module, settings=settings)}
    rows = [_row(module, "prime and completely prime submodules coincide", primes == completely_primes,
                 {"prime_only": [_sorted(p) for p in primes - completely_primes],
                  "completely_prime_only": [_sorted(p) for p in completely_primes - primes]})]
    if not satisfies_rf(module, settings=settings):
        return rows + [_row(module, "four-way equivalence (no RF, vacuous)", True)]
    zero = zero_substructure(module, Kind.SUBMODULE)
    conditions = {
        "semiprime": is_semiprime_submodule(module, zero).holds,
        "envelope_zero_trivial": envelope_submodule(module, zero).is_zero,
        "beta_zero": beta(module, settings=settings).is_zero,
        "subdirect": subdirect_decomposition(module, settings=settings).factors is not None,
    }
    agree = len(set(conditions.values())) == 1
    rows.append(_row(module, "four-way equivalence", agree, {"conditions": conditions}, conditions=conditions))
    return rows


@suite("thm-pl", "β_co(M) = 0, ⟨E(0)⟩ = M or regular over a 2-primal ring give CRF")
def _thm_pl(module, catalog, settings):
    rows = []
    zero = zero_substructure(module, Kind.SUBMODULE)
    if beta_co(module, settings=settings).is_zero:
        rows.append(_row(module, "β_co = 0: CRF", satisfies_crf(module, settings=settings)))
        rows.append(_row(module, "β_co = 0: RF", satisfies_rf(module, settings=settings)))
        rows.append(_row(module, "β_co = 0: 2-primal", is_two_primal_module(module, settings=settings)))
        rows.append(_equality_row(module, settings))
    if envelope_submodule(module, zero).is_full:
        rows.append(_row(module, "⟨E(0)⟩ = M: CRF", satisfies_crf(module, settings=settings)))
    if "regular" in module.tags and _two_primal(module.ring, settings):
        rows.append(_row(module, "regular, 2-primal ring: CRF", satisfies_crf(module, settings=settings)))
        rows.append(_row(module, "regular, 2-primal ring: RF", satisfies_rf(module, settings=settings)))
        rows.append(_equality_row(module, settings))
    return rows or [_row(module, "no hypothesis applies", True)]


@suite("hom-transfer", "radical formulas transfer along epimorphisms φ with ker φ ⊆ N")
def _hom_transfer(module, catalog, settings):
    subs = all_substructures(module, Kind.SUBMODULE, settings=settings)
    pairs = [(identity_hom(module), n) for n in subs]
    for kernel in subs:
        if kernel.is_zero:
            continue
        _, projection = quotient_module(module, kernel, settings=settings)
        over = [n for n in subs if kernel <= n] if module.size <= HOM_PAIR_MAX_MODULE else [kernel]
        pairs.extend((projection, n) for n in over)
    for hom, n in pairs:
        verdict = hom_transfer_check(hom, n, settings=settings)
        if not verdict:
            return [_row(module, "transfer implications", verdict,
                         {**verdict.witness, "kernel": _sorted(hom.kernel)})]
    return [_row(module, f"transfer implications over {len(pairs)} (φ, N) pairs", True)]


def _exx_instances(catalog):
    return [m for m in catalog.modules if "example-exx" in m.tags] or [module_example_exx()]


@suite("example-exx-golden", "the simple constant-row module over M2(Z2)", over=_exx_instances)
def _example_exx(module, catalog, settings):
    zero = zero_substructure(module, Kind.SUBMODULE)
    lattice = [s.members for s in all_substructures(module, Kind.SUBMODULE, settings=settings)]
    flags = module_class_flags(module)
    return [
        _row(module, "submodule lattice is {0, M}", lattice == [zero.members, frozenset(module.elements())],
             {"lattice": [sorted(m) for m in lattice]}),
        _row(module, "β(M) = 0", beta(module, settings=settings).is_zero),
        _row(module, "β_co(M) = M", beta_co(module, settings=settings).is_full),
        _row(module, "⟨E_M(0)⟩ = M", envelope_submodule(module, zero).is_full),
        _row(module, "zero submodule satisfies CRF", submodule_satisfies_crf(module, zero, settings=settings)),
        _row(module, "zero submodule fails RF", not submodule_satisfies_rf(module, zero, settings=settings),
             {"rf": "holds"}),
        _row(module, "not 2-primal", not is_two_primal_module(module, settings=settings), {"two_primal": "holds"}),
        _row(module, "zero submodule prime", is_prime_submodule(module, zero, settings=settings)),
        _row(module, "zero submodule not completely prime", not is_completely_prime_submodule(module, zero),
             {"completely_prime": "holds"}),
        _row(module, "IFP fails", not flags["IFP"], {"IFP": "holds"}),
        _row(module, "factoring note recorded", bool(module.notes), {"notes": "missing"}),
    ]


# ---------------------------------------------------------------------------
# Additional results
# ---------------------------------------------------------------------------

def _bounded_oracle(module):
    """Persistence by explicit sequence search to depth |R| + 1, independent of the fixpoint."""
    ring = module.ring
    depth = ring.size + 1
    nonzero = (module.sandwich_products != module.zero).any(axis=1)
    table = []
    for m in module.elements():
        # survives[a] after d rounds: some sequence of length d from a avoids aRm = 0
        survives = {a: bool(nonzero[a, m]) for a in ring.elements()}
        for _ in range(depth - 1):
            survives = {
                a: bool(nonzero[a, m]) and any(survives[b] for b in ring.sandwiches[a])
                for a in ring.elements()
            }
        table.append([not survives[a] for a in ring.elements()])
    return table


@suite("sn-oracle", "eventually-annihilating fixpoint agrees with bounded sequence search")
def _sn_oracle(module, catalog, settings):
    if module.ring.size > SN_ORACLE_MAX_RING:
        return [_row(module, "oracle (ring too large, skipped)", True)]
    fixpoint = eventually_annihilating(module)
    oracle = _bounded_oracle(module)
    mismatch = next(
        ((a, m) for m in module.elements() for a in module.ring.elements()
         if bool(fixpoint[a, m]) != oracle[m][a]),
        None,
    )
    rows = [_row(module, "fixpoint = bounded search", mismatch is None,
                 None if mismatch is None else {"a": mismatch[0], "m": mismatch[1]})]
    strongly_nilpotent_submodule(module)
    rows.append(_row(module, "𝒩_s closed under the action", True))
    return rows


@suite("thm-tm", "projective 2-primal modules: 𝒩_s = ⟨E(0)⟩ = β_co = β and both formulas")
def _thm_tm(module, catalog, settings):
    if not module.is_projective or not is_two_primal_module(module, settings=settings):
        return [_row(module, "projective and 2-primal (not applicable)", True)]
    return [
        _equality_row(module, settings),
        _row(module, "radical formula", satisfies_rf(module, settings=settings)),
        _row(module, "complete radical formula", satisfies_crf(module, settings=settings)),
    ]


def _lemma_y_rows(module, settings):
    rows = []
    two_primal_ring = _two_primal(module.ring, settings)
    for n in all_substructures(module, Kind.SUBMODULE, settings=settings):
        if n.is_zero:
            continue
        sub, _ = submodule_as_module(module, n, settings=settings)
        zero = zero_substructure(sub, Kind.SUBMODULE)
        b, env, bc = beta(sub, settings=settings), envelope_submodule(sub, zero), beta_co(sub, settings=settings)
        label = f"N = {_sorted(n)}"
        if not b <= env <= bc:
            rows.append(_row(module, "β(N) ⊆ ⟨E_N(0)⟩ ⊆ β_co(N)", False, {"submodule": _sorted(n)}))
            continue
        if is_two_primal_module(sub, settings=settings):
            both = satisfies_rf(sub, settings=settings).holds and satisfies_crf(sub, settings=settings).holds
            if not (both and b == env == bc):
                rows.append(_row(module, "2-primal N: both formulas and equalities", False, {"submodule": label}))
    if two_primal_ring:
        crf = satisfies_crf(module, settings=settings).holds
        rf = satisfies_rf(module, settings=settings).holds
        rows.append(_row(module, "semisimple 2-primal ring: CRF", crf))
        rows.append(_row(module, "semisimple 2-primal ring: CRF iff RF", crf == rf, {"crf": crf, "rf": rf}))
    return rows or [_row(module, "submodules as modules", True)]


@suite("lemma-y", "modules over semisimple rings: β(N) ⊆ ⟨E_N(0)⟩ ⊆ β_co(N) for submodules N")
def _lemma_y(module, catalog, settings):
    if not ring_properties(module.ring, settings=settings)["is_semisimple"]:
        return [_row(module, "semisimple ring (not applicable)", True)]
    return _lemma_y_rows(module, settings)


@suite("cor-smallest", "CRF modules: β_co(M) is the smallest completely semiprime submodule")
def _cor_smallest(module, catalog, settings):
    rows = []
    if satisfies_crf(module, settings=settings):
        rows.extend(_smallest(module, beta_co(module, settings=settings),
                              is_completely_semiprime_submodule, "β_co, completely semiprime", settings))
    if module.ring.is_commutative and satisfies_rf(module, settings=settings):
        rows.extend(_smallest(module, beta(module, settings=settings),
                              is_semiprime_submodule, "β, semiprime", settings))
    return rows or [_row(module, "no formula holds (not applicable)", True)]


def _smallest(module, radical, predicate, name, settings):
    rows = []
    if not radical.is_full:
        rows.append(_row(module, f"{name}: radical is semiprime", predicate(module, radical)))
    bad = next((n for n in _proper_submodules(module, settings) if predicate(module, n) and not radical <= n), None)
    rows.append(_row(module, f"{name}: contained in every such submodule", bad is None,
                     None if bad is None else {"submodule": _sorted(bad)}))
    return rows


@suite("prop-beta-cp", "β(M) completely prime implies M 2-primal")
def _prop_beta_cp(module, catalog, settings):
    radical = beta(module, settings=settings)
    if radical.is_full or not is_completely_prime_submodule(module, radical):
        return [_row(module, "β completely prime (not applicable)", True)]
    return [_row(module, "β completely prime implies 2-primal", is_two_primal_module(module, settings=settings))]


OPEN_QUESTION_SEARCHES = (
    ("maximal submodule that is not completely prime", "not maximal_completely_prime"),
    ("prime, completely semiprime, not completely prime", "prime ∧ completely_semiprime ∧ ¬completely_prime"),
    ("semiprime, completely semiprime, not Lee-Zhou reduced",
     "semiprime ∧ completely_semiprime ∧ ¬lee_zhou_reduced"),
    ("semiprime with RF and β(M) ≠ 0", "semiprime ∧ satisfies_rf ∧ ¬beta_zero"),
)
OPEN_QUESTION_SPACE = GeneratorSpec(families=(
    Family("Zn", {"n": list(range(2, 9))}),
    Family("product", {"factors": [[2, 2], [2, 3]]}),
    Family("upper_triangular", {"k": [2], "base": [2, 3]}),
    Family("matrix", {"k": [2], "base": [2]}),
    Family("example_exx"),
))


def _open_questions(item, catalog, settings):
    question, predicate = item
    result = search_counterexample(predicate, OPEN_QUESTION_SPACE, settings=settings)
    found = None if result.witness is None else {**result.witness.description, "label": result.witness.structure.label}
    return [CheckRow(question, predicate, True, None, {"found": found, "stats": result.stats})]


SUITES["open-questions"] = Suite(
    "open-questions", "search for instances of the open questions (reported, never asserted)",
    lambda catalog: list(OPEN_QUESTION_SEARCHES), _open_questions,
)


# ---------------------------------------------------------------------------
# Running
# ---------------------------------------------------------------------------

def get_suite(name):
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}") from None


def _load_catalog(source, settings):
    if source is None:
        return default_catalog(settings)
    from .configio import build_catalog
    return build_catalog(source, settings=settings)


def _run_instance(name, source, index, settings):
    catalog = _load_catalog(source, settings)
    entry = get_suite(name)
    return entry.check(entry.instances(catalog)[index], catalog, settings)


def run_suite(name, *, catalog_source=None, settings=None, jobs=1, progress=False):
    """Run a suite over every instance; rows come back in catalog order whatever the completion order."""
    settings = resolve(settings)
    entry = get_suite(name)
    catalog = _load_catalog(catalog_source, settings)
    count = len(entry.instances(catalog))
    logger.info("suite %s over %d instances (jobs=%d)", name, count, jobs)
    if jobs > 1 and count > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            args = ([name] * count, [catalog_source] * count, range(count), [settings] * count)
            chunks = list(tqdm(pool.map(_run_instance, *args), total=count, desc=name, disable=not progress))
    else:
        items = entry.instances(catalog)
        chunks = [entry.check(item, catalog, settings) for item in tqdm(items, desc=name, disable=not progress)]
    rows = [row for chunk in chunks for row in chunk]
    if entry.summarize is not None:
        rows.extend(entry.summarize(rows))
    return SuiteResult(name, rows)
