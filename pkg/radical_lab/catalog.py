# Standard rings and modules, the simple M2(Z2)-module of constant-row matrices, the default
# catalog for the theorem suites and the counterexample search driver

import ast
import logging
from dataclasses import dataclass, field, replace
from functools import cache
from itertools import product

import numpy as np
from tqdm import tqdm

from .config import resolve
from .core import (
    Kind,
    direct_product,
    build_ring_from_tables,
    module_from_action,
    quotient_module,
    regular_module,
)
from .errors import BudgetExhausted, ConfigError, SizeGuardExceeded
from .radicals import (
    MODULE_FLAGS,
    beta,
    beta_co,
    completely_prime_submodules,
    is_completely_prime_submodule,
    is_two_primal_ring,
    radical_report,
    ring_properties,
)
from .substructures import all_substructures, ideal_as_submodule, maximal_substructures

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------

def _guard(what, size, settings):
    if size > settings.max_ring_size:
        raise SizeGuardExceeded(what, size, settings.max_ring_size)


def ring_Zn(n, *, settings=None):
    """Integers modulo n."""
    if n < 2:
        raise ValueError("Z_n needs n >= 2")
    settings = resolve(settings)
    _guard(f"ring Z{n}", n, settings)
    idx = np.arange(n)
    return build_ring_from_tables(
        np.add.outer(idx, idx) % n, np.multiply.outer(idx, idx) % n,
        one=1 % n, zero=0, label=f"Z{n}", tags={"commutative", f"Z{n}"}, settings=settings,
    )


def _matrix_ring(k, base, positions, label, settings):
    q, free = base.size, len(positions)
    _guard(f"ring {label}", q ** free, settings)
    n = q ** free
    coords = np.stack(np.unravel_index(np.arange(n), (q,) * free), axis=1)
    full = np.full((n, k, k), base.zero, dtype=np.intp)
    for t, (i, j) in enumerate(positions):
        full[:, i, j] = coords[:, t]

    def encode(entries):
        return np.ravel_multi_index(tuple(entries[..., i, j] for i, j in positions), (q,) * free)

    add = encode(base.add[full[:, None], full[None, :]])
    prod = np.full((n, n, k, k), base.zero, dtype=np.intp)
    for i, j in positions:
        for l in range(k):
            term = base.mul[full[:, None, i, l], full[None, :, l, j]]
            prod[:, :, i, j] = base.add[prod[:, :, i, j], term]
    mul = encode(prod)

    identity = np.full((k, k), base.zero, dtype=np.intp)
    np.fill_diagonal(identity, base.one)
    names = tuple(
        "[" + ",".join("[" + ",".join(base.name(int(x)) for x in row) + "]" for row in m) + "]"
        for m in full
    )
    return build_ring_from_tables(
        add, mul, one=int(encode(identity)), zero=int(encode(np.full((k, k), base.zero, dtype=np.intp))),
        label=label, names=names, settings=settings,
    )


def ring_matrix(k, base, *, settings=None):
    """Full k×k matrices over a base ring, entries in row-major mixed-radix order."""
    positions = [(i, j) for i in range(k) for j in range(k)]
    return _matrix_ring(k, base, positions, f"M{k}({base.label})", resolve(settings))


def ring_upper_triangular(k, base, *, settings=None):
    positions = [(i, j) for i in range(k) for j in range(i, k)]
    return _matrix_ring(k, base, positions, f"U{k}({base.label})", resolve(settings))


def ring_product(rings, *, settings=None):
    return direct_product(list(rings), settings=settings)


# ---------------------------------------------------------------------------
# Modules
# ---------------------------------------------------------------------------

def module_regular(ring):
    return regular_module(ring)


def module_free(ring, n, *, settings=None):
    """R^n with componentwise action, tagged free and projective."""
    if n < 1:
        raise ValueError("free modules need rank >= 1")
    if n == 1:
        return regular_module(ring)
    return direct_product([regular_module(ring)] * n, label=f"{ring.label}^{n}", settings=settings)


def module_cyclic(ring, ideal, *, settings=None):
    """R/I for a left ideal I, as a quotient of the regular module."""
    sub = ideal_as_submodule(ring, ideal)
    quotient, _ = quotient_module(regular_module(ring), sub, settings=settings)
    label = f"{ring.label}/{sub.describe()}"
    return replace(quotient, label=label, tags=quotient.tags | {"cyclic"})


def all_cyclic_modules(ring, *, include_trivial=False, settings=None):
    """R/I over the left ideals I in lattice order; R/0 and R/R only on request."""
    modules = []
    for ideal in all_substructures(ring, Kind.LEFT_IDEAL, settings=settings):
        if not include_trivial and (ideal.is_zero or ideal.is_full):
            continue
        modules.append(module_cyclic(ring, ideal, settings=settings))
    return modules


def module_abelian_with_action(ring, add, action, *, label="M", names=None, tags=(), notes=(), settings=None):
    """A module given by an abelian group table and an action table."""
    return module_from_action(ring, add, action, label=label, names=names, tags=tags, notes=notes,
                              settings=settings)


EXX_NOTE = (
    "M2(Z) acts on the constant-row matrices through reduction mod 2, so the module is realized "
    "over M2(Z2); the submodule lattice, the two-sided ideals acting and the primality verdicts "
    "are unchanged by the factoring"
)


@cache
def module_example_exx():
    """The four constant-row matrices [[x,x],[y,y]] over Z2 with matrix multiplication on the left."""
    ring = ring_matrix(2, ring_Zn(2))
    # element 2x + y stands for [[x,x],[y,y]]
    x, y = np.divmod(np.arange(4), 2)
    a, b, c, d = (np.arange(16) >> shift & 1 for shift in (3, 2, 1, 0))
    new_x = (a[:, None] * x[None, :] + b[:, None] * y[None, :]) % 2
    new_y = (c[:, None] * x[None, :] + d[:, None] * y[None, :]) % 2
    names = tuple(f"[[{i},{i}],[{j},{j}]]" for i, j in zip(x, y))
    return module_from_action(
        ring, np.bitwise_xor.outer(np.arange(4), np.arange(4)), 2 * new_x + new_y,
        label="M_exx", names=names, tags={"example-exx"}, notes=(EXX_NOTE,),
    )


# ---------------------------------------------------------------------------
# Default catalog
# ---------------------------------------------------------------------------

@dataclass
class Catalog:
    rings: list = field(default_factory=list)
    modules: list = field(default_factory=list)

    def modules_over(self, ring):
        return [m for m in self.modules if m.ring is ring]


def catalog_rings(settings=None):
    z2 = ring_Zn(2, settings=settings)
    return [
        z2,
        ring_Zn(3, settings=settings),
        ring_Zn(4, settings=settings),
        ring_Zn(6, settings=settings),
        ring_Zn(8, settings=settings),
        ring_product([z2, z2], settings=settings),
        ring_upper_triangular(2, z2, settings=settings),
        # M2(Z2) is the base ring of the exx module, shared so both land in one catalog entry
        module_example_exx().ring,
    ]


@cache
def _default_catalog(settings):
    rings = catalog_rings(settings)
    modules = []
    for ring in rings:
        modules.append(module_regular(ring))
        modules.append(module_free(ring, 2, settings=settings))
        modules.extend(all_cyclic_modules(ring, settings=settings))
    modules.append(module_example_exx())
    logger.info("default catalog: %d rings, %d modules", len(rings), len(modules))
    return Catalog(rings, modules)


def default_catalog(settings=None):
    """Rings Z2, Z3, Z4, Z6, Z8, Z2×Z2, U2(Z2), M2(Z2) with their regular, free rank-2 and cyclic modules."""
    catalog = _default_catalog(resolve(settings))
    return Catalog(list(catalog.rings), list(catalog.modules))


# ---------------------------------------------------------------------------
# Counterexample search
# ---------------------------------------------------------------------------

RING_FLAGS = (
    "two_primal", "commutative", "dedekind_finite", "kothe_finite_scale",
    "primes_completely_prime", "is_semisimple", "nil_is_ideal", "reduced_modulo_beta",
    "beta_semiprime", "beta_completely_semiprime",
)
EXTRA_MODULE_FLAGS = ("beta_zero", "beta_co_zero", "maximal_completely_prime", "has_completely_prime")

_SYMBOLS = {"¬": " not ", "∧": " and ", "∨": " or ", "!": " not ", "&&": " and ", "||": " or "}
_ALLOWED = (ast.Expression, ast.BoolOp, ast.And, ast.Or, ast.UnaryOp, ast.Not, ast.Name, ast.Load, ast.Constant)


def parse_predicate(text, names):
    """Parse a boolean formula over flag names into an ast; ¬ ∧ ∨ are accepted."""
    for symbol, word in _SYMBOLS.items():
        text = text.replace(symbol, word)
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as err:
        raise ConfigError("search.predicate", f"cannot parse predicate: {err.msg}") from None
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED):
            raise ConfigError("search.predicate", f"unsupported syntax {type(node).__name__}")
        if isinstance(node, ast.Constant) and not isinstance(node.value, bool):
            raise ConfigError("search.predicate", f"unsupported constant {node.value!r}")
        if isinstance(node, ast.Name) and node.id not in names:
            raise ConfigError("search.predicate", f"unknown flag {node.id!r}; known: {', '.join(names)}")
    return tree.body


def evaluate_predicate(node, lookup):
    """Short-circuit evaluation; lookup(name) is only called for flags the formula reaches."""
    if isinstance(node, ast.BoolOp):
        if isinstance(node.op, ast.And):
            return all(evaluate_predicate(v, lookup) for v in node.values)
        return any(evaluate_predicate(v, lookup) for v in node.values)
    if isinstance(node, ast.UnaryOp):
        return not evaluate_predicate(node.operand, lookup)
    if isinstance(node, ast.Constant):
        return node.value
    return bool(lookup(node.id))


@dataclass(frozen=True)
class Family:
    name: str
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class GeneratorSpec:
    """Which structures a search walks through, in the order given."""

    families: tuple
    target: str = "module"
    module_kinds: tuple = ("regular", "free", "cyclic")
    free_rank: int = 2


@dataclass
class Candidate:
    index: int
    structure: object
    description: dict


@dataclass
class SearchResult:
    predicate: str
    witness: Candidate | None
    flags: dict
    report: object
    stats: dict


def _family_rings(family, settings):
    p = family.params
    if family.name == "Zn":
        for n in sorted(p.get("n", range(2, 9))):
            yield {"n": n}, lambda n=n: ring_Zn(n, settings=settings)
    elif family.name in ("matrix", "upper_triangular"):
        build = ring_matrix if family.name == "matrix" else ring_upper_triangular
        for k, base in product(sorted(p.get("k", [2])), sorted(p.get("base", [2]))):
            yield {"k": k, "base": base}, lambda k=k, base=base: build(k, ring_Zn(base, settings=settings),
                                                                        settings=settings)
    elif family.name == "product":
        for factors in sorted(tuple(f) for f in p.get("factors", [(2, 2)])):
            yield {"factors": list(factors)}, lambda factors=factors: ring_product(
                [ring_Zn(n, settings=settings) for n in factors], settings=settings)
    elif family.name != "example_exx":
        raise ConfigError("search.generator.families", f"unknown family {family.name!r}")


def _family_modules(ring, kinds, rank, settings):
    """Modules over one ring, smallest first; ties keep the order of the requested kinds."""
    entries = []
    for kind in kinds:
        if kind == "regular":
            entries.append((ring.size, {"module": "regular"}, lambda: module_regular(ring)))
        elif kind == "free":
            entries.append((ring.size ** rank, {"module": "free", "rank": rank},
                            lambda: module_free(ring, rank, settings=settings)))
        elif kind == "cyclic":
            try:
                ideals = all_substructures(ring, Kind.LEFT_IDEAL, settings=settings)
            except SizeGuardExceeded as err:
                logger.info("skipping cyclic modules over %s: %s", ring.label, err)
                continue
            for ideal in ideals:
                if ideal.is_zero or ideal.is_full:
                    continue
                entries.append((ring.size // len(ideal.members), {"module": "cyclic", "ideal": sorted(ideal.members)},
                                lambda ideal=ideal: module_cyclic(ring, ideal, settings=settings)))
        else:
            raise ConfigError("search.generator.module_kinds", f"unknown module kind {kind!r}")
    for _, described, build in sorted(entries, key=lambda entry: entry[0]):
        yield described, build


def enumerate_candidates(spec, *, settings=None):
    """Yield (description, builder) pairs: families in order, parameters ascending, modules by ascending size."""
    settings = resolve(settings)
    for family in spec.families:
        if family.name == "example_exx":
            if spec.target == "module":
                yield {"family": "example_exx"}, module_example_exx
            continue
        for params, build_ring in _family_rings(family, settings):
            described = {"family": family.name, **params}
            if spec.target == "ring":
                yield described, build_ring
                continue
            try:
                ring = build_ring()
            except SizeGuardExceeded as err:
                logger.info("skipping %s: %s", described, err)
                continue
            for extra, build in _family_modules(ring, spec.module_kinds, spec.free_rank, settings):
                yield {**described, **extra}, build


def _module_lookup(module, settings):
    computed = {}

    def flags():
        if "report" not in computed:
            computed["report"] = radical_report(module, settings=settings)
        return computed["report"].class_flags

    extra = {
        "beta_zero": lambda: beta(module, settings=settings).is_zero,
        "beta_co_zero": lambda: beta_co(module, settings=settings).is_zero,
        "has_completely_prime": lambda: bool(completely_prime_submodules(module, settings=settings)),
        "maximal_completely_prime": lambda: all(
            is_completely_prime_submodule(module, p)
            for p in maximal_substructures(all_substructures(module, Kind.SUBMODULE, settings=settings))
        ),
    }

    def lookup(name):
        if name not in computed:
            computed[name] = bool(extra[name]() if name in extra else flags()[name])
        return computed[name]

    return lookup, computed


def _ring_lookup(ring, settings):
    computed = {}

    def lookup(name):
        if name not in computed:
            if name == "two_primal":
                computed[name] = bool(is_two_primal_ring(ring, settings=settings))
            elif name == "commutative":
                computed[name] = ring.is_commutative
            else:
                if "properties" not in computed:
                    computed["properties"] = ring_properties(ring, settings=settings)
                computed[name] = bool(computed["properties"][name])
        return computed[name]

    return lookup, computed


def _take(candidates, budget):
    for count, item in enumerate(candidates):
        if count >= budget:
            raise BudgetExhausted(f"search budget of {budget} candidates used up")
        yield item


def search_counterexample(predicate, spec, budget=None, *, settings=None, progress=False):
    """First structure, in enumeration order, on which the predicate holds."""
    settings = resolve(settings)
    budget = settings.max_search_budget if budget is None else budget
    names = RING_FLAGS if spec.target == "ring" else MODULE_FLAGS + EXTRA_MODULE_FLAGS
    tree = parse_predicate(predicate, names)
    stats = {"examined": 0, "skipped": 0, "budget": budget, "exhausted": False}
    candidates = _take(enumerate_candidates(spec, settings=settings), budget)
    try:
        for index, (description, build) in enumerate(tqdm(candidates, desc="search", disable=not progress)):
            try:
                structure = build()
                make_lookup = _ring_lookup if spec.target == "ring" else _module_lookup
                lookup, computed = make_lookup(structure, settings)
                hit = evaluate_predicate(tree, lookup)
            except SizeGuardExceeded as err:
                logger.info("skipping candidate %s: %s", description, err)
                stats["skipped"] += 1
                continue
            stats["examined"] += 1
            if hit:
                module = regular_module(structure) if spec.target == "ring" else structure
                report = radical_report(module, settings=settings)
                flags = {k: v for k, v in computed.items() if k in names}
                logger.info("predicate %r holds on %s", predicate, description)
                return SearchResult(predicate, Candidate(index, structure, description), flags, report, stats)
    except BudgetExhausted as err:
        logger.warning("%s", err)
        stats["exhausted"] = True
    return SearchResult(predicate, None, {}, None, stats)
