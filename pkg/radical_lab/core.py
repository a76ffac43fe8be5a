# Finite rings and finite left modules as lookup tables: validation, quotients, products, homomorphisms

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cache, cached_property
from itertools import product

import numpy as np

from .config import resolve
from .errors import (
    AxiomViolation,
    DegenerateRing,
    EmptyList,
    KindMismatch,
    ParentMismatch,
    RingMismatch,
    SizeGuardExceeded,
)

logger = logging.getLogger(__name__)


class Kind(str, Enum):
    SUBMODULE = "submodule"
    LEFT_IDEAL = "left-ideal"
    TWO_SIDED_IDEAL = "two-sided-ideal"


# ---------------------------------------------------------------------------
# Table helpers
# ---------------------------------------------------------------------------

def _as_table(raw, shape, bound, name, label):
    try:
        table = np.array(raw, dtype=np.intp)
    except (ValueError, TypeError):
        raise AxiomViolation("table-shape", (name,), label) from None
    if table.shape != shape:
        raise AxiomViolation("table-shape", (name, table.shape, shape), label)
    if table.size and (table.min() < 0 or table.max() >= bound):
        bad = np.argwhere((table < 0) | (table >= bound))[0]
        raise AxiomViolation("table-range", (name, *map(int, bad)), label)
    table.setflags(write=False)
    return table


def _readonly(table):
    table = np.ascontiguousarray(table, dtype=np.intp)
    table.setflags(write=False)
    return table


def _first_violation(lhs, rhs):
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return None
    return tuple(int(x) for x in bad[0])


def _scan(count, pair_of_tables):
    """Run a cubic check one slice at a time; return the first failing triple."""
    for a in range(count):
        lhs, rhs = pair_of_tables(a)
        hit = _first_violation(lhs, rhs)
        if hit is not None:
            return (a, *hit)
    return None


def _find_identity(table):
    idx = np.arange(table.shape[0])
    for e in range(table.shape[0]):
        if np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx):
            return e
    return None


def _check_abelian_group(add, zero, neg, label):
    n = add.shape[0]
    idx = np.arange(n)
    if (w := _first_violation(add, add.T)) is not None:
        raise AxiomViolation("additive commutativity", w, label)
    w = _scan(n, lambda a: (add[add[a]], add[a][add]))
    if w is not None:
        raise AxiomViolation("additive associativity", w, label)
    if (w := _first_violation(add[zero], idx)) is not None:
        raise AxiomViolation("additive identity", (zero, *w), label)
    if (w := _first_violation(add[idx, neg], np.full(n, zero))) is not None:
        raise AxiomViolation("additive inverse", w, label)


def _group_parts(add, zero, neg, label):
    n = add.shape[0]
    if zero is None:
        zero = _find_identity(add)
        if zero is None:
            raise AxiomViolation("additive identity", (), label)
    if not 0 <= zero < n:
        raise AxiomViolation("table-range", ("zero", zero), label)
    if neg is None:
        hits = add == zero
        if not hits.any(axis=1).all():
            raise AxiomViolation("additive inverse", (int(np.argmin(hits.any(axis=1))),), label)
        neg = np.argmax(hits, axis=1)
    neg = _as_table(neg, (n,), n, "neg", label)
    return int(zero), neg


# ---------------------------------------------------------------------------
# Structures
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False, repr=False)
class FiniteRing:
    """A finite unital associative ring on the indices 0..size-1."""

    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    zero: int
    one: int
    label: str = "R"
    names: tuple = ()
    tags: frozenset = frozenset()
    notes: tuple = ()

    @property
    def size(self):
        return self.add.shape[0]

    def elements(self):
        return range(self.size)

    def name(self, index):
        return self.names[index] if self.names else str(index)

    def __getitem__(self, index):
        if not 0 <= index < self.size:
            raise IndexError(f"element index {index} out of range for {self.label}")
        return RingElement(self, index)

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FiniteRing({self.label!r}, size={self.size})"

    @cached_property
    def is_commutative(self):
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def squares(self):
        idx = np.arange(self.size)
        return _readonly(self.mul[idx, idx])

    @cached_property
    def power_sequences(self):
        # distinct powers a, a^2, ... up to the first repeat
        sequences = []
        for a in self.elements():
            seen, powers, p = set(), [], a
            while p not in seen:
                seen.add(p)
                powers.append(p)
                p = int(self.mul[p, a])
            sequences.append(tuple(powers))
        return tuple(sequences)

    def powers(self, a):
        return self.power_sequences[a]

    @cached_property
    def sandwiches(self):
        """For each a, the sorted distinct elements of aRa."""
        return tuple(
            tuple(int(x) for x in np.unique(self.mul[self.mul[a], a])) for a in self.elements()
        )


@dataclass(frozen=True, eq=False, repr=False)
class FiniteModule:
    """A finite left module: an abelian group with a unital associative ring action."""

    ring: FiniteRing
    add: np.ndarray
    neg: np.ndarray
    zero: int
    action: np.ndarray
    label: str = "M"
    names: tuple = ()
    tags: frozenset = frozenset()
    notes: tuple = ()
    components: tuple = ()

    @property
    def size(self):
        return self.add.shape[0]

    def elements(self):
        return range(self.size)

    def name(self, index):
        return self.names[index] if self.names else str(index)

    def __getitem__(self, index):
        if not 0 <= index < self.size:
            raise IndexError(f"element index {index} out of range for {self.label}")
        return ModuleElement(self, index)

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FiniteModule({self.label!r}, size={self.size}, ring={self.ring.label!r})"

    @property
    def is_projective(self):
        return "projective" in self.tags

    @cached_property
    def sandwich_products(self):
        """(a r)·m over all r, as an array indexed [a, r, m]."""
        return _readonly(self.action[self.ring.mul])


@dataclass(frozen=True)
class RingElement:
    ring: FiniteRing
    index: int

    def _peer(self, other):
        if not isinstance(other, RingElement) or other.ring is not self.ring:
            raise RingMismatch("cannot combine elements of different rings")
        return other.index

    def __add__(self, other):
        return RingElement(self.ring, int(self.ring.add[self.index, self._peer(other)]))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RingElement(self.ring, int(self.ring.neg[self.index]))

    def __mul__(self, other):
        if isinstance(other, ModuleElement):
            if other.module.ring is not self.ring:
                raise RingMismatch(f"{other.module.label} is not a module over {self.ring.label}")
            return ModuleElement(other.module, int(other.module.action[self.index, other.index]))
        return RingElement(self.ring, int(self.ring.mul[self.index, self._peer(other)]))

    def __pow__(self, k):
        if k < 1:
            raise ValueError("only positive powers are defined")
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def __repr__(self):
        return f"{self.ring.name(self.index)}"


@dataclass(frozen=True)
class ModuleElement:
    module: FiniteModule
    index: int

    def _peer(self, other):
        if not isinstance(other, ModuleElement) or other.module is not self.module:
            raise ParentMismatch("cannot add elements of different modules")
        return other.index

    def __add__(self, other):
        return ModuleElement(self.module, int(self.module.add[self.index, self._peer(other)]))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ModuleElement(self.module, int(self.module.neg[self.index]))

    def __repr__(self):
        return f"{self.module.name(self.index)}"


@dataclass(frozen=True)
class Substructure:
    """A submodule, left ideal or two-sided ideal, stored by its member indices."""

    parent: object
    kind: Kind
    members: frozenset = field(default_factory=frozenset)

    @property
    def size(self):
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, index):
        return index in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __le__(self, other):
        return self.members <= other.members

    def __lt__(self, other):
        return self.members < other.members

    @property
    def is_full(self):
        return len(self.members) == self.parent.size

    @property
    def is_zero(self):
        return len(self.members) == 1

    @cached_property
    def indices(self):
        return _readonly(np.array(sorted(self.members), dtype=np.intp))

    @cached_property
    def mask(self):
        mask = np.zeros(self.parent.size, dtype=bool)
        mask[self.indices] = True
        mask.setflags(write=False)
        return mask

    @property
    def sort_key(self):
        return (len(self.members), tuple(sorted(self.members)))

    def describe(self):
        return "{" + ", ".join(self.parent.name(i) for i in sorted(self.members)) + "}"

    def __repr__(self):
        return f"Substructure({self.kind.value} of {self.parent.label}, {sorted(self.members)})"


@dataclass(frozen=True, eq=False, repr=False)
class ModuleHom:
    source: FiniteModule
    target: FiniteModule
    map: np.ndarray

    def __call__(self, index):
        return int(self.map[index])

    def __repr__(self):
        return f"ModuleHom({self.source.label!r} -> {self.target.label!r})"

    @cached_property
    def kernel(self):
        return Substructure(
            self.source, Kind.SUBMODULE, frozenset(np.flatnonzero(self.map == self.target.zero).tolist())
        )

    @cached_property
    def image(self):
        return Substructure(self.target, Kind.SUBMODULE, frozenset(self.map.tolist()))

    @property
    def is_surjective(self):
        return self.image.is_full

    @property
    def is_injective(self):
        return self.kernel.is_zero


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def build_ring_from_tables(add, mul, *, one=None, zero=None, neg=None, label="R", names=None,
                           tags=(), notes=(), settings=None):
    """Validate raw tables exhaustively and return a FiniteRing."""
    settings = resolve(settings)
    n = len(add)
    if n < 1:
        raise AxiomViolation("table-shape", ("add", 0), label)
    if n > settings.max_ring_size:
        raise SizeGuardExceeded(f"ring {label}", n, settings.max_ring_size)

    add = _as_table(add, (n, n), n, "add", label)
    mul = _as_table(mul, (n, n), n, "mul", label)
    zero, neg = _group_parts(add, zero, neg, label)
    _check_abelian_group(add, zero, neg, label)

    idx = np.arange(n)
    if one is None:
        one = _find_identity(mul)
        if one is None:
            raise AxiomViolation("multiplicative identity", (), label)
    if not 0 <= one < n:
        raise AxiomViolation("table-range", ("one", one), label)
    if (w := _first_violation(mul[one], idx)) is not None:
        raise AxiomViolation("multiplicative identity", (one, *w), label)
    if (w := _first_violation(mul[:, one], idx)) is not None:
        raise AxiomViolation("multiplicative identity", (*w, one), label)
    w = _scan(n, lambda a: (mul[mul[a]], mul[a][mul]))
    if w is not None:
        raise AxiomViolation("multiplicative associativity", w, label)
    w = _scan(n, lambda a: (mul[a][add], add[mul[a][:, None], mul[a][None, :]]))
    if w is not None:
        raise AxiomViolation("left distributivity", w, label)
    w = _scan(n, lambda a: (mul[add[a]], add[mul[a][None, :], mul]))
    if w is not None:
        raise AxiomViolation("right distributivity", w, label)

    names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
    if len(names) != n:
        raise AxiomViolation("table-shape", ("names", len(names), n), label)
    tags = frozenset(tags)
    if np.array_equal(mul, mul.T):
        tags |= {"commutative"}
    logger.debug("validated ring %s of size %d", label, n)
    return FiniteRing(add, mul, neg, zero, int(one), label, names, tags, tuple(notes))


def module_from_action(ring, add, action, *, zero=None, neg=None, label="M", names=None,
                       tags=(), notes=(), components=(), settings=None):
    """Validate an abelian group table plus an action table and return a FiniteModule."""
    settings = resolve(settings)
    if ring.size == 1:
        raise DegenerateRing(f"the zero ring cannot be the base ring of {label}")
    n = len(add)
    if n < 1:
        raise AxiomViolation("table-shape", ("add", 0), label)
    if n > settings.max_parent_size:
        raise SizeGuardExceeded(f"module {label}", n, settings.max_parent_size)

    add = _as_table(add, (n, n), n, "add", label)
    action = _as_table(action, (ring.size, n), n, "action", label)
    zero, neg = _group_parts(add, zero, neg, label)
    _check_abelian_group(add, zero, neg, label)

    idx = np.arange(n)
    if (w := _first_violation(action[ring.one], idx)) is not None:
        raise AxiomViolation("unital action", (ring.one, *w), label)
    w = _scan(ring.size, lambda r: (action[r][add], add[action[r][:, None], action[r][None, :]]))
    if w is not None:
        raise AxiomViolation("action additive in module", w, label)
    w = _scan(ring.size, lambda r: (action[ring.add[r]], add[action[r][None, :], action]))
    if w is not None:
        raise AxiomViolation("action additive in ring", w, label)
    w = _scan(ring.size, lambda r: (action[ring.mul[r]], action[r][action]))
    if w is not None:
        raise AxiomViolation("action associativity", w, label)

    names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
    if len(names) != n:
        raise AxiomViolation("table-shape", ("names", len(names), n), label)
    tags = frozenset(tags)
    if np.array_equal(add, ring.add) and np.array_equal(action, ring.mul):
        tags |= {"regular", "free", "projective"}
    logger.debug("validated module %s of size %d over %s", label, n, ring.label)
    return FiniteModule(ring, add, neg, zero, action, label, names, tags, tuple(notes), tuple(components))


@cache
def regular_module(ring):
    """The ring as a left module over itself."""
    return module_from_action(
        ring, ring.add, ring.mul, zero=ring.zero, neg=ring.neg,
        label=f"{ring.label} (regular)", names=ring.names,
    )


# ---------------------------------------------------------------------------
# Quotients, products, restriction
# ---------------------------------------------------------------------------

def _cosets(add, members, names, suffix):
    cos = add[:, np.array(sorted(members), dtype=np.intp)]
    rep = cos.min(axis=1)
    reps = np.unique(rep)
    projection = np.searchsorted(reps, rep)
    coset_names = tuple(f"{names[r]}+{suffix}" if len(members) > 1 else names[r] for r in reps)
    return reps, _readonly(projection), coset_names


def quotient_ring(ring, ideal, *, settings=None):
    """R/I for a two-sided ideal I; returns the coset ring and the projection table."""
    if ideal.kind is not Kind.TWO_SIDED_IDEAL:
        raise KindMismatch(f"quotient rings need a two-sided ideal, got a {ideal.kind.value}")
    if ideal.parent is not ring:
        raise ParentMismatch(f"ideal does not belong to {ring.label}")
    reps, projection, names = _cosets(ring.add, ideal.members, ring.names, "I")
    grid = np.ix_(reps, reps)
    quotient = build_ring_from_tables(
        projection[ring.add[grid]], projection[ring.mul[grid]],
        one=int(projection[ring.one]), zero=int(projection[ring.zero]),
        label=f"{ring.label}/I{len(ideal)}", names=names,
        tags={f"quotient-of({ring.label})"}, settings=settings,
    )
    return quotient, projection


def quotient_module(module, sub, *, settings=None):
    """M/N for a submodule N; returns the coset module and the projection epimorphism."""
    if sub.kind is not Kind.SUBMODULE:
        raise KindMismatch(f"quotient modules need a submodule, got a {sub.kind.value}")
    if sub.parent is not module:
        raise ParentMismatch(f"submodule does not belong to {module.label}")
    reps, projection, names = _cosets(module.add, sub.members, module.names, "N")
    quotient = module_from_action(
        module.ring,
        projection[module.add[np.ix_(reps, reps)]],
        projection[module.action[:, reps]],
        zero=int(projection[module.zero]),
        label=f"{module.label}/N{len(sub)}",
        names=names,
        tags={f"quotient-of({module.label})"},
        settings=settings,
    )
    return quotient, ModuleHom(module, quotient, projection)


def _pair_table(a, b):
    m = b.shape[0]
    return (a[:, None, :, None] * m + b[None, :, None, :]).reshape(a.shape[0] * m, a.shape[1] * m)


def _pair_vector(a, b):
    return (a[:, None] * b.shape[0] + b[None, :]).ravel()


def _pair_action(a, b):
    m = b.shape[1]
    return (a[:, :, None] * m + b[:, None, :]).reshape(a.shape[0], a.shape[1] * m)


def _product_names(items):
    return tuple("(" + ", ".join(parts) + ")" for parts in product(*[it.names for it in items]))


def _product_index(items, coords):
    return int(np.ravel_multi_index(tuple(coords), tuple(it.size for it in items)))


def direct_product(items, *, label=None, settings=None):
    """Componentwise product of a nonempty list of rings, or of modules over one ring."""
    items = list(items)
    if not items:
        raise EmptyList("direct_product needs at least one factor")
    settings = resolve(settings)
    if all(isinstance(it, FiniteRing) for it in items):
        total = int(np.prod([it.size for it in items]))
        if total > settings.max_ring_size:
            raise SizeGuardExceeded("ring product", total, settings.max_ring_size)
        add, mul, neg = items[0].add, items[0].mul, items[0].neg
        for it in items[1:]:
            add, mul, neg = _pair_table(add, it.add), _pair_table(mul, it.mul), _pair_vector(neg, it.neg)
        return build_ring_from_tables(
            add, mul, neg=neg,
            one=_product_index(items, [it.one for it in items]),
            zero=_product_index(items, [it.zero for it in items]),
            label=label or " × ".join(it.label for it in items),
            names=_product_names(items), settings=settings,
        )
    if all(isinstance(it, FiniteModule) for it in items):
        ring = items[0].ring
        if any(it.ring is not ring for it in items):
            raise RingMismatch("direct_product of modules needs a common base ring")
        total = int(np.prod([it.size for it in items]))
        if total > settings.max_parent_size:
            raise SizeGuardExceeded("module product", total, settings.max_parent_size)
        add, neg, action = items[0].add, items[0].neg, items[0].action
        for it in items[1:]:
            add, neg, action = _pair_table(add, it.add), _pair_vector(neg, it.neg), _pair_action(action, it.action)
        tags = set()
        for tag in ("free", "projective"):
            if all(tag in it.tags for it in items):
                tags.add(tag)
        return module_from_action(
            ring, add, action, neg=neg,
            zero=_product_index(items, [it.zero for it in items]),
            label=label or " ⊕ ".join(it.label for it in items),
            names=_product_names(items), tags=tags, components=tuple(items), settings=settings,
        )
    raise KindMismatch("direct_product factors must be all rings or all modules")


def submodule_as_module(module, sub, *, settings=None):
    """The submodule N regarded as a module in its own right."""
    if sub.kind is not Kind.SUBMODULE or sub.parent is not module:
        raise KindMismatch("submodule_as_module needs a submodule of the given module")
    keep = sub.indices
    position = np.full(module.size, -1, dtype=np.intp)
    position[keep] = np.arange(len(keep))
    restricted = module_from_action(
        module.ring,
        position[module.add[np.ix_(keep, keep)]],
        position[module.action[:, keep]],
        zero=int(position[module.zero]),
        label=f"{module.label}|N{len(sub)}",
        names=tuple(module.names[i] for i in keep) if module.names else None,
        tags={f"submodule-of({module.label})"},
        settings=settings,
    )
    return restricted, ModuleHom(restricted, module, _readonly(keep))


# ---------------------------------------------------------------------------
# Homomorphisms
# ---------------------------------------------------------------------------

def module_hom(source, target, mapping):
    """Validate a map of element tables as an R-module homomorphism."""
    if source.ring is not target.ring:
        raise RingMismatch("homomorphisms need modules over the same ring")
    label = f"{source.label} -> {target.label}"
    table = _as_table(mapping, (source.size,), target.size, "map", label)
    if table[source.zero] != target.zero:
        raise AxiomViolation("hom preserves zero", (source.zero,), label)
    if (w := _first_violation(table[source.add], target.add[table[:, None], table[None, :]])) is not None:
        raise AxiomViolation("hom additive", w, label)
    if (w := _first_violation(table[source.action], target.action[:, table])) is not None:
        raise AxiomViolation("hom linear", w, label)
    return ModuleHom(source, target, table)


def identity_hom(module):
    return ModuleHom(module, module, _readonly(np.arange(module.size)))


def compose(first, second):
    """second ∘ first."""
    if first.target is not second.source:
        raise ParentMismatch("cannot compose: target and source differ")
    return ModuleHom(first.source, second.target, _readonly(second.map[first.map]))


def component_projection(module, i):
    """Coordinate projection of a direct product module onto factor i."""
    if not module.components:
        raise KindMismatch(f"{module.label} is not a direct product")
    sizes = tuple(c.size for c in module.components)
    coords = np.unravel_index(np.arange(module.size), sizes)
    return ModuleHom(module, module.components[i], _readonly(coords[i]))


def image_of(hom, sub):
    return Substructure(hom.target, Kind.SUBMODULE, frozenset(hom.map[sub.indices].tolist()))


def preimage_of(hom, sub):
    return Substructure(hom.source, Kind.SUBMODULE, frozenset(np.flatnonzero(sub.mask[hom.map]).tolist()))
