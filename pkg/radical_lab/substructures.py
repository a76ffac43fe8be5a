# Submodule and ideal lattices: generated closure, enumeration by join closure, sums, meets, (N:M)

import logging
from functools import lru_cache

import numpy as np

from .config import resolve
from .core import FiniteModule, FiniteRing, Kind, Substructure, regular_module
from .errors import AxiomViolation, KindMismatch, ParentMismatch, SizeGuardExceeded

logger = logging.getLogger(__name__)

# lattices kept per (parent, kind); older ones are rebuilt on demand
LATTICE_CACHE_SIZE = 256


def _check_kind(parent, kind):
    kind = Kind(kind)
    if isinstance(parent, FiniteModule) and kind is Kind.SUBMODULE:
        return kind
    if isinstance(parent, FiniteRing) and kind in (Kind.LEFT_IDEAL, Kind.TWO_SIDED_IDEAL):
        return kind
    raise KindMismatch(f"a {type(parent).__name__} has no {kind.value} substructures")


def _orbit(parent, kind, generators):
    gens = np.array(sorted(set(int(g) for g in generators)), dtype=np.intp)
    if gens.size == 0:
        return gens
    if kind is Kind.SUBMODULE:
        reached = parent.action[:, gens]
    elif kind is Kind.LEFT_IDEAL:
        reached = parent.mul[:, gens]
    else:
        reached = parent.mul[parent.mul[:, gens]]
    return np.unique(reached)


def _cyclic_subgroup(add, zero, g):
    multiples, x = [zero], g
    while x != zero:
        multiples.append(x)
        x = int(add[x, g])
    return np.array(multiples, dtype=np.intp)


def additive_span(add, zero, elements):
    span = np.array([zero], dtype=np.intp)
    seen = {zero}
    for g in elements:
        g = int(g)
        if g in seen:
            continue
        span = np.unique(add[np.ix_(span, _cyclic_subgroup(add, zero, g))])
        seen = set(span.tolist())
    return frozenset(seen)


def generated_substructure(parent, kind, generators):
    """Smallest substructure of the given kind containing the generators."""
    kind = _check_kind(parent, kind)
    # the R-orbit of the generators is closed under the action, so its additive span is too
    members = additive_span(parent.add, parent.zero, _orbit(parent, kind, generators))
    return Substructure(parent, kind, members)


def make_substructure(parent, kind, members):
    """Validate a member set against the closure rules of its kind."""
    kind = _check_kind(parent, kind)
    members = frozenset(int(x) for x in members)
    if any(not 0 <= x < parent.size for x in members):
        raise AxiomViolation("substructure members in range", tuple(sorted(members)), parent.label)
    if parent.zero not in members:
        raise AxiomViolation("substructure contains zero", (parent.zero,), parent.label)
    sub = Substructure(parent, kind, members)
    idx, mask = sub.indices, sub.mask
    checks = [("closed under addition", parent.add[np.ix_(idx, idx)], lambda w: (int(idx[w[0]]), int(idx[w[1]])))]
    checks.append(("closed under negation", parent.neg[idx], lambda w: (int(idx[w[0]]),)))
    if kind is Kind.SUBMODULE:
        checks.append(("closed under the action", parent.action[:, idx], lambda w: (w[0], int(idx[w[1]]))))
    else:
        checks.append(("closed under left multiplication", parent.mul[:, idx], lambda w: (w[0], int(idx[w[1]]))))
    if kind is Kind.TWO_SIDED_IDEAL:
        checks.append(("closed under right multiplication", parent.mul[idx, :], lambda w: (int(idx[w[0]]), w[1])))
    for axiom, reached, witness in checks:
        bad = np.argwhere(~mask[reached])
        if bad.size:
            raise AxiomViolation(axiom, witness(tuple(int(x) for x in bad[0])), parent.label)
    return sub


def full_substructure(parent, kind):
    return Substructure(parent, _check_kind(parent, kind), frozenset(range(parent.size)))


def zero_substructure(parent, kind):
    return Substructure(parent, _check_kind(parent, kind), frozenset({parent.zero}))


def _sum_members(add, a, b):
    return frozenset(np.unique(add[np.ix_(a.indices, b.indices)]).tolist())


@lru_cache(maxsize=LATTICE_CACHE_SIZE)
def _lattice(parent, kind, max_parent, max_lattice):
    if parent.size > max_parent:
        raise SizeGuardExceeded(f"lattice parent {parent.label}", parent.size, max_parent)
    cyclic = {}
    for g in parent.elements():
        sub = generated_substructure(parent, kind, [g])
        cyclic.setdefault(sub.members, sub)
    family = dict(cyclic)
    seeds = sorted(cyclic.values(), key=lambda s: s.sort_key)
    frontier = list(family.values())
    # every substructure is a sum of cyclic ones, so joining with seeds reaches the whole lattice
    while frontier:
        fresh = {}
        for a in frontier:
            for c in seeds:
                if c.members <= a.members:
                    continue
                members = _sum_members(parent.add, a, c)
                if members not in family and members not in fresh:
                    fresh[members] = Substructure(parent, kind, members)
        if len(family) + len(fresh) > max_lattice:
            raise SizeGuardExceeded(f"{kind.value} lattice of {parent.label}", len(family) + len(fresh), max_lattice)
        family.update(fresh)
        frontier = list(fresh.values())
    logger.debug("%s has %d %s substructures", parent.label, len(family), kind.value)
    return tuple(sorted(family.values(), key=lambda s: s.sort_key))


def all_substructures(parent, kind, *, settings=None):
    """Every substructure of the given kind, sorted by (cardinality, member set)."""
    settings = resolve(settings)
    kind = _check_kind(parent, kind)
    return list(_lattice(parent, kind, settings.max_parent_size, settings.max_lattice_size))


def _same_lattice(a, b):
    if a.parent is not b.parent or a.kind is not b.kind:
        raise ParentMismatch("substructures belong to different parents or kinds")


def sum_substructures(a, b):
    _same_lattice(a, b)
    return Substructure(a.parent, a.kind, _sum_members(a.parent.add, a, b))


def intersect(a, b):
    _same_lattice(a, b)
    return Substructure(a.parent, a.kind, a.members & b.members)


def intersect_family(parent, kind, family):
    """Meet of a family; the empty meet is the whole structure."""
    result = full_substructure(parent, kind)
    for sub in family:
        _same_lattice(result, sub)
        result = Substructure(parent, result.kind, result.members & sub.members)
    return result


def maximal_substructures(family):
    proper = [s for s in family if not s.is_full]
    return [s for s in proper if not any(s.members < t.members for t in proper)]


def annihilator(sub):
    """(N:M) = {r : rM ⊆ N}, the annihilator ideal of M/N."""
    if sub.kind is not Kind.SUBMODULE:
        raise KindMismatch("(N:M) is defined for submodules")
    module = sub.parent
    members = np.flatnonzero(sub.mask[module.action].all(axis=1))
    return make_substructure(module.ring, Kind.TWO_SIDED_IDEAL, members.tolist())


def ideal_as_submodule(ring, ideal):
    """A left (or two-sided) ideal read as a submodule of the regular module."""
    if ideal.parent is not ring or ideal.kind is Kind.SUBMODULE:
        raise KindMismatch("expected an ideal of the given ring")
    return Substructure(regular_module(ring), Kind.SUBMODULE, ideal.members)


def ideal_product_within(ring, a, b, target):
    """Whether every product xy with x in a and y in b lies in target."""
    return bool(target.mask[ring.mul[np.ix_(a.indices, b.indices)]].all())
