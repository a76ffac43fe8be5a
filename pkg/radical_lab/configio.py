# JSON configuration documents: pydantic schemas, builders and witness serialization

import json
import logging
from dataclasses import replace
from pathlib import Path
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .catalog import (
    Catalog,
    Family,
    GeneratorSpec,
    all_cyclic_modules,
    module_example_exx,
    module_cyclic,
    module_free,
    module_regular,
    ring_matrix,
    ring_product,
    ring_upper_triangular,
    ring_Zn,
)
from .config import resolve
from .core import FiniteRing, Kind, build_ring_from_tables, module_from_action
from .errors import ConfigError
from .substructures import make_substructure

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class RingTables(_Strict):
    add: list[list[int]]
    mul: list[list[int]]
    one: Optional[int] = None
    zero: Optional[int] = None
    names: Optional[list[str]] = None


class RingParams(_Strict):
    n: Optional[int] = None
    k: Optional[int] = None
    base: Optional[Union[int, "RingConfig"]] = None
    factors: Optional[list[Union[int, "RingConfig"]]] = None


class RingConfig(_Strict):
    label: Optional[str] = None
    constructor: Optional[Literal["Zn", "matrix", "upper_triangular", "product"]] = None
    params: RingParams = Field(default_factory=RingParams)
    tables: Optional[RingTables] = None

    @model_validator(mode="after")
    def _one_source(self):
        if (self.constructor is None) == (self.tables is None):
            raise ValueError("give exactly one of 'constructor' and 'tables'")
        needed = {"Zn": ("n",), "matrix": ("k", "base"), "upper_triangular": ("k", "base"), "product": ("factors",)}
        for name in needed.get(self.constructor, ()):
            if getattr(self.params, name) is None:
                raise ValueError(f"constructor {self.constructor!r} needs params.{name}")
        return self


class ModuleTables(_Strict):
    add: list[list[int]]
    action: list[list[int]]
    zero: Optional[int] = None
    names: Optional[list[str]] = None


class ModuleConfig(_Strict):
    label: Optional[str] = None
    constructor: Optional[Literal["regular", "free", "cyclic", "zero", "example_exx"]] = None
    rank: int = Field(default=2, ge=1)
    ideal: Optional[list[int]] = None
    tables: Optional[ModuleTables] = None

    @model_validator(mode="after")
    def _one_source(self):
        if (self.constructor is None) == (self.tables is None):
            raise ValueError("give exactly one of 'constructor' and 'tables'")
        if self.constructor == "cyclic" and self.ideal is None:
            raise ValueError("constructor 'cyclic' needs 'ideal' (members of a left ideal)")
        return self


class AnalyzeConfig(_Strict):
    schema_: Optional[int] = Field(default=None, alias="schema")
    ring: Optional[RingConfig] = None
    module: Optional[ModuleConfig] = None

    @model_validator(mode="after")
    def _has_ring(self):
        if self.ring is None and (self.module is None or self.module.constructor != "example_exx"):
            raise ValueError("a 'ring' is required unless the module is example_exx")
        return self


class CatalogModuleConfig(ModuleConfig):
    ring: int = Field(default=0, ge=0)


class CatalogConfig(_Strict):
    schema_: Optional[int] = Field(default=None, alias="schema")
    rings: list[RingConfig] = Field(min_length=1)
    modules: list[CatalogModuleConfig] = Field(default_factory=list)
    derive_modules: bool = True
    include_example_exx: bool = False


class FamilyConfig(_Strict):
    family: Literal["Zn", "matrix", "upper_triangular", "product", "example_exx"]
    n: Optional[list[int]] = None
    k: Optional[list[int]] = None
    base: Optional[list[int]] = None
    factors: Optional[list[list[int]]] = None


class SearchConfig(_Strict):
    schema_: Optional[int] = Field(default=None, alias="schema")
    predicate: str
    target: Literal["module", "ring"] = "module"
    families: list[FamilyConfig] = Field(min_length=1)
    module_kinds: list[Literal["regular", "free", "cyclic"]] = ["regular", "free", "cyclic"]
    free_rank: int = Field(default=2, ge=1)
    budget: Optional[int] = Field(default=None, ge=0)

    def generator(self):
        families = tuple(
            Family(f.family, {k: v for k, v in f.model_dump(exclude={"family"}).items() if v is not None})
            for f in self.families
        )
        return GeneratorSpec(families, self.target, tuple(self.module_kinds), self.free_rank)


for _model in (RingParams, RingConfig, AnalyzeConfig, CatalogModuleConfig, CatalogConfig):
    _model.model_rebuild()


# ---------------------------------------------------------------------------
# Loading
# ---------------------------------------------------------------------------

def read_document(path):
    """Read a JSON document; a search output is unwrapped to its witness."""
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except OSError as err:
        raise ConfigError(str(path), f"cannot read: {err.strerror}") from None
    except json.JSONDecodeError as err:
        raise ConfigError(str(path), f"invalid JSON at line {err.lineno}: {err.msg}") from None
    if not isinstance(doc, dict):
        raise ConfigError(str(path), "top level must be an object")
    return doc


def parse(model, data):
    """Validate data against a schema, reporting the first problem with its dotted path."""
    try:
        return model.model_validate(data)
    except ValidationError as err:
        first = err.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ConfigError(location, first["msg"]) from None


# ---------------------------------------------------------------------------
# Building
# ---------------------------------------------------------------------------

def _labelled(structure, label):
    return structure if not label or label == structure.label else replace(structure, label=label)


def build_ring(cfg, *, settings=None):
    settings = resolve(settings)
    if isinstance(cfg, int):
        return ring_Zn(cfg, settings=settings)
    if cfg.tables is not None:
        t = cfg.tables
        return build_ring_from_tables(t.add, t.mul, one=t.one, zero=t.zero, names=t.names,
                                      label=cfg.label or "R", settings=settings)
    p = cfg.params
    if cfg.constructor == "Zn":
        if p.n < 2:
            raise ConfigError("ring.params.n", "Z_n needs n >= 2")
        ring = ring_Zn(p.n, settings=settings)
    elif cfg.constructor in ("matrix", "upper_triangular"):
        build = ring_matrix if cfg.constructor == "matrix" else ring_upper_triangular
        ring = build(p.k, build_ring(p.base, settings=settings), settings=settings)
    else:
        ring = ring_product([build_ring(f, settings=settings) for f in p.factors], settings=settings)
    return _labelled(ring, cfg.label)


def _zero_module(ring, label, settings):
    return module_from_action(ring, [[0]], [[0]] * ring.size, label=label or f"0 over {ring.label}",
                              settings=settings)


def build_module(cfg, ring, *, settings=None):
    settings = resolve(settings)
    if cfg.tables is not None:
        t = cfg.tables
        return module_from_action(ring, t.add, t.action, zero=t.zero, names=t.names,
                                  label=cfg.label or "M", settings=settings)
    if cfg.constructor == "regular":
        return _labelled(module_regular(ring), cfg.label)
    if cfg.constructor == "free":
        return _labelled(module_free(ring, cfg.rank, settings=settings), cfg.label)
    if cfg.constructor == "zero":
        return _zero_module(ring, cfg.label, settings)
    if cfg.constructor == "example_exx":
        return module_example_exx()
    ideal = make_substructure(ring, Kind.LEFT_IDEAL, cfg.ideal)
    return _labelled(module_cyclic(ring, ideal, settings=settings), cfg.label)


def build_analysis_target(doc, *, settings=None):
    """(ring, module) from an analyze document; the module defaults to the regular one."""
    if "witness" in doc:
        doc = doc["witness"]
    cfg = parse(AnalyzeConfig, doc)
    if cfg.module is not None and cfg.module.constructor == "example_exx":
        module = module_example_exx()
        return module.ring, module
    ring = build_ring(cfg.ring, settings=settings)
    if cfg.module is None:
        return ring, module_regular(ring)
    return ring, build_module(cfg.module, ring, settings=settings)


def build_catalog(doc, *, settings=None):
    cfg = parse(CatalogConfig, doc)
    rings = [build_ring(r, settings=settings) for r in cfg.rings]
    for i, ring in enumerate(rings):
        if ring.size == 1:
            raise ConfigError(f"rings.{i}", "the zero ring has no proper ideals and cannot be catalogued")
    modules = []
    for i, entry in enumerate(cfg.modules):
        if entry.ring >= len(rings):
            raise ConfigError(f"modules.{i}.ring", f"no ring with index {entry.ring}")
        modules.append(build_module(entry, rings[entry.ring], settings=settings))
    if cfg.derive_modules:
        for ring in rings:
            modules.append(module_regular(ring))
            modules.append(module_free(ring, 2, settings=settings))
            modules.extend(all_cyclic_modules(ring, settings=settings))
    if cfg.include_example_exx:
        exx = module_example_exx()
        modules.append(exx)
        rings.append(exx.ring)
    return Catalog(rings, modules)


def parse_search(doc):
    return parse(SearchConfig, doc)


# ---------------------------------------------------------------------------
# Witness serialization
# ---------------------------------------------------------------------------

def _ring_document(ring):
    return {
        "label": ring.label,
        "tables": {
            "add": ring.add.tolist(), "mul": ring.mul.tolist(),
            "one": ring.one, "zero": ring.zero, "names": list(ring.names),
        },
    }


def structure_document(structure):
    """Raw-table document for a ring or module, accepted back by the analyze command."""
    if isinstance(structure, FiniteRing):
        return {"schema": SCHEMA_VERSION, "ring": _ring_document(structure)}
    module = structure
    return {
        "schema": SCHEMA_VERSION,
        "ring": _ring_document(module.ring),
        "module": {
            "label": module.label,
            "tables": {
                "add": module.add.tolist(), "action": module.action.tolist(),
                "zero": module.zero, "names": list(module.names),
            },
        },
    }
