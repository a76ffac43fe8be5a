"""
Tests for radical_lab.config and radical_lab.configio: settings overrides and JSON documents.
"""

import json

import pytest

from radical_lab.catalog import module_example_exx
from radical_lab.config import Settings, load_settings
from radical_lab.configio import (
    SCHEMA_VERSION,
    build_analysis_target,
    build_catalog,
    parse_search,
    read_document,
    structure_document,
)
from radical_lab.errors import AxiomViolation, ConfigError


class TestSettings:
    """Defaults, environment overrides and validation."""

    def test_defaults(self):
        settings = load_settings(environ={})
        assert settings == Settings()
        assert settings.max_ring_size == 256

    def test_environment_override(self):
        settings = load_settings(environ={"RADICAL_LAB_MAX_SIZE": "12", "RADICAL_LAB_MAX_SEARCH": "5"})
        assert settings.max_ring_size == 12
        assert settings.max_search_budget == 5
        assert settings.max_parent_size == 4096

    def test_empty_value_ignored(self):
        assert load_settings(environ={"RADICAL_LAB_MAX_LATTICE": ""}) == Settings()

    @pytest.mark.parametrize("raw", ["many", "0", "-3"])
    def test_bad_value(self, raw):
        with pytest.raises(ConfigError) as err:
            load_settings(environ={"RADICAL_LAB_MAX_PARENT": raw})
        assert err.value.path == "RADICAL_LAB_MAX_PARENT"

    def test_dotenv_file(self, tmp_path, monkeypatch):
        monkeypatch.delenv("RADICAL_LAB_MAX_LATTICE", raising=False)
        env_file = tmp_path / ".env"
        env_file.write_text("RADICAL_LAB_MAX_LATTICE=99\n", encoding="utf-8")
        assert load_settings(dotenv_path=env_file).max_lattice_size == 99
        monkeypatch.delenv("RADICAL_LAB_MAX_LATTICE", raising=False)

    def test_with_overrides_skips_none(self):
        settings = Settings().with_overrides(max_ring_size=8, max_parent_size=None)
        assert settings.max_ring_size == 8
        assert settings.max_parent_size == 4096


class TestAnalyzeDocuments:
    """Ring and module configs for the analyze command."""

    def test_ring_defaults_to_regular_module(self):
        ring, module = build_analysis_target({"ring": {"constructor": "Zn", "params": {"n": 4}}})
        assert ring.label == "Z4"
        assert "regular" in module.tags

    def test_nested_matrix_ring(self):
        doc = {
            "ring": {"constructor": "matrix", "params": {"k": 2, "base": {"constructor": "Zn", "params": {"n": 2}}}},
            "module": {"constructor": "cyclic", "ideal": [0, 2, 8, 10]},
        }
        ring, module = build_analysis_target(doc)
        assert ring.size == 16
        assert module.size == 4

    def test_example_without_ring(self):
        ring, module = build_analysis_target({"module": {"constructor": "example_exx"}})
        assert module is module_example_exx()
        assert ring is module.ring

    def test_table_ring(self):
        doc = {"ring": {"label": "F2", "tables": {"add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 1]]}},
               "module": {"constructor": "zero"}}
        ring, module = build_analysis_target(doc)
        assert ring.label == "F2"
        assert module.size == 1

    def test_constructor_labels(self):
        doc = {
            "ring": {"label": "F2", "constructor": "Zn", "params": {"n": 2}},
            "module": {"label": "F2 free", "constructor": "free", "rank": 2},
        }
        ring, module = build_analysis_target(doc)
        assert ring.label == "F2"
        assert module.ring is ring
        assert module.label == "F2 free"
        assert "free" in module.tags

    def test_nested_base_label(self):
        doc = {"ring": {"constructor": "matrix",
                        "params": {"k": 2, "base": {"label": "F2", "constructor": "Zn", "params": {"n": 2}}}}}
        ring, _ = build_analysis_target(doc)
        assert ring.label == "M2(F2)"

    def test_bad_tables(self):
        doc = {"ring": {"tables": {"add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 0]]}}}
        with pytest.raises(AxiomViolation):
            build_analysis_target(doc)

    def test_extra_key(self):
        with pytest.raises(ConfigError) as err:
            build_analysis_target({"ring": {"constructor": "Zn", "params": {"n": 4}}, "colour": "red"})
        assert err.value.path == "colour"

    def test_missing_param(self):
        with pytest.raises(ConfigError) as err:
            build_analysis_target({"ring": {"constructor": "Zn"}})
        assert err.value.path == "ring"

    def test_unknown_constructor(self):
        with pytest.raises(ConfigError) as err:
            build_analysis_target({"ring": {"constructor": "quaternion", "params": {"n": 2}}})
        assert err.value.path.startswith("ring.constructor")

    def test_ring_required(self):
        with pytest.raises(ConfigError):
            build_analysis_target({"module": {"constructor": "regular"}})

    def test_small_n(self):
        with pytest.raises(ConfigError) as err:
            build_analysis_target({"ring": {"constructor": "Zn", "params": {"n": 1}}})
        assert err.value.path == "ring.params.n"


class TestCatalogDocuments:
    """User catalogs."""

    def test_explicit_modules(self):
        doc = {
            "rings": [{"constructor": "Zn", "params": {"n": 4}}],
            "modules": [{"ring": 0, "constructor": "free", "rank": 3}],
            "derive_modules": False,
        }
        catalog = build_catalog(doc)
        assert [m.size for m in catalog.modules] == [64]

    def test_derived_modules(self):
        catalog = build_catalog({"rings": [{"constructor": "Zn", "params": {"n": 4}}]})
        assert len(catalog.modules) == 3

    def test_bad_ring_index(self):
        doc = {"rings": [{"constructor": "Zn", "params": {"n": 4}}], "modules": [{"ring": 2, "constructor": "regular"}]}
        with pytest.raises(ConfigError) as err:
            build_catalog(doc)
        assert err.value.path == "modules.0.ring"

    def test_no_rings(self):
        with pytest.raises(ConfigError) as err:
            build_catalog({"rings": []})
        assert err.value.path == "rings"

    def test_zero_ring_rejected(self):
        doc = {"rings": [{"constructor": "Zn", "params": {"n": 2}}, {"tables": {"add": [[0]], "mul": [[0]]}}]}
        with pytest.raises(ConfigError) as err:
            build_catalog(doc)
        assert err.value.path == "rings.1"


class TestSearchDocuments:
    """Search configs."""

    def test_generator(self):
        cfg = parse_search({"predicate": "prime", "families": [{"family": "Zn", "n": [2, 3]}], "budget": 4})
        spec = cfg.generator()
        assert spec.families[0].name == "Zn"
        assert spec.families[0].params == {"n": [2, 3]}
        assert spec.module_kinds == ("regular", "free", "cyclic")
        assert cfg.budget == 4

    def test_negative_budget(self):
        with pytest.raises(ConfigError) as err:
            parse_search({"predicate": "prime", "families": [{"family": "Zn"}], "budget": -1})
        assert err.value.path == "budget"


class TestDocuments:
    """Reading files and serializing structures."""

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            read_document(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ConfigError):
            read_document(path)

    def test_structure_document_rebuilds(self, exx, tmp_path):
        """A serialized module rebuilds to the same tables through the analyze path."""
        path = tmp_path / "exx.json"
        path.write_text(json.dumps({"witness": structure_document(exx)}), encoding="utf-8")
        ring, module = build_analysis_target(read_document(path))
        assert structure_document(exx)["schema"] == SCHEMA_VERSION
        assert module.action.tolist() == exx.action.tolist()
        assert ring.mul.tolist() == exx.ring.mul.tolist()
        assert module.label == "M_exx"
