# Text tables and JSON documents for analyses, suite runs and searches

import json
from datetime import datetime, timezone

import numpy as np
import pandas as pd

from .configio import SCHEMA_VERSION, structure_document

WITNESS_WIDTH = 70


def _jsonable(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def witness_summary(witness):
    if not witness:
        return ""
    text = json.dumps(witness, ensure_ascii=False, default=_jsonable, sort_keys=True)
    return text if len(text) <= WITNESS_WIDTH else text[: WITNESS_WIDTH - 3] + "..."


def _status(holds):
    return "PASS" if holds else "FAIL"


def header():
    from . import __version__
    return {"tool": "radical-lab", "version": __version__, "generated": datetime.now(timezone.utc).isoformat()}


# ---------------------------------------------------------------------------
# Analysis
# ---------------------------------------------------------------------------

def radicals_frame(report):
    module = report.module
    rows = []
    for name, sub in (
        ("⟨E_M(0)⟩", report.envelope_zero),
        ("𝒩_s(M)", report.strongly_nilpotent),
        ("β(M)", report.beta),
        ("β_co(M)", report.beta_co),
    ):
        rows.append({"radical": name, "size": len(sub), "members": sub.describe(), "of": module.label})
    return pd.DataFrame(rows)


def flags_frame(report, ring_props=None):
    rows = [
        {"check": name, "result": _status(verdict.holds), "witness": witness_summary(verdict.witness)}
        for name, verdict in report.class_flags.items()
    ]
    for name, verdict in (ring_props or {}).items():
        rows.append({"check": f"ring: {name}", "result": _status(verdict.holds),
                     "witness": witness_summary(verdict.witness)})
    return pd.DataFrame(rows, columns=["check", "result", "witness"])


def render_analysis(report, ring_props=None):
    module = report.module
    lines = [f"{module.label}: {module.size} elements over {module.ring.label} ({module.ring.size} elements)"]
    lines += [f"note: {note}" for note in module.notes]
    lines += ["", radicals_frame(report).to_string(index=False), "", flags_frame(report, ring_props).to_string(index=False)]
    return "\n".join(lines)


def analysis_document(report, ring_props=None):
    return {
        "schema": SCHEMA_VERSION,
        "header": header(),
        "report": report.to_dict(),
        "ring_properties": {name: v.to_dict() for name, v in (ring_props or {}).items()},
    }


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def suite_frame(result):
    rows = [
        {"instance": r.instance, "check": r.check, "result": _status(r.passed), "witness": witness_summary(r.witness)}
        for r in result.rows
    ]
    return pd.DataFrame(rows, columns=["instance", "check", "result", "witness"])


def render_suite(result):
    frame = suite_frame(result)
    failed = len(result.failures)
    verdict = "PASS" if result.passed else f"FAIL ({failed} of {len(result.rows)} checks)"
    return f"{frame.to_string(index=False)}\n\nsuite {result.suite}: {verdict}"


def suite_document(result):
    return {
        "schema": SCHEMA_VERSION,
        "header": header(),
        "suite": result.suite,
        "passed": result.passed,
        "rows": [row.to_dict() for row in result.rows],
    }


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------

def render_search(result):
    stats = result.stats
    counts = f"examined {stats['examined']}, skipped {stats['skipped']}, budget {stats['budget']}"
    if result.witness is None:
        state = "budget exhausted" if stats["exhausted"] else "enumeration complete"
        return f"no structure satisfies {result.predicate!r} ({state}; {counts})"
    found = result.witness
    lines = [
        f"found {found.structure.label} at candidate {found.index}: {witness_summary(found.description)}",
        f"({counts})",
        "",
        radicals_frame(result.report).to_string(index=False),
        "",
        flags_frame(result.report).to_string(index=False),
    ]
    return "\n".join(lines)


def search_document(result):
    doc = {
        "schema": SCHEMA_VERSION,
        "header": header(),
        "predicate": result.predicate,
        "stats": result.stats,
        "found": result.witness is not None,
    }
    if result.witness is not None:
        doc["candidate"] = {"index": result.witness.index, "description": result.witness.description}
        doc["flags"] = result.flags
        doc["witness"] = structure_document(result.witness.structure)
        doc["report"] = result.report.to_dict()
    return doc


def write_json(doc, path):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(doc, f, ensure_ascii=False, indent=2, sort_keys=True, default=_jsonable)
        f.write("\n")


def write_csv(frame, path):
    frame.to_csv(path, index=False)
