"""JSON document formats.

Semigroup:   {"order": n, "labels"?: [...], "table": [[...]]}
Semi-brace:  {"order": n, "labels"?: [...], "add": [[...]], "mul": [[...]]}
Pair map:    {"order": n, "lambda": [[...]], "rho": [[...]]}
             (rho[a][b] is the second component of r(a, b))
Product:     {"kind": ..., "S": <semi-brace doc|path>, "T": ...,
              "sigma"/"alpha"/"beta"/"delta": {"family": [[...], ...]},
              "cocycle": {"table": [[...]]},
              "semilattice": {"table": [[...]],
                              "components": [<semi-brace doc>, ...],
                              "morphisms": [{"from": a, "to": b,
                                             "map": [...]}, ...]}}

JSON always carries indices; inverse arrays are never stored and always
re-derived.  Dicts are emitted with a fixed key order so identical inputs
serialize byte-identically.
"""

from __future__ import annotations

import json
import os

from .brace import InverseSemiBrace, PairMap, validate_semibrace
from .core import CarrierMap, FiniteSemigroup, InverseSemigroup, MagmaTable, \
    derive_inverses, validate_semigroup
from .constructions import ActionFamily, Cocycle
from .errors import MalformedTable
from .solutions import SolutionReport


def magma_from_doc(doc: dict, table_key: str = "table") -> MagmaTable:
    if not isinstance(doc, dict) or table_key not in doc:
        raise MalformedTable(f"document lacks a {table_key!r} field")
    table = doc[table_key]
    labels = doc.get("labels")
    t = MagmaTable.from_rows(table, labels=labels)
    if "order" in doc and doc["order"] != t.order:
        raise MalformedTable(
            f"declared order {doc['order']} != table order {t.order}")
    return t


def semigroup_from_doc(doc: dict) -> FiniteSemigroup:
    return validate_semigroup(magma_from_doc(doc))


def inverse_semigroup_from_doc(doc: dict) -> InverseSemigroup:
    return derive_inverses(semigroup_from_doc(doc))


def semigroup_to_doc(s) -> dict:
    doc = {"order": s.order}
    if s.labels is not None:
        doc["labels"] = list(s.labels)
    table = s.sgp.tab.table if isinstance(s, InverseSemigroup) else s.tab.table
    doc["table"] = [list(r) for r in table]
    return doc


def semibrace_from_doc(doc: dict) -> InverseSemiBrace:
    if not isinstance(doc, dict) or "add" not in doc or "mul" not in doc:
        raise MalformedTable("semi-brace document needs 'add' and 'mul' tables")
    add = magma_from_doc(doc, "add")
    mul = magma_from_doc(doc, "mul")
    return validate_semibrace(add, mul)


def semibrace_to_doc(s: InverseSemiBrace) -> dict:
    doc = {"order": s.order}
    if s.labels is not None:
        doc["labels"] = list(s.labels)
    doc["add"] = [list(r) for r in s.add.tab.table]
    doc["mul"] = [list(r) for r in s.mul.sgp.tab.table]
    return doc


def pairmap_from_doc(doc: dict) -> PairMap:
    if not isinstance(doc, dict) or "lambda" not in doc or "rho" not in doc:
        raise MalformedTable("pair-map document needs 'lambda' and 'rho' tables")
    r = PairMap.from_rows(doc["lambda"], doc["rho"])
    if "order" in doc and doc["order"] != r.order:
        raise MalformedTable("declared order disagrees with the tables")
    return r


def pairmap_to_doc(r: PairMap) -> dict:
    return {
        "order": r.order,
        "lambda": [list(row) for row in r.lam],
        "rho": [list(row) for row in r.rho],
    }


def action_family_from_doc(doc: dict, target_order: int) -> ActionFamily:
    if not isinstance(doc, dict) or "family" not in doc:
        raise MalformedTable("action document needs a 'family' list of maps")
    return ActionFamily.from_tables(doc["family"], target_order)


def cocycle_from_doc(doc: dict, t_order: int) -> Cocycle:
    if not isinstance(doc, dict) or "table" not in doc:
        raise MalformedTable("cocycle document needs a 'table'")
    return Cocycle.from_rows(doc["table"], t_order)


def solution_report_to_doc(report: SolutionReport) -> dict:
    return {
        "is_braid_solution": report.is_braid_solution,
        "is_qybe": report.is_qybe,
        "is_pentagon": report.is_pentagon,
        "is_idempotent": report.is_idempotent,
        "is_cubic": report.is_cubic,
        "is_involutive": report.is_involutive,
        "left_nondegenerate": report.left_nondegenerate,
        "right_nondegenerate": report.right_nondegenerate,
        "bijective": report.bijective,
        "index": report.index,
        "period": report.period,
        "witnesses": {k: list(v) for k, v in sorted(report.witnesses.items())},
    }


def _resolve(node, base_dir: str):
    """A nested document may be inline or a path relative to the spec file."""
    if isinstance(node, str):
        path = node if os.path.isabs(node) else os.path.join(base_dir, node)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    return node


def load_product_spec(doc: dict, base_dir: str = "."):
    """Parse a product-spec document into its components.

    Returns (kind, payload) where payload holds the loaded pieces keyed by
    role; validation of the mathematics is left to the builders.
    """
    if not isinstance(doc, dict) or "kind" not in doc:
        raise MalformedTable("product spec needs a 'kind'")
    kind = doc["kind"]
    payload: dict = {}
    if kind == "strong_semilattice":
        sub = doc.get("semilattice")
        if not isinstance(sub, dict):
            raise MalformedTable("strong_semilattice spec needs 'semilattice'")
        payload["index"] = validate_semigroup(
            MagmaTable.from_rows(sub["table"]))
        payload["components"] = [
            semibrace_from_doc(_resolve(c, base_dir)) for c in sub["components"]]
        morphisms = {}
        for item in sub.get("morphisms", []):
            a, b = item["from"], item["to"]
            morphisms[(a, b)] = CarrierMap.from_images(
                item["map"], payload["components"][b].order)
        payload["morphisms"] = morphisms
        return kind, payload
    if kind not in ("matched", "semidirect", "double_semidirect", "asymmetric"):
        raise MalformedTable(f"unknown product kind {doc['kind']!r}")
    s = semibrace_from_doc(_resolve(doc.get("S"), base_dir))
    t = semibrace_from_doc(_resolve(doc.get("T"), base_dir))
    payload["S"], payload["T"] = s, t
    if kind == "matched":
        payload["alpha"] = action_family_from_doc(doc["alpha"], s.order) \
            if "alpha" in doc else ActionFamily.trivial(t.order, s.order)
        payload["beta"] = action_family_from_doc(doc["beta"], t.order) \
            if "beta" in doc else ActionFamily.trivial(s.order, t.order)
        return kind, payload
    payload["sigma"] = action_family_from_doc(doc["sigma"], s.order) \
        if "sigma" in doc else ActionFamily.trivial(t.order, s.order)
    if kind in ("double_semidirect", "asymmetric"):
        payload["delta"] = action_family_from_doc(doc["delta"], t.order) \
            if "delta" in doc else ActionFamily.trivial(s.order, t.order)
    if kind == "asymmetric":
        if "cocycle" not in doc:
            raise MalformedTable("asymmetric spec needs a 'cocycle'")
        payload["cocycle"] = cocycle_from_doc(doc["cocycle"], t.order)
    return kind, payload


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def dumps_line(doc) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"
