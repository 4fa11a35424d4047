"""Command-line front end.

Exit codes: 0 all checked properties hold; 1 at least one property fails
(witnesses in the report); 2 malformed input; 3 size cap or timeout.

Human-readable reports print element labels when the input carries them;
JSON output (--json) always carries indices and uses a fixed key order, so
identical invocations produce byte-identical output.  Diagnostics go to
standard error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serde
from .brace import classify_semibrace, lambda_rho, check_right_axiom, \
    check_lambda_endomorphism, check_lambda_product_identity
from .core import classify_multiplicative, classify_additive, derive_inverses, \
    validate_semigroup
from .constructions import (
    build_asymmetric,
    build_double_semidirect,
    build_matched_product,
    build_semidirect,
    build_strong_semilattice,
    check_asymmetric_solution_conditions,
    double_semidirect_solution,
    validate_matched_system,
)
from .errors import (
    AlgebraError,
    InternalInvariantError,
    MalformedTable,
    DimensionMismatch,
    NotLeftSemibrace,
    OrderExceedsCap,
    SearchTimeout,
)
from .search import SearchConfig, enumerate_additions, \
    enumerate_inverse_semigroups, search_cocycles, structure_id, survey
from .solutions import check_braid, check_equation, solution_report

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_MALFORMED = 2
EXIT_CAP = 3


class _Failure(Exception):
    def __init__(self, code: int, report: dict, message: str):
        super().__init__(message)
        self.code = code
        self.report = report


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _Failure(EXIT_MALFORMED, {"error": str(exc)},
                       f"cannot read {path}: {exc}") from exc


def _labels_of(doc):
    labels = doc.get("labels") if isinstance(doc, dict) else None
    if labels is None:
        return lambda i: str(i)
    return lambda i: labels[i]


def _witness_str(witness, label):
    if witness is None:
        return "-"
    return "(" + ", ".join(label(i) for i in witness) + ")"


def _emit(report: dict, human_lines, args) -> None:
    if args.json:
        sys.stdout.write(serde.dumps(report))
    else:
        for line in human_lines:
            print(line)


def _algebra_failure(exc: AlgebraError, context: str) -> _Failure:
    if isinstance(exc, (MalformedTable, DimensionMismatch)):
        code = EXIT_MALFORMED
    elif isinstance(exc, (OrderExceedsCap, SearchTimeout)):
        code = EXIT_CAP
    else:
        code = EXIT_PROPERTY_FAILS
    report = {
        "error": type(exc).__name__,
        "message": str(exc),
        "context": context,
    }
    if exc.witness is not None:
        report["witness"] = list(exc.witness)
    return _Failure(code, report, str(exc))


def _flags_doc(record) -> dict:
    return {
        "flags": dict(record.flags),
        "witnesses": {k: list(v) for k, v in sorted(record.witnesses.items())},
    }


def cmd_check_semigroup(args) -> int:
    doc = _load_json(args.input)
    try:
        sgp = serde.semigroup_from_doc(doc)
    except AlgebraError as exc:
        raise _algebra_failure(exc, "check-semigroup")
    report = {"command": "check-semigroup", "order": sgp.order,
              "associative": True}
    _emit(report, [f"order {sgp.order}: associative"], args)
    return EXIT_OK


def cmd_check_inverse(args) -> int:
    doc = _load_json(args.input)
    label = _labels_of(doc)
    try:
        inv_sgp = serde.inverse_semigroup_from_doc(doc)
    except AlgebraError as exc:
        raise _algebra_failure(exc, "check-inverse")
    record = classify_multiplicative(inv_sgp)
    report = {
        "command": "check-inverse",
        "order": inv_sgp.order,
        "inverse_semigroup": True,
        "inverses": list(inv_sgp.inv),
        "classification": _flags_doc(record),
    }
    lines = [f"order {inv_sgp.order}: inverse semigroup",
             "inverses: [" + ", ".join(label(i) for i in inv_sgp.inv) + "]"]
    for name, value in record.flags.items():
        suffix = ""
        if not value and args.witnesses:
            suffix = f"  witness {_witness_str(record.witness(name), label)}"
        lines.append(f"{name}: {value}{suffix}")
    _emit(report, lines, args)
    return EXIT_OK


def cmd_check_semibrace(args) -> int:
    doc = _load_json(args.input)
    label = _labels_of(doc)
    try:
        brace = serde.semibrace_from_doc(doc)
    except AlgebraError as exc:
        raise _algebra_failure(exc, "check-semibrace")
    cls = classify_semibrace(brace)
    right = check_right_axiom(brace)
    lam_endo = check_lambda_endomorphism(brace)
    lam_prod = check_lambda_product_identity(brace)
    additive = classify_additive(brace.add)
    report = {
        "command": "check-semibrace",
        "order": brace.order,
        "left_inverse_semibrace": True,
        "classification": {
            "is_left_semibrace": cls.is_left_semibrace,
            "is_skew_brace": cls.is_skew_brace,
            "is_generalized": cls.is_generalized,
            "is_two_sided": cls.is_two_sided,
            "add_left_cancellative": cls.add_left_cancellative,
            "identity": cls.identity,
        },
        "additive": _flags_doc(additive),
        "middle_units": list(additive.middle_units),
        "right_axiom": right.holds,
        "lambda_endomorphism": lam_endo.holds,
        "lambda_product_identity": lam_prod.holds,
    }
    if not right.holds:
        report["right_axiom_witness"] = list(right.witness)
    lines = [f"order {brace.order}: left inverse semi-brace"]
    for key, value in report["classification"].items():
        shown = label(value) if key == "identity" and value is not None else value
        lines.append(f"{key}: {shown}")
    lines.append(f"right_axiom: {right.holds}"
                 + (f"  witness {_witness_str(right.witness, label)}"
                    if not right.holds and args.witnesses else ""))
    lines.append("middle_units: ["
                 + ", ".join(label(i) for i in additive.middle_units) + "]")
    _emit(report, lines, args)
    return EXIT_OK


def _load_pairmap(args):
    if args.from_semibrace:
        doc = _load_json(args.from_semibrace)
        label = _labels_of(doc)
        try:
            brace = serde.semibrace_from_doc(doc)
        except AlgebraError as exc:
            raise _algebra_failure(exc, "solution")
        return lambda_rho(brace), label
    doc = _load_json(args.from_pairmap)
    label = _labels_of(doc)
    try:
        return serde.pairmap_from_doc(doc), label
    except AlgebraError as exc:
        raise _algebra_failure(exc, "solution")


def cmd_solution(args) -> int:
    r, label = _load_pairmap(args)
    report_obj = solution_report(r)
    checked = args.which
    if checked == "braid":
        verdict = check_braid(r)
    else:
        verdict = check_equation(r, checked)
    report = {"command": "solution", "order": r.order, "checked": checked,
              "holds": verdict.holds}
    if verdict.witness is not None:
        report["witness"] = list(verdict.witness)
    report["report"] = serde.solution_report_to_doc(report_obj)
    lines = [f"{checked}: {verdict.holds}"
             + (f"  witness {_witness_str(verdict.witness, label)}"
                if verdict.witness is not None else "")]
    for key, value in serde.solution_report_to_doc(report_obj).items():
        if key == "witnesses":
            if args.witnesses:
                for name, wit in value.items():
                    lines.append(f"witness[{name}]: "
                                 + _witness_str(tuple(wit), label))
        else:
            lines.append(f"{key}: {value}")
    _emit(report, lines, args)
    return EXIT_OK if verdict.holds else EXIT_PROPERTY_FAILS


def _build_product(kind, payload, cap):
    if kind == "strong_semilattice":
        out = build_strong_semilattice(payload["index"], payload["components"],
                                       payload["morphisms"])
        return out.brace, out.solution, {}
    s, t = payload["S"], payload["T"]
    if kind == "matched":
        alpha, beta = payload["alpha"], payload["beta"]
        report = validate_matched_system(s, t, alpha, beta)
        brace = build_matched_product(s, t, alpha, beta, cap=cap)
        return brace, lambda_rho(brace), {
            "matched_system": {c.name: c.holds for c in report.checks.values()}}
    if kind == "semidirect":
        built = build_semidirect(s, t, payload["sigma"], cap=cap)
        return built.brace, built.solution, {}
    if kind == "double_semidirect":
        built = build_double_semidirect(s, t, payload["sigma"],
                                        payload["delta"], cap=cap)
        twisted = double_semidirect_solution(built, s, t, payload["sigma"],
                                             payload["delta"])
        verdicts = {
            "conditions_applicable": twisted.conditions_applicable,
            "conditions": {k: c.holds for k, c in twisted.conditions.items()},
            "braid": twisted.braid.holds,
        }
        if twisted.braid.witness is not None:
            verdicts["braid_witness"] = list(twisted.braid.witness)
        return built.brace, twisted.solution, verdicts
    if kind == "asymmetric":
        built = build_asymmetric(s, t, payload["sigma"], payload["delta"],
                                 payload["cocycle"], cap=cap)
        verdicts = {}
        try:
            rep = check_asymmetric_solution_conditions(
                s, t, payload["delta"], payload["cocycle"], payload["sigma"])
            verdicts["conditions"] = {k: c.holds for k, c in rep.conditions.items()}
        except NotLeftSemibrace:
            verdicts["conditions"] = None
        return built.brace, built.solution, verdicts
    raise _Failure(EXIT_MALFORMED, {"error": f"unknown kind {kind!r}"},
                   f"unknown kind {kind!r}")


def cmd_build(args) -> int:
    import os

    doc = _load_json(args.spec)
    base = os.path.dirname(args.spec) if args.spec != "-" else "."
    try:
        kind, payload = serde.load_product_spec(doc, base)
    except AlgebraError as exc:
        raise _algebra_failure(exc, "build")
    if args.kind and args.kind != kind:
        raise _Failure(EXIT_MALFORMED,
                       {"error": f"--kind {args.kind} != spec kind {kind}"},
                       "kind mismatch")
    try:
        brace, solution, verdicts = _build_product(kind, payload, args.cap)
    except AlgebraError as exc:
        raise _algebra_failure(exc, f"build {kind}")
    rep = solution_report(solution)
    out = serde.semibrace_to_doc(brace)
    out["kind"] = kind
    out["pairmap"] = serde.pairmap_to_doc(solution)
    out["verdicts"] = dict(verdicts)
    out["verdicts"]["solution_report"] = serde.solution_report_to_doc(rep)
    text = serde.dumps(out)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        if not args.json:
            print(f"built {kind} of order {brace.order} -> {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _search_config(args, default_cap) -> SearchConfig:
    prefix = ()
    if getattr(args, "start_prefix", None):
        try:
            prefix = tuple(int(x) for x in args.start_prefix.split(","))
        except ValueError as exc:
            raise _Failure(EXIT_MALFORMED, {"error": "bad --start-prefix"},
                           str(exc)) from exc
    return SearchConfig(
        max_order=args.cap if args.cap is not None else default_cap,
        timeout=args.timeout,
        emit=getattr(args, "emit", "all"),
        canonical_only=getattr(args, "canonical_only", False),
        start_prefix=prefix,
    )


def cmd_enumerate(args) -> int:
    complete = True
    count = 0
    try:
        if args.kind == "inverse-semigroups":
            if args.order is None:
                raise _Failure(EXIT_MALFORMED, {"error": "--order required"},
                               "--order required for inverse-semigroups")
            for sgp in enumerate_inverse_semigroups(args.order):
                count += 1
                sys.stdout.write(serde.dumps_line({
                    "id": "mul=" + "".join(str(v) for row in sgp.sgp.tab.table
                                           for v in row),
                    "structure": serde.semigroup_to_doc(sgp),
                }))
        elif args.kind == "additions":
            if not args.over:
                raise _Failure(EXIT_MALFORMED, {"error": "--over required"},
                               "--over required for additions")
            m = serde.inverse_semigroup_from_doc(_load_json(args.over))
            cfg = _search_config(args, m.order)
            for brace, report in enumerate_additions(m, cfg):
                count += 1
                sys.stdout.write(serde.dumps_line({
                    "id": structure_id(brace),
                    "structure": serde.semibrace_to_doc(brace),
                    "report": serde.solution_report_to_doc(report),
                }))
        else:
            raise _Failure(EXIT_MALFORMED,
                           {"error": f"unknown enumerate kind {args.kind!r}"},
                           "unknown kind")
    except SearchTimeout:
        complete = False
        sys.stdout.write(serde.dumps_line(
            {"aggregate": {"count": count, "complete": False,
                           "reason": "timeout"}}))
        print(f"timeout after {count} results", file=sys.stderr)
        return EXIT_CAP
    except AlgebraError as exc:
        raise _algebra_failure(exc, "enumerate")
    sys.stdout.write(serde.dumps_line(
        {"aggregate": {"count": count, "complete": complete}}))
    return EXIT_OK


def cmd_search_cocycles(args) -> int:
    import os

    doc = _load_json(args.spec)
    base = os.path.dirname(args.spec) if args.spec != "-" else "."
    try:
        s = serde.semibrace_from_doc(serde._resolve(doc.get("S"), base))
        t = serde.semibrace_from_doc(serde._resolve(doc.get("T"), base))
        delta = serde.action_family_from_doc(doc["delta"], t.order) \
            if "delta" in doc else None
        if delta is None:
            raise MalformedTable("search-cocycles spec needs 'delta'")
        cfg = SearchConfig(max_order=max(s.order, t.order), timeout=args.timeout)
        results = search_cocycles(s, t, delta, cfg)
    except SearchTimeout:
        print("cocycle search timed out", file=sys.stderr)
        return EXIT_CAP
    except AlgebraError as exc:
        raise _algebra_failure(exc, "search-cocycles")
    except KeyError as exc:
        raise _Failure(EXIT_MALFORMED, {"error": f"missing field {exc}"},
                       f"missing field {exc}")
    for c in results:
        sys.stdout.write(serde.dumps_line(
            {"cocycle": {"table": [list(r) for r in c.table]}}))
    sys.stdout.write(serde.dumps_line(
        {"aggregate": {"count": len(results), "complete": True}}))
    return EXIT_OK


def cmd_survey(args) -> int:
    rows = []
    source = sys.stdin if args.input == "-" else open(args.input, "r",
                                                      encoding="utf-8")
    try:
        for line in source:
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            if "aggregate" in obj:
                continue
            if "report" not in obj:
                continue
            rows.append(obj)
    except json.JSONDecodeError as exc:
        raise _Failure(EXIT_MALFORMED, {"error": str(exc)}, str(exc))
    finally:
        if source is not sys.stdin:
            source.close()

    class _Shim:
        def __init__(self, doc):
            self.__dict__.update(doc)

    pairs = [(obj.get("id", "?"), _Shim(obj["report"])) for obj in rows]
    survey_rows, aggregate = survey(pairs)
    report = {
        "command": "survey",
        "rows": [
            {"id": r.structure_id, "is_solution": r.is_solution,
             "is_idempotent": r.is_idempotent, "is_cubic": r.is_cubic,
             "is_involutive": r.is_involutive,
             "degeneracy": r.degeneracy_class,
             "index": r.index, "period": r.period}
            for r in survey_rows
        ],
        "aggregate": aggregate,
    }
    lines = [f"{r.structure_id}  solution={r.is_solution} "
             f"idempotent={r.is_idempotent} cubic={r.is_cubic} "
             f"degeneracy={r.degeneracy_class} index={r.index} period={r.period}"
             for r in survey_rows]
    lines.append(f"total={aggregate['total']} solutions={aggregate['solutions']}")
    _emit(report, lines, args)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semibraces",
        description="Validate finite inverse semi-braces, build their products, "
                    "and check the Yang-Baxter properties of their maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit one JSON report on stdout")
        p.add_argument("--witnesses", action="store_true",
                       help="include counterexample witnesses in human output")

    p = sub.add_parser("check-semigroup", help="verify associativity")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_check_semigroup)

    p = sub.add_parser("check-inverse",
                       help="verify inverse-semigroup structure and classify")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_check_inverse)

    p = sub.add_parser("check-semibrace",
                       help="verify the left inverse semi-brace axioms")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_check_semibrace)

    p = sub.add_parser("solution",
                       help="check braid/qybe/pentagon and profile the map")
    p.add_argument("--from-semibrace", metavar="FILE")
    p.add_argument("--from-pairmap", metavar="FILE")
    p.add_argument("--which", choices=["braid", "qybe", "pentagon"],
                   default="braid")
    common(p)
    p.set_defaults(func=cmd_solution)

    p = sub.add_parser("build", help="build a product construction")
    p.add_argument("--kind", choices=["matched", "semidirect",
                                      "double_semidirect", "asymmetric",
                                      "strong_semilattice"])
    p.add_argument("--spec", required=True, metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--cap", type=int, default=64,
                   help="maximum product order (default 64)")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("enumerate",
                       help="stream structures as JSON lines with reports")
    p.add_argument("--kind", choices=["inverse-semigroups", "additions"],
                   required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--over", metavar="FILE",
                   help="inverse-semigroup document for addition search")
    p.add_argument("--emit", choices=["all", "solutions_only",
                                      "counterexamples_only"], default="all")
    p.add_argument("--timeout", type=float)
    p.add_argument("--cap", type=int)
    p.add_argument("--canonical-only", action="store_true")
    p.add_argument("--start-prefix", metavar="CSV",
                   help="resume from a partial row-major table")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search-cocycles",
                       help="enumerate cocycle tables for a delta action")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.add_argument("--timeout", type=float)
    common(p)
    p.set_defaults(func=cmd_search_cocycles)

    p = sub.add_parser("survey", help="aggregate a JSON-lines result stream")
    p.add_argument("input", help="JSONL file or - for stdin")
    common(p)
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except _Failure as exc:
        if args.json:
            sys.stdout.write(serde.dumps(exc.report))
        print(str(exc), file=sys.stderr)
        return exc.code
    except InternalInvariantError:
        raise


if __name__ == "__main__":
    sys.exit(main())
