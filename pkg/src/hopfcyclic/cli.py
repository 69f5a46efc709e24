"""Command-line surface.

Verbs: check, homology, excision, relative, group-example, special. Tables
go to standard output tab-separated (degree, dim, verdict); --json emits the
full report document; --dump writes serialized complexes. Exit codes: 0 when
every verdict passes, 1 when a check fails, 2 on input or usage errors.
"""

import argparse
import json
import sys

from .complexes import assemble, homology
from .equivariant import (
    ComoduleAlgebra,
    coefficient_from_json,
    make_coefficient,
)
from .errors import AuditFailed, HopfCyclicError, ParseError
from .fields import field_by_name
from .hopf import audit, desc_from_json
from .serialize import (
    complex_dump,
    dumps,
    module_coalgebra_from_json,
    ses_from_json,
)
from .theorems import relative_hc, special_checks, verify_excision

PASS = "PASS"


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _override_field(doc, field_name):
    if field_name is None:
        return doc
    if isinstance(doc, dict):
        doc = dict(doc)
        if "field" in doc:
            doc["field"] = field_name
        for k, v in doc.items():
            if isinstance(v, dict):
                doc[k] = _override_field(v, field_name)
    return doc


def parse_input(path, field=None):
    """Parse and fully audit a description file; audit failures abort."""
    doc = _override_field(_load_json(path), field)
    if "mode" in doc and "C" in doc:
        return ses_from_json(doc)
    if "ideal" in doc and ("A" in doc or "B" in doc):
        return _algebra_ses_from_json(doc)
    if "action" in doc and "base" in doc:
        return module_coalgebra_from_json(doc)
    if "basis" in doc:
        return desc_from_json(doc)
    raise ParseError(f"{path}: unrecognized input document")


def _algebra_ses_from_json(doc):
    """Algebra-side SES input.

    Either {"B": <desc>, "ideal": <matrix>} (B coacting on itself) or
    {"A": {"base": <algebra desc>, "over": <desc>, "coaction": <matrix>},
    "ideal": <matrix>}. The ideal generators are closed under two-sided
    multiplication.
    """
    from .hopf import matrix_from_json
    from .theorems import AlgebraSES

    if "A" in doc:
        a_doc = doc["A"]
        base = desc_from_json(a_doc["base"])
        over = desc_from_json(a_doc["over"])
        coaction = matrix_from_json(base.field, a_doc["coaction"])
        A = ComoduleAlgebra(base, over, coaction)
    else:
        B = desc_from_json(doc["B"])
        A = ComoduleAlgebra(B, B, B.comult)
    gens = matrix_from_json(A.base.field, doc["ideal"])
    return AlgebraSES(A, gens)


def _coefficient(arg, B):
    if arg is None:
        return make_coefficient("eps", B)
    if arg in ("eps", "unit", "r_ad", "ad_r"):
        return make_coefficient(arg, B)
    return coefficient_from_json(B, _load_json(arg))


def _emit(args, table_rows, report_doc, dump_doc=None):
    for row in table_rows:
        print("\t".join(str(x) for x in row))
    if args.json:
        print(dumps(report_doc))
    if getattr(args, "dump", None) and dump_doc is not None:
        with open(args.dump, "w") as fh:
            fh.write(dumps(dump_doc))


def _report_exit(report):
    ok = all(h.verdict == PASS for h in report.hypotheses) and all(
        d.verdict == PASS for d in report.degrees)
    return 0 if ok else 1


def cmd_check(args):
    doc = _override_field(_load_json(args.input), args.field)
    try:
        desc = desc_from_json(doc)
        report = audit(desc, args.level or desc.level)
    except AuditFailed as exc:
        report = exc.report
    rows = [(c.name, "pass" if c.passed else "FAIL",
             "" if c.witness is None else "|".join(map(str, c.witness)))
            for c in report.checks]
    _emit(args, rows, report.to_json())
    return 0 if report.ok else 1


def cmd_homology(args):
    obj = parse_input(args.input, args.field)
    B = obj.over
    X = _coefficient(args.coefficient, B)
    side = args.side
    if side == "algebra":
        main = ComoduleAlgebra(obj.base, B, obj.base.comult) if not isinstance(
            obj, ComoduleAlgebra) else obj
    else:
        main = obj
    cm = assemble(side, main, X, args.max_degree + 1)
    dims = homology(cm, args.theory, args.max_degree)
    rows = [(n, dims[n], "-") for n in range(args.max_degree + 1)]
    doc = {"theory": args.theory, "side": side, "dims": dims}
    dump = None
    if args.dump:
        from .complexes import cyclic_total_complex

        dump = complex_dump({"cyclic_total": cyclic_total_complex(cm, args.max_degree + 1)})
    _emit(args, rows, doc, dump)
    return 0


def cmd_excision(args):
    ses = parse_input(args.input, args.field)
    B = ses.C.over if args.side == "coalgebra" else ses.A.over
    X = _coefficient(args.coefficient, B)
    report = verify_excision(ses, X, args.side, args.max_degree)
    rows = [(h.name, h.verdict, h.window or "") for h in report.hypotheses]
    rows += [(d.n, json.dumps(d.dims, sort_keys=True), d.verdict) for d in report.degrees]
    _emit(args, rows, report.to_json())
    return _report_exit(report)


def cmd_relative(args):
    ses_doc = _override_field(_load_json(args.input), args.field)
    mc = module_coalgebra_from_json(ses_doc["C"])
    from .hopf import matrix_from_json

    K = matrix_from_json(mc.base.field, ses_doc["K"])
    X = _coefficient(args.coefficient, mc.over)
    dims, report = relative_hc(mc, K, X, args.mode, args.max_degree)
    rows = [(n, dims[n], report.degrees[n].verdict) for n in range(args.max_degree + 1)]
    _emit(args, rows, report.to_json())
    return _report_exit(report)


def cmd_group_example(args):
    doc = _load_json(args.group)
    table = doc["table"] if isinstance(doc, dict) else doc
    subgroup = [int(x) for x in args.normal.split(",")]
    field = field_by_name(args.field or "Q")
    report = special_checks(
        "group_example", {"table": table, "subgroup": subgroup, "field": field},
        args.max_degree)
    rows = [(h.name, h.verdict, "") for h in report.hypotheses]
    rows += [(d.n, json.dumps(d.dims, sort_keys=True), d.verdict) for d in report.degrees]
    _emit(args, rows, report.to_json())
    return _report_exit(report)


def cmd_special(args):
    kind = args.kind.replace("-", "_")
    params_doc = _override_field(_load_json(args.params), args.field)
    field = field_by_name(args.field or params_doc.get("field", "Q"))
    if kind == "additivity":
        C1 = module_coalgebra_from_json(params_doc["C1"])
        C2 = module_coalgebra_from_json(params_doc["C2"])
        X = _coefficient(params_doc.get("coefficient"), C1.over) if isinstance(
            params_doc.get("coefficient"), (str, type(None))) else coefficient_from_json(
                C1.over, params_doc["coefficient"])
        params = {"C1": C1, "C2": C2, "X": X}
    elif kind in ("commutative_hopf", "cocommutative_hopf"):
        B = desc_from_json(params_doc["B"])
        from .hopf import matrix_from_json

        ideal = matrix_from_json(B.field, params_doc["ideal"])
        X = _coefficient(params_doc.get("coefficient"), B)
        key = "J" if kind == "commutative_hopf" else "K"
        params = {"B": B, key: ideal, "X": X}
    elif kind == "group_example":
        params = {"table": params_doc["table"],
                  "subgroup": params_doc["subgroup"],
                  "field": field}
    else:
        raise ParseError(f"unknown special kind {args.kind!r}")
    report = special_checks(kind, params, args.max_degree)
    rows = [(h.name, h.verdict, "") for h in report.hypotheses]
    rows += [(d.n, json.dumps(d.dims, sort_keys=True), d.verdict) for d in report.degrees]
    _emit(args, rows, report.to_json())
    return _report_exit(report)


def build_parser():
    p = argparse.ArgumentParser(
        prog="hopfcyclic",
        description="Exact-arithmetic equivariant cyclic homology engine")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, dump=False):
        sp.add_argument("--field", help='field override: "Q" or "Fp:<p>"')
        sp.add_argument("--max-degree", type=int, default=4)
        sp.add_argument("--json", action="store_true", help="emit the JSON report")
        if dump:
            sp.add_argument("--dump", help="write serialized complexes to this path")

    sp = sub.add_parser("check", help="audit a structure-constant description")
    sp.add_argument("input")
    sp.add_argument("--level", choices=["algebra", "coalgebra", "bialgebra", "hopf"])
    common(sp)
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("homology", help="homology dims of an assembled triple")
    sp.add_argument("input", help="module-coalgebra JSON file")
    sp.add_argument("--theory", choices=["hochschild", "cyclic", "bar"], default="cyclic")
    sp.add_argument("--side", choices=["coalgebra", "algebra"], default="coalgebra")
    sp.add_argument("--coefficient", help="eps|unit|r_ad|ad_r or a JSON file")
    common(sp, dump=True)
    sp.set_defaults(fn=cmd_homology)

    sp = sub.add_parser("excision", help="verify an excision theorem on an SES")
    sp.add_argument("input", help="SES JSON file")
    sp.add_argument("--side", choices=["coalgebra", "algebra"], default="coalgebra")
    sp.add_argument("--coefficient", help="eps|unit|r_ad|ad_r or a JSON file")
    common(sp)
    sp.set_defaults(fn=cmd_excision)

    sp = sub.add_parser("relative", help="relative cyclic homology of a pair")
    sp.add_argument("input", help="SES JSON file")
    sp.add_argument("--mode", choices=["cokernel", "quotient"], default="quotient")
    sp.add_argument("--coefficient", help="eps|unit|r_ad|ad_r or a JSON file")
    common(sp)
    sp.set_defaults(fn=cmd_relative)

    sp = sub.add_parser("group-example", help="discrete-group example vs the oracle")
    sp.add_argument("--group", required=True, help="JSON file with a group table")
    sp.add_argument("--normal", required=True, help="comma-separated subgroup indices")
    common(sp)
    sp.set_defaults(fn=cmd_group_example)

    sp = sub.add_parser("special", help="additivity and Hopf-reduction checks")
    sp.add_argument("--kind", required=True,
                    choices=["additivity", "commutative-hopf", "cocommutative-hopf",
                             "group-example"])
    sp.add_argument("--params", required=True, help="JSON file with the check inputs")
    common(sp)
    sp.set_defaults(fn=cmd_special)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except AuditFailed as exc:
        print("audit failed:", file=sys.stderr)
        for c in exc.report.failures():
            print(f"  {c.name} at {c.witness}", file=sys.stderr)
        return 2
    except HopfCyclicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
