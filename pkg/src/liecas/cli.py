"""Command-line front end.

Subcommands:

    validate     check a bracket table: Jacobi, Levi closure, radical ideal
    count        number of functionally independent invariants (bb or bb1)
    mc           structure equations d w_k of the dual one-forms
    verify-copy  test a dressing against every copy condition exactly
    casimirs     char-poly coefficients of the dressed rotation block
    contract     weighted contraction, with or without a dressing
    catalog      list the built-in families, or dump one as JSON

Algebras come from the built-in catalog (--family, plus --N or --alpha
where the family is parametric) or from a JSON file (--algebra) in the
schema of algebra_to_json; dressings travel with the family or come from
--spec in the schema of emit_spec.  User-supplied algebras are validated
on load, so every subcommand rejects a non-Lie bracket table up front.

Exit status: 0 on success; 1 when the requested verification fails
(validate finds violations, verify-copy does not pass, a dressing fails
its check before casimirs or contract run); 2 on malformed input,
including bracket tables that violate Jacobi and contractions whose
limit does not exist.  All documents, error documents included, go to
stdout; with --format json they are machine-readable, errors as
{"error": <kind>, ...}.

The output format defaults to text, or to $LIECAS_FORMAT when that is
set.  Randomized rank probes (count) take --seed and --trials; one seed
always reproduces the same bytes.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .casimir_gen import casimir_set
from .catalog import FAMILY_NAMES, FamilyId, build
from .contraction import ContractionWeights, contract_algebra, contract_copy
from .enveloping import emit_pbw
from .errors import (DegreeOverflowError, LimitDoesNotExistError,
                     MalformedInputError, PreconditionError)
from .exterior import mc_differential
from .invariants import invariant_count
from .lie_core import algebra_from_json, algebra_to_json
from .naming import latex_name
from .virtual_copy import emit_spec, parse_spec, verify

FORMATS = ("json", "text", "latex")
FORMAT_ENV = "LIECAS_FORMAT"

# family -> (parameter, smallest value, carries a dressing, one-line summary)
_FAMILY_INFO = {
    "so": ("N", 2, False, "the rotation block so(N) alone"),
    "su11": (None, None, False,
             "the three-generator split real rank-one algebra"),
    "heisenberg": ("N", 1, False,
                   "N coordinate/momentum pairs over one center"),
    "weyl_quesne": ("n", 1, True, "gl(n) over n boson pairs and a unit"),
    "Ha": ("N", 3, True,
           "so(N) acting on two N-vectors with one central charge"),
    "IHa": ("N", 3, True,
            "Ha extended by a generator mixing the vector pairs and a "
            "second central charge"),
    "QHa": ("N", 3, True,
            "IHa closed off by the three central charges L, A, M"),
    "IHa_L": ("N", 3, True, "IHa with the central extension L alone"),
    "IHa_M": ("N", 3, True, "IHa with the central extension M alone"),
    "IHa_A": ("N", 3, True, "IHa with the central extension A alone"),
    "IHa_AM": ("N", 3, True, "IHa with the central extensions A and M"),
    "IHa_AL": ("N", 3, True, "IHa with the central extensions A and L"),
    "IHa_LM": ("N", 3, True, "IHa with the central extensions L and M"),
    "boson_example": ("alpha", None, True,
                      "rank-one Levi over two oscillator pairs and three "
                      "more directions; dressing at alpha = 1"),
    "boson_example_contracted": (None, None, True,
                                 "the alpha = 0 limit of boson_example, "
                                 "with its contracted dressing"),
}

_FIXED_FAMILIES = {name for name, row in _FAMILY_INFO.items()
                   if row[0] != "N" and row[0] != "n"}


def _fail(message, **payload):
    err = MalformedInputError(message)
    if payload:
        err.payload = payload
    raise err


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("bad rational %r" % (text,))


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as err:
        _fail("cannot read %s: %s" % (path, err))
    except json.JSONDecodeError as err:
        _fail("bad JSON in %s: %s" % (path, err))


def _validated(algebra):
    report = algebra.validate()
    if report.ok:
        return algebra
    triples = report.jacobi_triples(algebra.names)
    _fail("bracket table fails validation: %s"
          % report.describe(algebra.names).splitlines()[0],
          jacobi_violations=[list(t) for t in triples],
          levi_closure=[[algebra.names[i], algebra.names[j],
                         algebra.names[k], str(c)]
                        for i, j, k, c in report.levi_closure],
          radical_ideal=[[algebra.names[i], algebra.names[j],
                          algebra.names[k], str(c)]
                         for i, j, k, c in report.radical_ideal])


def _select(args, want_spec=False):
    """(algebra, spec-or-None) from --family or --algebra [+ --spec]."""
    family = getattr(args, "family", None)
    path = getattr(args, "algebra", None)
    if family and path:
        _fail("give --family or --algebra, not both")
    if family:
        if getattr(args, "spec", None):
            _fail("--spec only combines with --algebra")
        alpha = getattr(args, "alpha", None)
        if alpha is not None and family != "boson_example":
            _fail("--alpha only applies to boson_example")
        if args.N is not None and family in _FIXED_FAMILIES:
            _fail("family %r takes no --N" % (family,))
        params = {} if alpha is None else {"alpha": alpha}
        algebra, spec = build(FamilyId(name=family, N=args.N, params=params))
    elif path:
        doc = _load_json(path)
        embedded = None
        if isinstance(doc, dict) and "algebra" in doc and "names" not in doc:
            # a catalog dump: {"algebra": ..., "spec": ...-or-null}
            embedded = doc.get("spec")
            doc = doc["algebra"]
        algebra = _validated(algebra_from_json(doc))
        spec = None
        spec_path = getattr(args, "spec", None)
        if spec_path:
            spec = parse_spec(algebra, _load_json(spec_path))
        elif embedded is not None:
            spec = parse_spec(algebra, embedded)
    else:
        _fail("need --family or --algebra")
    if want_spec and spec is None:
        _fail("no dressing: give --spec with --algebra, or pick a family "
              "that carries one (see catalog)")
    return algebra, spec


def _parse_weights(raw):
    if raw.lstrip().startswith("{"):
        try:
            table = json.loads(raw)
        except json.JSONDecodeError as err:
            _fail("bad inline weights JSON: %s" % err)
    else:
        table = _load_json(raw)
    if not isinstance(table, dict):
        _fail("weights must be a JSON object mapping names to integers")
    return table


# ---- shared renderers --------------------------------------------------------


def _signed_join(parts):
    """parts: (negative, body) pairs -> "a - b + c"."""
    out = []
    for negative, body in parts:
        if not out:
            out.append("-" + body if negative else body)
        else:
            out.append("- " + body if negative else "+ " + body)
    return " ".join(out)


def _bracket_lines(algebra, latex=False):
    names = algebra.names
    lines = []
    for (i, j) in sorted(algebra.brackets):
        parts = []
        for k, c in sorted(algebra.brackets[(i, j)].items()):
            mag = abs(c)
            if latex:
                v = latex_name(names[k])
                body = v if mag == 1 else "%s %s" % (mag, v)
            else:
                body = names[k] if mag == 1 else "%s*%s" % (mag, names[k])
            parts.append((c < 0, body))
        if latex:
            lines.append("[%s, %s] = %s" % (latex_name(names[i]),
                                            latex_name(names[j]),
                                            _signed_join(parts)))
        else:
            lines.append("[%s, %s] = %s" % (names[i], names[j],
                                            _signed_join(parts)))
    return lines


def _spec_lines(spec, latex=False):
    names = spec.algebra.names
    lines = ["f = %s" % spec.f.render(latex=latex)]
    for i in sorted(spec.P):
        if spec.P[i].is_zero():
            continue
        lines.append("P[%s] = %s" % (names[i], spec.P[i].render(latex=latex)))
    return lines


def _poly_json(poly):
    return [{"exps": list(e), "coeff": str(c)} for e, c in poly.monomials()]


# ---- subcommands -------------------------------------------------------------


def _cmd_validate(args, fmt):
    family = getattr(args, "family", None)
    if family:
        algebra, _spec = _select(args)
        report = algebra.validate()
    else:
        if not args.algebra:
            _fail("need --family or --algebra")
        algebra = algebra_from_json(_load_json(args.algebra))
        report = algebra.validate()
    names = algebra.names
    doc = {
        "ok": report.ok,
        "jacobi_violations": [list(t) for t in report.jacobi_triples(names)],
        "levi_closure": [[names[i], names[j], names[k], str(c)]
                         for i, j, k, c in report.levi_closure],
        "radical_ideal": [[names[i], names[j], names[k], str(c)]
                          for i, j, k, c in report.radical_ideal],
    }
    return (0 if report.ok else 1), doc, report.describe(names), None


def _cmd_count(args, fmt):
    algebra, _spec = _select(args)
    report = invariant_count(algebra, trials=args.trials, seed=args.seed,
                             method=args.method)
    if args.verbose:
        doc = {
            "count": report.count,
            "generic_rank": report.generic_rank,
            "method": report.method,
            "seed": args.seed,
            "witness_point": [str(x) for x in report.witness_point],
        }
        text = ("count: %d\nmethod: %s\ngeneric rank: %d\nwitness: %s"
                % (report.count, report.method, report.generic_rank,
                   " ".join(str(x) for x in report.witness_point)))
    else:
        doc = {"count": report.count}
        text = "count: %d" % report.count
    latex = "N(\\mathfrak{g}) = %d" % report.count
    return 0, doc, text, latex


def _cmd_mc(args, fmt):
    algebra, _spec = _select(args)
    names = algebra.names
    forms = mc_differential(algebra)
    rows = []
    for k in range(algebra.dim):
        rows.append({"k": names[k],
                     "terms": [{"i": names[i], "j": names[j], "c": str(c)}
                               for (i, j), c in forms[k].ordered_terms()]})
    text = "\n".join("d w_{%s} = %s" % (names[k], forms[k].render(names))
                     for k in range(algebra.dim))
    latex = "\n".join(
        "d\\omega_{%s} = %s" % (latex_name(names[k]),
                                forms[k].render(names, latex=True))
        for k in range(algebra.dim))
    return 0, {"forms": rows}, text, latex


def _cmd_verify_copy(args, fmt):
    algebra, spec = _select(args, want_spec=True)
    report = verify(algebra, spec)
    if report.passed:
        return 0, {"passed": True}, "passed", None
    return 1, report.to_json(), report.describe(algebra.names), None


def _cmd_casimirs(args, fmt):
    algebra, spec = _select(args, want_spec=True)
    report = verify(algebra, spec)
    if not report.passed:
        return 1, report.to_json(), report.describe(algebra.names), None
    cs = casimir_set(algebra, spec)
    names = algebra.names
    rows = []
    text_lines = ["N = %d" % cs.N]
    latex_lines = []
    for l in sorted(cs.coefficients):
        poly = cs.coefficients[l]
        rows.append({"l": l, "degree": poly.degree(),
                     "coefficient": _poly_json(poly),
                     "symmetrized": emit_pbw(cs.symmetrized[l])})
        text_lines.append("C_%d = %s" % (2 * l, poly.render(names)))
        text_lines.append("sym C_%d = %s" % (2 * l,
                                             cs.symmetrized[l].render()))
        latex_lines.append("C_{%d} = %s" % (2 * l,
                                            poly.render(names, latex=True)))
        latex_lines.append("\\operatorname{Sym} C_{%d} = %s"
                           % (2 * l, cs.symmetrized[l].render(latex=True)))
    if not rows:
        text_lines.append("(no even coefficients: rotation block below 2)")
    doc = {"N": cs.N, "casimirs": rows}
    return 0, doc, "\n".join(text_lines), "\n".join(latex_lines) or None


def _cmd_contract(args, fmt):
    algebra, spec = _select(args)
    weights = ContractionWeights(algebra, _parse_weights(args.weights))
    names = algebra.names
    shown = weights.describe()
    weight_line = "weights: %s" % (
        ", ".join("%s=%d" % (n, shown[n]) for n in sorted(shown))
        if shown else "all zero")

    if spec is None:
        prime = contract_algebra(algebra, weights)
        doc = {"weights": shown,
               "contracted_algebra": algebra_to_json(prime)}
        text = "\n".join([weight_line, "contracted bracket table:"]
                         + _bracket_lines(prime))
        latex = "\n".join(_bracket_lines(prime, latex=True))
        return 0, doc, text, latex

    report = verify(algebra, spec)
    if not report.passed:
        return 1, report.to_json(), report.describe(names), None
    outcome = contract_copy(algebra, spec, weights)
    if outcome.limit_error is not None:
        err = outcome.limit_error
        err.payload = {"f_top_weight": outcome.M0,
                       "p_top_weights": {names[i]: m
                                         for i, m in outcome.Mi.items()},
                       "copy_compatible": outcome.copy_compatible}
        raise err

    prime = outcome.algebra_prime
    doc = {
        "weights": shown,
        "f_top_weight": outcome.M0,
        "p_top_weights": {names[i]: m for i, m in outcome.Mi.items()},
        "operator_top_weights": {names[i]: n for i, n in outcome.Ni.items()},
        "copy_compatible": outcome.copy_compatible,
        "f_leading": emit_pbw(outcome.f0),
        "p_leading": {names[i]: emit_pbw(p)
                      for i, p in outcome.P0.items() if not p.is_zero()},
        "contracted_algebra": algebra_to_json(prime),
        "operators": {names[i]: emit_pbw(op)
                      for i, op in outcome.operators_prime.items()},
        "contracted_dressing": (emit_spec(outcome.spec_prime)
                                if outcome.spec_prime is not None else None),
        "verify": (outcome.verify_report.to_json()
                   if outcome.verify_report is not None else None),
    }
    lines = [weight_line,
             "top weight of f: %d" % outcome.M0]
    for i in sorted(outcome.Mi):
        lines.append("top weight of P[%s]: %d" % (names[i], outcome.Mi[i]))
    lines.append("copy compatible: %s"
                 % ("yes" if outcome.copy_compatible else "no"))
    lines.append("contracted bracket table:")
    lines.extend(_bracket_lines(prime))
    lines.append("limit operators:")
    for i in sorted(outcome.operators_prime):
        lines.append("%s'' = %s" % (names[i],
                                    outcome.operators_prime[i].render()))
    if outcome.verify_report is not None:
        lines.append("contracted dressing verifies: %s"
                     % ("yes" if outcome.verify_report.passed else "no"))
    code = 0
    if outcome.verify_report is not None and not outcome.verify_report.passed:
        code = 1
    return code, doc, "\n".join(lines), None


def _cmd_catalog(args, fmt):
    if not args.family:
        rows = []
        lines = []
        for name in FAMILY_NAMES:
            param, least, dressed, about = _FAMILY_INFO[name]
            rows.append({"name": name, "parameter": param,
                         "min_parameter": least,
                         "max_parameter": 9 if param in ("N", "n") else None,
                         "carries_dressing": dressed, "about": about})
            if param in ("N", "n"):
                head = "%s in %d..9" % (param, least)
            elif param == "alpha":
                head = "alpha rational, default 1"
            else:
                head = "fixed"
            lines.append("%s: %s; %s; %s"
                         % (name, head,
                            "with dressing" if dressed else "no dressing",
                            about))
        return 0, {"families": rows}, "\n".join(lines), None

    algebra, spec = _select(args)
    doc = {"algebra": algebra_to_json(algebra),
           "spec": emit_spec(spec) if spec is not None else None}
    names = algebra.names
    lines = ["%s  dim %d" % (args.family, algebra.dim),
             "generators: %s" % ", ".join(names),
             "levi: %s" % ", ".join(names[i] for i in sorted(algebra.levi)),
             "radical: %s" % ", ".join(names[i]
                                       for i in sorted(algebra.radical))]
    lines.extend(_bracket_lines(algebra))
    latex_lines = list(_bracket_lines(algebra, latex=True))
    if spec is not None:
        lines.extend(_spec_lines(spec))
        latex_lines.extend(_spec_lines(spec, latex=True))
    return 0, doc, "\n".join(lines), "\n".join(latex_lines)


_HANDLERS = {
    "validate": _cmd_validate,
    "count": _cmd_count,
    "mc": _cmd_mc,
    "verify-copy": _cmd_verify_copy,
    "casimirs": _cmd_casimirs,
    "contract": _cmd_contract,
    "catalog": _cmd_catalog,
}


# ---- wiring ------------------------------------------------------------------


def _add_selection(sub, with_spec=False):
    sub.add_argument("--family", metavar="NAME",
                     help="built-in family (see catalog)")
    sub.add_argument("--N", type=int, metavar="N",
                     help="size parameter for parametric families")
    sub.add_argument("--alpha", type=_rational, metavar="Q",
                     help="rational parameter of boson_example")
    sub.add_argument("--algebra", metavar="PATH",
                     help="algebra JSON file (validated on load)")
    if with_spec:
        sub.add_argument("--spec", metavar="PATH",
                         help="dressing JSON file (with --algebra)")
    sub.add_argument("--format", choices=FORMATS, default=None,
                     help="output format (default $%s or text)" % FORMAT_ENV)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="liecas",
        description="exact invariants of Lie algebras through dressed "
                    "Levi copies")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    sub = subs.add_parser("validate", help="check a bracket table")
    _add_selection(sub)

    sub = subs.add_parser("count",
                          help="number of functionally independent invariants")
    _add_selection(sub)
    sub.add_argument("--method", choices=("bb", "bb1"), default="bb",
                     help="structure-matrix rank (bb) or 2-form half-rank "
                          "(bb1)")
    sub.add_argument("--seed", type=int, default=1729,
                     help="seed for the random rank probes (default 1729)")
    sub.add_argument("--trials", type=int, default=None,
                     help="number of probe points (defaults per method)")
    sub.add_argument("--verbose", action="store_true",
                     help="include rank, method and witness in the output")

    sub = subs.add_parser("mc", help="structure equations of the dual forms")
    _add_selection(sub)

    sub = subs.add_parser("verify-copy",
                          help="test a dressing against the copy conditions")
    _add_selection(sub, with_spec=True)

    sub = subs.add_parser("casimirs",
                          help="char-poly coefficients of the dressed "
                               "rotation block")
    _add_selection(sub, with_spec=True)

    sub = subs.add_parser("contract", help="weighted contraction")
    _add_selection(sub, with_spec=True)
    sub.add_argument("--weights", required=True, metavar="JSON|PATH",
                     help="name -> integer weight table, inline or a file")

    sub = subs.add_parser("catalog",
                          help="list built-in families or dump one")
    _add_selection(sub)

    return parser


def _resolve_format(args):
    fmt = args.format
    if fmt is None:
        fmt = os.environ.get(FORMAT_ENV) or "text"
    if fmt not in FORMATS:
        raise MalformedInputError(
            "unknown output format %r (choose from %s)"
            % (fmt, ", ".join(FORMATS)))
    return fmt


def _emit(fmt, doc, text, latex):
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True))
    elif fmt == "latex" and latex is not None:
        print(latex)
    else:
        print(text)


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        fmt = _resolve_format(args)
    except MalformedInputError as err:
        print("error: %s" % err)
        return 2
    try:
        code, doc, text, latex = _HANDLERS[args.subcommand](args, fmt)
    except LimitDoesNotExistError as err:
        doc = {"error": "limit-does-not-exist",
               "triple": list(err.triple), "weight": err.weight}
        doc.update(getattr(err, "payload", {}))
        _emit(fmt, doc, "error: %s" % err, None)
        return 2
    except DegreeOverflowError as err:
        _emit(fmt, {"error": "degree-overflow", "detail": str(err)},
              "error: %s" % err, None)
        return 2
    except MalformedInputError as err:
        doc = {"error": "malformed-input", "detail": str(err)}
        doc.update(getattr(err, "payload", {}))
        _emit(fmt, doc, "error: %s" % err, None)
        return 2
    except PreconditionError as err:
        _emit(fmt, {"error": "precondition", "detail": str(err)},
              "error: %s" % err, None)
        return 1
    _emit(fmt, doc, text, latex)
    return code


if __name__ == "__main__":
    sys.exit(main())
