"""Command line front end.

Exit codes: 0 success, 1 usage (bad flags, missing files, unknown algebra
names), 2 parse (malformed expressions, bad Cartan data, malformed
presentation files), 3 a verification failed, 4 a resource bound was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from uqplus.braided import (
    CARTAN_TYPES,
    CartanData,
    CartanError,
    braiding_from_cartan,
    glvc_member,
    glvc_structure,
    hopf_aut_bosonization,
    lemma_conditions,
)
from uqplus.expr import ExprEvalError, ExprSyntaxError
from uqplus.nichols import ResourceBoundError, minimal_relations, nichols_dimensions
from uqplus.pbw import (
    BUILTIN_NAMES,
    Presentation,
    PresentationError,
    RewriteLimitError,
    UnknownAlgebraError,
    builtin_presentation,
    hilbert_count,
    is_central,
    q_normality,
)

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_VERIFY, EXIT_RESOURCE = 0, 1, 2, 3, 4

# built-in presentations whose Hilbert series is that of a Cartan type
_ORACLES = {CARTAN_TYPES["A2"]: "heisenberg", CARTAN_TYPES["B2"]: "b2"}


class UsageError(Exception):
    pass


class ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _read(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {path}")
    return p.read_text(encoding="utf-8")


def _cartan(path: str) -> CartanData:
    try:
        return CartanData.from_json(_read(path))
    except CartanError as exc:
        raise ParseError(f"bad Cartan data in {path}: {exc}") from exc


def _algebra(name: str) -> Presentation:
    if name.endswith(".json"):
        text = _read(name)
        try:
            return Presentation.from_json(text)
        except (PresentationError, ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad presentation file {name}: {exc}") from exc
    try:
        return builtin_presentation(name)
    except UnknownAlgebraError as exc:
        raise UsageError(exc.args[0]) from exc


def _element(p: Presentation, text: str):
    try:
        return p.element(text)
    except (ExprSyntaxError, ExprEvalError) as exc:
        raise ParseError(str(exc)) from exc


# -- subcommands ------------------------------------------------------------------------

def cmd_relations(args):
    cd = _cartan(args.cartan)
    basis = minimal_relations(braiding_from_cartan(cd), args.max_degree, jobs=args.jobs,
                              method=args.method)
    rels = basis.relations()
    if args.format == "text":
        lines = [f"degree {r.degree}, multidegree {r.multidegree}: {r.element.format()}"
                 for r in rels]
        lines.append(f"{len(rels)} relation(s) up to degree {args.max_degree}")
        return "\n".join(lines), EXIT_OK
    data = {"cartan": {"C": [list(r) for r in cd.C], "d": list(cd.d)},
            "max_degree": args.max_degree,
            "relations": [r.to_dict() for r in rels]}
    return _dump(data), EXIT_OK


def cmd_hilbert(args):
    cd = _cartan(args.cartan)
    b = braiding_from_cartan(cd)
    dims = [1]
    for m in range(1, args.max_degree + 1):
        dims.append(sum(nichols_dimensions(m, b, jobs=args.jobs,
                                           max_degree=max(args.max_degree, 1)).values()))
    data = {"max_degree": args.max_degree, "dimensions": dims}
    code = EXIT_OK
    if args.oracle == "pbw":
        name = _ORACLES.get(cd)
        if name is None:
            data["oracle"] = {"presentation": None, "note": "no built-in presentation matches"}
        else:
            counts = hilbert_count(builtin_presentation(name), args.max_degree)
            agree = counts == dims
            data["oracle"] = {"presentation": name, "counts": counts, "agree": agree}
            if not agree:
                code = EXIT_VERIFY
    if args.format == "text":
        lines = [f"degree {m}: {d}" for m, d in enumerate(dims)]
        if "oracle" in data:
            o = data["oracle"]
            if o["presentation"] is None:
                lines.append("oracle: no built-in presentation matches")
            else:
                lines.append(f"oracle {o['presentation']}: {o['counts']} "
                             f"({'agree' if o['agree'] else 'DISAGREE'})")
        return "\n".join(lines), code
    return _dump(data), code


def cmd_normal_form(args):
    p = _algebra(args.algebra)
    a = _element(p, args.expr)
    if args.format == "text":
        return a.format(), EXIT_OK
    data = a.to_dict()
    data["input"] = args.expr
    return _dump(data), EXIT_OK


def cmd_central(args):
    p = _algebra(args.algebra)
    a = _element(p, args.expr)
    rep = q_normality(a)
    central = is_central(a)
    if args.format == "text":
        lines = [f"element: {a.format()}", f"central: {'yes' if central else 'no'}",
                 f"normal: {'yes' if rep.ok else 'no'}"]
        for g, v in rep.scalars.items():
            lam = "none" if v is None else v.format(True)
            line = f"  {g}: lambda = {lam}"
            if g in rep.residuals:
                line += f", residual {rep.residuals[g].format()}"
            lines.append(line)
        return "\n".join(lines), EXIT_OK
    data = {"algebra": p.name, "input": args.expr, "central": central,
            "normality": rep.to_dict()}
    return _dump(data), EXIT_OK


def _perm_matrix(sigma):
    n = len(sigma)
    return [[1 if sigma[i] == s else 0 for i in range(n)] for s in range(n)]


def cmd_autgroup(args):
    from itertools import permutations

    cd = _cartan(args.cartan)
    b = braiding_from_cartan(cd)
    conds = lemma_conditions(b)
    structure = glvc_structure(b)
    hopf = hopf_aut_bosonization(cd)
    members = {"".join(str(s + 1) for s in sigma): glvc_member(_perm_matrix(sigma), b)
               for sigma in permutations(range(cd.n))}
    st = structure if structure == "undecided" else structure.to_dict()
    if args.format == "text":
        lines = ["lemma conditions: " + ", ".join(f"({k}) {v}" for k, v in conds.items()),
                 "GL(V,c): " + (st if isinstance(st, str) else st["description"]),
                 "Hopf automorphisms of the bosonization: " + hopf.describe(),
                 "permutation matrices in GL(V,c): "
                 + ", ".join(f"{k} {'yes' if v else 'no'}" for k, v in members.items())]
        return "\n".join(lines), EXIT_OK
    data = {"lemma_conditions": conds, "glvc_structure": st,
            "hopf_aut_bosonization": hopf.to_dict(), "permutation_members": members}
    return _dump(data), EXIT_OK


def cmd_poset(args):
    from uqplus import weylspec

    if args.which == "bruhat":
        p = weylspec.bruhat_poset()
    else:
        p, _ = weylspec.hspec_poset()
    if args.format == "dot":
        return p.to_dot().rstrip("\n"), EXIT_OK
    if args.format == "text":
        lines = [f"{lo} < {hi}" for lo, hi in p.edges()]
        if args.which == "hspec":
            lines.append("pairing: " + ", ".join(f"{k} -> {v}"
                                                   for k, v in weylspec.HSPEC_MAP.items()))
            lines.append(f"assumption: {weylspec.PAIRING_NOTE}")
        return "\n".join(lines), EXIT_OK
    return weylspec.poset_json(args.which), EXIT_OK


def cmd_verify(args):
    from uqplus.suite import run_suite

    rep = run_suite()
    code = EXIT_OK if rep.ok else EXIT_VERIFY
    if args.format == "text":
        return rep.format(), code
    return _dump(rep.to_dict()), code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="uqplus",
                     description="Exact computations with U_q^+ of types A2 and B2.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp, choices=("json", "text")):
        sp.add_argument("--format", choices=choices, default="json")

    def degree(value):
        try:
            m = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
        if m < 0:
            raise argparse.ArgumentTypeError("degree must be non-negative")
        return m

    def positive(value):
        m = degree(value)
        if m < 1:
            raise argparse.ArgumentTypeError("must be at least 1")
        return m

    sp = sub.add_parser("relations", help="minimal Nichols relations from Cartan data")
    sp.add_argument("--cartan", required=True, help="Cartan JSON file with keys C and d")
    sp.add_argument("--max-degree", type=degree, required=True)
    sp.add_argument("--jobs", type=positive, default=1)
    sp.add_argument("--method", choices=("certified", "exact"), default="certified")
    fmt(sp)
    sp.set_defaults(func=cmd_relations)

    sp = sub.add_parser("hilbert", help="graded dimensions of the Nichols algebra")
    sp.add_argument("--cartan", required=True)
    sp.add_argument("--max-degree", type=degree, required=True)
    sp.add_argument("--oracle", choices=("pbw",))
    sp.add_argument("--jobs", type=positive, default=1)
    fmt(sp)
    sp.set_defaults(func=cmd_hilbert)

    names = ", ".join(BUILTIN_NAMES)
    sp = sub.add_parser("normal-form", help="PBW normal form of an expression")
    sp.add_argument("--algebra", required=True, help=f"one of {names}, or a .json file")
    sp.add_argument("--expr", required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_normal_form)

    sp = sub.add_parser("central", help="centrality and q-normality of an element")
    sp.add_argument("--algebra", required=True, help=f"one of {names}, or a .json file")
    sp.add_argument("--expr", required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_central)

    sp = sub.add_parser("autgroup", help="automorphism data of a diagonal braiding")
    sp.add_argument("--cartan", required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_autgroup)

    sp = sub.add_parser("poset", help="Bruhat order of W(B2) or the ideal poset")
    sp.add_argument("--which", choices=("bruhat", "hspec"), required=True)
    fmt(sp, ("json", "dot", "text"))
    sp.set_defaults(func=cmd_poset)

    sp = sub.add_parser("verify", help="run the verification battery")
    sp.add_argument("--suite", choices=("paper",), required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        out, code = args.func(args)
    except UsageError as exc:
        print(f"uqplus: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"uqplus: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ResourceBoundError, RewriteLimitError) as exc:
        print(f"uqplus: resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    print(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
