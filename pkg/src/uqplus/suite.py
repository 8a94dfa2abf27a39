"""The verification battery behind ``verify --suite paper``.

Every check is exact.  Each one carries a short name, a human readable label
and, on failure, a detail string.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from uqplus.braided import (
    CARTAN_TYPES,
    autdiagr,
    braiding_from_cartan,
    glvc_member,
    glvc_structure,
    hopf_aut_bosonization,
    lemma_conditions,
)
from uqplus.expr import format_expr, parse_expr, parse_scalar
from uqplus.nichols import (
    TensorElement,
    braided_coproduct,
    is_primitive,
    matsumoto_apply,
    minimal_relations,
)
from uqplus.pbw import (
    BUILTIN_NAMES,
    IDENTITIES,
    builtin_presentation,
    confluence_check,
    paper_identity,
    q_bracket,
    q_normality,
)
from uqplus.permutations import symmetric_group
from uqplus.scalar import Q, as_ratfunc, q_binom, q_int
from uqplus import weylspec

__all__ = ["Check", "CheckResult", "SuiteReport", "paper_checks", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    group: str
    name: str
    label: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"group": self.group, "name": self.name, "label": self.label,
                "ok": self.ok, "detail": self.detail}


@dataclass(frozen=True)
class Check:
    group: str
    name: str
    label: str
    run: Callable  # () -> (ok, detail)


@dataclass
class SuiteReport:
    results: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self):
        return [r for r in self.results if not r.ok]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "passed": sum(r.ok for r in self.results),
                "failed": len(self.failures),
                "results": [r.to_dict() for r in self.results]}

    def format(self) -> str:
        lines = []
        for r in self.results:
            mark = "PASS" if r.ok else "FAIL"
            lines.append(f"{mark}  [{r.group}] {r.name}: {r.label}")
            if not r.ok and r.detail:
                lines.append(f"      {r.detail}")
        lines.append(f"{sum(r.ok for r in self.results)} passed, {len(self.failures)} failed")
        return "\n".join(lines)


def _cmp(got, want):
    return got == want, f"got {got}, expected {want}"


def _all(pairs):
    bad = [d for ok, d in pairs if not ok]
    return not bad, "; ".join(bad)


# -- scalars -------------------------------------------------------------------------

def _q_values():
    want = [
        (q_int(2, 2), "q^2 + q^-2"),
        (q_int(3, 1), "q^2 + 1 + q^-2"),
        (q_binom(2, 0, 2), "1"),
        (q_binom(2, 2, 2), "1"),
        (q_binom(2, 1, 2), "q^2 + q^-2"),
        (q_binom(3, 2, 1), "q^2 + 1 + q^-2"),
        (q_binom(3, 1, 1), "q^2 + 1 + q^-2"),
    ]
    return _all((str(v) == s, f"{v} != {s}") for v, s in want)


def _torus_coefficient():
    c = parse_scalar("1/((1-q^-4)*(q^2-1))")
    want = (1 - Q ** -4) * (Q ** 2 - 1)
    return (c * as_ratfunc(want)) == as_ratfunc(1), f"parsed {c.format(True)}"


# -- braidings and automorphisms ----------------------------------------------------

def _a2_braiding():
    b = braiding_from_cartan(CARTAN_TYPES["A2"])
    want = [[Q ** 2, Q ** -1], [Q ** -1, Q ** 2]]
    return _all((b[i, j] == as_ratfunc(want[i][j]), f"q_{i+1}{j+1} = {b[i, j].format(True)}")
                for i in range(2) for j in range(2))


def _autdiagr_b2():
    return _cmp(autdiagr(braiding_from_cartan(CARTAN_TYPES["B2"])), [(0, 1)])


def _glvc(name, order):
    def run():
        b = braiding_from_cartan(CARTAN_TYPES[name])
        s = glvc_structure(b)
        if s == "undecided":
            return False, "no lemma condition holds"
        return _all([_cmp(s.torus_rank, 2), _cmp(s.order_of_diagram_group(), order)])
    return run


def _hopf(name, text):
    def run():
        return _cmp(hopf_aut_bosonization(CARTAN_TYPES[name]).describe(), text)
    return run


def _swap_membership():
    swap = [[0, 1], [1, 0]]
    a2 = glvc_member(swap, braiding_from_cartan(CARTAN_TYPES["A2"]))
    b2 = glvc_member(swap, braiding_from_cartan(CARTAN_TYPES["B2"]))
    conds = {k: lemma_conditions(braiding_from_cartan(CARTAN_TYPES[k])) for k in ("A2", "B2")}
    return (a2 and not b2 and all(len(v) == 3 for v in conds.values()),
            f"A2 swap member {a2}, B2 swap member {b2}")


# -- symmetrizers and relations -----------------------------------------------------

def _matsumoto(name):
    def run():
        b = braiding_from_cartan(CARTAN_TYPES[name])
        words = [tuple(w) for w in _all_words(4, 2)]
        bad = []
        for sigma in symmetric_group(4):
            rws = sigma.reduced_words()
            for w in words:
                outs = {matsumoto_apply(sigma, w, b, reduced_word=r) for r in rws}
                if len(outs) != 1:
                    bad.append(f"{tuple(sigma)} on {w}")
        return not bad, f"reduced words disagree: {bad[:3]}"
    return run


def _all_words(m, n):
    if m == 0:
        return [()]
    return [w + (i,) for w in _all_words(m - 1, n) for i in range(1, n + 1)]


_A2_SERRE = {(2, 1): TensorElement({(1, 1, 2): 1, (1, 2, 1): -(Q ** 2 + Q ** -2),
                                    (2, 1, 1): 1}, 3),
             (1, 2): TensorElement({(2, 2, 1): 1, (2, 1, 2): -(Q ** 2 + Q ** -2),
                                    (1, 2, 2): 1}, 3)}
_B2_SERRE = {(2, 1): TensorElement({(1, 1, 2): 1, (1, 2, 1): -(Q ** 2 + Q ** -2),
                                    (2, 1, 1): 1}, 3),
             (1, 3): TensorElement({(2, 2, 2, 1): 1, (2, 2, 1, 2): -(Q ** 2 + 1 + Q ** -2),
                                    (2, 1, 2, 2): Q ** 2 + 1 + Q ** -2,
                                    (1, 2, 2, 2): -1}, 4)}


def _relations(name, max_degree, displayed):
    def run():
        b = braiding_from_cartan(CARTAN_TYPES[name])
        rels = minimal_relations(b, max_degree).relations()
        keys = sorted(r.multidegree for r in rels)
        out = [(keys == sorted(displayed), f"relations at {keys}")]
        for r in rels:
            want = displayed.get(r.multidegree)
            if want is None:
                continue
            out.append((r.element.is_proportional(want),
                        f"{r.multidegree}: computed {r.element.format()}, displayed {want.format()}"))
            out.append((is_primitive(r.element, b), f"{r.multidegree} is not primitive"))
        return _all(out)
    return run


def _coproduct_letter():
    b = braiding_from_cartan(CARTAN_TYPES["B2"])
    got = braided_coproduct(TensorElement.word((1,)), b)
    return got == {((1,), ()): as_ratfunc(1), ((), (1,)): as_ratfunc(1)}, str(got)


# -- PBW presentations ------------------------------------------------------------------

def _rules():
    b = builtin_presentation("b2")
    h = builtin_presentation("heisenberg")
    a = builtin_presentation("a_s1s2s1")
    return _all([
        _cmp(len(b.rules), 6),
        _cmp(len(h.rules), 3),
        (b.element("e2*e3") == b.element("q^2*e3*e2 + z"), "e2*e3 rule in b2"),
        (a.element("e2*w") == a.element("q^2*w*e2"), "e2*w rule in a_s1s2s1"),
    ])


def _normal_forms():
    b = builtin_presentation("b2")
    h = builtin_presentation("heisenberg")
    return _all([
        _cmp(b.element("e2*e1").format(), "q^-2*e1*e2 - q^-2*e3"),
        _cmp(h.element("E2*E1").format(), "q^-2*E1*E2 - q^-2*E3"),
    ])


def _parse_e3():
    b = builtin_presentation("b2")
    text = "e1*e2 - q^2*e2*e1"
    ast = parse_expr(text)
    return _all([
        (format_expr(parse_expr(format_expr(ast))) == format_expr(ast), "round trip"),
        (b.element(text) == b.gen("e3"), "does not evaluate to e3"),
    ])


def _brackets():
    b = builtin_presentation("b2")
    return _all([
        (q_bracket(b.gen("e1"), b.gen("e2"), Q ** 2) == b.gen("e3"), "[e1,e2]_{q^2} != e3"),
        (q_bracket(b.gen("e2"), b.gen("e3"), 1) == b.element("z + (q^2-1)*e3*e2"),
         "[e2,e3] != z + (q^2-1)e3e2"),
    ])


def _w_normal_a():
    a = builtin_presentation("a_s1s2s1")
    rep = q_normality(a.gen("w"))
    want = {"e2": as_ratfunc(Q ** -2), "e3": as_ratfunc(Q ** 2), "w": as_ratfunc(1)}
    return rep.ok and rep.scalars == want, str(rep.to_dict())


def _w_residual_b2():
    b = builtin_presentation("b2")
    rep = q_normality(b.named_element("w"))
    res = {g: r.format() for g, r in rep.residuals.items()}
    return _cmp(res, {"e1": "(1-q^-2)*e3^2"})


def _confluence(name):
    def run():
        rep = confluence_check(builtin_presentation(name))
        return rep.ok, f"{len(rep.failures)} failing overlaps, first {rep.failures[:1]}"
    return run


def _identity(name):
    def run():
        r = paper_identity(name)
        return r.ok, r.detail
    return run


# -- Weyl group and spectrum ----------------------------------------------------------

def _weyl_basic():
    W = weylspec.weyl_b2()
    w0 = weylspec.element("s1s2s1s2")
    return _all([
        _cmp(len(W), 8),
        (weylspec.element("s2s1s2s1") == w0, "s1s2s1s2 != s2s1s2s1"),
        _cmp(w0.image(1), (-1, 1)),
        _cmp(weylspec.element("e").matrix, ((1, 0), (0, 1))),
    ])


def _incomparable():
    x, y = weylspec.element("s1s2"), weylspec.element("s2s1")
    return not weylspec.bruhat_leq(x, y) and not weylspec.bruhat_leq(y, x), "comparable"


def _graded():
    p = weylspec.bruhat_poset()
    L = {x.name: x.length for x in weylspec.weyl_b2()}
    return all(L[hi] == L[lo] + 1 for lo, hi in p.covers), "a cover skips a length"


def _bruhat_figure():
    p = weylspec.bruhat_poset()
    return p.covers == weylspec.FIGURE_BRUHAT_COVERS, \
        f"symmetric difference {sorted(p.covers ^ weylspec.FIGURE_BRUHAT_COVERS)}"


def _hspec_figure():
    p, _ = weylspec.hspec_poset()
    zero_covers = {hi for lo, hi in p.covers if lo == "(0)"}
    return _all([
        (p.covers == weylspec.FIGURE_HSPEC_COVERS,
         f"symmetric difference {sorted(p.covers ^ weylspec.FIGURE_HSPEC_COVERS)}"),
        _cmp(zero_covers, {"(z)", "(z')"}),
    ])


def _order_reversing():
    return weylspec.is_order_reversing(), "the pairing does not reverse order"


def _witnesses():
    rep = weylspec.containment_witnesses()
    return rep.ok, str(rep.failures)


def paper_checks():
    """The registered checks in a fixed order."""
    C = Check
    checks = [
        C("scalar", "q_binomial_values", "displayed quantum integers and binomials", _q_values),
        C("scalar", "torus_coefficient", "1/((1-q^-4)(q^2-1)) parses to the stated coefficient",
          _torus_coefficient),
        C("braided", "a2_braiding", "A2 braiding is [[q^2,q^-1],[q^-1,q^2]]", _a2_braiding),
        C("braided", "b2_autdiagr_trivial", "Autdiagr of B2 is trivial", _autdiagr_b2),
        C("braided", "a2_glvc", "GL(V,c) for A2: torus rank 2, diagram group of order 2",
          _glvc("A2", 2)),
        C("braided", "b2_glvc", "GL(V,c) for B2: torus rank 2, trivial diagram group",
          _glvc("B2", 1)),
        C("braided", "a2_hopf_aut", "Hopf automorphisms for A2 are (k^x)^2 x| S2",
          _hopf("A2", "(k^x)^2 x| S2")),
        C("braided", "b2_hopf_aut", "Hopf automorphisms for B2 are (k^x)^2 x| {id}",
          _hopf("B2", "(k^x)^2 x| {id}")),
        C("braided", "swap_membership", "swap lies in GL(V,c) for A2 but not B2",
          _swap_membership),
        C("nichols", "matsumoto_a2_s4", "Matsumoto section well defined on S4, A2 braiding",
          _matsumoto("A2")),
        C("nichols", "matsumoto_b2_s4", "Matsumoto section well defined on S4, B2 braiding",
          _matsumoto("B2")),
        C("nichols", "single_letter_coproduct", "Delta(x) = x(x)1 + 1(x)x", _coproduct_letter),
        C("nichols", "a2_serre_relations",
          "A2 relations up to degree 4 span the displayed Serre relations",
          _relations("A2", 4, _A2_SERRE)),
        C("nichols", "b2_serre_relations",
          "B2 relations up to degree 4 are (S1) and (S2), both primitive",
          _relations("B2", 4, _B2_SERRE)),
        C("pbw", "rule_tables", "rule counts and sample rules of b2, heisenberg, a_s1s2s1", _rules),
        C("pbw", "normal_form_examples", "e2*e1 and E2*E1 normal forms", _normal_forms),
        C("pbw", "parse_e3", "e1*e2 - q^2*e2*e1 parses, round-trips and equals e3", _parse_e3),
        C("pbw", "bracket_examples", "q-brackets giving e3 and w", _brackets),
        C("pbw", "w_normal_in_a_s1s2s1", "w is normal in A_{s1s2s1} with scalars q^-2, q^2, 1",
          _w_normal_a),
        C("pbw", "w_residual_in_b2", "w is not normal in U+(B2); residual at e1 is (1-q^-2)e3^2",
          _w_residual_b2),
    ]
    for ident in IDENTITIES:
        checks.append(C("identity", ident.name, ident.label, _identity(ident.name)))
    for name in BUILTIN_NAMES:
        checks.append(C("confluence", name, f"all overlaps of {name} resolve",
                        _confluence(name)))
    checks += [
        C("weyl", "weyl_group", "W(B2) has 8 elements; s1s2s1s2 = s2s1s2s1 sends eps1 to -eps1",
          _weyl_basic),
        C("weyl", "s1s2_s2s1_incomparable", "s1s2 and s2s1 are incomparable", _incomparable),
        C("weyl", "bruhat_graded", "Bruhat covers raise length by one", _graded),
        C("weyl", "bruhat_figure", "computed Bruhat Hasse diagram equals the drawn one",
          _bruhat_figure),
        C("weyl", "hspec_figure", "ideal poset equals the drawn one; (0) is covered by (z), (z')",
          _hspec_figure),
        C("weyl", "order_reversing", "the pairing reverses order on all pairs", _order_reversing),
        C("weyl", "containment_witnesses", "every drawn inclusion has a verified witness",
          _witnesses),
    ]
    return checks


def run_suite(checks=None) -> SuiteReport:
    t0 = time.perf_counter()
    rep = SuiteReport()
    for c in checks if checks is not None else paper_checks():
        ok, detail = c.run()
        rep.results.append(CheckResult(c.group, c.name, c.label, bool(ok), "" if ok else detail))
    rep.seconds = time.perf_counter() - t0
    return rep
