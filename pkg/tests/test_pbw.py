import pytest
from hypothesis import given
from hypothesis import strategies as st

from uqplus.expr import ExprEvalError, ExprSyntaxError
from uqplus.pbw import (
    BUILTIN_NAMES,
    Presentation,
    PresentationError,
    RewriteLimitError,
    UnknownAlgebraError,
    builtin_presentation,
    confluence_check,
    hilbert_count,
    hom_check,
    is_central,
    normal_form,
    omega_hom,
    q_bracket,
    q_normality,
    swap_hom_b2,
    torus_hom,
)
from uqplus.pbw.ops import monomials_of_degree, psi_weights
from uqplus.scalar import Q, as_ratfunc

B2_RULES = {
    "e3*z": "z*e3", "e1*z": "z*e1", "e2*z": "z*e2",
    "e1*e3": "q^-2*e3*e1", "e2*e3": "q^2*e3*e2 + z", "e2*e1": "q^-2*e1*e2 - q^-2*e3",
}
B2_KW = dict(multidegrees=[(1, 2), (1, 1), (1, 0), (0, 1)])


def _b2_variant(**changes):
    rules = dict(B2_RULES, **changes)
    return Presentation.from_text_rules("variant", ["z", "e3", "e1", "e2"], [3, 2, 1, 1],
                                        rules, **B2_KW)


def test_rule_tables():
    assert len(builtin_presentation("b2").rules) == 6
    assert len(builtin_presentation("heisenberg").rules) == 3
    b = builtin_presentation("b2")
    assert b.element("e2*e3") == b.element("q^2*e3*e2 + z")
    a = builtin_presentation("a_s1s2s1")
    assert a.element("e2*w").format() == "q^2*w*e2"


def test_normal_form_examples():
    b = builtin_presentation("b2")
    assert b.element("e2*e1").format() == "q^-2*e1*e2 - q^-2*e3"
    assert normal_form("E2*E1", builtin_presentation("heisenberg")).format() == \
        "q^-2*E1*E2 - q^-2*E3"
    assert b.element("0").format() == "0"
    assert b.element("2*e1 - e1 - e1").is_zero()


def test_text_orders_monomials():
    # terms sorted by exponent vector over (z, e3, e1, e2), coefficients expanded
    b = builtin_presentation("b2")
    assert b.named_element("zp").format() == \
        "(1-q^-2-q^-4+q^-6)*e3*e1*e2 + (q^-4-q^-6)*e3^2 + (1-q^-4)*z*e1"


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtins_confluent(name):
    assert confluence_check(builtin_presentation(name)).ok


def test_corrupted_rule_is_detected():
    rep = confluence_check(_b2_variant(**{"e1*e3": "q^2*e3*e1"}))
    assert not rep.ok
    assert any(w == "e2*e1*e3" for w, _, _ in rep.failures)


def test_validation_errors():
    with pytest.raises(PresentationError, match="missing rule"):
        Presentation.from_text_rules("x", ["a", "b"], [1, 1], {})
    with pytest.raises(PresentationError, match="no term"):
        Presentation.from_text_rules("x", ["a", "b"], [1, 1], {"b*a": "a^2"})
    with pytest.raises(PresentationError, match="homogeneous"):
        Presentation.from_text_rules("x", ["a", "b"], [1, 1], {"b*a": "a*b + a"})
    with pytest.raises(PresentationError, match="multidegree"):
        _b2_variant(**{"e2*e3": "q^2*e3*e2 + e3*e1"})
    with pytest.raises(ExprEvalError):
        Presentation.from_text_rules("x", ["a", "b"], [1, 1], {"b*a": "a*b + c"})
    with pytest.raises(PresentationError, match="pure"):
        Presentation.from_text_rules("x", ["c", "a", "b"], [2, 1, 1],
                                     {"a*c": "c*a", "b*c": "c*b", "b*a": "a*b + c"},
                                     localized=["b"])


def test_unknown_names():
    with pytest.raises(UnknownAlgebraError):
        builtin_presentation("nope")
    b = builtin_presentation("b2")
    with pytest.raises(ExprEvalError):
        b.element("e7")
    with pytest.raises(ExprEvalError):
        b.element("e1^-1")
    with pytest.raises(ExprSyntaxError):
        b.element("e1*(e2")


def test_json_round_trip():
    for name in BUILTIN_NAMES:
        p = builtin_presentation(name)
        again = Presentation.from_json(p.to_json())
        assert again.to_dict() == p.to_dict()
    with pytest.raises(PresentationError):
        Presentation.from_json("{")


def test_step_guard():
    p = Presentation.from_text_rules("b2", ["z", "e3", "e1", "e2"], [3, 2, 1, 1], B2_RULES,
                                     step_guard=50)
    with pytest.raises(RewriteLimitError):
        p.element("e2^6*e1^6")


def _monomials(p, max_len=4):
    letters = list(p.generators)
    return st.lists(st.sampled_from(letters), min_size=0, max_size=max_len).map(
        lambda w: "*".join(w) or "1")


def _elements(p):
    term = st.tuples(st.sampled_from(["1", "q", "-q^-2", "(q^2+1)", "1/2"]), _monomials(p, 3))
    return st.lists(term, min_size=1, max_size=3).map(
        lambda ts: " + ".join(f"{c}*{m}" for c, m in ts))


@pytest.mark.parametrize("name", ["b2", "heisenberg", "a_s2s1s2", "a_s1s2s1"])
def test_associativity(name):
    p = builtin_presentation(name)

    @given(_elements(p), _elements(p), _elements(p))
    def check(x, y, z):
        a, b, c = p.element(x), p.element(y), p.element(z)
        assert (a * b) * c == a * (b * c)
        assert p.element(f"({x})*({y})") == a * b

    check()


def test_associativity_localized():
    p = builtin_presentation("b2_localized")
    letters = ["e3", "e3^-1", "e1", "e1^-1", "e2", "z"]
    words = st.lists(st.sampled_from(letters), min_size=1, max_size=3).map("*".join)

    @given(words, words, words)
    def check(x, y, z):
        a, b, c = p.element(x), p.element(y), p.element(z)
        assert (a * b) * c == a * (b * c)

    check()


@given(st.integers(-4, 4), st.integers(-4, 4))
def test_quantum_torus_closed_form(a, b):
    # e1^a e3^b = q^(-2ab) e3^b e1^a
    p = builtin_presentation("qtorus")
    assert p.element(f"e1^({a})*e3^({b})") == p.element(f"q^({-2 * a * b})*e3^({b})*e1^({a})")


def test_inverse():
    p = builtin_presentation("b2_localized")
    e1 = p.gen("e1")
    assert e1 * e1 ** -1 == p.scalar(1)
    assert (p.gen("e3") * e1).inverse() * (p.gen("e3") * e1) == p.scalar(1)
    with pytest.raises(ValueError):
        p.gen("e2").inverse()


@given(_elements(builtin_presentation("b2")))
def test_normal_form_is_homogeneous_per_term(x):
    p = builtin_presentation("b2")
    a = p.element(x)
    # each free term keeps its multidegree, so the images do as well
    for mono in a.terms:
        assert p.multidegree_of(mono) is not None


def test_brackets_and_centrality():
    b = builtin_presentation("b2")
    assert q_bracket(b.gen("e1"), b.gen("e2"), Q ** 2) == b.gen("e3")
    assert q_bracket(b.gen("e2"), b.gen("e3"), 1) == b.element("z + (q^2-1)*e3*e2")
    assert is_central(b.gen("z"))
    assert is_central(b.named_element("zp"))
    assert not is_central(b.gen("e3"))


def test_normality_reports():
    a = builtin_presentation("a_s1s2s1")
    rep = q_normality(a.gen("w"))
    assert rep.ok
    assert rep.scalars == {"w": as_ratfunc(1), "e2": as_ratfunc(Q ** -2), "e3": as_ratfunc(Q ** 2)}
    rep = q_normality(builtin_presentation("b2").named_element("w"))
    assert list(rep.residuals) == ["e1"]
    assert rep.residuals["e1"].format() == "(1-q^-2)*e3^2"


def test_homomorphisms():
    assert hom_check(omega_hom()).ok
    rep = hom_check(swap_hom_b2())
    assert not rep.ok
    assert "S1" in [v[0] for v in rep.violations]
    b = builtin_presentation("b2")
    assert hom_check(torus_hom(b, psi_weights(3, Q))).ok
    bad = {"e1": 2, "e2": 3, "e3": 5, "z": 7}
    assert not hom_check(torus_hom(b, bad)).ok


def test_hilbert_counts():
    assert hilbert_count(builtin_presentation("b2"), 8) == [1, 2, 4, 7, 11, 16, 23, 31, 41]
    assert hilbert_count(builtin_presentation("heisenberg"), 8) == [1, 2, 4, 6, 9, 12, 16, 20, 25]
    assert len(monomials_of_degree(builtin_presentation("poly_zz'"), 12)) == 2
    with pytest.raises(PresentationError):
        hilbert_count(builtin_presentation("qtorus"), 3)


def test_pbw_monomials_are_independent_in_degree_three():
    # distinct ordered monomials stay distinct normal forms
    b = builtin_presentation("b2")
    monos = monomials_of_degree(b, 3)
    forms = {b.element("*".join(f"{g}^{e}" for g, e in zip(b.generators, m) if e) or "1")
             for m in monos}
    assert len(forms) == len(monos)
