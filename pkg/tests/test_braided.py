import pytest

from uqplus.braided import (
    CARTAN_TYPES,
    BraidingMatrix,
    CartanData,
    CartanError,
    MonomialMap,
    autdiagr,
    braiding_from_cartan,
    glvc_member,
    glvc_structure,
    hopf_aut_bosonization,
    lemma_conditions,
)
from uqplus.scalar import Q, as_ratfunc


def _b(name):
    return braiding_from_cartan(CARTAN_TYPES[name])


def test_a2_braiding():
    b = _b("A2")
    assert b.exponents() == ((2, -1), (-1, 2))


def test_b2_braiding():
    # q_ij = q^(d_i a_ij) with d = (2, 1)
    assert _b("B2").exponents() == ((4, -2), (-2, 2))


@pytest.mark.parametrize("C, d, axiom", [
    ([[2, -1], [-1, 3]], [1, 1], "diagonal"),
    ([[2, 1], [-1, 2]], [1, 1], "off-diagonal sign"),
    ([[2, 0], [-1, 2]], [1, 1], "zero pattern"),
    ([[2, -1], [-2, 2]], [1, 1], "symmetrizability"),
    ([[2, -1], [-1, 2]], [1, 0], "positivity"),
    ([[2, -1]], [1], "shape"),
])
def test_cartan_axioms(C, d, axiom):
    with pytest.raises(CartanError, match=axiom):
        CartanData(C, d)


def test_cartan_json_round_trip():
    cd = CARTAN_TYPES["B2"]
    assert CartanData.from_json(cd.to_json()) == cd
    with pytest.raises(CartanError):
        CartanData.from_json("[1, 2]")


def test_autdiagr():
    assert autdiagr(_b("A2")) == [(0, 1), (1, 0)]
    assert autdiagr(_b("B2")) == [(0, 1)]


def test_lemma_conditions():
    for name in ("A2", "B2"):
        assert lemma_conditions(_b(name)) == {"i": True, "ii": True, "iii": True}
    # the constant braiding fails all three
    const = BraidingMatrix(((Q, Q), (Q, Q)))
    assert lemma_conditions(const) == {"i": False, "ii": False, "iii": False}
    assert glvc_structure(const) == "undecided"


def test_glvc_structure():
    a, b = glvc_structure(_b("A2")), glvc_structure(_b("B2"))
    assert (a.torus_rank, a.order_of_diagram_group()) == (2, 2)
    assert (b.torus_rank, b.order_of_diagram_group()) == (2, 1)


def test_hopf_aut():
    assert hopf_aut_bosonization(CARTAN_TYPES["A2"]).describe() == "(k^x)^2 x| S2"
    assert hopf_aut_bosonization(CARTAN_TYPES["B2"]).describe() == "(k^x)^2 x| {id}"


def test_glvc_member():
    swap = [[0, 1], [1, 0]]
    assert glvc_member(swap, _b("A2"))
    assert not glvc_member(swap, _b("B2"))
    diag = MonomialMap((0, 1), (3, Q)).matrix()
    assert glvc_member(diag, _b("B2"))
    # a non-monomial map never commutes with a braiding whose entries differ
    assert not glvc_member([[1, 1], [0, 1]], _b("A2"))
    with pytest.raises(ValueError):
        glvc_member([[1, 1], [1, 1]], _b("A2"))


def test_braiding_rejects_zero():
    with pytest.raises(ValueError):
        BraidingMatrix(((as_ratfunc(0), Q), (Q, Q)))
