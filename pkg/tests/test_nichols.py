from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from uqplus.braided import CARTAN_TYPES, braiding_from_cartan
from uqplus.nichols import (
    ResourceBoundError,
    TensorElement,
    block_rank,
    braided_coproduct,
    compositions,
    is_primitive,
    matsumoto_apply,
    minimal_relations,
    nichols_dimension,
    nichols_dimensions,
    serre_element,
    symmetrizer_apply,
    symmetrizer_block,
    words_of_multidegree,
)
from uqplus.permutations import symmetric_group
from uqplus.scalar import Q, as_ratfunc

A2 = braiding_from_cartan(CARTAN_TYPES["A2"])
B2 = braiding_from_cartan(CARTAN_TYPES["B2"])
QV = Fraction(3)


def _q(b, i, j):
    return b.Q[i - 1][j - 1].evaluate(QV)


def _oracle_symmetrizer(b, m):
    """Sum over S_m of the braid operators along the first reduced word, at
    q = 3, on every word; the generator s_i braids positions i and i+1."""
    n = b.n
    out = {}
    for w in product(range(1, n + 1), repeat=m):
        acc = {}
        for sigma in symmetric_group(m):
            vec = {w: Fraction(1)}
            for i in reversed(sigma.reduced_words()[0]):
                nxt = {}
                for u, c in vec.items():
                    v = list(u)
                    f = _q(b, v[i], v[i + 1])
                    v[i], v[i + 1] = v[i + 1], v[i]
                    nxt[tuple(v)] = nxt.get(tuple(v), 0) + c * f
                vec = nxt
            for u, c in vec.items():
                acc[u] = acc.get(u, 0) + c
        out[w] = {u: c for u, c in acc.items() if c}
    return out


@pytest.mark.parametrize("b", [A2, B2], ids=["A2", "B2"])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_blocks_against_dense_oracle(b, m):
    oracle = _oracle_symmetrizer(b, m)
    for mu in compositions(m, 2):
        blk = symmetrizer_block(m, mu, b)
        for col, w in enumerate(blk.words):
            for row, u in enumerate(blk.words):
                assert blk.matrix[row][col].evaluate(QV) == oracle[w].get(u, 0)


@pytest.mark.parametrize("b", [A2, B2], ids=["A2", "B2"])
@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_factored_equals_direct(b, m):
    for mu in compositions(m, 2):
        assert symmetrizer_block(m, mu, b, "factored") == symmetrizer_block(m, mu, b, "direct")


@pytest.mark.parametrize("b", [A2, B2], ids=["A2", "B2"])
def test_matsumoto_independent_of_reduced_word(b):
    for sigma in symmetric_group(4):
        for w in product((1, 2), repeat=4):
            outs = {matsumoto_apply(sigma, w, b, reduced_word=r) for r in sigma.reduced_words()}
            assert len(outs) == 1


def test_degree_two_blocks():
    blk = symmetrizer_block(2, (1, 1), A2)
    assert blk.to_strings() == [["1", "q^-1"], ["q^-1", "1"]]
    assert symmetrizer_block(2, (2, 0), A2).to_strings() == [["q^2 + 1"]]


def test_block_validation():
    with pytest.raises(ValueError):
        symmetrizer_block(3, (1, 1), A2)
    with pytest.raises(ResourceBoundError):
        symmetrizer_block(9, (5, 4), A2)
    with pytest.raises(ValueError):
        symmetrizer_block(2, (1, 1), A2, method="bogus")


def test_words_and_compositions():
    assert compositions(3, 2) == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert words_of_multidegree((2, 1)) == ((1, 1, 2), (1, 2, 1), (2, 1, 1))


def _series(gen, m):
    t = sympy.Symbol("t")
    s = sympy.series(gen(t), t, 0, m + 1).removeO()
    return [int(s.coeff(t, k)) for k in range(m + 1)]


def test_dimensions_match_generating_functions():
    a2 = _series(lambda t: 1 / ((1 - t) ** 2 * (1 - t ** 2)), 8)
    b2 = _series(lambda t: 1 / ((1 - t) ** 2 * (1 - t ** 2) * (1 - t ** 3)), 8)
    assert [1] + [nichols_dimension(m, A2) for m in range(1, 9)] == a2
    assert [1] + [nichols_dimension(m, B2) for m in range(1, 9)] == b2


@pytest.mark.parametrize("b", [A2, B2], ids=["A2", "B2"])
def test_methods_agree(b):
    for m in range(1, 6):
        assert nichols_dimensions(m, b, method="bareiss") == nichols_dimensions(m, b)
        assert nichols_dimensions(m, b, method="exact") == nichols_dimensions(m, b)


def test_rank_plus_kernel_is_block_dimension():
    basis = minimal_relations(B2, 5, method="exact")
    for (m, mu), blk in basis.blocks.items():
        assert blk.rank == block_rank(symmetrizer_block(m, mu, B2))
        assert blk.rank + blk.ideal_dim + len(blk.new_relations) == blk.dim


def test_b2_relations():
    rels = minimal_relations(B2, 6).relations()
    assert [(r.degree, r.multidegree) for r in rels] == [(3, (2, 1)), (4, (1, 3))]
    s1 = serre_element(CARTAN_TYPES["B2"], 1, 2)
    s2 = serre_element(CARTAN_TYPES["B2"], 2, 1)
    assert rels[0].element.is_proportional(s1)
    assert rels[1].element.is_proportional(s2)
    assert rels[0].element.format() == "x1*x1*x2 - (q^2+q^-2)*x1*x2*x1 + x2*x1*x1"
    for r in rels:
        assert is_primitive(r.element, B2)


def test_a2_relations_are_quantum_serre():
    rels = {r.multidegree: r for r in minimal_relations(A2, 4).relations()}
    assert sorted(rels) == [(1, 2), (2, 1)]
    assert all(r.degree == 3 for r in rels.values())
    assert rels[2, 1].element.is_proportional(serre_element(CARTAN_TYPES["A2"], 1, 2))
    assert rels[1, 2].element.is_proportional(serre_element(CARTAN_TYPES["A2"], 2, 1))
    assert all(is_primitive(r.element, A2) for r in rels.values())


def test_a2_relation_at_squared_parameter():
    # the braiding q -> q^2 of A2 gives the coefficient q^2 + q^-2
    sq = braiding_from_cartan(CARTAN_TYPES["B2"]).__class__(
        ((Q ** 4, Q ** -2), (Q ** -2, Q ** 4)))
    rel = {r.multidegree: r for r in minimal_relations(sq, 3).relations()}[2, 1]
    want = TensorElement({(1, 1, 2): 1, (1, 2, 1): -(Q ** 2 + Q ** -2), (2, 1, 1): 1}, 3)
    assert rel.element.is_proportional(want)


def test_certified_and_exact_relations_agree():
    # exact kernels of the 20x20 blocks in degree 6 take minutes
    for b, m in ((A2, 5), (B2, 5)):
        c = minimal_relations(b, m, method="certified").relations()
        e = minimal_relations(b, m, method="exact").relations()
        assert [r.element for r in c] == [r.element for r in e]


def test_relations_are_in_the_kernel():
    for r in minimal_relations(B2, 4).relations():
        assert symmetrizer_apply(r.element, B2).is_zero()


def test_relation_json():
    js = minimal_relations(B2, 4).to_json()
    assert '"multidegree": [1, 3]' in js


def test_coproduct_single_letter():
    assert braided_coproduct(TensorElement.word((1,)), B2) == {
        ((1,), ()): as_ratfunc(1), ((), (1,)): as_ratfunc(1)}


def test_coproduct_degree_two():
    d = braided_coproduct(TensorElement.word((1, 2)), B2)
    assert d[(2,), (1,)] == as_ratfunc(Q ** -2)
    assert d[(1,), (2,)] == as_ratfunc(1)


def test_primitivity_errors():
    with pytest.raises(TypeError):
        is_primitive("x1", B2)
    with pytest.raises(ValueError):
        is_primitive(TensorElement({(): 1}, 0), B2)
    assert not is_primitive(TensorElement.word((1, 2)), B2)


words = st.lists(st.sampled_from([1, 2]), min_size=1, max_size=4).map(tuple)


@given(words, words)
def test_coproduct_is_multiplicative_on_words(u, v):
    # Delta(uv) = Delta(u) Delta(v) in the braided tensor product
    du = braided_coproduct(TensorElement.word(u), B2)
    dv = braided_coproduct(TensorElement.word(v), B2)
    want = {}
    for (a, b), c in du.items():
        for (x, y), d in dv.items():
            f = as_ratfunc(1)
            for p in b:
                for r in x:
                    f = f * B2.Q[p - 1][r - 1]
            key = (a + x, b + y)
            want[key] = want.get(key, as_ratfunc(0)) + c * d * f
    want = {k: v for k, v in want.items() if v}
    assert braided_coproduct(TensorElement.word(u + v), B2) == want
