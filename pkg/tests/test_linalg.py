import random

import sympy
from conftest import to_sympy
from hypothesis import given
from hypothesis import strategies as st

from uqplus.linalg import (
    MODULUS,
    eval_mod,
    ff_rref,
    kernel,
    mat_vec,
    modp_rref_pivots,
    rank,
    ratfunc_det,
    rational_rank,
    specialize,
)
from uqplus.scalar import Q, LaurentPoly

small = st.dictionaries(st.integers(-2, 2), st.integers(-3, 3), max_size=2).map(LaurentPoly)


def matrices(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda r: st.integers(1, max_n).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def _sym(rows):
    return sympy.Matrix([[to_sympy(x) for x in row] for row in rows])


@given(matrices())
def test_rank_plus_kernel_is_width(rows):
    ker = kernel(rows)
    assert rank(rows) + len(ker) == len(rows[0])
    for v in ker:
        assert all(x.is_zero() for x in mat_vec(rows, v))


@given(matrices(3))
def test_rank_matches_sympy(rows):
    assert rank(rows) == _sym(rows).rank(simplify=True)


@given(matrices(3))
def test_specialised_rank_is_a_lower_bound(rows):
    assert rational_rank(specialize(rows, 3)) <= rank(rows)
    m = [[eval_mod(x, 982451653) for x in row] for row in rows]
    assert len(modp_rref_pivots(m)) <= rank(rows)


@given(st.integers(1, 3).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_sympy(rows):
    assert sympy.simplify(to_sympy(ratfunc_det(rows)) - _sym(rows).det()) == 0


def test_bareiss_common_denominator():
    rows = [[Q, 1 + 0 * Q], [1 + 0 * Q, Q]]
    R, piv, d = ff_rref(rows)
    assert piv == [0, 1]
    assert d == Q ** 2 - 1


def test_eval_mod_is_a_ring_map():
    rng = random.Random(5)
    for _ in range(20):
        a = LaurentPoly({rng.randint(-3, 3): rng.randint(-9, 9) for _ in range(3)})
        b = LaurentPoly({rng.randint(-3, 3): rng.randint(-9, 9) for _ in range(3)})
        x = 982451653
        assert eval_mod(a * b, x) == eval_mod(a, x) * eval_mod(b, x) % MODULUS
        assert eval_mod(a + b, x) == (eval_mod(a, x) + eval_mod(b, x)) % MODULUS
