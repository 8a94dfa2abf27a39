"""Tensor algebra of a diagonal braided vector space and its Nichols quotient.

Words are tuples of letters ``1..n``.  The braiding acts on neighbouring
letters by ``c(x_a (x) x_b) = q_ab x_b (x) x_a``; the braid generator
``sigma_i`` acts on positions ``i, i+1`` (0-based) of a word.  The quantum
symmetrizer is the sum of the Matsumoto lifts of all permutations.  It
preserves multidegree, so all linear algebra is done block by block.

Ranks and kernels are taken over Q(q) with fraction-free elimination.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from uqplus.braided import BraidingMatrix
from uqplus.linalg import eval_mod, ff_rref, kernel, mat_vec, modp_rref_pivots
from uqplus.permutations import Permutation, symmetric_group
from uqplus.scalar import ONE, ZERO, RatFunc, as_ratfunc, format_term

__all__ = [
    "ResourceBoundError",
    "DEFAULT_MAX_DEGREE",
    "TensorElement",
    "SymmetrizerBlock",
    "Relation",
    "RelationBasis",
    "BlockResult",
    "multidegree",
    "words_of_multidegree",
    "compositions",
    "matsumoto_apply",
    "symmetrizer_apply",
    "symmetrizer_block",
    "block_rank",
    "nichols_dimension",
    "nichols_dimensions",
    "minimal_relations",
    "braided_coproduct",
    "is_primitive",
    "serre_element",
]

DEFAULT_MAX_DEGREE = 8


class ResourceBoundError(RuntimeError):
    """Requested degree exceeds the configured bound."""


def _check_bound(m, bound):
    if m > bound:
        raise ResourceBoundError(f"degree {m} exceeds the configured bound {bound}")


# -- words and tensors --------------------------------------------------------

def multidegree(word, n: int) -> tuple:
    counts = [0] * n
    for a in word:
        counts[a - 1] += 1
    return tuple(counts)


def compositions(m: int, n: int):
    """Multidegrees of total degree ``m`` in ``n`` letters, lexicographically
    decreasing (so ``(m, 0, ...)`` first)."""
    if n == 1:
        return [(m,)]
    out = []
    for first in range(m, -1, -1):
        out.extend((first,) + rest for rest in compositions(m - first, n - 1))
    return out


@lru_cache(maxsize=None)
def words_of_multidegree(mu: tuple) -> tuple:
    """All words with letter counts ``mu``, in lexicographic order."""
    letters = []
    for a, k in enumerate(mu, start=1):
        letters.extend([a] * k)
    m = len(letters)
    out = set()

    def rec(prefix, remaining):
        if not remaining:
            out.add(tuple(prefix))
            return
        for a in sorted(set(remaining)):
            rest = list(remaining)
            rest.remove(a)
            rec(prefix + [a], rest)

    rec([], letters)
    words = tuple(sorted(out))
    assert all(len(w) == m for w in words)
    return words


class TensorElement:
    """Homogeneous element of T(V): a sparse map word -> nonzero RatFunc."""

    __slots__ = ("degree", "terms")

    def __init__(self, terms=None, degree: int | None = None):
        t = {}
        for w, c in (terms or {}).items():
            c = as_ratfunc(c)
            if c:
                t[tuple(w)] = c
        lengths = {len(w) for w in t}
        if len(lengths) > 1:
            raise ValueError("tensor element is not homogeneous")
        if degree is None:
            degree = lengths.pop() if lengths else 0
        elif lengths and lengths != {degree}:
            raise ValueError(f"words of length {lengths} in a degree-{degree} element")
        self.degree = degree
        self.terms = t

    @classmethod
    def word(cls, w, coeff=1) -> TensorElement:
        return cls({tuple(w): coeff}, len(w))

    @classmethod
    def from_vector(cls, words, vec) -> TensorElement:
        return cls({w: c for w, c in zip(words, vec) if c}, len(words[0]) if words else 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError("adding tensors of different degrees")
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, as_ratfunc(0)) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return TensorElement(out, self.degree if self.terms else other.degree)

    def __neg__(self):
        return TensorElement({w: -c for w, c in self.terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> TensorElement:
        c = as_ratfunc(c)
        return TensorElement({w: v * c for w, v in self.terms.items()}, self.degree)

    def __mul__(self, other):
        """Concatenation product of T(V)."""
        if not isinstance(other, TensorElement):
            return self.scale(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = out.get(w, as_ratfunc(0)) + c1 * c2
                out[w] = v
        return TensorElement({w: c for w, c in out.items() if c}, self.degree + other.degree)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def multidegrees(self, n: int):
        return {multidegree(w, n) for w in self.terms}

    def coefficient(self, w):
        return self.terms.get(tuple(w), as_ratfunc(0))

    def vector(self, words):
        return [self.coefficient(w) for w in words]

    def normalized(self) -> TensorElement:
        """Scaled so the lexicographically least word has coefficient 1."""
        if not self.terms:
            return self
        lead = self.terms[min(self.terms)]
        return self.scale(lead.inverse())

    def is_proportional(self, other: TensorElement) -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if set(self.terms) != set(other.terms):
            return False
        w0 = min(self.terms)
        ratio = self.terms[w0] / other.terms[w0]
        return all(self.terms[w] == ratio * other.terms[w] for w in self.terms)

    def format(self) -> str:
        """``x1*x1*x2 - (q^2+q^-2)*x1*x2*x1 + x2*x1*x1``."""
        if not self.terms:
            return "0"
        parts = []
        for i, w in enumerate(sorted(self.terms)):
            body = "*".join(f"x{a}" for a in w) or "1"
            parts.append(format_term(self.terms[w], body, i == 0))
        return "".join(parts)

    __str__ = format

    def __repr__(self):
        return f"TensorElement({self.format()!r})"

    def to_json_terms(self):
        return [{"word": list(w), "coeff": self.terms[w].format(True)}
                for w in sorted(self.terms)]


# -- braid group action ------------------------------------------------------------

def _braiding_table(b: BraidingMatrix):
    table = {}
    for i in range(b.n):
        for j in range(b.n):
            entry = b.Q[i][j]
            if not entry.is_laurent():
                raise ValueError("braiding entries must be Laurent polynomials")
            table[i + 1, j + 1] = entry.num
    return table


def matsumoto_apply(sigma, w, b: BraidingMatrix, reduced_word=None):
    """Apply the Matsumoto lift of ``sigma`` to the word ``w``.

    Returns ``(coefficient, word)``.  The braiding is applied factor by factor
    along ``reduced_word`` (default: :meth:`Permutation.reduced_word`), the
    rightmost generator first.
    """
    sigma = Permutation(sigma)
    w = tuple(w)
    if len(w) != sigma.size:
        raise ValueError("word length and permutation size differ")
    if reduced_word is None:
        reduced_word = sigma.reduced_word()
    table = _braiding_table(b)
    coeff = ONE
    cur = list(w)
    for i in reversed(reduced_word):
        coeff = coeff * table[cur[i], cur[i + 1]]
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
    return coeff, tuple(cur)


def _crossing_apply(sigma, w, table):
    """Same result as :func:`matsumoto_apply` read off the inversion set."""
    coeff = ONE
    for a, c in sigma.inversions():
        coeff = coeff * table[w[a], w[c]]
    out = [0] * len(w)
    for p, letter in enumerate(w):
        out[sigma[p]] = letter
    return coeff, tuple(out)


def _sym_factored(word, table, cache):
    """Symmetrizer of one word as a dict, via S_m = (S_{m-1} (x) id) T_m where
    T_m moves one letter to the last position."""
    hit = cache.get(word)
    if hit is not None:
        return hit
    m = len(word)
    if m <= 1:
        res = {word: ONE}
        cache[word] = res
        return res
    out = {}
    seen = {}
    for j in range(m):
        a = word[j]
        f = ONE
        for p in range(j + 1, m):
            f = f * table[a, word[p]]
        rest = word[:j] + word[j + 1:]
        key = (rest, a)
        if key in seen:
            seen[key] = seen[key] + f
        else:
            seen[key] = f
    for (rest, a), f in seen.items():
        for u, c in _sym_factored(rest, table, cache).items():
            k = u + (a,)
            v = out.get(k, ZERO) + f * c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    cache[word] = out
    return out


def symmetrizer_apply(t: TensorElement, b: BraidingMatrix) -> TensorElement:
    """The quantum symmetrizer applied to a homogeneous tensor."""
    table = _braiding_table(b)
    cache = {}
    out = {}
    for w, c in t.terms.items():
        for u, p in _sym_factored(w, table, cache).items():
            out[u] = out.get(u, as_ratfunc(0)) + c * p
    return TensorElement({u: v for u, v in out.items() if v}, t.degree)


@dataclass(frozen=True)
class SymmetrizerBlock:
    degree: int
    multidegree: tuple
    words: tuple
    matrix: tuple  # rows indexed by output word, columns by input word

    @property
    def dim(self) -> int:
        return len(self.words)

    def rows(self):
        return [list(r) for r in self.matrix]

    def to_strings(self):
        return [[str(x) for x in row] for row in self.matrix]


def symmetrizer_block(m: int, mu, b: BraidingMatrix, method: str = "factored",
                      max_degree: int = DEFAULT_MAX_DEGREE) -> SymmetrizerBlock:
    """Matrix of the quantum symmetrizer on the words of multidegree ``mu``.

    ``method="direct"`` sums the Matsumoto lifts of all ``m!`` permutations;
    ``"factored"`` uses the coset factorisation and agrees with it exactly.
    """
    mu = tuple(mu)
    if sum(mu) != m:
        raise ValueError(f"multidegree {mu} does not have total degree {m}")
    if len(mu) != b.n:
        raise ValueError(f"multidegree {mu} has the wrong number of letters")
    _check_bound(m, max_degree)
    words = words_of_multidegree(mu)
    index = {w: i for i, w in enumerate(words)}
    table = _braiding_table(b)
    mat = [[ZERO] * len(words) for _ in words]
    if method == "direct":
        group = symmetric_group(m)
        for col, w in enumerate(words):
            for sigma in group:
                c, u = _crossing_apply(sigma, w, table)
                row = index.get(u)
                assert row is not None, "symmetrizer left its multidegree block"
                mat[row][col] = mat[row][col] + c
    elif method == "factored":
        cache = {}
        for col, w in enumerate(words):
            for u, c in _sym_factored(w, table, cache).items():
                row = index.get(u)
                assert row is not None, "symmetrizer left its multidegree block"
                mat[row][col] = c
    else:
        raise ValueError(f"unknown method {method!r}")
    return SymmetrizerBlock(m, mu, words, tuple(tuple(r) for r in mat))


# -- ranks, kernels and relations ------------------------------------------------------

def block_rank(block: SymmetrizerBlock) -> int:
    return len(ff_rref(block.rows())[1])


def _block_rank_job(args):
    m, mu, b, max_degree = args
    blk = symmetrizer_block(m, mu, b, max_degree=max_degree)
    return mu, block_rank(blk)


# -- relations ----------------------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    degree: int
    multidegree: tuple
    element: TensorElement

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "multidegree": list(self.multidegree),
            "relation": [{"word": list(w), "coeff": self.element.terms[w].format()}
                         for w in sorted(self.element.terms)],
        }


@dataclass(frozen=True)
class BlockResult:
    degree: int
    multidegree: tuple
    dim: int
    rank: int
    ideal_dim: int
    new_relations: tuple
    method: str  # "ideal-certified" or "exact-kernel"


@dataclass
class RelationBasis:
    """New relations per ``(degree, multidegree)`` plus the per-block data
    (rank, dimension of the ideal part) gathered on the way."""

    n: int
    max_degree: int
    blocks: dict = field(default_factory=dict)

    def relations(self) -> list:
        out = []
        for key in sorted(self.blocks):
            blk = self.blocks[key]
            out.extend(Relation(blk.degree, blk.multidegree, t) for t in blk.new_relations)
        return out

    def by_block(self) -> dict:
        return {k: list(v.new_relations) for k, v in sorted(self.blocks.items())
                if v.new_relations}

    def dimension(self, m: int) -> int:
        return sum(v.rank for (d, _), v in self.blocks.items() if d == m)

    def to_json(self, indent=None) -> str:
        return json.dumps([r.to_dict() for r in self.relations()], indent=indent,
                          sort_keys=True)


def _ideal_vectors(mu, lower):
    """Spanning set of the degree-``mu`` part of the ideal generated by
    ``lower`` (pairs of multidegree and a word -> LaurentPoly dict)."""
    out = []
    for rmu, terms in lower:
        rest = tuple(a - c for a, c in zip(mu, rmu))
        if min(rest) < 0:
            continue
        k = sum(rest)
        for w in words_of_multidegree(rest):
            for s in range(k + 1):
                u, v = w[:s], w[s:]
                out.append({u + r + v: c for r, c in terms.items()})
    return out


def _integral(t: TensorElement) -> dict:
    """Coefficients of ``t`` with denominators cleared, as Laurent polynomials."""
    den = ONE
    for c in t.terms.values():
        if not c.is_laurent():
            den = den * c.den
    return {w: (c * den).as_laurent() for w, c in t.terms.items()}


def _is_zero_vector(v):
    return all(not x for x in v)


def _solve_block(args) -> BlockResult:
    m, mu, b, lower, max_degree, method, point = args
    blk = symmetrizer_block(m, mu, b, max_degree=max_degree)
    words = blk.words
    dim = len(words)
    rows = blk.rows()
    cands = _ideal_vectors(mu, lower)
    cand_vecs = [[c.get(w, ZERO) for w in words] for c in cands]

    if method == "certified":
        try:
            m_mod = [[eval_mod(x, point) for x in row] for row in rows]
            c_mod = [[eval_mod(x, point) for x in vec] for vec in cand_vecs]
        except ZeroDivisionError:
            m_mod = None
        if m_mod is not None:
            # rank at a specialisation and independence at a specialisation are
            # both lower bounds of the generic values, and the kernel contains
            # the ideal, so equality below pins the rank down exactly
            rank_lb = len(modp_rref_pivots(m_mod))
            sel = modp_rref_pivots(c_mod)
            if rank_lb + len(sel) == dim:
                for i in sel:
                    if not _is_zero_vector(mat_vec(rows, cand_vecs[i])):
                        raise AssertionError(
                            f"ideal element outside the symmetrizer kernel at {mu}")
                return BlockResult(m, mu, dim, rank_lb, len(sel), (), "ideal-certified")
    elif method != "exact":
        raise ValueError(f"unknown method {method!r}")

    # exact kernel and the exact ideal span, columns in reverse lexicographic order
    order = list(range(dim - 1, -1, -1))
    ker = kernel(rows)
    for v in ker:
        if not _is_zero_vector(mat_vec(rows, v)):
            raise AssertionError(f"kernel vector fails to vanish at {mu}")
    ideal_piv = set()
    if cand_vecs:
        R, piv, _ = ff_rref([[v[j] for j in order] for v in cand_vecs])
        for i in range(len(piv)):
            vec = [ZERO] * dim
            for jj, j in enumerate(order):
                vec[j] = R[i][jj]
            if not _is_zero_vector(mat_vec(rows, vec)):
                raise AssertionError(f"ideal element outside the symmetrizer kernel at {mu}")
        ideal_piv = set(piv)
    new = []
    if ker:
        R, piv, d = ff_rref([[v[j] for j in order] for v in ker])
        dinv = as_ratfunc(d).inverse()
        for i, pc in enumerate(piv):
            if pc in ideal_piv:
                continue
            terms = {words[j]: as_ratfunc(R[i][jj]) * dinv for jj, j in enumerate(order)}
            new.append(TensorElement(terms, m).normalized())
    new.sort(key=lambda t: sorted(t.terms, reverse=True)[0], reverse=True)
    return BlockResult(m, mu, dim, dim - len(ker), len(ideal_piv), tuple(new), "exact-kernel")


_EVAL_POINT = 982451653  # fixed, so results are reproducible


def minimal_relations(b: BraidingMatrix, max_degree: int, jobs: int = 1,
                      method: str = "certified",
                      bound: int = DEFAULT_MAX_DEGREE) -> RelationBasis:
    """New Nichols relations in each degree up to ``max_degree``.

    For every block, the degree-``m`` part of the ideal generated by lower
    relations is spanned by the products ``u*r*v``.  A block gets new
    relations when this span is smaller than the kernel of the symmetrizer;
    they are then read off the exact kernel as a complement of the ideal.

    With ``method="certified"`` a block is first tried cheaply: the rank of
    the block at a specialisation of ``q`` (mod a large prime) and the rank
    of the ideal vectors there are lower bounds of the generic ranks, so if
    they add up to the block dimension the ideal is the whole kernel.  The
    selected ideal vectors are checked to lie in the kernel exactly.  When the
    bounds do not meet, or with ``method="exact"``, the kernel is computed by
    fraction-free elimination over Q(q).
    """
    _check_bound(max_degree, bound)
    basis = RelationBasis(b.n, max_degree)
    lower = []
    for m in range(1, max_degree + 1):
        tasks = [(m, mu, b, tuple(lower), bound, method, _EVAL_POINT)
                 for mu in compositions(m, b.n)]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_solve_block, tasks))
        else:
            results = [_solve_block(t) for t in tasks]
        for res in results:
            basis.blocks[m, res.multidegree] = res
            lower.extend((res.multidegree, _integral(t)) for t in res.new_relations)
    return basis


def nichols_dimensions(m: int, b: BraidingMatrix, jobs: int = 1,
                       max_degree: int = DEFAULT_MAX_DEGREE,
                       method: str = "certified") -> dict:
    """Rank of every multidegree block of the degree-``m`` symmetrizer.

    ``method="bareiss"`` runs fraction-free elimination on each block
    directly; the other methods go through :func:`minimal_relations`.
    """
    _check_bound(m, max_degree)
    mus = compositions(m, b.n)
    if method == "bareiss":
        tasks = [(m, mu, b, max_degree) for mu in mus]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = dict(pool.map(_block_rank_job, tasks))
        else:
            results = dict(map(_block_rank_job, tasks))
        return {mu: results[mu] for mu in mus}
    rel = _cached_relations(b, m, method, max_degree, jobs)
    return {mu: rel.blocks[m, mu].rank for mu in mus}


_RELATION_CACHE = {}


def _cached_relations(b, m, method, bound, jobs):
    key = (b, method, bound)
    hit = _RELATION_CACHE.get(key)
    if hit is None or hit.max_degree < m:
        hit = minimal_relations(b, m, jobs=jobs, method=method, bound=bound)
        _RELATION_CACHE[key] = hit
    return hit


def nichols_dimension(m: int, b: BraidingMatrix, jobs: int = 1,
                      max_degree: int = DEFAULT_MAX_DEGREE,
                      method: str = "certified") -> int:
    """Dimension of the degree-``m`` component of the Nichols algebra."""
    return sum(nichols_dimensions(m, b, jobs=jobs, max_degree=max_degree,
                                  method=method).values())


# -- coproduct ---------------------------------------------------------------------------

def braided_coproduct(t: TensorElement, b: BraidingMatrix) -> dict:
    """``Delta(t)`` as a map ``(left word, right word) -> coefficient``.

    For a word ``w`` and a set ``S`` of positions, the term ``w|S (x) w|S^c``
    carries the factor ``q_{w_j w_i}`` for each ``j`` in ``S^c`` and ``i`` in
    ``S`` with ``j < i``: letters sent left braid past the letters before
    them that stay right.  This is the multiplicative extension of
    ``Delta(x) = x (x) 1 + 1 (x) x`` for ``(x (x) y)(u (x) v) = x c(y (x) u) v``.
    """
    table = _braiding_table(b)
    out = {}
    for w, coeff in t.terms.items():
        m = len(w)
        for k in range(m + 1):
            for S in combinations(range(m), k):
                Sset = set(S)
                f = ONE
                for i in S:
                    for j in range(i):
                        if j not in Sset:
                            f = f * table[w[j], w[i]]
                left = tuple(w[i] for i in S)
                right = tuple(w[j] for j in range(m) if j not in Sset)
                key = (left, right)
                v = out.get(key, as_ratfunc(0)) + coeff * f
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return out


def is_primitive(t: TensorElement, b: BraidingMatrix) -> bool:
    """Whether ``Delta(t) = t (x) 1 + 1 (x) t``."""
    if not isinstance(t, TensorElement):
        raise TypeError("expected a TensorElement")
    if t.degree < 1:
        raise ValueError("primitivity needs a homogeneous element of degree >= 1")
    expected = {}
    for w, c in t.terms.items():
        expected[w, ()] = c
        expected[(), w] = c
    return braided_coproduct(t, b) == expected


def serre_element(cd, i: int, j: int) -> TensorElement:
    """Quantum Serre element ``sum_nu (-1)^nu [1-a_ij, nu]_{q^d_i}
    x_i^(1-a_ij-nu) x_j x_i^nu`` (1-based ``i != j``)."""
    from uqplus.scalar import q_binom

    a = cd.C[i - 1][j - 1]
    top = 1 - a
    terms = {}
    for nu in range(top + 1):
        w = (i,) * (top - nu) + (j,) + (i,) * nu
        terms[w] = q_binom(top, nu, cd.d[i - 1]) * (-1) ** nu
    return TensorElement(terms, top + 1)
