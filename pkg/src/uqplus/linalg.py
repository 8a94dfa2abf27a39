"""Fraction-free elimination over Q[q, q^-1].

Matrices are lists of rows of :class:`~uqplus.scalar.LaurentPoly`.  Ranks,
kernels and determinants are those over the fraction field Q(q); every
division performed is exact in the Laurent ring.
"""

from __future__ import annotations

from fractions import Fraction

from uqplus.scalar import ONE, ZERO, LaurentPoly, RatFunc, as_ratfunc

__all__ = [
    "ff_rref",
    "rank",
    "kernel",
    "mat_vec",
    "specialize",
    "rational_rank",
    "rational_rref",
    "ratfunc_det",
    "MODULUS",
    "eval_mod",
    "modp_rref_pivots",
]

# Prime used for rank lower bounds at a specialisation of q.
MODULUS = (1 << 61) - 1


def _cost(p: LaurentPoly):
    return (len(p), p.degree() - p.valuation())


def ff_rref(rows):
    """Fraction-free Gauss-Jordan elimination (Bareiss style).

    Returns ``(R, pivots, d)`` where ``R`` is the reduced matrix, ``pivots``
    the pivot columns in row order and ``d`` the common value of every
    pivot entry.  In ``R`` each pivot column is ``d`` times a unit vector.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, [], ONE
    nrows, ncols = len(m), len(m[0])
    prev = ONE
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        for i in range(r, nrows):
            entry = m[i][c]
            if entry and (best is None or _cost(entry) < _cost(m[best][c])):
                best = i
        if best is None:
            continue
        m[r], m[best] = m[best], m[r]
        piv = m[r][c]
        prow = m[r]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            for j in range(ncols):
                if j == c:
                    continue
                a = piv * row[j] if row[j] else ZERO
                if f and prow[j]:
                    a = a - f * prow[j]
                row[j] = a.divmod_exact(prev) if a else ZERO
            row[c] = ZERO
        pivots.append(c)
        prev = piv
        r += 1
    for i in range(r, nrows):
        m[i] = [ZERO] * ncols
    return m, pivots, prev


def rank(rows) -> int:
    return len(ff_rref(rows)[1])


def kernel(rows, ncols: int | None = None):
    """Basis of the right kernel over Q(q), as vectors of Laurent polynomials.

    One vector per free column ``f``: entry ``d`` at ``f`` and ``-R[i][f]``
    at the ``i``-th pivot column.
    """
    if not rows:
        n = ncols or 0
        return [[ONE if j == f else ZERO for j in range(n)] for f in range(n)]
    R, pivots, d = ff_rref(rows)
    n = len(rows[0])
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = d
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][f]
        basis.append(_primitive(v))
    return basis


def _primitive(v):
    """Divide out the largest power of q common to all entries."""
    nz = [x for x in v if x]
    if not nz:
        return v
    shift = min(x.valuation() for x in nz)
    if shift:
        v = [x.shift(-shift) for x in v]
    return v


def mat_vec(rows, v):
    out = []
    for row in rows:
        acc = ZERO
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def specialize(rows, value):
    """Exact rational matrix obtained by substituting ``q = value``."""
    return [[p.evaluate(value) for p in row] for row in rows]


def rational_rref(rows):
    """Gauss-Jordan over Q; returns ``(R, pivots)``."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rational_rank(rows) -> int:
    return len(rational_rref(rows)[1])


def ratfunc_det(rows) -> RatFunc:
    """Determinant of a square matrix over Q(q) by Gaussian elimination."""
    m = [[as_ratfunc(x) for x in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    det = as_ratfunc(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return as_ratfunc(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        p = m[c][c]
        det = det * p
        inv = p.inverse()
        for i in range(c + 1, n):
            f = m[i][c]
            if f:
                f = f * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def eval_mod(p: LaurentPoly, x: int, modulus: int = MODULUS) -> int:
    """Image of ``p(x)`` in Z/modulus.  Raises ZeroDivisionError when a
    coefficient denominator is not invertible."""
    acc = 0
    xinv = None
    for e, c in p.items():
        if e >= 0:
            xe = pow(x, e, modulus)
        else:
            if xinv is None:
                xinv = pow(x, -1, modulus)
            xe = pow(xinv, -e, modulus)
        if isinstance(c, Fraction):
            if c.denominator % modulus == 0:
                raise ZeroDivisionError("coefficient denominator vanishes mod p")
            c = c.numerator * pow(c.denominator, -1, modulus)
        acc = (acc + c * xe) % modulus
    return acc


def modp_rref_pivots(rows, modulus: int = MODULUS):
    """Greedy row selection over Z/modulus.

    Returns the indices of the rows that are independent of the rows before
    them.  Their number is the rank of the reduced matrix.
    """
    basis = {}  # pivot column -> normalised row
    chosen = []
    for idx, row in enumerate(rows):
        v = [x % modulus for x in row]
        for c, b in basis.items():
            f = v[c]
            if f:
                v = [(a - f * bb) % modulus for a, bb in zip(v, b)]
        piv = next((c for c, a in enumerate(v) if a), None)
        if piv is None:
            continue
        inv = pow(v[piv], -1, modulus)
        v = [a * inv % modulus for a in v]
        for c, b in basis.items():
            f = b[piv]
            if f:
                basis[c] = [(a - f * bb) % modulus for a, bb in zip(b, v)]
        basis[piv] = v
        chosen.append(idx)
    return chosen
