"""Exact scalars: Laurent polynomials in ``q`` over the rationals and their
fraction field.

Coefficients are Python ``int`` whenever integral and ``fractions.Fraction``
otherwise.  Both :class:`LaurentPoly` and :class:`RatFunc` are immutable.

Quantum integers use the balanced convention, so ``q_int(3, 1)`` is
``q^2 + 1 + q^-2`` and every quantum binomial is invariant under
``q -> q^-1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "Q",
    "ONE",
    "ZERO",
    "q_int",
    "q_factorial",
    "q_binom",
    "as_ratfunc",
    "format_term",
]

# Above this many terms (both operands) integer products go through
# Kronecker substitution instead of the term-by-term convolution.
_KRONECKER_MIN_TERMS = 24


def _clean(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _coerce_coeff(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(c, int):
        return int(c)
    if isinstance(c, Fraction):
        return _clean(c)
    if isinstance(c, Rational):
        return _clean(Fraction(c.numerator, c.denominator))
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


# -- Kronecker substitution helpers -------------------------------------------

def _pack(coeffs, nbytes):
    pos = b"".join(max(c, 0).to_bytes(nbytes, "little") for c in coeffs)
    neg = b"".join(max(-c, 0).to_bytes(nbytes, "little") for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(x, n, nbytes):
    # balanced digits: every coefficient must satisfy |c| < 2**(8*nbytes - 1)
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * n, "little")
    raw = (x + offset).to_bytes(n * nbytes + 1, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
            for i in range(n)]


def _dense(terms):
    lo = min(terms)
    hi = max(terms)
    out = [0] * (hi - lo + 1)
    for e, c in terms.items():
        out[e - lo] = c
    return lo, out


def _kron_mul(a, b):
    la, da = _dense(a)
    lb, db = _dense(b)
    bound = max(abs(c) for c in da) * max(abs(c) for c in db) * min(len(da), len(db))
    nbytes = (bound.bit_length() + 2) // 8 + 1
    prod = _pack(da, nbytes) * _pack(db, nbytes)
    n = len(da) + len(db) - 1
    coeffs = _unpack(prod, n, nbytes)
    lo = la + lb
    return {lo + i: c for i, c in enumerate(coeffs) if c}


def _conv_mul(a, b):
    out: dict = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = get(e, 0) + ca * cb
    return {e: _clean(c) for e, c in out.items() if c}


def _all_int(terms):
    return all(type(c) is int for c in terms.values())


class LaurentPoly:
    """Sparse Laurent polynomial ``sum c_e q^e`` with rational coefficients.

    >>> LaurentPoly({2: 1, 0: 1, -2: 1})
    LaurentPoly('q^2 + 1 + q^-2')
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in dict(terms).items():
                c = _coerce_coeff(c)
                if c:
                    t[int(e)] = c
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p._t = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def const(cls, c) -> LaurentPoly:
        return cls({0: c})

    # -- inspection ----------------------------------------------------------
    @property
    def terms(self) -> dict:
        """Copy of the exponent -> coefficient map."""
        return dict(self._t)

    def items(self):
        return self._t.items()

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._t.get(0, 0)

    def coeff(self, exp: int):
        return self._t.get(exp, 0)

    def valuation(self) -> int:
        if not self._t:
            raise ValueError("zero polynomial has no valuation")
        return min(self._t)

    def degree(self) -> int:
        if not self._t:
            raise ValueError("zero polynomial has no degree")
        return max(self._t)

    def leading_coeff(self):
        return self._t[self.degree()]

    def has_integer_coeffs(self) -> bool:
        return _all_int(self._t)

    # -- arithmetic ------------------------------------------------------------
    def _other(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, bool):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if len(o._t) > len(self._t):
            a, b = o._t, self._t
        else:
            a, b = self._t, o._t
        out = dict(a)
        for e, c in b.items():
            v = _clean(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self._t, o._t
        if not a or not b:
            return LaurentPoly._raw({})
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({e + eb: _clean(c * cb) for e, c in a.items()})
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly._raw({e + ea: _clean(c * ca) for e, c in b.items()})
        if (len(a) >= _KRONECKER_MIN_TERMS and len(b) >= _KRONECKER_MIN_TERMS
                and _all_int(a) and _all_int(b)):
            return LaurentPoly._raw(_kron_mul(a, b))
        return LaurentPoly._raw(_conv_mul(a, b))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._t.items()
            return LaurentPoly({e * n: Fraction(1, 1) / Fraction(c) ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q^k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._t.items()})

    def scale(self, c) -> LaurentPoly:
        c = _coerce_coeff(c)
        if not c:
            return ZERO
        return LaurentPoly._raw({e: _clean(v * c) for e, v in self._t.items()})

    def bar(self) -> LaurentPoly:
        """The image under ``q -> q^-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._t.items()})

    def evaluate(self, x):
        """Exact value at a nonzero rational ``x``."""
        x = Fraction(x)
        if x == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
        return _clean(sum((c * x ** e for e, c in self._t.items()), Fraction(0)))

    def content(self) -> Fraction:
        """Positive rational ``c`` with ``self / c`` a primitive integer polynomial."""
        if not self._t:
            return Fraction(0)
        den = 1
        for c in self._t.values():
            if type(c) is Fraction:
                den = lcm(den, c.denominator)
        num = 0
        for c in self._t.values():
            num = gcd(num, int(c * den))
        return Fraction(num, den)

    def divmod_exact(self, other: LaurentPoly) -> LaurentPoly:
        """Quotient ``self / other``; raises ``ArithmeticError`` if inexact."""
        if not other._t:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self._t:
            return ZERO
        if len(other._t) == 1:
            (e, c), = other._t.items()
            inv = Fraction(1) / c
            return LaurentPoly._raw({k - e: _clean(v * inv) for k, v in self._t.items()})
        if (len(self._t) >= _KRONECKER_MIN_TERMS and _all_int(self._t)
                and _all_int(other._t)):
            quo = _kron_div(self._t, other._t)
            if quo is not None:
                return LaurentPoly._raw(quo)
        return _long_div(self, other)

    def exact_div(self, other) -> LaurentPoly:
        o = self._other(other)
        if o is None:
            raise TypeError("exact_div expects a Laurent polynomial or rational")
        return self.divmod_exact(o)

    # -- comparison / hashing ----------------------------------------------------
    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def sort_key(self):
        return tuple(sorted(self._t.items()))

    # -- text --------------------------------------------------------------------
    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly({self.format()!r})"

    def format(self, compact: bool = False) -> str:
        """Canonical text, terms by decreasing exponent (``q^2 + 1 + q^-2``).

        ``compact`` drops the spaces around the binary signs, the form used
        inside parenthesised coefficients.
        """
        if not self._t:
            return "0"
        plus, minus = (("+", "-") if compact else (" + ", " - "))
        out = []
        for i, e in enumerate(sorted(self._t, reverse=True)):
            c = self._t[e]
            neg = c < 0
            a = -c if neg else c
            body = _term_text(a, e)
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((minus if neg else plus) + body)
        return "".join(out)


def _term_text(a, e):
    if e == 0:
        return str(a)
    mono = "q" if e == 1 else f"q^{e}"
    if a == 1:
        return mono
    return f"{a}*{mono}"


def _kron_div(n_terms, d_terms):
    ln, dn = _dense(n_terms)
    ld, dd = _dense(d_terms)
    qlen = len(dn) - len(dd) + 1
    if qlen <= 0 or dn[-1] % dd[-1] or dn[0] % dd[0]:
        return None
    norm2 = sum(c * c for c in dn)
    bits = norm2.bit_length() // 2 + 1 + max(qlen, len(dd)) + 2
    nbytes = bits // 8 + 1
    num = _pack(dn, nbytes)
    den = _pack(dd, nbytes)
    quo, rem = divmod(num, den)
    if rem:
        return None
    coeffs = _unpack(quo, qlen, nbytes)
    result = {ln - ld + i: c for i, c in enumerate(coeffs) if c}
    if not result or _kron_mul(result, d_terms) != n_terms:
        return None
    return result


def _long_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    n = _poly_coeffs(num)
    d = _poly_coeffs(den)
    shift = num.valuation() - den.valuation()
    quo, rem = _poly_divmod(n, d)
    if any(rem):
        raise ArithmeticError(f"inexact division of ({num}) by ({den})")
    return LaurentPoly({i + shift: c for i, c in enumerate(quo) if c})


# -- dense univariate polynomials over Q (lowest degree first) -------------------

def _poly_coeffs(p: LaurentPoly):
    """Dense coefficient list of ``p`` divided by its lowest power of ``q``."""
    v = p.valuation()
    out = [0] * (p.degree() - v + 1)
    for e, c in p.items():
        out[e - v] = c
    return out


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a, b):
    a = list(a)
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError
    lb = b[-1]
    if len(a) < len(b):
        return [0], a
    quo = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        if c:
            c = _clean(Fraction(c) / lb)
            quo[i] = c
            for j, bj in enumerate(b):
                a[i + j] = _clean(a[i + j] - c * bj)
    rem = _trim(a[: len(b) - 1])
    return quo, rem


def _poly_gcd(a, b):
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, _trim(list(r))
    if not a:
        return [0]
    lc = Fraction(a[-1])
    return [_clean(Fraction(c) / lc) for c in a]


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})


# -- rational functions ------------------------------------------------------------

class RatFunc:
    """Element of Q(q) stored as a canonical pair of Laurent polynomials.

    Canonical form: numerator and denominator coprime, denominator with
    valuation 0, integer coefficients of gcd 1 and a positive leading
    coefficient.  Equality is then a structural comparison.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = _as_laurent(num)
        den = ONE if den is None else _as_laurent(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == ONE

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def _other(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, LaurentPoly):
            return RatFunc._raw(other, ONE)
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, bool):
            return RatFunc._raw(LaurentPoly.const(other), ONE)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == ONE and o.den == ONE:
            return RatFunc._raw(self.num + o.num, ONE)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == ONE and o.den == ONE:
            return RatFunc._raw(self.num * o.num, ONE)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def bar(self) -> RatFunc:
        return RatFunc(self.num.bar(), self.den.bar())

    def evaluate(self, x):
        d = self.den.evaluate(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return _clean(Fraction(self.num.evaluate(x)) / d)

    def exact_eq(self, other) -> bool:
        """Equality by cross multiplication (independent of normalization)."""
        o = self._other(other)
        return self.num * o.den == o.num * self.den

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def sort_key(self):
        return (self.num.sort_key(), self.den.sort_key())

    def format(self, compact: bool = False) -> str:
        if self.den == ONE:
            return self.num.format(compact)
        num = self.num.format(True)
        den = self.den.format(True)
        if len(self.num) > 1:
            num = f"({num})"
        if len(self.den) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"RatFunc({self.format()!r})"


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, RatFunc):
        return x.as_laurent()
    return LaurentPoly.const(x)


def as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc._raw(x, ONE)
    return RatFunc._raw(LaurentPoly.const(x), ONE)


def _normalize(num: LaurentPoly, den: LaurentPoly):
    if num.is_zero():
        return ZERO, ONE
    if len(den) > 1:
        g = _poly_gcd(_poly_coeffs(num), _poly_coeffs(den))
        if len(g) > 1:
            gp = LaurentPoly({i: c for i, c in enumerate(g) if c})
            num = num.divmod_exact(gp)
            den = den.divmod_exact(gp)
    shift = -den.valuation()
    num = num.shift(shift)
    den = den.shift(shift)
    scale = Fraction(1) / den.content()
    if den.leading_coeff() < 0:
        scale = -scale
    return num.scale(scale), den.scale(scale)


# -- quantum numbers -------------------------------------------------------------------

@lru_cache(maxsize=None)
def q_int(n: int, d: int = 1) -> LaurentPoly:
    """Balanced quantum integer ``[n]_{q^d}``."""
    if n < 0:
        raise ValueError(f"quantum integer needs n >= 0, got {n}")
    if d == 0:
        raise ValueError("quantum integer needs d != 0")
    return LaurentPoly({d * (n - 1 - 2 * k): 1 for k in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int, d: int = 1) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"quantum factorial needs n >= 0, got {n}")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(i, d)
    return out


@lru_cache(maxsize=None)
def q_binom(n: int, k: int, d: int = 1) -> LaurentPoly:
    """Balanced Gaussian binomial ``[n choose k]_{q^d}`` by exact division."""
    if d == 0:
        raise ValueError("quantum binomial needs d != 0")
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"quantum binomial needs 0 <= k <= n, got n={n}, k={k}")
    num = q_factorial(n, d)
    den = q_factorial(k, d) * q_factorial(n - k, d)
    try:
        return num.divmod_exact(den)
    except ArithmeticError as exc:  # pragma: no cover - would contradict the q-Pascal recursion
        raise AssertionError(f"quantum binomial division not exact: {exc}") from exc


def format_term(coeff, body: str, first: bool) -> str:
    """Render ``coeff*body`` with its sign folded into the joining operator."""
    c = as_ratfunc(coeff)
    neg = c.num.leading_coeff() < 0
    if neg:
        c = -c
    if c == as_ratfunc(1):
        text = body
    else:
        ctext = c.format(True)
        if not (c.is_laurent() and c.num.is_monomial()) or ctext.startswith("-"):
            ctext = f"({ctext})"
        text = ctext if body == "1" else f"{ctext}*{body}"
    if first:
        return ("-" if neg else "") + text
    return (" - " if neg else " + ") + text
