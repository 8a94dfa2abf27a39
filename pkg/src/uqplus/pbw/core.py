"""Presentations by ordered generators and rewrite rules, the rewriting
engine and normal-form algebra elements.

A presentation lists generators ``g_0 < g_1 < ...`` and, for every pair
``b > a``, a rule ``g_b g_a -> lam g_a g_b + tail`` whose right side is a
combination of ordered (PBW) monomials.  Monomials are exponent vectors
aligned with the generator order; localized generators may carry negative
exponents.

Products are normalised by multiplying a PBW monomial by one letter at a
time: if the letter is not smaller than the last generator of the monomial
it is appended, otherwise the last letter is moved past it with the
matching rule.  Results are memoised per ``(monomial, letter)``.

Rules for inverse letters are derived from the given ones.  From
``g_b g_a = lam g_a g_b + T``::

    g_b g_a^-1 = lam^-1 g_a^-1 g_b - lam^-1 g_a^-1 T g_a^-1

and a pure ``q``-commutation ``g_b g_a = lam g_a g_b`` gives
``g_b^s g_a^t = lam^(st) g_a^t g_b^s``.  A rule with a tail may not have a
localized left generator.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

from uqplus.expr import ExprEvalError, eval_free, eval_scalar, parse_expr
from uqplus.scalar import LaurentPoly, RatFunc, as_ratfunc, format_term

__all__ = [
    "PresentationError",
    "RewriteLimitError",
    "Presentation",
    "AlgebraElement",
    "normal_form",
    "STEP_GUARD",
]

STEP_GUARD = 10 ** 7

if sys.getrecursionlimit() < 10000:
    sys.setrecursionlimit(10000)


class PresentationError(ValueError):
    """Malformed presentation data."""


class RewriteLimitError(RuntimeError):
    """Rewriting exceeded the step guard."""


_ONE = as_ratfunc(1)
_ZERO = as_ratfunc(0)


def _acc(out, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class _Guard:
    __slots__ = ("steps", "limit")

    def __init__(self, limit):
        self.steps = 0
        self.limit = limit

    def tick(self):
        self.steps += 1
        if self.steps > self.limit:
            raise RewriteLimitError(
                f"more than {self.limit} rewriting steps; the presentation does not terminate")


class Presentation:
    """Ordered generators, gradings, rewrite rules and optional extras.

    ``rules`` maps ``(b, a)`` (generator indices, ``b > a``) to the right
    side as ``{monomial: RatFunc}``.  ``extra_relations`` are labelled
    expressions expected to vanish (checked by homomorphism tests), and
    ``named`` are labelled defining expressions of distinguished elements.
    Instances are treated as immutable.
    """

    def __init__(self, name, generators, degrees, rules, multidegrees=None,
                 localized=(), extra_relations=(), named=(), step_guard=STEP_GUARD):
        self.name = name
        self.generators = tuple(generators)
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise PresentationError("duplicate generator names")
        for g in self.generators:
            if g == "q" or not g.replace("_", "a").replace("'", "a").isalnum() or g[0].isdigit():
                raise PresentationError(f"bad generator name {g!r}")
        self.degrees = tuple(int(d) for d in degrees)
        if len(self.degrees) != n:
            raise PresentationError("one degree per generator expected")
        self.multidegrees = None if multidegrees is None else tuple(tuple(m) for m in multidegrees)
        if self.multidegrees is not None and len(self.multidegrees) != n:
            raise PresentationError("one multidegree per generator expected")
        self.localized = frozenset(self.index(g) if isinstance(g, str) else int(g)
                                   for g in localized)
        self.rules = {}
        for (b, a), rhs in dict(rules).items():
            b = self.index(b) if isinstance(b, str) else b
            a = self.index(a) if isinstance(a, str) else a
            self.rules[b, a] = {tuple(m): as_ratfunc(c) for m, c in rhs.items() if c}
        self.extra_relations = tuple(extra_relations)
        self.named = tuple(named)
        self.step_guard = step_guard
        self._validate()
        self._pair_cache = {}
        self._memo = {}
        self._named_cache = {}

    # -- basic data -----------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise PresentationError(f"unknown generator {name!r} in {self.name}") from None

    def unit_monomial(self):
        return (0,) * self.n

    def generator_monomial(self, i):
        e = [0] * self.n
        e[i] = 1
        return tuple(e)

    def degree_of(self, mono) -> int:
        return sum(d * e for d, e in zip(self.degrees, mono))

    def multidegree_of(self, mono):
        if self.multidegrees is None:
            return None
        k = len(self.multidegrees[0])
        return tuple(sum(md[j] * e for md, e in zip(self.multidegrees, mono)) for j in range(k))

    def format_monomial(self, mono) -> str:
        parts = []
        for g, e in zip(self.generators, mono):
            if e == 1:
                parts.append(g)
            elif e:
                parts.append(f"{g}^{e}")
        return "*".join(parts) or "1"

    def __repr__(self):
        return f"Presentation({self.name!r}, {self.generators})"

    # -- validation -----------------------------------------------------------------
    def _validate(self):
        n = self.n
        for b in range(n):
            for a in range(b):
                if (b, a) not in self.rules:
                    raise PresentationError(
                        f"missing rule for {self.generators[b]}*{self.generators[a]}")
        for (b, a), rhs in self.rules.items():
            label = f"{self.generators[b]}*{self.generators[a]}"
            if not b > a:
                raise PresentationError(f"rule {label}: left side must be in decreasing order")
            lead = self.generator_monomial(a)
            lead = tuple(x + y for x, y in zip(lead, self.generator_monomial(b)))
            if lead not in rhs:
                raise PresentationError(f"rule {label}: no term in {self.format_monomial(lead)}")
            deg = self.degrees[a] + self.degrees[b]
            md = self.multidegree_of(lead)
            for mono in rhs:
                for i, e in enumerate(mono):
                    if e < 0 and i not in self.localized:
                        raise PresentationError(f"rule {label}: negative power of a "
                                                f"non-localized generator")
                if self.degree_of(mono) != deg:
                    raise PresentationError(f"rule {label}: right side not homogeneous "
                                            f"of degree {deg}")
                if md is not None and self.multidegree_of(mono) != md:
                    raise PresentationError(f"rule {label}: right side not of "
                                            f"multidegree {md}")
            if len(rhs) > 1 and b in self.localized:
                raise PresentationError(f"rule {label}: a localized left generator "
                                        f"needs a pure q-commutation")
        for i in range(n):
            if self.degrees[i] <= 0 and i not in self.localized:
                raise PresentationError("generator degrees must be positive")

    # -- rewriting engine --------------------------------------------------------------
    def _word_of(self, mono):
        out = []
        for i, e in enumerate(mono):
            s = 1 if e > 0 else -1
            out.extend([(i, s)] * abs(e))
        return tuple(out)

    def _pair_rule(self, x, y):
        """Right side of the letter pair ``x y`` with ``gen(x) > gen(y)`` as a
        list of ``(coefficient, word)``."""
        key = (x, y)
        hit = self._pair_cache.get(key)
        if hit is not None:
            return hit
        (b, s), (a, t) = x, y
        rhs = self.rules[b, a]
        lead = tuple(u + v for u, v in zip(self.generator_monomial(a), self.generator_monomial(b)))
        lam = rhs[lead]
        tail = [(c, self._word_of(m)) for m, c in rhs.items() if m != lead]
        if not tail:
            out = [(lam ** (s * t), ((a, t), (b, s)))]
        elif s == 1 and t == 1:
            out = [(lam, ((a, 1), (b, 1)))] + tail
        elif s == 1 and t == -1:
            inv = lam.inverse()
            out = [(inv, ((a, -1), (b, 1)))]
            out += [(-inv * c, ((a, -1),) + w + ((a, -1),)) for c, w in tail]
        else:  # excluded by validation
            raise PresentationError("localized left generator with a tail")
        self._pair_cache[key] = out
        return out

    def _mono_letter(self, mono, x, guard):
        key = (mono, x)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        guard.tick()
        g, s = x
        if s < 0 and g not in self.localized:
            raise PresentationError(f"{self.generators[g]} is not invertible in {self.name}")
        k = max((i for i, e in enumerate(mono) if e), default=-1)
        if k <= g:
            new = list(mono)
            new[g] += s
            res = {tuple(new): _ONE}
        else:
            e = mono[k]
            sign = 1 if e > 0 else -1
            rest = list(mono)
            rest[k] -= sign
            rest = tuple(rest)
            res = {}
            for c, w in self._pair_rule((k, sign), x):
                for m, v in self._mono_word(rest, w, guard).items():
                    _acc(res, m, c * v)
        self._memo[key] = res
        return res

    def _mono_word(self, mono, word, guard):
        cur = {mono: _ONE}
        for x in word:
            nxt = {}
            for m, c in cur.items():
                for m2, c2 in self._mono_letter(m, x, guard).items():
                    _acc(nxt, m2, c * c2)
            cur = nxt
        return cur

    def _normalize_free(self, free, guard=None):
        guard = guard or _Guard(self.step_guard)
        out = {}
        unit = self.unit_monomial()
        for w, c in free.items():
            for m, v in self._mono_word(unit, w, guard).items():
                _acc(out, m, c * v)
        return out

    # -- parsing -------------------------------------------------------------------------
    def _resolve(self, name, offset, exponent):
        if name in self.generators:
            i = self.generators.index(name)
            if exponent < 0 and i not in self.localized:
                raise ExprEvalError(offset, f"negative power of {name}, which is not "
                                            f"localized in {self.name}")
            s = 1 if exponent > 0 else -1
            return {((i, s),) * abs(exponent): _ONE}
        if name in dict(self.named):
            el = self.named_element(name)
            if exponent < 0:
                el = el.inverse()
                exponent = -exponent
            val = el ** exponent
            return {self._word_of(m): c for m, c in val.terms.items()}
        raise ExprEvalError(offset, f"unknown name {name!r} in {self.name}")

    def free(self, text):
        """Expression (text or AST) as a free-algebra dict word -> coefficient."""
        ast = parse_expr(text) if isinstance(text, str) else text
        return eval_free(ast, self._resolve)

    def element(self, expr) -> AlgebraElement:
        """Normal form of an expression, a free dict, or an element."""
        if isinstance(expr, AlgebraElement):
            if expr.presentation is not self:
                raise PresentationError("element belongs to another presentation")
            return expr
        if isinstance(expr, dict):
            free = expr
        else:
            free = self.free(expr)
        return AlgebraElement(self, self._normalize_free(free))

    def gen(self, name) -> AlgebraElement:
        return AlgebraElement(self, {self.generator_monomial(self.index(name)): _ONE})

    def scalar(self, c) -> AlgebraElement:
        return AlgebraElement(self, {self.unit_monomial(): as_ratfunc(c)})

    def named_element(self, name) -> AlgebraElement:
        defs = dict(self.named)
        if name not in defs:
            raise KeyError(f"no element named {name!r} in {self.name}")
        hit = self._named_cache.get(name)
        if hit is None:
            self._named_cache[name] = _IN_PROGRESS
            try:
                hit = self.element(defs[name])
            finally:
                self._named_cache.pop(name, None)
            self._named_cache[name] = hit
        elif hit is _IN_PROGRESS:
            raise PresentationError(f"named element {name!r} is defined in terms of itself")
        return hit

    def rule_element(self, b, a) -> AlgebraElement:
        """Right side of the rule for ``g_b g_a``."""
        return AlgebraElement(self, dict(self.rules[b, a]))

    def rule_label(self, b, a) -> str:
        return f"{self.generators[b]}*{self.generators[a]}"

    # -- JSON ------------------------------------------------------------------------------
    def to_dict(self) -> dict:
        gens = []
        for i, g in enumerate(self.generators):
            entry = {"name": g, "degree": self.degrees[i], "localized": i in self.localized}
            if self.multidegrees is not None:
                entry["multidegree"] = list(self.multidegrees[i])
            gens.append(entry)
        rules = []
        for (b, a) in sorted(self.rules):
            rhs = self.rules[b, a]
            rules.append({
                "left": [self.generators[b], self.generators[a]],
                "right": [{"coeff": rhs[m].format(True),
                           "monomial": {g: e for g, e in zip(self.generators, m) if e}}
                          for m in sorted(rhs)],
            })
        return {
            "name": self.name,
            "generators": gens,
            "rules": rules,
            "extra_relations": [{"label": k, "expr": v} for k, v in self.extra_relations],
            "named": [{"name": k, "expr": v} for k, v in self.named],
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data) -> Presentation:
        try:
            gens = data["generators"]
            names = [g["name"] for g in gens]
            degrees = [g["degree"] for g in gens]
            mds = None
            if all("multidegree" in g for g in gens):
                mds = [tuple(g["multidegree"]) for g in gens]
            localized = [g["name"] for g in gens if g.get("localized")]
            rules = {}
            for r in data["rules"]:
                b, a = r["left"]
                rhs = {}
                for term in r["right"]:
                    mono = [0] * len(names)
                    for g, e in term["monomial"].items():
                        if g not in names:
                            raise PresentationError(f"unknown generator {g!r} in a rule")
                        mono[names.index(g)] = int(e)
                    c = eval_scalar(parse_expr(str(term["coeff"])))
                    rhs[tuple(mono)] = rhs.get(tuple(mono), _ZERO) + c
                if names.index(b) <= names.index(a):
                    raise PresentationError(f"rule {b}*{a}: left side must be decreasing")
                rules[names.index(b), names.index(a)] = rhs
            extra = [(x["label"], x["expr"]) for x in data.get("extra_relations", [])]
            named = [(x["name"], x["expr"]) for x in data.get("named", [])]
            return cls(data.get("name", "custom"), names, degrees, rules, multidegrees=mds,
                       localized=localized, extra_relations=extra, named=named)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, PresentationError):
                raise
            raise PresentationError(f"bad presentation data: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> Presentation:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PresentationError(f"json: {exc}") from exc
        return cls.from_dict(data)

    @classmethod
    def from_text_rules(cls, name, generators, degrees, rules, **kw) -> Presentation:
        """Build from rules written as ``{"e2*e1": "q^-2*e1*e2 - q^-2*e3"}``.

        Right sides must already consist of ordered monomials.
        """
        gens = list(generators)
        localized = {gens.index(g) for g in kw.get("localized", ())}
        parsed = {}
        for left, right in rules.items():
            b, a = (gens.index(x.strip()) for x in left.split("*"))

            def resolve(nm, offset, exponent):
                if nm not in gens:
                    raise ExprEvalError(offset, f"unknown generator {nm!r}")
                i = gens.index(nm)
                if exponent < 0 and i not in localized:
                    raise ExprEvalError(offset, f"{nm} is not localized")
                return {((i, 1 if exponent > 0 else -1),) * abs(exponent): _ONE}

            rhs = {}
            for w, c in eval_free(parse_expr(right), resolve).items():
                idx = [i for i, _ in w]
                if idx != sorted(idx):
                    raise PresentationError(f"rule {left}: right side term is not ordered")
                mono = [0] * len(gens)
                for i, s in w:
                    mono[i] += s
                _acc(rhs, tuple(mono), c)
            parsed[b, a] = rhs
        return cls(name, gens, degrees, parsed, **kw)


_IN_PROGRESS = object()


class AlgebraElement:
    """Combination of PBW monomials of a presentation, always in normal form."""

    __slots__ = ("presentation", "terms", "_hash")

    def __init__(self, presentation: Presentation, terms):
        self.presentation = presentation
        t = {}
        for m, c in terms.items():
            c = as_ratfunc(c)
            if c:
                t[tuple(m)] = c
        self.terms = t
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            if other.presentation is not self.presentation:
                raise PresentationError(
                    f"mixing elements of {self.presentation.name} and {other.presentation.name}")
            return other
        if isinstance(other, (int, Fraction, LaurentPoly, RatFunc)) and not isinstance(other, bool):
            return self.presentation.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            _acc(out, m, c)
        return AlgebraElement(self.presentation, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.presentation, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        c = as_ratfunc(c)
        return AlgebraElement(self.presentation, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            if self._coerce(other) is None:
                return NotImplemented
            return self.scale(other)
        o = self._coerce(other)
        p = self.presentation
        guard = _Guard(p.step_guard)
        out = {}
        for m2, c2 in o.terms.items():
            w = p._word_of(m2)
            for m1, c1 in self.terms.items():
                for m, v in p._mono_word(m1, w, guard).items():
                    _acc(out, m, c1 * c2 * v)
        return AlgebraElement(p, out)

    def __rmul__(self, other):
        if self._coerce(other) is None:
            return NotImplemented
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.presentation.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> AlgebraElement:
        """Inverse of ``c * monomial`` in localized generators."""
        if len(self.terms) != 1:
            raise ValueError("only single monomials can be inverted")
        (m, c), = self.terms.items()
        p = self.presentation
        for i, e in enumerate(m):
            if e and i not in p.localized:
                raise ValueError(f"{p.generators[i]} is not invertible in {p.name}")
        word = tuple((i, -s) for i, s in reversed(p._word_of(m)))
        return p.element({word: c.inverse()})

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.presentation is other.presentation and self.terms == other.terms
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.presentation), frozenset(self.terms.items())))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), _ZERO)

    def monomials(self):
        return sorted(self.terms)

    def degrees(self):
        return {self.presentation.degree_of(m) for m in self.terms}

    def format(self) -> str:
        """Canonical text, monomials in increasing lexicographic order of their
        exponent vectors."""
        if not self.terms:
            return "0"
        p = self.presentation
        return "".join(format_term(self.terms[m], p.format_monomial(m), i == 0)
                       for i, m in enumerate(sorted(self.terms)))

    __str__ = format

    def __repr__(self):
        return f"AlgebraElement({self.presentation.name}: {self.format()})"

    def to_dict(self) -> dict:
        p = self.presentation
        return {
            "algebra": p.name,
            "text": self.format(),
            "terms": [{"coeff": self.terms[m].format(True),
                       "monomial": {g: e for g, e in zip(p.generators, m) if e}}
                      for m in sorted(self.terms)],
        }


def normal_form(expr, p: Presentation) -> AlgebraElement:
    """Normal form of ``expr`` (text, AST, free dict or element) in ``p``."""
    return p.element(expr)
