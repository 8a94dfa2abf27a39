"""Operations on presentations: confluence, brackets, centrality,
q-normality, homomorphisms, the quotient map onto the Heisenberg algebra and
Hilbert counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from uqplus.pbw.builtins import builtin_presentation
from uqplus.pbw.core import AlgebraElement, Presentation, PresentationError
from uqplus.scalar import Q, as_ratfunc

__all__ = [
    "ConfluenceReport",
    "confluence_check",
    "q_bracket",
    "is_central",
    "NormalityReport",
    "q_normality",
    "named_element",
    "AlgebraHom",
    "HomReport",
    "hom_check",
    "torus_hom",
    "psi_weights",
    "PSI_SAMPLES",
    "omega_hom",
    "swap_hom_b2",
    "pi_hom",
    "quotient_check",
    "QuotientReport",
    "hilbert_count",
    "monomials_of_degree",
]


# -- confluence ----------------------------------------------------------------------

@dataclass
class ConfluenceReport:
    presentation: str
    overlaps: int
    failures: list = field(default_factory=list)  # (word text, left nf, right nf)

    @property
    def ok(self) -> bool:
        return not self.failures


def _letters(p: Presentation):
    out = []
    for i in range(p.n):
        out.append((i, 1))
        if i in p.localized:
            out.append((i, -1))
    return out


def _reducible(x, y) -> bool:
    return x[0] > y[0] or (x[0] == y[0] and x[1] != y[1])


def _reduce_pair(p, x, y):
    """One rewriting step on the pair ``x y`` as a free dict."""
    if x[0] == y[0]:
        return {(): as_ratfunc(1)}
    return {w: c for c, w in p._pair_rule(x, y)}


def _word_text(p, word):
    return "*".join(p.generators[g] + ("^-1" if s < 0 else "") for g, s in word)


def confluence_check(p: Presentation) -> ConfluenceReport:
    """Resolve every overlap ``x y z`` in which both ``x y`` and ``y z`` can be
    rewritten: reducing ``x y`` first and ``y z`` first must reach the same
    normal form."""
    letters = _letters(p)
    rep = ConfluenceReport(p.name, 0)
    for x, y, z in product(letters, repeat=3):
        if not (_reducible(x, y) and _reducible(y, z)):
            continue
        rep.overlaps += 1
        left = {}
        for w, c in _reduce_pair(p, x, y).items():
            left[w + (z,)] = left.get(w + (z,), as_ratfunc(0)) + c
        right = {}
        for w, c in _reduce_pair(p, y, z).items():
            right[(x,) + w] = right.get((x,) + w, as_ratfunc(0)) + c
        a = p.element({w: c for w, c in left.items() if c})
        b = p.element({w: c for w, c in right.items() if c})
        if a != b:
            rep.failures.append((_word_text(p, (x, y, z)), a.format(), b.format()))
    return rep


# -- brackets, centrality, normality ------------------------------------------------------

def _same(a: AlgebraElement, b: AlgebraElement):
    if a.presentation is not b.presentation:
        raise PresentationError("elements of different presentations")


def q_bracket(a: AlgebraElement, b: AlgebraElement, v=1) -> AlgebraElement:
    """``[a, b]_v = a*b - v*b*a``."""
    _same(a, b)
    return a * b - (b * a).scale(v)


def is_central(a: AlgebraElement) -> bool:
    p = a.presentation
    return all((a * p.gen(g) - p.gen(g) * a).is_zero() for g in p.generators)


@dataclass
class NormalityReport:
    element: str
    scalars: dict  # generator -> RatFunc (or None when no scalar works)
    residuals: dict  # generator -> AlgebraElement, only for failures

    @property
    def ok(self) -> bool:
        return not self.residuals

    def to_dict(self) -> dict:
        return {
            "element": self.element,
            "normal": self.ok,
            "scalars": {g: (None if v is None else v.format(True))
                        for g, v in self.scalars.items()},
            "residuals": {g: r.format() for g, r in self.residuals.items()},
        }


def q_normality(a: AlgebraElement) -> NormalityReport:
    """Find ``lam_g`` with ``a*g = lam_g * g*a`` for each generator ``g``.

    ``lam_g`` is read off the largest monomial of ``g*a`` that also occurs in
    ``a*g``.  When no scalar works, the residual ``lam*g*a - a*g`` for that
    best match is reported.
    """
    p = a.presentation
    scalars, residuals = {}, {}
    for g in p.generators:
        x = p.gen(g)
        ag = a * x
        ga = x * a
        lam = None
        if ga.is_zero():
            lam = as_ratfunc(1) if ag.is_zero() else None
        else:
            for m in sorted(ga.terms, reverse=True):
                if m in ag.terms:
                    lam = ag.terms[m] / ga.terms[m]
                    break
        if lam is None:
            scalars[g] = None
            residuals[g] = -ag
            continue
        res = ga.scale(lam) - ag
        scalars[g] = lam
        if not res.is_zero():
            residuals[g] = res
    return NormalityReport(a.format(), scalars, residuals)


def named_element(p: Presentation, name: str) -> AlgebraElement:
    return p.named_element(name)


# -- homomorphisms --------------------------------------------------------------------

@dataclass
class AlgebraHom:
    """Algebra map given by the images of the source generators."""

    source: Presentation
    target: Presentation
    images: dict  # generator name -> AlgebraElement of target
    name: str = "hom"

    def __post_init__(self):
        imgs = {}
        for g in self.source.generators:
            if g not in self.images:
                raise PresentationError(f"no image given for {g}")
            img = self.images[g]
            if not isinstance(img, AlgebraElement):
                img = self.target.element(img)
            if img.presentation is not self.target:
                raise PresentationError(f"image of {g} lies outside {self.target.name}")
            imgs[g] = img
        self.images = imgs

    def _image_letter(self, i, s):
        img = self.images[self.source.generators[i]]
        return img if s > 0 else img.inverse()

    def apply_free(self, free) -> AlgebraElement:
        out = self.target.scalar(0)
        for w, c in free.items():
            term = self.target.scalar(c)
            for i, s in w:
                term = term * self._image_letter(i, s)
            out = out + term
        return out

    def __call__(self, x) -> AlgebraElement:
        if isinstance(x, AlgebraElement):
            if x.presentation is not self.source:
                raise PresentationError("element outside the source algebra")
            free = {self.source._word_of(m): c for m, c in x.terms.items()}
            return self.apply_free(free)
        return self.apply_free(self.source.free(x))


@dataclass
class HomReport:
    name: str
    checked: int
    violations: list  # (relation label, residual text)

    @property
    def ok(self) -> bool:
        return not self.violations


def hom_check(h: AlgebraHom) -> HomReport:
    """Every rule ``g_b g_a - rhs`` and every extra relation of the source
    must map to zero in the target."""
    src = h.source
    violations = []
    checked = 0
    for (b, a) in sorted(src.rules):
        lhs = h.images[src.generators[b]] * h.images[src.generators[a]]
        rhs = h(src.rule_element(b, a))
        res = lhs - rhs
        checked += 1
        if not res.is_zero():
            violations.append((src.rule_label(b, a), res.format()))
    for label, text in src.extra_relations:
        res = h.apply_free(src.free(text))
        checked += 1
        if not res.is_zero():
            violations.append((label, res.format()))
    return HomReport(h.name, checked, violations)


def torus_hom(p: Presentation, weights) -> AlgebraHom:
    """Diagonal map ``g -> weight_g * g`` with weights given per generator."""
    return AlgebraHom(p, p, {g: p.gen(g).scale(weights[g]) for g in p.generators},
                      name="torus")


def psi_weights(alpha, beta) -> dict:
    """Weights of the torus automorphism of U+(B2) with ``e1 -> alpha e1`` and
    ``e2 -> beta e2``."""
    a, b = as_ratfunc(alpha), as_ratfunc(beta)
    return {"e1": a, "e2": b, "e3": a * b, "z": a * b * b}


# sample points for the parameters of psi; every relation is a polynomial of
# degree at most 4 in each parameter, so 5 values per parameter determine it
PSI_SAMPLES = (Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 7), Fraction(-11, 3))


def omega_hom() -> AlgebraHom:
    h = builtin_presentation("heisenberg")
    return AlgebraHom(h, h, {
        "E1": h.gen("E2"),
        "E2": h.gen("E1"),
        "E3": h.element("E2*E1 - q^2*E1*E2"),
    }, name="omega")


def swap_hom_b2() -> AlgebraHom:
    """The would-be map exchanging ``e1`` and ``e2`` (not an automorphism).

    ``e3`` and ``z`` go to the images of their defining brackets."""
    b = builtin_presentation("b2")
    e3 = b.element("e2*e1 - q^2*e1*e2")
    z = q_bracket(b.gen("e1"), e3, Q ** 2)
    return AlgebraHom(b, b, {"e1": b.gen("e2"), "e2": b.gen("e1"), "e3": e3, "z": z},
                      name="swap")


def pi_hom() -> AlgebraHom:
    """The quotient map of U+(B2) onto the Heisenberg algebra."""
    b = builtin_presentation("b2")
    h = builtin_presentation("heisenberg")
    return AlgebraHom(b, h, {
        "e1": h.gen("E1"),
        "e2": h.gen("E2"),
        "e3": h.element("E1*E2 - q^2*E2*E1"),
        "z": h.scalar(0),
    }, name="pi")


@dataclass
class QuotientReport:
    hom: HomReport
    pi_z_zero: bool
    pi_e3_is_E3: bool
    pi_zp_matches: bool
    pi_s1_zero: bool
    pi_zp: str

    @property
    def ok(self) -> bool:
        return self.hom.ok and self.pi_z_zero and self.pi_e3_is_E3 and \
            self.pi_zp_matches and self.pi_s1_zero


def quotient_check() -> QuotientReport:
    """``e1 -> E1, e2 -> E2, z -> 0`` is an algebra map with ``pi(e3) = E3``
    and ``pi(z') = (1 - q^-2) Omega``."""
    pi = pi_hom()
    b = builtin_presentation("b2")
    h = builtin_presentation("heisenberg")
    rep = hom_check(pi)
    pzp = pi(b.named_element("zp"))
    return QuotientReport(
        hom=rep,
        pi_z_zero=pi(b.gen("z")).is_zero(),
        pi_e3_is_E3=pi(b.element("e1*e2 - q^2*e2*e1")) == h.gen("E3"),
        pi_zp_matches=pzp == h.element("(1-q^-2)*Omega"),
        pi_s1_zero=pi(b.element(dict(b.extra_relations)["S1"])).is_zero(),
        pi_zp=pzp.format(),
    )


# -- Hilbert series ----------------------------------------------------------------------

def monomials_of_degree(p: Presentation, m: int):
    """Exponent vectors of total degree ``m`` by lattice-point enumeration."""
    if p.localized:
        raise PresentationError(f"{p.name} has localized generators; degrees are unbounded")
    out = []

    def rec(i, remaining, acc):
        if i == p.n:
            if remaining == 0:
                out.append(tuple(acc))
            return
        d = p.degrees[i]
        for e in range(remaining // d + 1):
            acc.append(e)
            rec(i + 1, remaining - e * d, acc)
            acc.pop()

    rec(0, m, [])
    return out


def hilbert_count(p: Presentation, max_degree: int):
    """Number of PBW monomials in each degree ``0..max_degree``."""
    return [len(monomials_of_degree(p, m)) for m in range(max_degree + 1)]
