"""Registry of displayed identities, each checked by exact normal forms.

``paper_identity(name)`` runs one check and returns an
:class:`IdentityResult`; :data:`IDENTITIES` lists them in a fixed order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from uqplus.pbw.builtins import builtin_presentation
from uqplus.pbw.ops import (
    PSI_SAMPLES,
    hom_check,
    is_central,
    omega_hom,
    psi_weights,
    q_bracket,
    q_normality,
    quotient_check,
    swap_hom_b2,
    torus_hom,
)
from uqplus.scalar import Q

__all__ = ["Identity", "IdentityResult", "IDENTITIES", "paper_identity", "identity_names"]


@dataclass(frozen=True)
class IdentityResult:
    name: str
    label: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "label": self.label, "ok": self.ok, "detail": self.detail}


@dataclass(frozen=True)
class Identity:
    name: str
    label: str
    check: Callable


def _b2():
    return builtin_presentation("b2")


def _eq(p, lhs, rhs):
    """Compare two expressions in ``p``; detail shows the difference."""
    a = p.element(lhs)
    b = p.element(rhs)
    diff = a - b
    return diff.is_zero(), f"lhs - rhs = {diff.format()}"


def _all(pairs):
    bad = [d for ok, d in pairs if not ok]
    return not bad, "; ".join(bad)


def _serre_b2():
    b = _b2()
    res = [(b.element(t).is_zero(), f"{k} -> {b.element(t).format()}")
           for k, t in b.extra_relations]
    return _all(res)


def _serre_heisenberg():
    h = builtin_presentation("heisenberg")
    return _all([(h.element(t).is_zero(), f"{k} -> {h.element(t).format()}")
                 for k, t in h.extra_relations])


def _e3_z_brackets():
    b = _b2()
    e1, e2, e3 = b.gen("e1"), b.gen("e2"), b.gen("e3")
    return _all([
        (q_bracket(e1, e2, Q ** 2) == e3, "e1*e2 - q^2*e2*e1 != e3"),
        (q_bracket(e2, e3, Q ** 2) == b.gen("z"), "e2*e3 - q^2*e3*e2 != z"),
    ])


def _z_central():
    b = _b2()
    return is_central(b.gen("z")), "z fails to commute with a generator"


def _w_expansion():
    b = _b2()
    w = q_bracket(b.gen("e2"), b.gen("e3"), 1)
    return w == b.element("z + (q^2-1)*e3*e2"), w.format()


def _w_commutations():
    b = _b2()
    return _all([
        _eq(b, "e1*w", "w*e1 + (1-q^-2)*e3^2"),
        _eq(b, "e2*w", "q^2*w*e2"),
        _eq(b, "e3*w", "q^-2*w*e3"),
    ])


def _zp_central():
    b = _b2()
    return is_central(b.named_element("zp")), "z' fails to commute with a generator"


def _zp_expansion():
    b = _b2()
    return _eq(b, "e1*w - q^-4*w*e1",
               "(1-q^-4)*(1-q^-2)*e3*e1*e2 + q^-4*(1-q^-2)*e3^2 + (1-q^-4)*z*e1")


def _e3bar_expansion():
    return _eq(_b2(), "e3bar", "(1-q^-4)*e1*e2 + q^-4*e3")


def _e3bar_e1():
    return _eq(_b2(), "e1*e3bar", "q^2*e3bar*e1")


def _e3bar_e2():
    return _eq(_b2(), "e2*e3bar - q^-2*e3bar*e2", "q^-4*z")


def _e3_e3bar():
    return _eq(_b2(), "e3*e3bar", "(1-q^-4)*q^2*e1*e3*e2 + q^-4*e3^2")


def _zp_via_e3bar():
    return _eq(_b2(), "zp", "(1-q^-2)*(e3*e3bar + (1+q^-2)*z*e1)")


_TORUS_1 = ("1/((1-q^-4)*(q^2-1))*e3^-1*e1^-1*zp + 1/(q^4-1)*e3^-1*z"
            " - 1/(q^2-1)*e1^-1*e3")
_TORUS_1_FIXED = ("1/((1-q^-4)*(q^2-1))*e3^-1*e1^-1*zp - 1/(q^2-1)*e3^-1*z"
                  " - 1/(q^4-1)*e1^-1*e3")


def _torus_1():
    return _eq(builtin_presentation("b2_localized"), "e2", _TORUS_1)


def _torus_1_derivation():
    L = builtin_presentation("b2_localized")
    s1 = L.element("(1-q^-4)*(q^2-1)*e1*e3")
    s0 = L.element("q^-4*(1-q^-2)*e3^2 + (1-q^-4)*z*e1")
    zp = L.named_element("zp")
    ok_split = zp == s1 * L.gen("e2") + s0
    inv = s1.inverse()
    rhs = inv * zp - inv * s0
    return _all([
        (ok_split, "z' != s1*e2 + s0"),
        (rhs == L.gen("e2"), f"s1^-1*z' - s1^-1*s0 = {rhs.format()}"),
    ])


def _torus_1_fixed():
    return _eq(builtin_presentation("b2_localized"), "e2", _TORUS_1_FIXED)


def _s_identity():
    b = _b2()
    return _eq(b, "e2^2*e1 - (q^2+q^-2)*e2*e1*e2 + e1*e2^2", "-q^-2*z")


def _omega_central():
    h = builtin_presentation("heisenberg")
    return is_central(h.named_element("Omega")), "Omega fails to commute with a generator"


def _omega_product():
    return _eq(builtin_presentation("heisenberg"), "Omega", "E3*E3bar")


def _omega_auto():
    h = builtin_presentation("heisenberg")
    om = omega_hom()
    rep = hom_check(om)
    img = om(h.gen("E3"))
    return _all([
        (rep.ok, f"violations {rep.violations}"),
        (img == h.element("-q^2*E3bar"), f"omega(E3) = {img.format()}"),
    ])


def _pi_quotient():
    rep = quotient_check()
    return _all([
        (rep.hom.ok, f"violations {rep.hom.violations}"),
        (rep.pi_z_zero, "pi(z) != 0"),
        (rep.pi_e3_is_E3, "pi(e3) != E3"),
        (rep.pi_s1_zero, "pi(S1) != 0"),
    ])


def _pi_zp():
    rep = quotient_check()
    return rep.pi_zp_matches, f"pi(z') = {rep.pi_zp}"


def _psi_torus():
    b = _b2()
    bad = []
    for a in PSI_SAMPLES:
        for c in PSI_SAMPLES:
            rep = hom_check(torus_hom(b, psi_weights(a, c)))
            if not rep.ok:
                bad.append(f"alpha={a}, beta={c}: {rep.violations}")
    return not bad, "; ".join(bad)


def _swap_fails():
    rep = hom_check(swap_hom_b2())
    labels = [v[0] for v in rep.violations]
    hit = [lab for lab in labels if lab in ("S1", "S2")]
    return bool(hit), f"violated: {labels}"


def _a_s1s2s1():
    A = builtin_presentation("a_s1s2s1")
    rep = q_normality(A.gen("w"))
    want = {"e2": A.element("q^-2").terms, "e3": A.element("q^2").terms,
            "w": A.element("1").terms}
    got = {g: A.scalar(v).terms if v is not None else None for g, v in rep.scalars.items()}
    return _all([
        (is_central(A.named_element("z")), "z is not central"),
        (rep.ok and got == want, f"w normality {rep.to_dict()}"),
        (all(q_normality(A.gen("w") ** k).ok for k in (1, 2, 3)), "a power of w is not normal"),
    ])


def _a_s2s1s2():
    B = builtin_presentation("a_s2s1s2")
    return _all([
        (is_central(B.named_element("u")), "u is not central"),
        (all(q_normality(B.gen("e3bar") ** k).ok for k in (1, 2, 3)),
         "a power of e3bar is not normal"),
    ])


IDENTITIES = (
    Identity("serre_S1_S2_hold_in_b2", "B2 Serre relations (S1), (S2) vanish in the PBW presentation", _serre_b2),
    Identity("heisenberg_serre", "A2 Serre relations vanish in the Heisenberg algebra", _serre_heisenberg),
    Identity("e3_z_brackets", "e3 = [e1,e2]_{q^2} and z = [e2,e3]_{q^2}", _e3_z_brackets),
    Identity("z_central", "z is central in U+(B2)", _z_central),
    Identity("w_expansion", "w = e2e3 - e3e2 = z + (q^2-1)e3e2", _w_expansion),
    Identity("w_commutations", "commutations of e1, e2, e3 with w", _w_commutations),
    Identity("zprime_pbw_expansion", "z' = e1w - q^-4we1 equals its PBW expansion", _zp_expansion),
    Identity("zprime_central", "z' is central in U+(B2)", _zp_central),
    Identity("e3bar_expansion", "e3bar = (1-q^-4)e1e2 + q^-4e3", _e3bar_expansion),
    Identity("e1_e3bar", "e1 e3bar = q^2 e3bar e1", _e3bar_e1),
    Identity("e2_e3bar", "e2 e3bar - q^-2 e3bar e2 = q^-4 z", _e3bar_e2),
    Identity("e3_e3bar", "e3 e3bar = (1-q^-4)q^2 e1e3e2 + q^-4 e3^2", _e3_e3bar),
    Identity("zprime_via_e3bar", "z' = (1-q^-2)(e3 e3bar + (1+q^-2) z e1)", _zp_via_e3bar),
    Identity("torus_identity_1", "e2 in the quantum torus extension, as printed", _torus_1),
    Identity("torus_identity_1_derivation", "e2 = s1^-1 z' - s1^-1 s0 in the quantum torus extension",
             _torus_1_derivation),
    Identity("torus_identity_1_corrected", "e2 in the quantum torus extension, recomputed coefficients",
             _torus_1_fixed),
    Identity("s_equals_minus_qm2_z", "e2^2e1 - (q^2+q^-2)e2e1e2 + e1e2^2 = -q^-2 z", _s_identity),
    Identity("omega_equals_E3_E3bar", "Omega = E3 E3bar in the Heisenberg algebra", _omega_product),
    Identity("omega_central", "Omega is central in the Heisenberg algebra", _omega_central),
    Identity("omega_automorphism", "omega swaps E1, E2 and sends E3 to -q^2 E3bar", _omega_auto),
    Identity("pi_quotient", "pi: U+(B2) -> Heisenberg with z -> 0 is an algebra map", _pi_quotient),
    Identity("pi_zprime", "pi(z') = (1-q^-2) Omega", _pi_zp),
    Identity("psi_torus_automorphisms", "psi_{alpha,beta} respects all relations (25 sample points)",
             _psi_torus),
    Identity("swap_not_automorphism", "exchanging e1 and e2 violates (S1) or (S2)", _swap_fails),
    Identity("a_s1s2s1_center_normal", "A_{s1s2s1}: z central, w and its powers normal", _a_s1s2s1),
    Identity("a_s2s1s2_center_normal", "A_{s2s1s2}: u central, powers of e3bar normal", _a_s2s1s2),
)

_BY_NAME = {i.name: i for i in IDENTITIES}


def identity_names():
    return [i.name for i in IDENTITIES]


def paper_identity(name: str) -> IdentityResult:
    try:
        ident = _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}") from None
    ok, detail = ident.check()
    return IdentityResult(ident.name, ident.label, bool(ok), "" if ok else detail)
