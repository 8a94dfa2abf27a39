"""Built-in presentations.

Generator orders are the PBW orders: ``E3 < E1 < E2`` for the quantum
Heisenberg algebra and ``z < e3 < e1 < e2`` for U+ of type B2.  Multidegrees
count the two simple generators (``e1`` first).  ``zp`` stands for z'.
"""

from __future__ import annotations

from functools import lru_cache

from uqplus.pbw.core import Presentation

__all__ = ["BUILTIN_NAMES", "builtin_presentation", "UnknownAlgebraError"]


class UnknownAlgebraError(KeyError):
    pass


# shared named elements of U+(B2) and its localization
_ZP_PBW = "(1-q^-4)*(1-q^-2)*e3*e1*e2 + q^-4*(1-q^-2)*e3^2 + (1-q^-4)*z*e1"
_S1 = "e1^2*e2 - (q^2+q^-2)*e1*e2*e1 + e2*e1^2"
_S2 = "e2^3*e1 - (q^2+1+q^-2)*e2^2*e1*e2 + (q^2+1+q^-2)*e2*e1*e2^2 - e1*e2^3"


def _heisenberg():
    return Presentation.from_text_rules(
        "heisenberg", ["E3", "E1", "E2"], [2, 1, 1],
        {
            "E1*E3": "q^-2*E3*E1",
            "E2*E3": "q^2*E3*E2",
            "E2*E1": "q^-2*E1*E2 - q^-2*E3",
        },
        multidegrees=[(1, 1), (1, 0), (0, 1)],
        extra_relations=[
            ("serre_12", "E1^2*E2 - (q^2+q^-2)*E1*E2*E1 + E2*E1^2"),
            ("serre_21", "E2^2*E1 - (q^2+q^-2)*E2*E1*E2 + E1*E2^2"),
        ],
        named=[
            ("E3bar", "E1*E2 - q^-2*E2*E1"),
            ("Omega", "(1-q^-4)*E3*E1*E2 + q^-4*E3^2"),
        ],
    )


def _b2():
    return Presentation.from_text_rules(
        "b2", ["z", "e3", "e1", "e2"], [3, 2, 1, 1],
        {
            "e3*z": "z*e3",
            "e1*z": "z*e1",
            "e2*z": "z*e2",
            "e1*e3": "q^-2*e3*e1",
            "e2*e3": "q^2*e3*e2 + z",
            "e2*e1": "q^-2*e1*e2 - q^-2*e3",
        },
        multidegrees=[(1, 2), (1, 1), (1, 0), (0, 1)],
        extra_relations=[("S1", _S1), ("S2", _S2)],
        named=[
            ("e3bar", "e1*e2 - q^-2*e2*e1"),
            ("w", "e2*e3 - e3*e2"),
            ("zp", "e1*w - q^-4*w*e1"),
            ("zp_pbw", _ZP_PBW),
            ("s", "e2^2*e1 - (q^2+q^-2)*e2*e1*e2 + e1*e2^2"),
        ],
    )


def _qplane(localized=False):
    return Presentation.from_text_rules(
        "qtorus" if localized else "qplane", ["e3", "e1"], [2, 1],
        {"e1*e3": "q^-2*e3*e1"},
        multidegrees=[(1, 1), (1, 0)],
        localized=["e3", "e1"] if localized else [],
    )


def _b2_localized():
    # V = k_{q^2}[e3^+-, e1^+-][z][e2; tau, delta]; z' is a named element
    return Presentation.from_text_rules(
        "b2_localized", ["z", "e3", "e1", "e2"], [3, 2, 1, 1],
        {
            "e3*z": "z*e3",
            "e1*z": "z*e1",
            "e2*z": "z*e2",
            "e1*e3": "q^-2*e3*e1",
            "e2*e3": "q^2*e3*e2 + z",
            "e2*e1": "q^-2*e1*e2 - q^-2*e3",
        },
        multidegrees=[(1, 2), (1, 1), (1, 0), (0, 1)],
        localized=["e3", "e1"],
        extra_relations=[("S1", _S1), ("S2", _S2)],
        named=[
            ("zp", _ZP_PBW),
            ("e3bar", "e1*e2 - q^-2*e2*e1"),
        ],
    )


def _a_s1s2s1():
    return Presentation.from_text_rules(
        "a_s1s2s1", ["w", "e2", "e3"], [3, 1, 2],
        {
            "e2*w": "q^2*w*e2",
            "e3*w": "q^-2*w*e3",
            "e3*e2": "e2*e3 - w",
        },
        multidegrees=[(1, 2), (0, 1), (1, 1)],
        named=[("z", "(1-q^2)*e3*e2 + w")],
    )


def _a_s1s2():
    return Presentation.from_text_rules(
        "a_s1s2", ["w", "e2"], [3, 1],
        {"e2*w": "q^2*w*e2"},
        multidegrees=[(1, 2), (0, 1)],
    )


def _a_s2s1s2():
    return Presentation.from_text_rules(
        "a_s2s1s2", ["e3bar", "e1", "wbar"], [2, 1, 3],
        {
            "e1*e3bar": "q^2*e3bar*e1",
            "wbar*e3bar": "q^-2*e3bar*wbar",
            "wbar*e1": "e1*wbar + (q^2-1)*e3bar^2",
        },
        multidegrees=[(1, 1), (1, 0), (1, 2)],
        named=[("u", "(1-q^-4)*e1*wbar + (q^2-1)*e3bar^2")],
    )


def _a_s2s1():
    return Presentation.from_text_rules(
        "a_s2s1", ["e3bar", "e1"], [2, 1],
        {"e1*e3bar": "q^2*e3bar*e1"},
        multidegrees=[(1, 1), (1, 0)],
    )


def _poly_zz():
    return Presentation.from_text_rules(
        "poly_zz'", ["z", "zp"], [3, 4],
        {"zp*z": "z*zp"},
        multidegrees=[(1, 2), (2, 2)],
    )


_FACTORIES = {
    "heisenberg": _heisenberg,
    "b2": _b2,
    "qplane": _qplane,
    "qtorus": lambda: _qplane(localized=True),
    "b2_localized": _b2_localized,
    "a_s1s2s1": _a_s1s2s1,
    "a_s2s1s2": _a_s2s1s2,
    "a_s1s2": _a_s1s2,
    "a_s2s1": _a_s2s1,
    "poly_zz'": _poly_zz,
}

BUILTIN_NAMES = tuple(_FACTORIES)


@lru_cache(maxsize=None)
def builtin_presentation(name: str) -> Presentation:
    """One of :data:`BUILTIN_NAMES`; the same object is returned each time."""
    try:
        factory = _FACTORIES[name]
    except KeyError:
        raise UnknownAlgebraError(
            f"unknown algebra {name!r}; choose from {', '.join(BUILTIN_NAMES)}") from None
    return factory()
