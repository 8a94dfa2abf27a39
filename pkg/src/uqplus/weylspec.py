"""The Weyl group of type B2, its Bruhat order and the poset of torus-stable
prime ideals of U+(B2).

Group elements act on ``(eps1, eps2)`` by signed permutation matrices.  The
generators are ``s1: eps1 <-> eps2`` and ``s2: eps2 -> -eps2``, and a word
``s_i1 s_i2 ... s_ik`` acts as the composite with ``s_ik`` applied first.

Ideals are named ``(0)``, ``(z)``, ``(z')``, ``(e3)``, ``(e3bar)``, ``(e1)``,
``(e2)`` and ``(e1,e2)``.  The ideal poset is ordered by inclusion; the
pairing with group elements reverses order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from uqplus.pbw.builtins import builtin_presentation

__all__ = [
    "WeylElement",
    "Poset",
    "weyl_b2",
    "element",
    "bruhat_leq",
    "reduced_words",
    "poset_json",
    "bruhat_poset",
    "FIGURE_BRUHAT_COVERS",
    "FIGURE_HSPEC_COVERS",
    "HSPEC_IDEALS",
    "HSPEC_MAP",
    "PAIRING_NOTE",
    "hspec_poset",
    "is_order_reversing",
    "containment_witnesses",
    "WitnessReport",
    "HSpecLabel",
    "hspec_labels",
]

_GENERATORS = {
    1: ((0, 1), (1, 0)),   # eps1 -> eps2, eps2 -> eps1
    2: ((1, 0), (0, -1)),  # eps1 -> eps1, eps2 -> -eps2
}
_IDENTITY = ((1, 0), (0, 1))


def _matmul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
                 for i in range(2))


def _act(word):
    m = _IDENTITY
    for i in word:
        m = _matmul(m, _GENERATORS[i])
    return m


@dataclass(frozen=True)
class WeylElement:
    """Group element: lexicographically least reduced word and the matrix
    whose columns are the images of ``eps1`` and ``eps2``."""

    word: tuple
    matrix: tuple

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def name(self) -> str:
        return "".join(f"s{i}" for i in self.word) or "e"

    def image(self, k: int):
        """Image of ``eps_k`` as a signed basis vector ``(sign, index)``."""
        col = [self.matrix[r][k - 1] for r in range(2)]
        idx = next(r for r in range(2) if col[r])
        return col[idx], idx + 1

    def describe_action(self) -> str:
        parts = []
        for k in (1, 2):
            s, j = self.image(k)
            parts.append(f"eps{k} -> {'-' if s < 0 else ''}eps{j}")
        return ", ".join(parts)

    def __str__(self):
        return self.name


def weyl_b2():
    """All 8 elements ordered by length, then word."""
    found = {}
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            m = _act(w)
            if m in found:
                continue
            found[m] = w
            nxt.extend(w + (i,) for i in (1, 2))
        # breadth first with sorted frontier: the first word reaching a
        # matrix is shortest and lexicographically least
        frontier = sorted(nxt)
    elems = [WeylElement(w, m) for m, w in found.items()]
    return sorted(elems, key=lambda x: (x.length, x.word))


def element(name: str) -> WeylElement:
    if name == "e":
        word = ()
    else:
        parts = name.replace(" ", "").split("s")[1:]
        word = tuple(int(p) for p in parts)
    m = _act(word)
    for x in weyl_b2():
        if x.matrix == m:
            return x
    raise ValueError(f"no element {name!r}")  # pragma: no cover


def reduced_words(x: WeylElement):
    """All words of length ``len(x)`` multiplying to ``x``."""
    out = []

    def rec(w):
        if len(w) == x.length:
            if _act(w) == x.matrix:
                out.append(w)
            return
        for i in (1, 2):
            if not w or w[-1] != i:
                rec(w + (i,))

    rec(())
    return out


def _is_subword(small, big) -> bool:
    it = iter(big)
    return all(any(a == b for b in it) for a in small)


def bruhat_leq(x: WeylElement, y: WeylElement) -> bool:
    """Subword criterion against a fixed reduced word of ``y``, trying every
    reduced word of ``x``."""
    return any(_is_subword(u, y.word) for u in reduced_words(x))


@dataclass(frozen=True)
class Poset:
    """Finite poset given by its nodes and covering pairs ``(lower, upper)``."""

    name: str
    nodes: tuple
    covers: frozenset

    def leq(self, a, b) -> bool:
        if a == b:
            return True
        up = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            for lo, hi in self.covers:
                if lo == x and hi not in up:
                    if hi == b:
                        return True
                    up.add(hi)
                    stack.append(hi)
        return False

    def edges(self):
        return sorted(self.covers, key=lambda e: (self.nodes.index(e[0]), self.nodes.index(e[1])))

    def is_acyclic(self) -> bool:
        return all(not (self.leq(b, a)) for a, b in self.covers)

    def is_irredundant(self) -> bool:
        """No covering pair is implied by a longer chain."""
        for lo, hi in self.covers:
            rest = Poset(self.name, self.nodes, self.covers - {(lo, hi)})
            if rest.leq(lo, hi):
                return False
        return True

    def to_dict(self) -> dict:
        return {"name": self.name, "nodes": list(self.nodes),
                "covers": [list(e) for e in self.edges()]}

    def to_dot(self) -> str:
        lines = [f'graph "{self.name}" {{', "  rankdir=BT;"]
        for n in self.nodes:
            lines.append(f'  "{n}";')
        for lo, hi in self.edges():
            lines.append(f'  "{lo}" -- "{hi}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _hasse(nodes, less):
    covers = set()
    for a in nodes:
        for b in nodes:
            if a != b and less(a, b):
                if not any(c not in (a, b) and less(a, c) and less(c, b) for c in nodes):
                    covers.add((a, b))
    return frozenset(covers)


def bruhat_poset() -> Poset:
    elems = weyl_b2()
    by_name = {x.name: x for x in elems}
    names = tuple(x.name for x in elems)
    covers = _hasse(names, lambda a, b: a != b and bruhat_leq(by_name[a], by_name[b]))
    return Poset("bruhat", names, covers)


# Covering pairs (lower, upper) as drawn in the two side by side diagrams.
FIGURE_BRUHAT_COVERS = frozenset({
    ("s1s2s1", "s1s2s1s2"), ("s2s1s2", "s1s2s1s2"),
    ("s1s2", "s1s2s1"), ("s2s1", "s1s2s1"),
    ("s2s1", "s2s1s2"), ("s1s2", "s2s1s2"),
    ("s1", "s1s2"), ("s2", "s1s2"),
    ("s2", "s2s1"), ("s1", "s2s1"),
    ("e", "s1"), ("e", "s2"),
})

# Inclusions (smaller, bigger) read off the ideal diagram.
FIGURE_HSPEC_COVERS = frozenset({
    ("(0)", "(z)"), ("(0)", "(z')"),
    ("(z)", "(e3)"), ("(z)", "(e3bar)"),
    ("(z')", "(e3bar)"), ("(z')", "(e3)"),
    ("(e3)", "(e1)"), ("(e3)", "(e2)"),
    ("(e3bar)", "(e2)"), ("(e3bar)", "(e1)"),
    ("(e1)", "(e1,e2)"), ("(e2)", "(e1,e2)"),
})

# ideal -> generators, as expressions in the b2 presentation
HSPEC_IDEALS = {
    "(0)": (),
    "(z)": ("z",),
    "(z')": ("zp",),
    "(e3)": ("e3",),
    "(e3bar)": ("e3bar",),
    "(e1)": ("e1",),
    "(e2)": ("e2",),
    "(e1,e2)": ("e1", "e2"),
}



@dataclass(frozen=True)
class HSpecLabel:
    """An ideal of the poset: its name and generators in the b2 presentation."""

    name: str
    generators: tuple  # AlgebraElements

    @property
    def generator_names(self):
        return HSPEC_IDEALS[self.name]


def hspec_labels():
    b = builtin_presentation("b2")
    return {k: HSpecLabel(k, tuple(b.element(g) for g in v)) for k, v in HSPEC_IDEALS.items()}


HSPEC_MAP = {
    "s1s2s1s2": "(0)",
    "s1s2s1": "(z)",
    "s2s1s2": "(z')",
    "s1s2": "(e3)",
    "s2s1": "(e3bar)",
    "s1": "(e1)",
    "s2": "(e2)",
    "e": "(e1,e2)",
}

PAIRING_NOTE = ("group elements are paired with ideals by their positions in the two "
                "side by side diagrams, read left to right")


# -- containment witnesses ----------------------------------------------------------

# For an inclusion I < J and each generator g of I: terms (coeff, left, h, right)
# with h a generator of J and g = sum coeff * left * h * right.
_WITNESSES = {
    ("(z)", "(e3)"): {"z": [("1", "e2", "e3", "1"), ("-q^2", "1", "e3", "e2")]},
    ("(z)", "(e3bar)"): {"z": [("q^4", "e2", "e3bar", "1"), ("-q^2", "1", "e3bar", "e2")]},
    ("(z')", "(e3)"): {"zp": [("1", "e1*e2", "e3", "1"), ("-1", "e1", "e3", "e2"),
                              ("-q^-4", "e2", "e3", "e1"), ("q^-4", "1", "e3", "e2*e1")]},
    ("(z')", "(e3bar)"): {"zp": [("1-q^-2", "e3", "e3bar", "1"),
                                 ("(1-q^-4)*q^4", "e2", "e3bar", "e1"),
                                 ("-(1-q^-4)*q^2", "1", "e3bar", "e2*e1")]},
    ("(e3)", "(e1)"): {"e3": [("1", "1", "e1", "e2"), ("-q^2", "e2", "e1", "1")]},
    ("(e3)", "(e2)"): {"e3": [("1", "e1", "e2", "1"), ("-q^2", "1", "e2", "e1")]},
    ("(e3bar)", "(e1)"): {"e3bar": [("1", "1", "e1", "e2"), ("-q^-2", "e2", "e1", "1")]},
    ("(e3bar)", "(e2)"): {"e3bar": [("1", "e1", "e2", "1"), ("-q^-2", "1", "e2", "e1")]},
    ("(e1)", "(e1,e2)"): {"e1": [("1", "1", "e1", "1")]},
    ("(e2)", "(e1,e2)"): {"e2": [("1", "1", "e2", "1")]},
}


@dataclass
class WitnessReport:
    checked: list  # (lower, upper, generator, witness text)
    failures: list  # (lower, upper, generator, reason)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"ok": self.ok,
                "checked": [list(c) for c in self.checked],
                "failures": [list(f) for f in self.failures]}


def _witness_text(terms):
    return " + ".join(f"({c})*{l}*[{h}]*{r}" for c, l, h, r in terms)


def containment_witnesses(edges=FIGURE_HSPEC_COVERS) -> WitnessReport:
    """Check each drawn inclusion ``I < J``: every generator of ``I`` must be
    the normal form of its stored combination ``sum c * u * h * v`` with
    each ``h`` a generator of ``J``."""
    b = builtin_presentation("b2")
    checked, failures = [], []
    for lo, hi in sorted(edges):
        gens = HSPEC_IDEALS[lo]
        table = _WITNESSES.get((lo, hi), {})
        for g in gens:
            terms = table.get(g)
            if terms is None:
                failures.append((lo, hi, g, "no witness stored"))
                continue
            if any(h not in HSPEC_IDEALS[hi] for _, _, h, _ in terms):
                failures.append((lo, hi, g, "witness uses an element outside the bigger ideal"))
                continue
            total = b.scalar(0)
            for c, left, h, right in terms:
                total = total + b.element(f"({c})*({left})*({h})*({right})")
            if total != b.element(g):
                failures.append((lo, hi, g, f"witness normalises to {total.format()}"))
            else:
                checked.append((lo, hi, g, _witness_text(terms)))
    return WitnessReport(checked, failures)


def hspec_poset():
    """The ideal poset under inclusion and the pairing with group elements.

    The covers are the Hasse diagram of the inclusions established by
    verified witnesses (and their transitive consequences).
    """
    rep = containment_witnesses()
    proven = set(FIGURE_HSPEC_COVERS) - {(f[0], f[1]) for f in rep.failures}
    nodes = tuple(HSPEC_IDEALS)
    base = Poset("hspec", nodes, frozenset(proven))
    covers = _hasse(nodes, lambda a, c: a != c and base.leq(a, c))
    return Poset("hspec", nodes, covers), dict(HSPEC_MAP)


def is_order_reversing(mapping=None) -> bool:
    """``y' <= y`` in Bruhat order iff the ideal of ``y`` is inside that of
    ``y'``, over all pairs."""
    mapping = mapping or HSPEC_MAP
    hs, _ = hspec_poset()
    elems = weyl_b2()
    for y, y2 in combinations(elems, 2):
        for a, c in ((y, y2), (y2, y)):
            if bruhat_leq(c, a) != hs.leq(mapping[a.name], mapping[c.name]):
                return False
    return True


def poset_json(which: str) -> str:
    if which == "bruhat":
        p = bruhat_poset()
        data = p.to_dict()
        data["elements"] = {x.name: {"word": list(x.word), "length": x.length,
                                     "action": x.describe_action()} for x in weyl_b2()}
    elif which == "hspec":
        p, mapping = hspec_poset()
        data = p.to_dict()
        data["map"] = mapping
        data["ideal_generators"] = {k: list(v) for k, v in HSPEC_IDEALS.items()}
        data["assumption"] = PAIRING_NOTE
    else:
        raise ValueError(f"unknown poset {which!r}")
    return json.dumps(data, indent=2, sort_keys=True)
