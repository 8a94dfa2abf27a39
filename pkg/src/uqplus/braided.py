"""Diagonal braided vector spaces built from Cartan data, their diagram
automorphisms and the group GL(V, c) of braided automorphisms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations, product

from uqplus.linalg import ratfunc_det
from uqplus.scalar import Q, RatFunc, as_ratfunc

__all__ = [
    "CartanError",
    "CartanData",
    "BraidingMatrix",
    "MonomialMap",
    "GroupDescription",
    "CARTAN_TYPES",
    "braiding_from_cartan",
    "autdiagr",
    "lemma_conditions",
    "glvc_member",
    "glvc_structure",
    "hopf_aut_bosonization",
]


class CartanError(ValueError):
    """Invalid Cartan data; the message names the violated axiom."""


@dataclass(frozen=True)
class CartanData:
    C: tuple
    d: tuple

    def __post_init__(self):
        C = tuple(tuple(int(x) for x in row) for row in self.C)
        d = tuple(int(x) for x in self.d)
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "d", d)
        n = len(C)
        if n == 0:
            raise CartanError("rank: the Cartan matrix must be non-empty")
        if any(len(row) != n for row in C):
            raise CartanError("shape: the Cartan matrix must be square")
        if len(d) != n:
            raise CartanError(f"shape: expected {n} symmetrizers, got {len(d)}")
        for i in range(n):
            if C[i][i] != 2:
                raise CartanError(f"diagonal: a_{i+1}{i+1} = {C[i][i]} != 2")
            if d[i] <= 0:
                raise CartanError(f"positivity: d_{i+1} = {d[i]} must be positive")
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if C[i][j] > 0:
                    raise CartanError(f"off-diagonal sign: a_{i+1}{j+1} = {C[i][j]} > 0")
                if (C[i][j] == 0) != (C[j][i] == 0):
                    raise CartanError(
                        f"zero pattern: a_{i+1}{j+1} = 0 but a_{j+1}{i+1} != 0 or conversely")
                if d[i] * C[i][j] != d[j] * C[j][i]:
                    raise CartanError(
                        f"symmetrizability: d_{i+1} a_{i+1}{j+1} != d_{j+1} a_{j+1}{i+1}")

    @property
    def n(self) -> int:
        return len(self.C)

    @classmethod
    def from_json(cls, text: str) -> CartanData:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CartanError(f"json: {exc}") from exc
        if not isinstance(data, dict) or "C" not in data or "d" not in data:
            raise CartanError('json: expected an object with keys "C" and "d"')
        try:
            return cls(data["C"], data["d"])
        except (TypeError, ValueError) as exc:
            if isinstance(exc, CartanError):
                raise
            raise CartanError(f"json: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps({"C": [list(r) for r in self.C], "d": list(self.d)})


CARTAN_TYPES = {
    "A1": CartanData(((2,),), (1,)),
    "A2": CartanData(((2, -1), (-1, 2)), (1, 1)),
    "B2": CartanData(((2, -1), (-2, 2)), (2, 1)),
}


@dataclass(frozen=True)
class BraidingMatrix:
    """Matrix ``(q_ij)`` of the braiding ``c(x_i (x) x_j) = q_ij x_j (x) x_i``."""

    Q: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_ratfunc(x) for x in row) for row in self.Q)
        object.__setattr__(self, "Q", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("braiding matrix must be square")
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if x.is_zero():
                    raise ValueError(f"braiding entry q_{i+1}{j+1} is zero")

    @property
    def n(self) -> int:
        return len(self.Q)

    def __getitem__(self, ij):
        i, j = ij
        return self.Q[i][j]

    def exponents(self):
        """Exponent matrix when every entry is a monic monomial ``q^e``, else None."""
        out = []
        for row in self.Q:
            er = []
            for x in row:
                if not x.is_laurent() or not x.num.is_monomial():
                    return None
                (e, c), = x.num.items()
                if c != 1:
                    return None
                er.append(e)
            out.append(tuple(er))
        return tuple(out)


@dataclass(frozen=True)
class MonomialMap:
    """``g(x_i) = lam_i x_{sigma(i)}`` (0-based ``sigma``)."""

    sigma: tuple
    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(as_ratfunc(x) for x in self.lam))
        if sorted(self.sigma) != list(range(len(self.sigma))):
            raise ValueError(f"{self.sigma} is not a permutation")
        if any(x.is_zero() for x in self.lam):
            raise ValueError("monomial map with a zero scalar")

    def matrix(self):
        n = len(self.sigma)
        m = [[as_ratfunc(0)] * n for _ in range(n)]
        for i, s in enumerate(self.sigma):
            m[s][i] = self.lam[i]
        return m


@dataclass(frozen=True)
class GroupDescription:
    torus_rank: int
    diagram_group: tuple = field(default=())
    structure: str = "semidirect"

    def order_of_diagram_group(self) -> int:
        return len(self.diagram_group)

    def describe(self) -> str:
        k = len(self.diagram_group)
        if k == 1:
            part = "{id}"
        elif k == 2 and len(self.diagram_group[0]) == 2:
            part = "S2"
        else:
            part = f"<group of order {k}>"
        return f"(k^x)^{self.torus_rank} x| {part}"

    def to_dict(self) -> dict:
        return {
            "torus_rank": self.torus_rank,
            "diagram_group": [[s + 1 for s in p] for p in self.diagram_group],
            "structure": self.structure,
            "description": self.describe(),
        }


def braiding_from_cartan(cd: CartanData) -> BraidingMatrix:
    """``q_ij = q^(d_i a_ij)``."""
    n = cd.n
    return BraidingMatrix(tuple(
        tuple(RatFunc(Q ** (cd.d[i] * cd.C[i][j])) for j in range(n)) for i in range(n)))


def autdiagr(b: BraidingMatrix) -> list[tuple]:
    """Permutations ``sigma`` (0-based one-line) with ``q_ij = q_sigma(i)sigma(j)``,
    by brute force over the symmetric group."""
    n = b.n
    return [s for s in permutations(range(n))
            if all(b.Q[i][j] == b.Q[s[i]][s[j]] for i in range(n) for j in range(n))]


def lemma_conditions(b: BraidingMatrix) -> dict:
    """Which of the three sufficient conditions for the torus-by-diagram
    decomposition of GL(V, c) hold."""
    n = b.n
    Qm = b.Q
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    rows_differ = all(any(Qm[i][h] != Qm[j][h] for h in range(n)) for i, j in pairs)
    cols_differ = all(any(Qm[h][i] != Qm[h][j] for h in range(n)) for i, j in pairs)
    not_constant = all(
        len({Qm[i][i], Qm[i][j], Qm[j][i], Qm[j][j]}) > 1 for i, j in pairs)
    return {"i": rows_differ, "ii": cols_differ, "iii": not_constant}


def glvc_member(g, b: BraidingMatrix) -> bool:
    """Whether ``g (x) g`` commutes with ``c``; ``g[s][i]`` is the coefficient of
    ``x_s`` in ``g(x_i)``."""
    n = b.n
    lam = [[as_ratfunc(x) for x in row] for row in g]
    if len(lam) != n or any(len(r) != n for r in lam):
        raise ValueError(f"expected a {n}x{n} matrix")
    if ratfunc_det(lam).is_zero():
        raise ValueError("g is singular")
    Qm = b.Q
    for i, j, r, s in product(range(n), repeat=4):
        lr = lam[r][j]
        ls = lam[s][i]
        if lr.is_zero() or ls.is_zero():
            continue
        if Qm[i][j] != Qm[s][r]:
            return False
    return True


def glvc_structure(b: BraidingMatrix):
    """``GroupDescription`` when a lemma condition holds, else ``"undecided"``."""
    if not any(lemma_conditions(b).values()):
        return "undecided"
    return GroupDescription(b.n, tuple(autdiagr(b)))


def hopf_aut_bosonization(cd: CartanData) -> GroupDescription:
    """Hopf automorphisms of U_q(b+) as torus x| diagram group.

    For each diagram automorphism ``sigma`` the lattice map ``eps_i ->
    eps_sigma(i)`` is built as an integer matrix and the character identity
    ``chi_i(K_j) = chi_sigma(i)(K_sigma(j))`` is checked on exponents.
    """
    n = cd.n
    b = braiding_from_cartan(cd)
    expo = [[cd.d[i] * cd.C[i][j] for j in range(n)] for i in range(n)]
    # chi_i != epsilon and (g_i, chi_i) pairwise distinct
    assert all(any(expo[i][j] for j in range(n)) for i in range(n))
    assert len({tuple(r) for r in expo}) == n
    group = autdiagr(b)
    for s in group:
        psi = [[1 if s[j] == i else 0 for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                # psi(K_j) = K_sigma(j): read the image off the matrix column
                img = next(k for k in range(n) if psi[k][j])
                if expo[s[i]][img] != expo[i][j]:
                    raise AssertionError(
                        f"character condition fails for sigma={s} at ({i}, {j})")
    return GroupDescription(n, tuple(group))
