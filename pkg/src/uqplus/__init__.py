"""Exact computations with quantum enveloping algebras U_q^+ of rank two.

Submodules: :mod:`uqplus.scalar` (Laurent polynomials, quantum numbers),
:mod:`uqplus.braided` (diagonal braidings and their automorphisms),
:mod:`uqplus.nichols` (quantum symmetrizers and Nichols relations),
:mod:`uqplus.pbw` (rewriting in iterated Ore extensions),
:mod:`uqplus.weylspec` (B2 Weyl group and H-spectrum) and
:mod:`uqplus.cli`.
"""

from uqplus.scalar import Q, LaurentPoly, RatFunc, q_binom, q_int

__version__ = "0.1.0"

__all__ = ["Q", "LaurentPoly", "RatFunc", "q_binom", "q_int", "__version__"]
