import sympy
from hypothesis import settings

from uqplus.scalar import LaurentPoly, RatFunc

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

QS = sympy.Symbol("q")


def to_sympy(x):
    """Sympy image of a LaurentPoly or RatFunc."""
    if isinstance(x, RatFunc):
        return to_sympy(x.num) / to_sympy(x.den)
    if isinstance(x, LaurentPoly):
        return sum((sympy.Rational(c.numerator, c.denominator) if hasattr(c, "denominator")
                    else sympy.Integer(c)) * QS ** e for e, c in x.items()) + sympy.Integer(0)
    return sympy.nsimplify(x)


def sympy_equal(a, b) -> bool:
    return sympy.simplify(to_sympy(a) - to_sympy(b)) == 0
