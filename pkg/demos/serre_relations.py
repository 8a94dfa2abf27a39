"""Derive the defining relations of U_q^+ for A2 and B2 from the kernels of
the quantum symmetrizers, and compare with the quantum Serre elements."""

from uqplus.braided import CARTAN_TYPES, BraidingMatrix, braiding_from_cartan
from uqplus.nichols import is_primitive, minimal_relations, nichols_dimension, serre_element
from uqplus.scalar import Q

for name, top in (("A2", 4), ("B2", 6)):
    cd = CARTAN_TYPES[name]
    b = braiding_from_cartan(cd)
    print(f"{name}: braiding exponents {b.exponents()}")
    for r in minimal_relations(b, top).relations():
        i, j = (1, 2) if r.multidegree[0] > r.multidegree[1] else (2, 1)
        serre = serre_element(cd, i, j)
        print(f"  degree {r.degree} {r.multidegree}: {r.element.format()}")
        print(f"    primitive: {is_primitive(r.element, b)}, "
              f"proportional to the Serre element: {r.element.is_proportional(serre)}")
    print("  graded dimensions:", [1] + [nichols_dimension(m, b) for m in range(1, 9)])

# with q replaced by q^2 the A2 relation carries q^2 + q^-2
sq = BraidingMatrix(((Q ** 4, Q ** -2), (Q ** -2, Q ** 4)))
rel = minimal_relations(sq, 3).relations()
print("A2 at q^2:", [r.element.format() for r in rel])
