"""For which fluxes on the four-source square is there a complex-balanced flux equivalent?

The inputs send J1, J2, J3, J4 from the corners into two interior vertices.
A balanced realization on the corners exists only when J1 = J3, J2 = J4 and
the ratio J1/J2 stays within [1/5, 5].  Every answer is an exact LP decision.
"""

from fractions import Fraction

from crnreal import FluxSystem, realize_flux_cb
from crnreal.textio import format_complex

XY = ("X", "Y")
CORNERS = [(0, 0), (0, 2), (3, 2), (3, 0)]
INNER = [(1, 1), (1, 1), (2, 1), (2, 1)]


def square(J):
    return FluxSystem.from_reactions(XY, [(c, m, j) for c, m, j in zip(CORNERS, INNER, J)])


print("ratio J1/J2  ->  status")
for r in (Fraction(1, 6), Fraction(1, 5), Fraction(1, 2), Fraction(1), Fraction(3), Fraction(5), Fraction(6)):
    res = realize_flux_cb(square((r, 1, r, 1)))
    print(f"  {str(r):>5s}      {res.status.value}")

res = realize_flux_cb(square((1, 1, 1, 1)))
print("\nwitness at J = (1, 1, 1, 1):")
for (s, t), j in sorted(res.system.weight_map().items()):
    print(f"  {format_complex(s, XY)} -> {format_complex(t, XY)} : {j}")
print("\n".join(res.certificate.lines()))

print("\nJ1 != J3:", realize_flux_cb(square((2, 1, 3, 1))).status.value)
