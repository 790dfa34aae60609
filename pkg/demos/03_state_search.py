"""Searching for a state where a mass-action system has a complex-balanced realization.

Rates k = (k1, k2, k3, k4) on the same square.  A realization exists iff
k1 k3 / (k2 k4) lies in [1/25, 25]; the search only reports Found with an
exact, re-verified witness and otherwise says Unknown.
"""

from fractions import Fraction

from crnreal import MassActionSystem, realize_ma_cb_search

XY = ("X", "Y")
CORNERS = [(0, 0), (0, 2), (3, 2), (3, 0)]
INNER = [(1, 1), (1, 1), (2, 1), (2, 1)]


def square(k):
    return MassActionSystem.from_reactions(XY, [(c, m, r) for c, m, r in zip(CORNERS, INNER, k)])


for k1 in (1, 4, Fraction(9, 4), 25, 26):
    res = realize_ma_cb_search(square((k1, 1, 1, 1)))
    line = f"k1 = {str(k1):>4s}: {res.status.value}"
    if res.found:
        if res.state is not None:
            line += f" at x = ({', '.join(map(str, res.state))})"
        else:
            line += " at x ~ (" + ", ".join(f"{v:.6g}" for v in res.state_approx) + ") (irrational)"
    print(line)
    print("   " + res.log[0])

# With k1 = 2 the ratio is inside the region, but the balanced states need sqrt(2):
# no exact rational witness exists, so the honest answer is Unknown.
print("k1 =    2:", realize_ma_cb_search(square((2, 1, 1, 1)), multistarts=20).status.value)
