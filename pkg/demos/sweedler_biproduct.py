"""Sweedler's four-dimensional Hopf algebra as a smash biproduct.

B = span{1, x} is a bialgebra in left-left Yetter-Drinfeld modules over kC2
(g flips the sign of x, x has degree g).  Gluing B to kC2 yields a
four-dimensional bialgebra; we print its multiplication on generators, its
coproduct on X, and the order of its antipode.
"""

from lrsmash import check_admissible, radford_biproduct, solve_antipode
from lrsmash.fixtures import sweedler_candidate, sweedler_yd
from lrsmash.linfield import chain

cand = sweedler_candidate()
print(check_admissible(cand).render())

res = radford_biproduct(sweedler_yd())
A = res.bialgebra
print(f"\nbiproduct carrier: {A.carrier.labels}")
print(res.verification.render())

G, X = "1*g", "x*1"


def fmt(vec):
    return " + ".join(f"{v}*({k})" for k, v in vec.items()) or "0"


for a, b in [(G, G), (X, X), (G, X), (X, G)]:
    print(f"  {a} . {b} = {fmt(A.mult.image(f'{a}*{b}'))}")
print(f"  comult({X}) = {fmt(A.comult.image(X))}")

S = solve_antipode(A)
I = A.id()
order = next(n for n in range(1, 9) if chain(*[S] * n) == I)
print(f"\nantipode found; its order under composition is {order}")
