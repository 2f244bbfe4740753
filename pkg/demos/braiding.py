"""The braiding on objects of LR(kC2).

c(m (x) n) = m^(-1).n^<0> (x) m^(0).n^<1> mixes the left coaction of the
first factor with the right coaction of the second.  We print it on the
Sweedler object, then run the exhaustive suite: the braiding is a morphism,
both hexagons hold, it is natural, and it is invertible via the skew antipode.
"""

from lrsmash.fixtures import group_algebra, lr_fixture_morphisms, lr_fixture_objects
from lrsmash.hopf import solve_skew_antipode
from lrsmash.lr import braiding, braiding_inverse, verify_prebraided
from lrsmash.linfield import chain, identity

objs = lr_fixture_objects()
B = objs[0]


def fmt(vec):
    return " + ".join(f"{v}*({k})" for k, v in vec.items()) or "0"


c = braiding(B, B)
print(f"braiding on {B.carrier.name} (x) {B.carrier.name}:")
for lab in c.domain.labels:
    print(f"  {lab:>5} -> {fmt(c.image(lab))}")

s_inv = solve_skew_antipode(group_algebra(2))
ci = braiding_inverse(B, B, s_inv)
one = identity(c.field, c.domain)
print(f"\nboth composites with the inverse are the identity: {chain(ci, c) == one and chain(c, ci) == one}")

rep = verify_prebraided(objs, lr_fixture_morphisms(), s_inv)
print(f"{len(rep)} checks over {len(objs)} objects, failures: {len(rep.failures)}")
