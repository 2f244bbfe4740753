"""A two-sided biproduct A#H#B and the isomorphism with the one-sided construction.

A = span{1, x} (left-left YD over kC2) and B = span{1, y} (right-right YD)
give an eight-dimensional bialgebra.  The same data induces an admissible
structure on A (x) B, and phi identifies the two results.  Then a B whose
coaction spoils the pairing condition is fed in.
"""

from lrsmash.biproduct import check_admissible, smash_coproduct_coalgebra, smash_product_algebra
from lrsmash.double import (DoubleBiproductInput, build_double_biproduct, check_trivial_pairing,
                            induced_lr_structure, verify_phi)
from lrsmash.fixtures import double_input_yds
from lrsmash.hopf import BialgebraData

A, B = double_input_yds()
d = DoubleBiproductInput(A.H, A, B)
print(check_trivial_pairing(A, B).render())
res = build_double_biproduct(d)
print(f"\ncarrier {res.bialgebra.carrier.labels}")
print(res.verification.render())

cand = induced_lr_structure(d.A, d.B)
print(f"\ninduced candidate on A(x)B admissible: {check_admissible(cand).passed}")
smash = BialgebraData(smash_product_algebra(cand), smash_coproduct_coalgebra(cand))
print(verify_phi(smash, res.bialgebra, res.phi).render())

rep = check_admissible(induced_lr_structure(*double_input_yds(pairing_ok=False)))
print("\nwith the pairing broken:")
for c in rep.failures:
    print(f"  {c.name} fails at {c.witness.inputs if c.witness else '-'}")
