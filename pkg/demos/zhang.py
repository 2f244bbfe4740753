"""When does the tensor coalgebra make an L-R-smash product a bialgebra?

With trivial coactions the answer is two cocommutation conditions on the
actions.  kC2 and Sweedler's H4 act on kC3 (g by identity or inversion,
X by zero) from either side; for each input the conditions and the
bialgebra suite are printed side by side.
"""

from lrsmash.biproduct import zhang_check, zhang_outcome
from lrsmash.fixtures import zhang_family, zhang_negative

print(f"{'input':<22} {'conditions':>10} {'bialgebra':>10}")
for c in zhang_family():
    rep = zhang_check(c)
    suite = rep["tensor-coalgebra-smash-is-bialgebra"].passed
    print(f"{c.name:<22} {str(zhang_outcome(rep)):>10} {str(suite):>10}")

print()
print(zhang_check(zhang_negative()).render())
