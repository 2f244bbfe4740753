"""Nudge one structure constant of the Sweedler candidate and see who notices.

Every entry of every structure map (D's eight and H's four) is moved by +1
and -1 over F5.  Each variant is handed to the component checks, then to the
fourteen admissibility conditions, then to the final bialgebra suite.
"""

from collections import Counter

import numpy as np

from lrsmash.biproduct import ROLES, build_biproduct, check_admissible, check_components
from lrsmash.fixtures import sweedler_candidate
from lrsmash.hopf import bialgebra
from lrsmash.linfield import GF

F5 = GF(5)
c = sweedler_candidate(F5)


def variants():
    for role in ROLES:
        m = c.structure(role)
        for (i, j), v in np.ndenumerate(m.matrix):
            for d in (1, -1):
                yield role, c.with_structure(role, m.with_entry(i, j, (v + d) % 5))
    maps = dict(mult=c.H.mult, unit=c.H.unit, comult=c.H.comult, counit=c.H.counit)
    for role, m in maps.items():
        for i in range(m.matrix.shape[0]):
            for j in range(m.matrix.shape[1]):
                for d in (1, -1):
                    bumped = m.with_entry(i, j, (m.matrix[i, j] + d) % 5)
                    yield f"H {role}", c.replace(H=bialgebra(**{**maps, role: bumped}))


caught, first = Counter(), Counter()
for role, v in variants():
    comp = check_components(v)
    if not comp.passed:
        caught["components"] += 1
        first[comp.failures[0].name] += 1
    elif not (adm := check_admissible(v)).passed:
        caught["admissibility"] += 1
        first[adm.failures[0].name] += 1
    elif not build_biproduct(v, override=True).verification.passed:
        caught["suite"] += 1
    else:
        caught["silent"] += 1
print(dict(caught))
print("most frequent first failures:")
for name, n in first.most_common(6):
    print(f"  {n:3d}  {name}")
