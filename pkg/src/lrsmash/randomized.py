"""Random small candidates over F_p for property tests.

H is the group algebra of a cyclic group C_n with n dividing p - 1, so its
characters take values in F_p.  D is spanned by 1 and up to two homogeneous
vectors: each carries a character for either action and a group degree for
either coaction.  Structures are sometimes consistent and sometimes not;
an optional unipotent change of basis and an optional single-entry
perturbation make the sample less regular.
"""

from __future__ import annotations

import numpy as np

from .biproduct import ROLES, LRAdmissibleCandidate
from .fixtures import _bialgebra_from_rules, group_algebra, power_label
from .hopf import ActionPair, CoactionPair
from .linfield import GF, BasedSpace, LinMap, chain, identity, solve_linear, tensor

__all__ = ["random_candidate", "random_candidates", "change_basis", "random_yd_pair"]


def _root_of_unity(p: int, n: int) -> int:
    """An element of order exactly n in F_p^*."""
    for a in range(2, p):
        if pow(a, n, p) == 1 and all(pow(a, d, p) != 1 for d in range(1, n)):
            return a
    return 1


def _shape(rng, f):
    """Algebra and coalgebra rules for one of four small shapes."""
    kind = int(rng.integers(4))
    if kind == 0:
        return ("1",), lambda a, b: {"1": 1}, lambda a: {("1", "1"): 1}, lambda a: 1, {}
    if kind == 1:
        labs = ("1", "x")
    elif kind == 2:
        labs = ("1", "x", "y")
    else:
        # x^3 = 0, x*x = x2, D(x2) = x2 (x) 1 + c x (x) x + 1 (x) x2
        c = int(rng.integers(f.p))
        labs = ("1", "x", "x2")
        mul = {("x", "x"): {"x2": 1}}

        def m(a, b):
            if a == "1":
                return {b: 1}
            if b == "1":
                return {a: 1}
            return mul.get((a, b), {})

        def d(a):
            if a == "1":
                return {("1", "1"): 1}
            if a == "x":
                return {("x", "1"): 1, ("1", "x"): 1}
            return {("x2", "1"): 1, ("x", "x"): c, ("1", "x2"): 1}

        return labs, m, d, lambda a: int(a == "1"), {"x2": "x"}
    return (labs,
            lambda a, b: {} if "1" not in (a, b) else {b if a == "1" else a: 1},
            lambda a: {("1", "1"): 1} if a == "1" else {(a, "1"): 1, ("1", a): 1},
            lambda a: int(a == "1"), {})


def random_candidate(rng: np.random.Generator, p: int = 5, perturb: float = 0.3,
                     rebase: float = 0.5, name: str = "random") -> LRAdmissibleCandidate:
    f = GF(p)
    n = int(rng.choice([d for d in (1, 2, 4) if (p - 1) % d == 0]))
    H = group_algebra(n, f)
    zeta = _root_of_unity(p, n)
    labs, mul, delta, eps, square_of = _shape(rng, f)
    alg_bi = _bialgebra_from_rules(f, BasedSpace("D", labs), mul, delta, eps)
    D = alg_bi.carrier

    # per basis vector: exponents of the two characters and the two degrees
    data = {"1": (0, 0, 0, 0)}
    for lab in labs[1:]:
        if lab in square_of and rng.random() < 0.8:
            base = data[square_of[lab]]
            data[lab] = tuple(2 * v % n for v in base)
        else:
            data[lab] = tuple(int(v) for v in rng.integers(n, size=4))

    def la(h, d):
        return {d: pow(zeta, data[d][0] * H.carrier.index(h), p)}

    def ra(d, h):
        return {d: pow(zeta, data[d][1] * H.carrier.index(h), p)}

    def lc(d):
        return {f"{power_label(data[d][2], 'g')}*{d}": 1}

    def rc(d):
        return {f"{d}*{power_label(data[d][3], 'g')}": 1}

    Hs = H.carrier
    acts = ActionPair(
        LinMap.from_function(f, Hs * D, D, lambda hd: la(*hd.split("*"))),
        LinMap.from_function(f, D * Hs, D, lambda dh: ra(*dh.split("*"))))
    cos = CoactionPair(LinMap.from_function(f, D, Hs * D, lc), LinMap.from_function(f, D, D * Hs, rc))
    c = LRAdmissibleCandidate(H, alg_bi.algebra, alg_bi.coalgebra, acts, cos, name)
    if D.dim > 1 and rng.random() < rebase:
        c = change_basis(c, _unipotent(rng, f, D))
    if rng.random() < perturb:
        role = ROLES[int(rng.integers(len(ROLES)))]
        m = c.structure(role)
        i, j = int(rng.integers(m.matrix.shape[0])), int(rng.integers(m.matrix.shape[1]))
        c = c.with_structure(role, m.with_entry(i, j, (m.matrix[i, j] + int(rng.integers(1, p))) % p))
    return c


def _unipotent(rng, f, D):
    """Random invertible P on D with P(1) = 1 (upper unitriangular)."""
    n = D.dim
    m = f.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            if i > 0:
                m[i, j] = int(rng.integers(f.p))
    return LinMap(f, D, D, m)


def _inverse(P: LinMap) -> LinMap:
    f, n = P.field, P.domain.dim
    cols = [solve_linear(f, P.matrix, f.eye(n)[:, j]) for j in range(n)]
    return LinMap(f, P.codomain, P.domain, np.stack(cols, axis=1))


def change_basis(c: LRAdmissibleCandidate, P: LinMap) -> LRAdmissibleCandidate:
    """Transport every structure map of ``c`` along the automorphism P of D."""
    f = c.field
    Pi = _inverse(P)
    iH = identity(f, c.H.carrier)
    new = {
        "mult": chain(Pi, c.structure("mult"), tensor(P, P)),
        "unit": chain(Pi, c.structure("unit")),
        "comult": chain(tensor(Pi, Pi), c.structure("comult"), P),
        "counit": chain(c.structure("counit"), P),
        "left-action": chain(Pi, c.structure("left-action"), tensor(iH, P)),
        "right-action": chain(Pi, c.structure("right-action"), tensor(P, iH)),
        "left-coaction": chain(tensor(iH, Pi), c.structure("left-coaction"), P),
        "right-coaction": chain(tensor(Pi, iH), c.structure("right-coaction"), P),
    }
    for role, m in new.items():
        c = c.with_structure(role, m)
    return c


def random_candidates(count: int, seed: int = 0, p: int = 5, **kw):
    rng = np.random.default_rng(seed)
    return [random_candidate(rng, p, name=f"random-{i}", **kw) for i in range(count)]


def _renamed(c: LRAdmissibleCandidate, name: str):
    """The carrier of ``c`` under a new space name, with every map transported."""
    from .hopf import AlgebraData, CoalgebraData
    D = c.carrier
    N = BasedSpace(name, D.labels)
    Hs = c.H.carrier

    def re(m, dom, cod):
        return LinMap(c.field, dom, cod, m.matrix)

    alg = AlgebraData(N, re(c.algebra.mult, N * N, N), re(c.algebra.unit, c.algebra.unit.domain, N))
    coalg = CoalgebraData(N, re(c.coalgebra.comult, N, N * N),
                          re(c.coalgebra.counit, N, c.coalgebra.counit.codomain))
    acts = ActionPair(re(c.actions.left, Hs * N, N), re(c.actions.right, N * Hs, N))
    cos = CoactionPair(re(c.coactions.left, N, Hs * N), re(c.coactions.right, N, N * Hs))
    return N, alg, coalg, acts, cos


def random_yd_pair(rng: np.random.Generator, p: int = 5):
    """A left-left YD object A and a right-right one B over the same H, both
    carrying the algebra and coalgebra of one random candidate."""
    from .lr import YdObject
    c = random_candidate(rng, p, perturb=0.0)
    NA, algA, coA, actA, cosA = _renamed(c, "A")
    NB, algB, coB, actB, cosB = _renamed(c, "B")
    A = YdObject(c.H, NA, actA.left, cosA.left, "left", algA, coA, "A")
    B = YdObject(c.H, NB, actB.right, cosB.right, "right", algB, coB, "B")
    return A, B
