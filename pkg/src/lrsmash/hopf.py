"""Algebras, coalgebras, bialgebras, (co)module structures and their axiom checkers.

All checkers evaluate identities as exact tensor contractions of structure
constants.  Index convention for structure tensors: output legs first, then
input legs, e.g. ``mult[o, a, b]`` is the coefficient of ``e_o`` in
``e_a e_b`` and ``left_coaction[h, o, d]`` that of ``e_h (x) e_o`` in
``lambda(e_d)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linfield import K, BasedSpace, Field, LinMap, identity, solve_linear
from .report import Check, CheckReport, compare, compare_all

__all__ = [
    "AlgebraData", "CoalgebraData", "BialgebraData", "ActionPair", "CoactionPair",
    "bialgebra", "trivial_actions", "trivial_coactions",
    "check_algebra", "check_coalgebra", "check_bialgebra", "check_bimodule",
    "check_bicomodule", "check_bimodule_algebra", "check_bicomodule_coalgebra",
    "solve_antipode", "solve_skew_antipode", "convolution_inverse",
]


def legs(f: LinMap, outs, ins) -> np.ndarray:
    """Structure tensor of ``f`` with one leg per space in ``outs`` then ``ins``."""
    return f.tensor([s.dim for s in outs], [s.dim for s in ins])


@dataclass(frozen=True, eq=False)
class AlgebraData:
    carrier: BasedSpace
    mult: LinMap   # A*A -> A
    unit: LinMap   # k -> A

    def __post_init__(self):
        A = self.carrier
        _expect(self.mult, A * A, A, "mult")
        _expect(self.unit, K, A, "unit")

    @property
    def field(self) -> Field:
        return self.mult.field

    @property
    def m(self):
        return legs(self.mult, [self.carrier], [self.carrier, self.carrier])

    @property
    def u(self):
        return self.unit.matrix[:, 0]

    @property
    def unit_vector(self):
        return self.u


@dataclass(frozen=True, eq=False)
class CoalgebraData:
    carrier: BasedSpace
    comult: LinMap   # C -> C*C
    counit: LinMap   # C -> k

    def __post_init__(self):
        C = self.carrier
        _expect(self.comult, C, C * C, "comult")
        _expect(self.counit, C, K, "counit")

    @property
    def field(self) -> Field:
        return self.comult.field

    @property
    def D(self):
        return legs(self.comult, [self.carrier, self.carrier], [self.carrier])

    @property
    def e(self):
        return self.counit.matrix[0, :]


@dataclass(frozen=True, eq=False)
class BialgebraData:
    algebra: AlgebraData
    coalgebra: CoalgebraData

    def __post_init__(self):
        if self.algebra.carrier != self.coalgebra.carrier:
            raise ValueError("algebra and coalgebra live on different carriers")

    carrier = property(lambda self: self.algebra.carrier)
    field = property(lambda self: self.algebra.field)
    mult = property(lambda self: self.algebra.mult)
    unit = property(lambda self: self.algebra.unit)
    comult = property(lambda self: self.coalgebra.comult)
    counit = property(lambda self: self.coalgebra.counit)
    m = property(lambda self: self.algebra.m)
    u = property(lambda self: self.algebra.u)
    D = property(lambda self: self.coalgebra.D)
    e = property(lambda self: self.coalgebra.e)

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def id(self) -> LinMap:
        return identity(self.field, self.carrier)

    def element(self, label: str) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[self.carrier.index(label)] = self.field.one()
        return v


def bialgebra(mult: LinMap, unit: LinMap, comult: LinMap, counit: LinMap) -> BialgebraData:
    A = mult.codomain
    return BialgebraData(AlgebraData(A, mult, unit), CoalgebraData(A, comult, counit))


@dataclass(frozen=True, eq=False)
class ActionPair:
    left: LinMap    # H*D -> D
    right: LinMap   # D*H -> D

    def tensors(self, H: BasedSpace, D: BasedSpace):
        return legs(self.left, [D], [H, D]), legs(self.right, [D], [D, H])


@dataclass(frozen=True, eq=False)
class CoactionPair:
    left: LinMap    # D -> H*D
    right: LinMap   # D -> D*H

    def tensors(self, H: BasedSpace, D: BasedSpace):
        return legs(self.left, [H, D], [D]), legs(self.right, [D, H], [D])


def trivial_actions(H: BialgebraData, D: BasedSpace) -> ActionPair:
    f = H.field
    e = H.e
    la = np.einsum("h,od->ohd", e, f.eye(D.dim))
    ra = np.einsum("h,od->odh", e, f.eye(D.dim))
    return ActionPair(LinMap.from_tensor(f, H.carrier * D, D, la),
                      LinMap.from_tensor(f, D * H.carrier, D, ra))


def trivial_coactions(H: BialgebraData, D: BasedSpace) -> CoactionPair:
    f = H.field
    u = H.u
    lc = np.einsum("h,od->hod", u, f.eye(D.dim))
    rc = np.einsum("h,od->ohd", u, f.eye(D.dim))
    return CoactionPair(LinMap.from_tensor(f, D, H.carrier * D, lc),
                        LinMap.from_tensor(f, D, D * H.carrier, rc))


def _expect(f: LinMap, dom: BasedSpace, cod: BasedSpace, what: str):
    if f.domain != dom or f.codomain != cod:
        raise ValueError(f"{what}: expected {dom} -> {cod}, got {f.domain} -> {f.codomain}")


# ---------------------------------------------------------------------------
# checkers


def check_algebra(a: AlgebraData) -> CheckReport:
    f, A, m, u = a.field, a.carrier, a.m, a.u
    I = f.eye(A.dim)
    rep = CheckReport("algebra")
    rep.add(compare("associativity", f,
                    f.einsum("oxc,xab->oabc", m, m), f.einsum("oax,xbc->oabc", m, m),
                    1, [A, A, A]))
    rep.add(compare("left-unit", f, f.einsum("oxb,x->ob", m, u), I, 1, [A]))
    rep.add(compare("right-unit", f, f.einsum("oax,x->oa", m, u), I, 1, [A]))
    return rep


def check_coalgebra(c: CoalgebraData) -> CheckReport:
    f, C, D, e = c.field, c.carrier, c.D, c.e
    I = f.eye(C.dim)
    rep = CheckReport("coalgebra")
    rep.add(compare("coassociativity", f,
                    f.einsum("xci,abx->abci", D, D), f.einsum("axi,bcx->abci", D, D),
                    3, [C]))
    rep.add(compare("left-counit", f, f.einsum("a,aoi->oi", e, D), I, 1, [C]))
    rep.add(compare("right-counit", f, f.einsum("b,obi->oi", e, D), I, 1, [C]))
    return rep


def check_bialgebra(b: BialgebraData) -> CheckReport:
    """The seven bialgebra axioms, one report entry each."""
    f, A = b.field, b.carrier
    alg, coalg = check_algebra(b.algebra), check_coalgebra(b.coalgebra)
    m, u, D, e = b.m, b.u, b.D, b.e
    rep = CheckReport("bialgebra")
    rep.add(alg["associativity"])
    rep.add(CheckReport(checks=[alg["left-unit"], alg["right-unit"]]).summary("unit"))
    rep.add(coalg["coassociativity"])
    rep.add(CheckReport(checks=[coalg["left-counit"], coalg["right-counit"]]).summary("counit"))
    rep.add(compare("comult-multiplicative", f,
                    f.einsum("pqx,xab->pqab", D, m),
                    f.einsum("cda,efb,pce,qdf->pqab", D, D, m, m),
                    2, [A, A]))
    rep.add(compare("comult-unital", f,
                    f.einsum("pqx,x->pq", D, u), f.einsum("p,q->pq", u, u), 2, []))
    rep.add(compare_all("counit-algebra-map", f, [
        (f.einsum("x,xab->ab", e, m), f.einsum("a,b->ab", e, e), 0, [A, A]),
        (np.array([f.einsum("x,x->", e, u)], dtype=object), np.array([f.one()], dtype=object), 1, []),
    ]))
    return rep


def check_bimodule(H: BialgebraData, actions: ActionPair) -> CheckReport:
    f, Hs = H.field, H.carrier
    D = actions.left.codomain
    la, ra = actions.tensors(Hs, D)
    mH, uH = H.m, H.u
    I = f.eye(D.dim)
    rep = CheckReport("bimodule")
    rep.add(compare_all("left-module", f, [
        (f.einsum("oay,ybd->oabd", la, la), f.einsum("oxd,xab->oabd", la, mH), 1, [Hs, Hs, D]),
        (f.einsum("oxd,x->od", la, uH), I, 1, [D]),
    ]))
    rep.add(compare_all("right-module", f, [
        (f.einsum("oyb,yda->odab", ra, ra), f.einsum("odx,xab->odab", ra, mH), 1, [D, Hs, Hs]),
        (f.einsum("odx,x->od", ra, uH), I, 1, [D]),
    ]))
    rep.add(compare("actions-commute", f,
                    f.einsum("oyg,yhd->ohdg", ra, la), f.einsum("ohy,ydg->ohdg", la, ra),
                    1, [Hs, D, Hs]))
    return rep


def check_bicomodule(H: BialgebraData, coactions: CoactionPair) -> CheckReport:
    f, Hs = H.field, H.carrier
    D = coactions.left.domain
    lc, rc = coactions.tensors(Hs, D)
    DH, eH = H.D, H.e
    I = f.eye(D.dim)
    rep = CheckReport("bicomodule")
    rep.add(compare_all("left-comodule", f, [
        (f.einsum("abx,xod->abod", DH, lc), f.einsum("ayd,boy->abod", lc, lc), 3, [D]),
        (f.einsum("x,xod->od", eH, lc), I, 1, [D]),
    ]))
    rep.add(compare_all("right-comodule", f, [
        (f.einsum("oay,ycd->oacd", rc, rc), f.einsum("oxd,acx->oacd", rc, DH), 3, [D]),
        (f.einsum("oxd,x->od", rc, eH), I, 1, [D]),
    ]))
    rep.add(compare("coactions-commute", f,
                    f.einsum("aoy,ycd->aocd", lc, rc), f.einsum("ayd,ocy->aocd", lc, rc),
                    3, [D]))
    return rep


def check_bimodule_algebra(H: BialgebraData, algebra: AlgebraData, actions: ActionPair) -> CheckReport:
    f, Hs, D = H.field, H.carrier, algebra.carrier
    la, ra = actions.tensors(Hs, D)
    m, u = algebra.m, algebra.u
    DH, eH = H.D, H.e
    rep = CheckReport("bimodule-algebra")
    rep.add(compare("left-action-unital", f,
                    f.einsum("ohx,x->oh", la, u), f.einsum("h,o->oh", eH, u), 1, [Hs]))
    rep.add(compare("right-action-unital", f,
                    f.einsum("oxh,x->oh", ra, u), f.einsum("h,o->oh", eH, u), 1, [Hs]))
    rep.add(compare("left-action-multiplicative", f,
                    f.einsum("ohx,xcd->ohcd", la, m),
                    f.einsum("abh,yac,zbd,oyz->ohcd", DH, la, la, m),
                    1, [Hs, D, D]))
    rep.add(compare("right-action-multiplicative", f,
                    f.einsum("oxh,xcd->ocdh", ra, m),
                    f.einsum("abh,yca,zdb,oyz->ocdh", DH, ra, ra, m),
                    1, [D, D, Hs]))
    return rep


def check_bicomodule_coalgebra(H: BialgebraData, coalgebra: CoalgebraData,
                               coactions: CoactionPair) -> CheckReport:
    f, Hs, D = H.field, H.carrier, coalgebra.carrier
    lc, rc = coactions.tensors(Hs, D)
    DD, eD = coalgebra.D, coalgebra.e
    mH, uH = H.m, H.u
    rep = CheckReport("bicomodule-coalgebra")
    rep.add(compare("left-coaction-comultiplicative", f,
                    f.einsum("xyd,apx,bqy,kab->kpqd", DD, lc, lc, mH),
                    f.einsum("kzd,pqz->kpqd", lc, DD), 3, [D]))
    rep.add(compare("left-coaction-counital", f,
                    f.einsum("kxd,x->kd", lc, eD), f.einsum("d,k->kd", eD, uH), 1, [D]))
    rep.add(compare("right-coaction-comultiplicative", f,
                    f.einsum("xyd,pax,qby,kab->pqkd", DD, rc, rc, mH),
                    f.einsum("zkd,pqz->pqkd", rc, DD), 3, [D]))
    rep.add(compare("right-coaction-counital", f,
                    f.einsum("xkd,x->kd", rc, eD), f.einsum("d,k->kd", eD, uH), 1, [D]))
    return rep


# ---------------------------------------------------------------------------
# antipodes


def convolution_inverse(b: BialgebraData, opposite: bool = False) -> LinMap | None:
    """Solve ``m(S*id)D = m(id*S)D = u e`` for S as one exact linear system.

    With ``opposite=True`` the comultiplication is replaced by its flip, which
    yields the skew antipode.  Returns None when no solution exists.
    """
    f, n = b.field, b.dim
    m, D, u, e = b.m, b.D, b.u, b.e
    if opposite:
        D = D.transpose(1, 0, 2)
    # unknown S[x, a]; equations indexed by (o, i)
    left = f.einsum("oxb,abi->oixa", m, D).reshape(n * n, n * n)
    right = f.einsum("oax,abi->oixb", m, D).reshape(n * n, n * n)
    rhs = f.einsum("o,i->oi", u, e).reshape(-1)
    sol = solve_linear(f, np.vstack([left, right]), np.concatenate([rhs, rhs]))
    if sol is None:
        return None
    return LinMap(f, b.carrier, b.carrier, sol.reshape(n, n))


def solve_antipode(b: BialgebraData) -> LinMap | None:
    return convolution_inverse(b)


def solve_skew_antipode(b: BialgebraData) -> LinMap | None:
    s_inv = convolution_inverse(b, opposite=True)
    if s_inv is not None:
        s = convolution_inverse(b)
        if s is not None:
            one = b.id()
            if s @ s_inv != one or s_inv @ s != one:
                raise ArithmeticError("antipode and skew antipode are not mutually inverse")
    return s_inv
