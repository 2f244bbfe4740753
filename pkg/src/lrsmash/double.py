"""Two-sided smash (co)product A#H#B and the double biproduct.

A is a bialgebra in left-left Yetter-Drinfeld modules over H, B one in
right-right Yetter-Drinfeld modules.  Basis order of A#H#B is A-major, then
H, then B; on the smash side it is (A*B)-major, then H, so the comparison
map is a fixed permutation of tensor factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .biproduct import LRAdmissibleCandidate, UnverifiedInput
from .hopf import (ActionPair, AlgebraData, BialgebraData, CoactionPair, CoalgebraData,
                   check_bialgebra, check_algebra, check_bimodule_algebra, check_coalgebra,
                   legs, trivial_actions, trivial_coactions)
from .linfield import K, LinMap, chain, identity, permute_factors, tensor
from .lr import YdObject, check_bialgebra_in_lr, check_yd, embed_left_yd, embed_right_yd
from .report import Check, CheckReport, compare, residual_check

__all__ = [
    "DoubleBiproductInput", "DoubleBiproductResult", "PairingError",
    "trivial_yd", "check_double_input", "two_sided_smash_product", "two_sided_smash_coproduct",
    "check_trivial_pairing", "build_double_biproduct", "induced_lr_structure",
    "phi_isomorphism", "verify_phi", "tensor_algebra", "tensor_coalgebra_of",
]


class PairingError(ValueError):
    """The trivial-pairing condition fails, so A#H#B is not guaranteed a bialgebra."""

    def __init__(self, report: CheckReport):
        super().__init__("trivial-pairing condition fails")
        self.report = report


@dataclass(frozen=True, eq=False)
class DoubleBiproductInput:
    H: BialgebraData
    A: YdObject
    B: YdObject
    name: str = ""

    def __post_init__(self):
        if self.A.side != "left" or self.B.side != "right":
            raise ValueError("A must be a left-left and B a right-right YD object")
        for V in (self.A, self.B):
            if V.algebra is None or V.coalgebra is None:
                raise ValueError(f"{V.name} lacks algebra or coalgebra data")
        if not self.name:
            object.__setattr__(self, "name", f"{self.A.name}#{self.H.carrier.name}#{self.B.name}")

    @property
    def field(self):
        return self.H.field

    @property
    def carrier(self):
        return self.A.carrier * self.H.carrier * self.B.carrier


@dataclass(eq=False)
class DoubleBiproductResult:
    bialgebra: BialgebraData
    pairing_check: CheckReport
    phi: LinMap
    verification: CheckReport
    input: DoubleBiproductInput

    @property
    def passed(self) -> bool:
        return self.pairing_check.passed and self.verification.passed


def trivial_yd(H: BialgebraData, side: str) -> YdObject:
    """The ground field ``k`` as a YD bialgebra on the given side."""
    f = H.field
    one = identity(f, K)
    acts = trivial_actions(H, K)
    cos = trivial_coactions(H, K)
    alg = AlgebraData(K, one, one)
    coalg = CoalgebraData(K, one, one)
    if side == "left":
        return YdObject(H, K, acts.left, cos.left, "left", alg, coalg, name="k")
    return YdObject(H, K, acts.right, cos.right, "right", alg, coalg, name="k")


def check_double_input(inp: DoubleBiproductInput) -> CheckReport:
    """A and B are bialgebras in their Yetter-Drinfeld categories, checked in LR(H)."""
    rep = CheckReport(f"double input {inp.name}")
    rep.extend(check_bialgebra(inp.H), "H: ")
    rep.extend(check_yd(inp.A), "A: ")
    rep.extend(check_yd(inp.B), "B: ")
    rep.add(check_bialgebra_in_lr(embed_left_yd(inp.A), inp.A.algebra, inp.A.coalgebra)
            .summary("A: bialgebra-in-yd"))
    rep.add(check_bialgebra_in_lr(embed_right_yd(inp.B), inp.B.algebra, inp.B.coalgebra)
            .summary("B: bialgebra-in-yd"))
    return rep


def _tensors(inp: DoubleBiproductInput):
    Hs, A, B = inp.H.carrier, inp.A.carrier, inp.B.carrier
    laA = legs(inp.A.action, [A], [Hs, A])
    lcA = legs(inp.A.coaction, [Hs, A], [A])
    raB = legs(inp.B.action, [B], [B, Hs])
    rcB = legs(inp.B.coaction, [B, Hs], [B])
    return laA, lcA, raB, rcB


def two_sided_smash_product(inp: DoubleBiproductInput, verify: bool = True) -> AlgebraData:
    """``(a#h#b)(a'#h'#b') = a(h_1.a') # h_2 h'_1 # (b.h'_2) b'``."""
    H, A, B = inp.H, inp.A, inp.B
    if verify:
        pre = CheckReport("two-sided smash product prerequisites")
        pre.extend(check_bialgebra(H), "H: ")
        pre.extend(check_algebra(A.algebra), "A: ")
        pre.extend(check_algebra(B.algebra), "B: ")
        pre.extend(check_bimodule_algebra(H, A.algebra, embed_left_yd(A).actions), "A: ")
        pre.extend(check_bimodule_algebra(H, B.algebra, embed_right_yd(B).actions), "B: ")
        pre.add(check_yd(A)["left-module"])
        pre.add(check_yd(B)["right-module"])
        if not pre.passed:
            raise UnverifiedInput(pre)
    f = inp.field
    laA, _, raB, _ = _tensors(inp)
    t = f.einsum("xyh,zwg,txc,Pat,Qyz,sbw,Rse->PQRahbcge",
                 # Delta(h) = x (x) y ; Delta(h') = z (x) w ; x.a' = t ; a t ;
                 # y z ; b.w = s ; s b'
                 H.D, H.D, laA, A.algebra.m, H.m, raB, B.algebra.m)
    C = inp.carrier
    mult = LinMap.from_tensor(f, C * C, C, t)
    unit = LinMap.from_tensor(f, K, C, f.einsum("a,h,b->ahb", A.algebra.u, H.u, B.algebra.u))
    return AlgebraData(C, mult, unit)


def two_sided_smash_coproduct(inp: DoubleBiproductInput, verify: bool = True) -> CoalgebraData:
    """``D(a#h#b) = (a_1 # a_2^1 h_1 # b_1^1) (x) (a_2^2 # h_2 b_1^2 # b_2)``."""
    H, A, B = inp.H, inp.A, inp.B
    if verify:
        pre = CheckReport("two-sided smash coproduct prerequisites")
        pre.extend(check_bialgebra(H), "H: ")
        pre.extend(check_coalgebra(A.coalgebra), "A: ")
        pre.extend(check_coalgebra(B.coalgebra), "B: ")
        pre.add(check_yd(A)["left-comodule"])
        pre.add(check_yd(B)["right-comodule"])
        if not pre.passed:
            raise UnverifiedInput(pre)
    f = inp.field
    _, lcA, _, rcB = _tensors(inp)
    t = f.einsum("pqa,uvq,xyh,rsb,wzr,Kux,Lyz->pKwvLsahb",
                 # Delta(a) = p (x) q ; lambda(q) = u (x) v ; Delta(h) = x (x) y ;
                 # Delta(b) = r (x) s ; rho(r) = w (x) z ; u x ; y z
                 A.coalgebra.D, lcA, H.D, B.coalgebra.D, rcB, H.m, H.m)
    C = inp.carrier
    comult = LinMap.from_tensor(f, C, C * C, t)
    counit = LinMap.from_tensor(f, C, K, f.einsum("a,h,b->ahb", A.coalgebra.e, H.e, B.coalgebra.e))
    return CoalgebraData(C, comult, counit)


def check_trivial_pairing(A: YdObject, B: YdObject) -> CheckReport:
    """``b^2.a^2 (x) b^1.a^1 = a (x) b`` on all basis pairs (a, b)."""
    f = A.H.field
    Hs = A.H.carrier
    laA = legs(A.action, [A.carrier], [Hs, A.carrier])
    lcA = legs(A.coaction, [Hs, A.carrier], [A.carrier])
    raB = legs(B.action, [B.carrier], [B.carrier, Hs])
    rcB = legs(B.coaction, [B.carrier, Hs], [B.carrier])
    lhs = f.einsum("sxa,ytb,Ptx,Qys->PQab", lcA, rcB, laA, raB)
    rhs = f.einsum("Pa,Qb->PQab", f.eye(A.carrier.dim), f.eye(B.carrier.dim))
    rep = CheckReport(f"trivial pairing {A.name}, {B.name}")
    rep.add(compare("trivial-pairing", f, lhs, rhs, 2, [A.carrier, B.carrier]))
    return rep


def phi_isomorphism(inp: DoubleBiproductInput) -> LinMap:
    """``(a (x) b) # h -> a # h # b``: a permutation of tensor factors."""
    return permute_factors(inp.field, [inp.A.carrier, inp.B.carrier, inp.H.carrier], (0, 2, 1))


def build_double_biproduct(inp: DoubleBiproductInput) -> DoubleBiproductResult:
    pairing = check_trivial_pairing(inp.A, inp.B)
    if not pairing.passed:
        raise PairingError(pairing)
    bi = BialgebraData(two_sided_smash_product(inp), two_sided_smash_coproduct(inp))
    suite = check_bialgebra(bi)
    suite.title = f"double biproduct {inp.name}"
    return DoubleBiproductResult(bi, pairing, phi_isomorphism(inp), suite, inp)


def tensor_algebra(X: AlgebraData, Y: AlgebraData) -> AlgebraData:
    f = X.field
    Xs, Ys = X.carrier, Y.carrier
    mult = chain(tensor(X.mult, Y.mult), permute_factors(f, [Xs, Ys, Xs, Ys], (0, 2, 1, 3)))
    return AlgebraData(Xs * Ys, mult, tensor(X.unit, Y.unit))


def tensor_coalgebra_of(X: CoalgebraData, Y: CoalgebraData) -> CoalgebraData:
    f = X.field
    Xs, Ys = X.carrier, Y.carrier
    comult = chain(permute_factors(f, [Xs, Xs, Ys, Ys], (0, 2, 1, 3)), tensor(X.comult, Y.comult))
    return CoalgebraData(Xs * Ys, comult, tensor(X.counit, Y.counit))


def induced_lr_structure(A: YdObject, B: YdObject, name: str = "") -> LRAdmissibleCandidate:
    """D = A*B with tensor algebra and coalgebra, A's structures on the left and
    B's on the right."""
    H = A.H
    iA, iB = identity(H.field, A.carrier), identity(H.field, B.carrier)
    return LRAdmissibleCandidate(
        H, tensor_algebra(A.algebra, B.algebra), tensor_coalgebra_of(A.coalgebra, B.coalgebra),
        ActionPair(tensor(A.action, iB), tensor(iA, B.action)),
        CoactionPair(tensor(A.coaction, iB), tensor(iA, B.coaction)),
        name or f"{A.name}*{B.name}")


def verify_phi(smash: BialgebraData, double: BialgebraData, phi: LinMap) -> CheckReport:
    """phi is a bialgebra isomorphism ``smash -> double``."""
    f = phi.field
    S = smash.carrier
    rep = CheckReport("phi")
    det_ok = phi.domain == S and phi.codomain == double.carrier
    square = phi.matrix.shape[0] == phi.matrix.shape[1]
    perm = square and all(sum(1 for v in row if v != 0) == 1 for row in phi.matrix) \
        and all(sum(1 for v in col if v != 0) == 1 for col in phi.matrix.T)
    rep.add(Check("bijective", bool(det_ok and perm)))

    def same(name, lhs, rhs, inputs):
        res = f.reduce(lhs.matrix - rhs.matrix)
        rep.add(residual_check(name, f, res, 1, inputs))

    same("multiplicative", chain(phi, smash.mult), chain(double.mult, tensor(phi, phi)), [S, S])
    same("unital", chain(phi, smash.unit), double.unit, [])
    same("comultiplicative", chain(double.comult, phi), chain(tensor(phi, phi), smash.comult), [S])
    same("counital", chain(double.counit, phi), smash.counit, [S])
    return rep
