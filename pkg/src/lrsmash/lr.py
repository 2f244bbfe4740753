"""The prebraided monoidal category LR(H).

Objects carry left and right H-actions and H-coactions that are
simultaneously left-left and right-right Yetter-Drinfeld modules and
left-right and right-left Long modules.  Everything in this module is
expressed through the LinMap calculus (compose, tensor, permute_factors),
independently of the contraction formulas used by the admissibility checker,
so the two can be cross-checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .hopf import (ActionPair, AlgebraData, BialgebraData, CoactionPair, CoalgebraData,
                   check_algebra, check_bicomodule, check_bimodule, check_coalgebra,
                   trivial_actions, trivial_coactions)
from .linfield import (K, BasedSpace, LinMap, SpaceMismatch, chain, identity,
                       permute_factors, tensor)
from .report import Check, CheckReport, residual_check

__all__ = [
    "LRObject", "LRMorphism", "YdObject",
    "unit_object", "check_lr_object", "check_lr_morphism", "tensor_lr",
    "braiding", "braiding_inverse", "verify_prebraided",
    "embed_left_yd", "embed_right_yd", "embed_yd_pair", "check_yd", "check_yd_morphism",
    "yd_braiding", "check_bialgebra_in_lr",
]


@dataclass(frozen=True, eq=False)
class LRObject:
    H: BialgebraData
    carrier: BasedSpace
    actions: ActionPair
    coactions: CoactionPair
    name: str = ""

    def __post_init__(self):
        Hs, M = self.H.carrier, self.carrier
        for f, dom, cod, what in [
            (self.actions.left, Hs * M, M, "left action"),
            (self.actions.right, M * Hs, M, "right action"),
            (self.coactions.left, M, Hs * M, "left coaction"),
            (self.coactions.right, M, M * Hs, "right coaction"),
        ]:
            if f.domain != dom or f.codomain != cod:
                raise SpaceMismatch(f"{what}: expected {dom} -> {cod}, got {f.domain} -> {f.codomain}")
        if not self.name:
            object.__setattr__(self, "name", M.name)

    la = property(lambda self: self.actions.left)
    ra = property(lambda self: self.actions.right)
    lc = property(lambda self: self.coactions.left)
    rc = property(lambda self: self.coactions.right)
    field = property(lambda self: self.H.field)

    def id(self) -> LinMap:
        return identity(self.field, self.carrier)


@dataclass(frozen=True, eq=False)
class LRMorphism:
    f: LinMap
    source: LRObject
    target: LRObject
    name: str = ""


@dataclass(frozen=True, eq=False)
class YdObject:
    """A left-left (``side="left"``) or right-right (``side="right"``) YD module.

    ``action`` is H*V -> V or V*H -> V, ``coaction`` is V -> H*V or V -> V*H.
    ``algebra``/``coalgebra`` are set when the object is a braided bialgebra.
    """

    H: BialgebraData
    carrier: BasedSpace
    action: LinMap
    coaction: LinMap
    side: str = "left"
    algebra: AlgebraData | None = None
    coalgebra: CoalgebraData | None = None
    name: str = ""

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', not {self.side!r}")
        if not self.name:
            object.__setattr__(self, "name", self.carrier.name)


# ---------------------------------------------------------------------------
# small helpers


def _P(obj_or_field, spaces, perm):
    f = obj_or_field.field if hasattr(obj_or_field, "field") else obj_or_field
    return permute_factors(f, spaces, perm)


def _id(H: BialgebraData, space: BasedSpace) -> LinMap:
    return identity(H.field, space)


def _map_check(name: str, lhs: LinMap, rhs: LinMap, inputs) -> Check:
    if lhs.domain != rhs.domain or lhs.codomain != rhs.codomain:
        raise SpaceMismatch(f"{name}: sides are not parallel maps", lhs, rhs)
    res = lhs.field.reduce(lhs.matrix - rhs.matrix)
    return residual_check(name, lhs.field, res, 1, inputs)


def unit_object(H: BialgebraData) -> LRObject:
    """The monoidal unit k with actions via the counit and coactions via the unit."""
    f, Hs = H.field, H.carrier
    eps = LinMap(f, Hs, K, H.counit.matrix)
    eta = LinMap(f, K, Hs, H.unit.matrix)
    return LRObject(H, K, ActionPair(eps, eps), CoactionPair(eta, eta), name="k")


# ---------------------------------------------------------------------------
# objects and morphisms


def lr_conditions(M: LRObject) -> CheckReport:
    """The two Yetter-Drinfeld and two Long compatibilities, as LinMap identities."""
    H, Hs, Ms = M.H, M.H.carrier, M.carrier
    iH, iM = _id(H, Hs), _id(H, Ms)
    mH, dH = H.mult, H.comult
    rep = CheckReport("lr-conditions")

    lhs = chain(tensor(mH, iM), _P(M, [Hs, Ms, Hs], (0, 2, 1)), tensor(M.lc, iH),
                tensor(M.la, iH), _P(M, [Hs, Hs, Ms], (0, 2, 1)), tensor(dH, iM))
    rhs = chain(tensor(mH, M.la), _P(M, [Hs, Hs, Hs, Ms], (0, 2, 1, 3)), tensor(dH, M.lc))
    rep.add(_map_check("left-left-yd", lhs, rhs, [Hs, Ms]))

    lhs = chain(M.rc, M.la)
    rhs = chain(tensor(M.la, iH), tensor(iH, M.rc))
    rep.add(_map_check("left-right-long", lhs, rhs, [Hs, Ms]))

    lhs = chain(tensor(iM, mH), tensor(iM, _P(M, [Hs, Hs], (1, 0))), tensor(M.rc, iH),
                tensor(M.ra, iH), _P(M, [Ms, Hs, Hs], (0, 2, 1)), tensor(iM, dH))
    rhs = chain(tensor(M.ra, mH), _P(M, [Ms, Hs, Hs, Hs], (0, 2, 1, 3)), tensor(M.rc, dH))
    rep.add(_map_check("right-right-yd", lhs, rhs, [Ms, Hs]))

    lhs = chain(M.lc, M.ra)
    rhs = chain(tensor(iH, M.ra), tensor(M.lc, iH))
    rep.add(_map_check("right-left-long", lhs, rhs, [Ms, Hs]))
    return rep


def check_lr_object(M: LRObject) -> CheckReport:
    rep = CheckReport(f"lr-object {M.name}")
    rep.extend(check_bimodule(M.H, M.actions))
    rep.extend(check_bicomodule(M.H, M.coactions))
    rep.extend(lr_conditions(M))
    return rep


def check_lr_morphism(f: LinMap, M: LRObject, N: LRObject) -> CheckReport:
    """H-bilinearity and H-bicolinearity of ``f: M -> N``."""
    if f.domain != M.carrier or f.codomain != N.carrier:
        raise SpaceMismatch(f"map {f.domain} -> {f.codomain} does not go {M.carrier} -> {N.carrier}",
                            f.domain, M.carrier)
    H, Hs = M.H, M.H.carrier
    iH = _id(H, Hs)
    rep = CheckReport(f"lr-morphism {M.name} -> {N.name}")
    rep.add(_map_check("left-linear", chain(f, M.la), chain(N.la, tensor(iH, f)), [Hs, M.carrier]))
    rep.add(_map_check("right-linear", chain(f, M.ra), chain(N.ra, tensor(f, iH)), [M.carrier, Hs]))
    rep.add(_map_check("left-colinear", chain(N.lc, f), chain(tensor(iH, f), M.lc), [M.carrier]))
    rep.add(_map_check("right-colinear", chain(N.rc, f), chain(tensor(f, iH), M.rc), [M.carrier]))
    return rep


def tensor_lr(M: LRObject, N: LRObject) -> LRObject:
    """``M (x) N`` with diagonal actions and codiagonal coactions."""
    H, Hs, Ms, Ns = M.H, M.H.carrier, M.carrier, N.carrier
    iH, iM, iN = _id(H, Hs), _id(H, Ms), _id(H, Ns)
    la = chain(tensor(M.la, N.la), _P(M, [Hs, Hs, Ms, Ns], (0, 2, 1, 3)), tensor(H.comult, iM, iN))
    ra = chain(tensor(M.ra, N.ra), _P(M, [Ms, Ns, Hs, Hs], (0, 2, 1, 3)), tensor(iM, iN, H.comult))
    lc = chain(tensor(H.mult, iM, iN), _P(M, [Hs, Ms, Hs, Ns], (0, 2, 1, 3)), tensor(M.lc, N.lc))
    rc = chain(tensor(iM, iN, H.mult), _P(M, [Ms, Hs, Ns, Hs], (0, 2, 1, 3)), tensor(M.rc, N.rc))
    name = "*".join(n for n in (M.name, N.name) if n != "k") or "k"
    return LRObject(H, Ms * Ns, ActionPair(la, ra), CoactionPair(lc, rc), name=name)


def braiding(M: LRObject, N: LRObject) -> LinMap:
    """``c(m (x) n) = m^(-1).n^<0> (x) m^(0).n^<1>``, a map M*N -> N*M."""
    Hs = M.H.carrier
    return chain(tensor(N.la, M.ra), _P(M, [Hs, M.carrier, N.carrier, Hs], (0, 2, 1, 3)),
                 tensor(M.lc, N.rc))


def braiding_inverse(M: LRObject, N: LRObject, s_inv: LinMap) -> LinMap:
    """``n (x) m -> m^(0).S'(n^<1>) (x) S'(m^(-1)).n^<0>`` with S' the skew antipode."""
    H, Hs = M.H, M.H.carrier
    Ms, Ns = M.carrier, N.carrier
    return chain(tensor(M.ra, N.la), _P(M, [Ns, Hs, Hs, Ms], (3, 1, 2, 0)),
                 tensor(_id(H, Ns), s_inv, s_inv, _id(H, Ms)), tensor(N.rc, M.lc))


def verify_prebraided(objects, morphisms=(), s_inv: LinMap | None = None) -> CheckReport:
    """Exhaustive braiding checks over a finite list of objects and morphisms.

    Pairs: the braiding is an LR-morphism (and, given ``s_inv``, invertible
    with the displayed inverse).  Triples: both hexagon identities.
    Morphisms: naturality in each variable against every object.
    """
    rep = CheckReport("prebraided")
    objects = list(objects)
    cache = {}

    def c(M, N):
        # the cache holds M and N too, so their ids cannot be recycled
        key = (id(M), id(N))
        if key not in cache:
            cache[key] = (M, N, braiding(M, N))
        return cache[key][2]

    for M, N in product(objects, repeat=2):
        tag = f"c[{M.name},{N.name}]"
        MN, NM = tensor_lr(M, N), tensor_lr(N, M)
        rep.add(check_lr_morphism(c(M, N), MN, NM).summary(f"{tag} lr-morphism"))
        if s_inv is not None:
            ci = braiding_inverse(M, N, s_inv)
            rep.add(_map_check(f"{tag} inverse-after", chain(ci, c(M, N)),
                               identity(M.field, MN.carrier), [M.carrier, N.carrier]))
            rep.add(_map_check(f"{tag} inverse-before", chain(c(M, N), ci),
                               identity(M.field, NM.carrier), [N.carrier, M.carrier]))
    for M, N, P in product(objects, repeat=3):
        tag = f"[{M.name},{N.name},{P.name}]"
        NP, MN = tensor_lr(N, P), tensor_lr(M, N)
        lhs = c(M, NP)
        rhs = chain(tensor(N.id(), c(M, P)), tensor(c(M, N), P.id()))
        rep.add(_map_check(f"hexagon-1 {tag}", lhs, rhs, [M.carrier, N.carrier, P.carrier]))
        lhs = c(MN, P)
        rhs = chain(tensor(c(M, P), N.id()), tensor(M.id(), c(N, P)))
        rep.add(_map_check(f"hexagon-2 {tag}", lhs, rhs, [M.carrier, N.carrier, P.carrier]))
    for mor in morphisms:
        f, M, M2 = mor.f, mor.source, mor.target
        fname = mor.name or f"{M.name}->{M2.name}"
        for N in objects:
            rep.add(_map_check(f"natural-left {fname} [{N.name}]",
                               chain(c(M2, N), tensor(f, N.id())),
                               chain(tensor(N.id(), f), c(M, N)), [M.carrier, N.carrier]))
            rep.add(_map_check(f"natural-right {fname} [{N.name}]",
                               chain(c(N, M2), tensor(N.id(), f)),
                               chain(tensor(f, N.id()), c(N, M)), [N.carrier, M.carrier]))
    return rep


# ---------------------------------------------------------------------------
# Yetter-Drinfeld subcategories


def embed_left_yd(V: YdObject) -> LRObject:
    if V.side != "left":
        raise ValueError("embed_left_yd needs a left-left YD module")
    right = trivial_actions(V.H, V.carrier).right
    rc = trivial_coactions(V.H, V.carrier).right
    return LRObject(V.H, V.carrier, ActionPair(V.action, right), CoactionPair(V.coaction, rc), V.name)


def embed_right_yd(W: YdObject) -> LRObject:
    if W.side != "right":
        raise ValueError("embed_right_yd needs a right-right YD module")
    left = trivial_actions(W.H, W.carrier).left
    lc = trivial_coactions(W.H, W.carrier).left
    return LRObject(W.H, W.carrier, ActionPair(left, W.action), CoactionPair(lc, W.coaction), W.name)


def embed_yd_pair(V: YdObject, W: YdObject) -> LRObject:
    """``V (x) W`` with V's structures on the left and W's on the right."""
    if V.side != "left" or W.side != "right":
        raise ValueError("embed_yd_pair needs (left-left, right-right)")
    iV, iW = _id(V.H, V.carrier), _id(V.H, W.carrier)
    return LRObject(V.H, V.carrier * W.carrier,
                    ActionPair(tensor(V.action, iW), tensor(iV, W.action)),
                    CoactionPair(tensor(V.coaction, iW), tensor(iV, W.coaction)),
                    name=f"{V.name}*{W.name}")


def _embed(V: YdObject) -> LRObject:
    return embed_left_yd(V) if V.side == "left" else embed_right_yd(V)


def check_yd(V: YdObject) -> CheckReport:
    """Module, comodule and Yetter-Drinfeld compatibility for one side."""
    M = _embed(V)
    full = check_lr_object(M)
    side = V.side
    names = [f"{side}-module", f"{side}-comodule", f"{side}-{side}-yd"]
    rep = CheckReport(f"yd {V.name}")
    for n in names:
        rep.add(full[n])
    return rep


def check_yd_morphism(f: LinMap, V: YdObject, W: YdObject) -> CheckReport:
    full = check_lr_morphism(f, _embed(V), _embed(W))
    rep = CheckReport(f"yd-morphism {V.name} -> {W.name}")
    rep.add(full[f"{V.side}-linear"])
    rep.add(full[f"{V.side}-colinear"])
    return rep


def yd_braiding(V: YdObject, W: YdObject) -> LinMap:
    """Standard braiding of a YD category: ``v^(-1).w (x) v^(0)`` (left-left) or
    ``w^(0) (x) v.w^(1)`` (right-right)."""
    H, Hs = V.H, V.H.carrier
    if V.side == "left" and W.side == "left":
        return chain(tensor(W.action, _id(H, V.carrier)), _P(H, [Hs, V.carrier, W.carrier], (0, 2, 1)),
                     tensor(V.coaction, _id(H, W.carrier)))
    if V.side == "right" and W.side == "right":
        return chain(tensor(_id(H, W.carrier), V.action), _P(H, [V.carrier, W.carrier, Hs], (1, 0, 2)),
                     tensor(_id(H, V.carrier), W.coaction))
    raise ValueError("yd_braiding needs two objects of the same side")


# ---------------------------------------------------------------------------
# bialgebras in LR(H)


def check_bialgebra_in_lr(M: LRObject, algebra: AlgebraData, coalgebra: CoalgebraData) -> CheckReport:
    """D is an object, its four structure maps are morphisms of LR(H), unit and
    counit are compatible, and the comultiplication is multiplicative for the
    braided tensor-product algebra on D*D."""
    H, D = M.H, M.carrier
    f = H.field
    iD = M.id()
    one = unit_object(H)
    DD = tensor_lr(M, M)
    mult, unit, comult, counit = algebra.mult, algebra.unit, coalgebra.comult, coalgebra.counit
    rep = CheckReport(f"bialgebra-in-LR {M.name}")
    rep.extend(check_lr_object(M), "object: ")
    rep.extend(check_algebra(algebra), "algebra: ")
    rep.extend(check_coalgebra(coalgebra), "coalgebra: ")
    rep.extend(check_lr_morphism(mult, DD, M), "mult: ")
    rep.extend(check_lr_morphism(unit, one, M), "unit: ")
    rep.extend(check_lr_morphism(comult, M, DD), "comult: ")
    rep.extend(check_lr_morphism(counit, M, one), "counit: ")
    rep.add(_map_check("counit-multiplicative", chain(counit, mult), tensor(counit, counit), [D, D]))
    rep.add(_map_check("counit-unital", chain(counit, unit), identity(f, K), []))
    rep.add(_map_check("comult-unital", chain(comult, unit), tensor(unit, unit), []))
    braided = chain(tensor(mult, mult), tensor(iD, braiding(M, M), iD), tensor(comult, comult))
    rep.add(_map_check("comult-braided-multiplicative", chain(comult, mult), braided, [D, D]))
    return rep
