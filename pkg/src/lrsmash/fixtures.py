"""Small worked structures: group algebras, the Sweedler data, the double
biproduct input, Zhang inputs and the LR(H) objects used by the braiding
checks.  These are the sources of the shipped structure files."""

from __future__ import annotations

from itertools import product

from .hopf import (ActionPair, AlgebraData, BialgebraData, CoactionPair, CoalgebraData,
                   bialgebra, trivial_actions, trivial_coactions)
from .linfield import GF, K, BasedSpace, Field, LinMap, Q
from .lr import LRMorphism, LRObject, YdObject, unit_object

__all__ = [
    "power_label", "group_algebra", "monoid_bialgebra", "trivial_bialgebra",
    "action", "right_action", "coaction", "right_coaction",
    "sweedler_h4", "sweedler_yd", "sweedler_candidate", "sweedler_broken_rho",
    "nilpotent_primitive_yd", "nilpotent_primitive_candidate",
    "right_sweedler_yd", "double_input_yds",
    "zhang_positive", "zhang_negative", "zhang_negative_right", "zhang_trivial_monoid",
    "lr_fixture_objects", "lr_fixture_morphisms", "lr_fixture_morphisms_for",
    "mutate", "broken_variants", "fixture_library", "zhang_family",
]


def power_label(i: int, gen: str) -> str:
    return "1" if i == 0 else gen if i == 1 else f"{gen}{i}"


def _bialgebra_from_rules(field, space, mul, delta, eps) -> BialgebraData:
    """``mul(a, b)``, ``delta(a)`` and ``eps(a)`` return ``{label: coeff}`` dicts
    (``delta`` keys are pairs) on basis labels."""
    labs = space.labels
    SS = space * space
    n = space.dim
    m = field.zeros((n, n * n))
    for (i, a), (j, b) in product(enumerate(labs), repeat=2):
        for r, v in mul(a, b).items():
            m[space.index(r), i * n + j] += field(v)
    mult = LinMap(field, SS, space, field.reduce(m))
    c = field.zeros((n * n, n))
    for j, a in enumerate(labs):
        for (p, q), v in delta(a).items():
            c[space.index(p) * n + space.index(q), j] += field(v)
    comult = LinMap(field, space, SS, field.reduce(c))
    unit = LinMap.from_entries(field, K, space, {(labs[0], "1"): 1})
    e = field.zeros((1, n))
    for j, a in enumerate(labs):
        e[0, j] = field(eps(a))
    return bialgebra(mult, unit, comult, LinMap(field, space, K, e))


def group_algebra(n: int, field: Field = Q, name: str | None = None, gen: str = "g") -> BialgebraData:
    """k[C_n] with group-like basis ``1, g, g2, ...``."""
    labs = [power_label(i, gen) for i in range(n)]
    S = BasedSpace(name or f"C{n}", tuple(labs))
    idx = {lab: i for i, lab in enumerate(labs)}
    return _bialgebra_from_rules(
        field, S,
        lambda a, b: {labs[(idx[a] + idx[b]) % n]: 1},
        lambda a: {(a, a): 1},
        lambda a: 1)


def monoid_bialgebra(field: Field = Q, name: str = "M") -> BialgebraData:
    """k{1, m} with m*m = m, both basis elements group-like."""
    S = BasedSpace(name, ("1", "m"))
    return _bialgebra_from_rules(
        field, S,
        lambda a, b: {"m" if "m" in (a, b) else "1": 1},
        lambda a: {(a, a): 1},
        lambda a: 1)


def trivial_bialgebra(field: Field = Q, name: str = "T") -> BialgebraData:
    """The ground field as a one-dimensional bialgebra on a named space."""
    S = BasedSpace(name, ("1",))
    return _bialgebra_from_rules(field, S, lambda a, b: {"1": 1},
                                 lambda a: {("1", "1"): 1}, lambda a: 1)


def _algebra_coalgebra(field, space, mul, delta, eps):
    b = _bialgebra_from_rules(field, space, mul, delta, eps)
    return b.algebra, b.coalgebra


# ---------------------------------------------------------------------------
# structure maps from rules on labels


def action(H: BialgebraData, D: BasedSpace, rule) -> LinMap:
    """Left action ``H*D -> D`` from ``rule(h, d) -> {label: coeff}``."""
    f = H.field
    return LinMap.from_function(f, H.carrier * D, D, lambda hd: rule(*_split(hd, H.carrier, D)))


def right_action(H: BialgebraData, D: BasedSpace, rule) -> LinMap:
    """Right action ``D*H -> D`` from ``rule(d, h)``."""
    f = H.field
    return LinMap.from_function(f, D * H.carrier, D, lambda dh: rule(*_split(dh, D, H.carrier)))


def coaction(H: BialgebraData, D: BasedSpace, rule) -> LinMap:
    """Left coaction ``D -> H*D`` from ``rule(d) -> {(h, d'): coeff}``."""
    f = H.field
    HD = H.carrier * D
    return LinMap.from_function(f, D, HD, lambda d: {f"{h}*{e}": v for (h, e), v in rule(d).items()})


def right_coaction(H: BialgebraData, D: BasedSpace, rule) -> LinMap:
    """Right coaction ``D -> D*H`` from ``rule(d) -> {(d', h): coeff}``."""
    f = H.field
    DH = D * H.carrier
    return LinMap.from_function(f, D, DH, lambda d: {f"{e}*{h}": v for (e, h), v in rule(d).items()})


def _split(label: str, U: BasedSpace, V: BasedSpace):
    """Split a product label into its U and V parts (labels of U may contain '*')."""
    nu = len(U.atoms)
    parts = label.split("*")
    return "*".join(parts[:nu]), "*".join(parts[nu:])


# ---------------------------------------------------------------------------
# Sweedler


def sweedler_h4(field: Field = Q) -> BialgebraData:
    """Sweedler's 4-dimensional Hopf algebra on the carrier ``B*C2``.

    Basis ``x^a g^b`` is labelled ``"x*g"`` etc.; relations g^2 = 1, x^2 = 0,
    g x = -x g, with g group-like and D(x) = x (x) 1 + g (x) x.
    """
    B = BasedSpace("B", ("1", "x"))
    C = BasedSpace("C2", ("1", "g"))
    S = B * C

    def parse(lab):
        a, b = lab.split("*")
        return int(a == "x"), int(b == "g")

    def lab(a, b):
        return f"{'x' if a else '1'}*{'g' if b else '1'}"

    def mul(u, v):
        a, b = parse(u)
        c, d = parse(v)
        if a + c > 1:
            return {}
        return {lab(a + c, (b + d) % 2): (-1) ** (b * c)}

    def delta(u):
        a, b = parse(u)
        if not a:
            return {(u, u): 1}
        # D(x g^b) = x g^b (x) g^b + g^(b+1) (x) x g^b
        return {(u, lab(0, b)): 1, (lab(0, (b + 1) % 2), u): 1}

    return _bialgebra_from_rules(field, S, mul, delta, lambda u: 1 - parse(u)[0])


def sweedler_yd(field: Field = Q, H: BialgebraData | None = None, name: str = "B") -> YdObject:
    """span{1, x} over kC2: x^2 = 0, x primitive, g.x = -x, x -> g (x) x."""
    H = H or group_algebra(2, field)
    B = BasedSpace(name, ("1", "x"))
    alg, coalg = _algebra_coalgebra(
        field, B,
        lambda a, b: {} if a == b == "x" else {b if a == "1" else a: 1},
        lambda a: {("1", "1"): 1} if a == "1" else {("x", "1"): 1, ("1", "x"): 1},
        lambda a: 1 if a == "1" else 0)
    act = action(H, B, lambda h, d: {d: -1 if (h == "g" and d == "x") else 1})
    co = coaction(H, B, lambda d: {("1", "1"): 1} if d == "1" else {("g", "x"): 1})
    return YdObject(H, B, act, co, "left", alg, coalg, name=name)


def right_sweedler_yd(field: Field = Q, H: BialgebraData | None = None, sign: int = -1) -> YdObject:
    """span{1, y} over kC2 as a right-right YD bialgebra: y.g = sign*y, y -> y (x) g."""
    H = H or group_algebra(2, field)
    Bp = BasedSpace("Bp", ("1", "y"))
    alg, coalg = _algebra_coalgebra(
        field, Bp,
        lambda a, b: {} if a == b == "y" else {b if a == "1" else a: 1},
        lambda a: {("1", "1"): 1} if a == "1" else {("y", "1"): 1, ("1", "y"): 1},
        lambda a: 1 if a == "1" else 0)
    act = right_action(H, Bp, lambda d, h: {d: sign if (h == "g" and d == "y") else 1})
    co = right_coaction(H, Bp, lambda d: {("1", "1"): 1} if d == "1" else {("y", "g"): 1})
    return YdObject(H, Bp, act, co, "right", alg, coalg, name="Bp")


def _left_candidate(V: YdObject, name: str):
    from .biproduct import LRAdmissibleCandidate
    t_act = trivial_actions(V.H, V.carrier)
    t_co = trivial_coactions(V.H, V.carrier)
    return LRAdmissibleCandidate(V.H, V.algebra, V.coalgebra,
                                 ActionPair(V.action, t_act.right),
                                 CoactionPair(V.coaction, t_co.right), name)


def sweedler_candidate(field: Field = Q):
    """The Radford-type candidate whose biproduct is Sweedler's algebra."""
    return _left_candidate(sweedler_yd(field), "sweedler-candidate")


def sweedler_broken_rho(field: Field = Q):
    """The Sweedler candidate with right coaction x -> x (x) g."""
    c = sweedler_candidate(field)
    H, B = c.H, c.carrier
    rc = right_coaction(H, B, lambda d: {("1", "1"): 1} if d == "1" else {("x", "g"): 1})
    return c.replace(coactions=CoactionPair(c.coactions.left, rc), name="sweedler-broken-rho")


def nilpotent_primitive_yd(p: int = 2) -> YdObject:
    """F_p span{1, x}, x primitive with x^2 = 0, trivial YD structures over F_pC2."""
    f = GF(p)
    H = group_algebra(2, f)
    B = BasedSpace("N", ("1", "x"))
    alg, coalg = _algebra_coalgebra(
        f, B,
        lambda a, b: {} if a == b == "x" else {b if a == "1" else a: 1},
        lambda a: {("1", "1"): 1} if a == "1" else {("x", "1"): 1, ("1", "x"): 1},
        lambda a: 1 if a == "1" else 0)
    t_act = trivial_actions(H, B)
    t_co = trivial_coactions(H, B)
    return YdObject(H, B, t_act.left, t_co.left, "left", alg, coalg, name="N")


def nilpotent_primitive_candidate(p: int = 2):
    return _left_candidate(nilpotent_primitive_yd(p), "char2-primitive")


def double_input_yds(field: Field = Q, pairing_ok: bool = True):
    """The (A, B) pair over kC2 for the 8-dimensional double biproduct.

    With ``pairing_ok=False`` B carries y.g = +y, which breaks the pairing.
    """
    H = group_algebra(2, field)
    A = sweedler_yd(field, H, name="A")
    B = right_sweedler_yd(field, H, sign=-1 if pairing_ok else 1)
    return A, B


# ---------------------------------------------------------------------------
# Zhang inputs


def _c3_algebra(field):
    D = BasedSpace("C3", ("1", "x", "x2"))
    b = group_algebra(3, field, "C3", gen="x")
    return D, b.algebra, b.coalgebra


def zhang_positive(field: Field = Q):
    """kC2 acting on kC3 by inversion on the left, trivially on the right."""
    from .biproduct import LRAdmissibleCandidate
    H = group_algebra(2, field)
    D, alg, coalg = _c3_algebra(field)
    inv = {"1": "1", "x": "x2", "x2": "x"}
    la = action(H, D, lambda h, d: {inv[d] if h == "g" else d: 1})
    acts = ActionPair(la, trivial_actions(H, D).right)
    return LRAdmissibleCandidate.make(H, alg, coalg, acts, name="zhang-positive")


def zhang_negative(field: Field = Q):
    """Sweedler's algebra acting on kC3: G inverts, X acts by zero; right action trivial."""
    from .biproduct import LRAdmissibleCandidate
    H = sweedler_h4(field)
    D, alg, coalg = _c3_algebra(field)
    inv = {"1": "1", "x": "x2", "x2": "x"}

    def rule(h, d):
        if h == "1*1":
            return {d: 1}
        if h == "1*g":
            return {inv[d]: 1}
        return {}

    la = action(H, D, rule)
    acts = ActionPair(la, trivial_actions(H, D).right)
    return LRAdmissibleCandidate.make(H, alg, coalg, acts, name="zhang-negative")


def zhang_negative_right(field: Field = Q):
    """Mirror of zhang_negative: the same rule as a right action."""
    from .biproduct import LRAdmissibleCandidate
    H = sweedler_h4(field)
    D, alg, coalg = _c3_algebra(field)
    inv = {"1": "1", "x": "x2", "x2": "x"}

    def rule(d, h):
        if h == "1*1":
            return {d: 1}
        if h == "1*g":
            return {inv[d]: 1}
        return {}

    ra = right_action(H, D, rule)
    acts = ActionPair(trivial_actions(H, D).left, ra)
    return LRAdmissibleCandidate.make(H, alg, coalg, acts, name="zhang-negative-right")


def zhang_trivial_monoid(field: Field = Q):
    """kC2 acting trivially on k{1, m}."""
    from .biproduct import LRAdmissibleCandidate
    H = group_algebra(2, field)
    M = monoid_bialgebra(field)
    return LRAdmissibleCandidate.make(H, M.algebra, M.coalgebra, name="zhang-monoid")


def zhang_family(field: Field = Q):
    """kC2 or H4 acting on kC3 from either side, G by identity or inversion and
    X (for H4) by zero: eight bimodule-bialgebra inputs."""
    from .biproduct import LRAdmissibleCandidate
    inv = {"1": "1", "x": "x2", "x2": "x"}
    out = []
    for hname, H, g in (("kC2", group_algebra(2, field), "g"), ("H4", sweedler_h4(field), "1*g")):
        D, alg, coalg = _c3_algebra(field)
        for left, right in product((False, True), repeat=2):
            def rule_for(flag):
                def act(h, d):
                    if h == g:
                        return {inv[d] if flag else d: 1}
                    return {d: 1} if h in ("1", "1*1") else {}
                return act
            rl, rr = rule_for(left), rule_for(right)
            acts = ActionPair(action(H, D, rl), right_action(H, D, lambda d, h, rr=rr: rr(h, d)))
            name = f"zhang-{hname}-{'inv' if left else 'id'}-{'inv' if right else 'id'}"
            out.append(LRAdmissibleCandidate.make(H, alg, coalg, acts, name=name))
    return out


# ---------------------------------------------------------------------------
# LR(H) objects and morphisms over kC2


def lr_fixture_objects(field: Field = Q):
    """Objects of LR(kC2): the Sweedler object, its right mirror, the regular
    left module and the unit object."""
    H = group_algebra(2, field)
    V = sweedler_yd(field, H)
    t = trivial_actions(H, V.carrier)
    tc = trivial_coactions(H, V.carrier)
    sw = LRObject(H, V.carrier, ActionPair(V.action, t.right), CoactionPair(V.coaction, tc.right), "B")
    W = right_sweedler_yd(field, H)
    t = trivial_actions(H, W.carrier)
    tc = trivial_coactions(H, W.carrier)
    mirror = LRObject(H, W.carrier, ActionPair(t.left, W.action), CoactionPair(tc.left, W.coaction), "Bp")
    R = BasedSpace("R", ("1", "g"))
    reg = LRObject(H, R,
                   ActionPair(LinMap(field, H.carrier * R, R, H.mult.matrix), trivial_actions(H, R).right),
                   trivial_coactions(H, R), "R")
    return [sw, mirror, reg, unit_object(H)]


def lr_fixture_morphisms(field: Field = Q):
    return lr_fixture_morphisms_for(lr_fixture_objects(field))


def lr_fixture_morphisms_for(objects):
    """Morphisms between the fixture objects: identities, zero maps, the unit
    and counit of the Sweedler object, the counit of R and right
    multiplication by g on R."""
    sw, mirror, reg, one = objects
    H = sw.H
    field = H.field
    V = sweedler_yd(field, H)
    out = [LRMorphism(o.id(), o, o, f"id-{o.name}") for o in (sw, mirror, reg, one)]
    out.append(LRMorphism(LinMap(field, sw.carrier, mirror.carrier, field.zeros((2, 2))), sw, mirror, "zero-B-Bp"))
    out.append(LRMorphism(LinMap(field, K, sw.carrier, V.algebra.unit.matrix), one, sw, "unit-B"))
    out.append(LRMorphism(LinMap(field, sw.carrier, K, V.coalgebra.counit.matrix), sw, one, "counit-B"))
    out.append(LRMorphism(LinMap(field, reg.carrier, K, H.counit.matrix), reg, one, "counit-R"))
    rg = LinMap.from_entries(field, reg.carrier, reg.carrier, {("g", "1"): 1, ("1", "g"): 1})
    out.append(LRMorphism(rg, reg, reg, "right-mult-g"))
    return out


# ---------------------------------------------------------------------------
# candidates violating one admissibility condition (components still verified)


def mutate(c, role: str, row: str, col: str, delta: int):
    """Copy of candidate ``c`` with one structure constant shifted by ``delta``."""
    m = c.structure(role)
    i, j = m.codomain.index(row), m.domain.index(col)
    f = m.field
    return c.with_structure(role, m.with_entry(i, j, f.reduce(f.array([m.matrix[i, j] + delta]))[0]))


def _square_zero_primitives(field, labels, name):
    """span{1, labels...}: products of non-unit basis vectors vanish, those
    vectors are primitive."""
    S = BasedSpace(name, ("1",) + tuple(labels))
    return _algebra_coalgebra(
        field, S,
        lambda a, b: {} if "1" not in (a, b) else {b if a == "1" else a: 1},
        lambda a: {("1", "1"): 1} if a == "1" else {(a, "1"): 1, ("1", a): 1},
        lambda a: 1 if a == "1" else 0)


def _swap_candidate(field, name, swap_side, graded):
    """span{1, x, y} over kC2 with square-zero primitives; g swaps x and y on
    ``swap_side`` and x is g-graded by the ``graded`` coaction."""
    from .biproduct import LRAdmissibleCandidate
    H = group_algebra(2, field)
    alg, coalg = _square_zero_primitives(field, ("x", "y"), "S3")
    D = alg.carrier
    sw = {"1": "1", "x": "y", "y": "x"}
    t, tc = trivial_actions(H, D), trivial_coactions(H, D)
    la, ra = t.left, t.right
    lc, rc = tc.left, tc.right
    if swap_side == "left":
        la = action(H, D, lambda h, d: {sw[d] if h == "g" else d: 1})
    else:
        ra = right_action(H, D, lambda d, h: {sw[d] if h == "g" else d: 1})
    if graded == "left":
        lc = coaction(H, D, lambda d: {("g" if d == "x" else "1", d): 1})
    else:
        rc = right_coaction(H, D, lambda d: {(d, "g" if d == "x" else "1"): 1})
    return LRAdmissibleCandidate(H, alg, coalg, ActionPair(la, ra), CoactionPair(lc, rc), name)


def _idempotent_graded(field, name, side):
    """span{1, x}, x^2 = x, x primitive, trivial actions, x graded by g."""
    from .biproduct import LRAdmissibleCandidate
    H = group_algebra(2, field)
    S = BasedSpace("E", ("1", "x"))
    alg, coalg = _algebra_coalgebra(
        field, S,
        lambda a, b: {"x" if "x" in (a, b) else "1": 1},
        lambda a: {("1", "1"): 1} if a == "1" else {("x", "1"): 1, ("1", "x"): 1},
        lambda a: 1 if a == "1" else 0)
    c = LRAdmissibleCandidate.make(H, alg, coalg, name=name)
    if side == "left":
        lc = coaction(H, S, lambda d: {("g" if d == "x" else "1", d): 1})
        return c.with_structure("left-coaction", lc)
    rc = right_coaction(H, S, lambda d: {(d, "g" if d == "x" else "1"): 1})
    return c.with_structure("right-coaction", rc)


def _nongrouplike_unit(field, name):
    """Coalgebra with group-like e and (e, e)-primitive y; the algebra unit is
    e + y, and y alone is g-graded, so the coaction does not fix the unit."""
    from .biproduct import LRAdmissibleCandidate
    H = group_algebra(2, field)
    S = BasedSpace("U", ("e", "y"))
    # transported from k[t]/(t^2) by 1 -> e + y, t -> y
    table = {("e", "e"): {"e": 1, "y": -1}, ("e", "y"): {"y": 1}, ("y", "e"): {"y": 1}, ("y", "y"): {}}
    b = _bialgebra_from_rules(
        field, S, lambda a, c: table[(a, c)],
        lambda a: {("e", "e"): 1} if a == "e" else {("y", "e"): 1, ("e", "y"): 1},
        lambda a: 1 if a == "e" else 0)
    unit = LinMap.from_entries(field, K, S, {("e", "1"): 1, ("y", "1"): 1})
    alg = AlgebraData(S, b.mult, unit)
    c = LRAdmissibleCandidate.make(H, alg, b.coalgebra, name=name)
    lc = coaction(H, S, lambda d: {("g" if d == "y" else "1", d): 1})
    return c.with_structure("left-coaction", lc)


def _moved_monoid(field, name):
    """k{1, m} with g.m = 1 - m: an algebra automorphism that moves the counit."""
    from .biproduct import LRAdmissibleCandidate
    H = group_algebra(2, field)
    M = monoid_bialgebra(field)
    la = action(H, M.carrier, lambda h, d: {d: 1} if h == "1" or d == "1" else {"1": 1, "m": -1})
    return LRAdmissibleCandidate.make(H, M.algebra, M.coalgebra, ActionPair(la, trivial_actions(H, M.carrier).right),
                                      name=name)


def broken_variants(field: Field = Q) -> dict:
    """One candidate per admissibility condition, keyed by the condition it breaks.

    Every variant passes the component checks; the keyed condition fails
    (other conditions may fail as well).
    """
    from .double import induced_lr_structure
    A, B = double_input_yds(field)
    induced = induced_lr_structure(A, B, "induced")
    out = {
        "counit-algebra-map": mutate(zhang_trivial_monoid(field), "mult", "m", "m*m", -1),
        "counit-invariant": _moved_monoid(field, ""),
        "coactions-unital": _nongrouplike_unit(field, ""),
        "comult-unital": mutate(sweedler_candidate(field), "comult", "x*x", "1", 1),
        "right-coaction-multiplicative": _idempotent_graded(field, "", "right"),
        "left-coaction-multiplicative": _idempotent_graded(field, "", "left"),
        "comult-left-linear": mutate(induced, "left-action", "x*y", "g*1*y", 1),
        "comult-right-linear": mutate(induced, "right-action", "x*y", "x*1*g", 1),
        "comult-braided-multiplicative": mutate(induced, "mult", "x*y", "1*y*x*1", 1),
        "left-left-yd": _swap_candidate(field, "", "left", "left"),
        "left-right-long": _swap_candidate(field, "", "left", "right"),
        "right-right-yd": _swap_candidate(field, "", "right", "right"),
        "right-left-long": _swap_candidate(field, "", "right", "left"),
        "coaction-action-cancellation": sweedler_broken_rho(field),
    }
    return {k: c.replace(name=f"broken-{k}") for k, c in out.items()}


# ---------------------------------------------------------------------------
# the shipped structure files


def fixture_library() -> dict:
    """File stem -> (field, [(bundle name, object), ...]) for every shipped file."""
    from .double import DoubleBiproductInput, trivial_yd
    from .biproduct import LRAdmissibleCandidate

    kc2 = group_algebra(2, Q, "C2")
    lib = {
        "k-trivial": (Q, [("k", _unit_bialgebra(Q)),
                          ("trivial-candidate", LRAdmissibleCandidate.make(
                              kc2, *_unit_alg_coalg(Q), name="trivial-candidate"))]),
        "kc2": (Q, [("kC2", kc2)]),
        "kc3": (Q, [("kC3", group_algebra(3, Q, "C3"))]),
        "monoid": (Q, [("monoid", monoid_bialgebra(Q))]),
        "sweedler-h4": (Q, [("H4", sweedler_h4(Q))]),
        "char2-primitive": (GF(2), [("char2-primitive", nilpotent_primitive_candidate(2))]),
        "zhang-positive": (Q, [("zhang-positive", zhang_positive(Q)),
                               ("zhang-monoid", zhang_trivial_monoid(Q))]),
        "zhang-negative": (Q, [("zhang-negative", zhang_negative(Q)),
                               ("zhang-negative-right", zhang_negative_right(Q))]),
    }
    sc = sweedler_candidate(Q)
    V = YdObject(sc.H, sc.carrier, sc.actions.left, sc.coactions.left, "left",
                 sc.algebra, sc.coalgebra, "B")
    lib["sweedler-candidate"] = (Q, [("kC2", sc.H), ("sweedler-candidate", sc), ("B", V)])
    lib["sweedler-broken-rho"] = (Q, [("sweedler-broken-rho", sweedler_broken_rho(Q))])
    A, B = double_input_yds(Q)
    lib["double-input"] = (Q, [("kC2", A.H), ("A", A), ("B", B),
                               ("double", DoubleBiproductInput(A.H, A, B, "double"))])
    A2, B2 = double_input_yds(Q, pairing_ok=False)
    lib["double-input-bad-pairing"] = (Q, [("kC2", A2.H), ("A", A2), ("B", B2),
                                           ("double-bad", DoubleBiproductInput(A2.H, A2, B2, "double-bad"))])
    k_right = trivial_yd(A.H, "right")
    lib["double-input-radford"] = (Q, [("kC2", A.H), ("A", A), ("k", k_right),
                                       ("double-radford", DoubleBiproductInput(A.H, A, k_right, "double-radford"))])
    objs = lr_fixture_objects(Q)
    mors = lr_fixture_morphisms_for(objs)
    lib["lr-objects"] = (Q, [("kC2", objs[0].H)] + [(o.name, o) for o in objs] + [(m.name, m) for m in mors])
    for cond, c in broken_variants(Q).items():
        lib[f"broken-{cond}"] = (Q, [(c.name, c)])
    return lib


def _unit_alg_coalg(field):
    b = _unit_bialgebra(field)
    return b.algebra, b.coalgebra


def _unit_bialgebra(field) -> BialgebraData:
    """The ground field on the unit space ``k`` itself."""
    one = LinMap(field, K, K, field.eye(1))
    return bialgebra(one, one, one, one)
