import itertools

import pytest

from lrsmash.fixtures import (coaction, lr_fixture_morphisms, lr_fixture_objects, right_action,
                              right_coaction, right_sweedler_yd, sweedler_candidate, sweedler_yd)
from lrsmash.hopf import ActionPair, CoactionPair, CoalgebraData, solve_skew_antipode, trivial_actions, trivial_coactions
from lrsmash.linfield import GF, BasedSpace, LinMap, Q, SpaceMismatch, chain, flip, identity, zero_map
from lrsmash.lr import (LRMorphism, LRObject, braiding, braiding_inverse, check_bialgebra_in_lr,
                        check_lr_morphism, check_lr_object, check_yd_morphism, embed_left_yd,
                        embed_right_yd, embed_yd_pair, tensor_lr, unit_object, verify_prebraided,
                        yd_braiding)
from lrsmash.biproduct import CONDITIONS, check_admissible

OBJS = lr_fixture_objects(Q)
B, BP, R, ONE = OBJS
H = B.H


def trivial_object(space):
    return LRObject(H, space, trivial_actions(H, space), trivial_coactions(H, space), space.name)


def same_structure(M, N):
    return all(getattr(M, r) == getattr(N, r) for r in ("la", "ra", "lc", "rc"))


# objects and morphisms -----------------------------------------------------


@pytest.mark.parametrize("M", OBJS, ids=lambda M: M.name)
def test_fixture_objects_pass(M):
    assert check_lr_object(M).passed


def test_trivial_structures_pass():
    assert check_lr_object(trivial_object(BasedSpace("W", ("a", "b", "c")))).passed


def test_degree_moving_right_action_breaks_right_right_yd():
    # x.g = 1 and 1.g = x, with rho(x) = x(x)g: the action does not preserve degrees
    swap = right_action(H, B.carrier, lambda d, h: {("x" if d == "1" else "1") if h == "g" else d: 1})
    rho = right_coaction(H, B.carrier, lambda d: {(d, "g" if d == "x" else "1"): 1})
    triv = trivial_coactions(H, B.carrier)
    M = LRObject(H, B.carrier, ActionPair(trivial_actions(H, B.carrier).left, swap),
                 CoactionPair(triv.left, rho), "swap")
    rep = check_lr_object(M)
    assert [c.name for c in rep.failures] == ["right-right-yd"]
    assert rep["right-right-yd"].witness.inputs == ("1", "g")


def test_morphism_examples():
    assert check_lr_morphism(B.id(), B, B).passed
    assert check_lr_morphism(zero_map(Q, B.carrier, B.carrier), B, B).passed
    collapse = LinMap.from_entries(Q, B.carrier, B.carrier, {("1", "1"): 1, ("1", "x"): 1})
    rep = check_lr_morphism(collapse, B, B)
    assert not rep["left-colinear"].passed
    assert rep["left-colinear"].witness.inputs == ("x",)
    with pytest.raises(SpaceMismatch):
        check_lr_morphism(R.id(), B, B)


@pytest.mark.parametrize("mor", lr_fixture_morphisms(Q), ids=lambda m: m.name)
def test_fixture_morphisms_pass(mor):
    assert check_lr_morphism(mor.f, mor.source, mor.target).passed


# tensor product ------------------------------------------------------------


def test_unit_object_is_neutral():
    assert same_structure(tensor_lr(B, ONE), B) and same_structure(tensor_lr(ONE, R), R)


def test_tensor_is_strictly_associative():
    left = tensor_lr(tensor_lr(B, BP), R)
    right = tensor_lr(B, tensor_lr(BP, R))
    assert left.carrier == right.carrier and same_structure(left, right)


def test_diagonal_action_on_x_x():
    BB = tensor_lr(B, B)
    assert BB.la.image("g*x*x") == {"x*x": 1}
    assert check_lr_object(BB).passed


@pytest.mark.parametrize("M,N", list(itertools.product(OBJS, repeat=2)),
                         ids=lambda o: o.name)
def test_tensor_of_fixtures_is_an_object(M, N):
    assert check_lr_object(tensor_lr(M, N)).passed


# braiding ------------------------------------------------------------------


def test_braiding_of_trivial_objects_is_flip():
    V = trivial_object(BasedSpace("V", ("a", "b")))
    W = trivial_object(BasedSpace("W", ("c", "d", "e")))
    assert braiding(V, W) == flip(Q, V.carrier, W.carrier)
    assert braiding_inverse(V, W, H.id()) == flip(Q, W.carrier, V.carrier)


def test_braiding_on_sweedler_object():
    c = braiding(B, B)
    assert c.image("x*x") == {"x*x": -1}
    assert c.image("1*x") == {"x*1": 1} and c.image("x*1") == {"1*x": 1}
    # 1 in B has trivial coactions, so c(1 (x) n) = n (x) 1
    assert braiding(B, R).image("1*g") == {"g*1": 1}


def test_braiding_inverse_on_sweedler_object():
    s_inv = solve_skew_antipode(H)
    assert s_inv == H.id()
    ci = braiding_inverse(B, B, s_inv)
    assert ci.image("x*x") == {"x*x": -1}
    assert chain(ci, braiding(B, B)) == identity(Q, B.carrier * B.carrier)


@pytest.mark.parametrize("M,N", list(itertools.product(OBJS, repeat=2)), ids=lambda o: o.name)
def test_braiding_is_morphism_and_invertible(M, N):
    c = braiding(M, N)
    assert check_lr_morphism(c, tensor_lr(M, N), tensor_lr(N, M)).passed
    ci = braiding_inverse(M, N, solve_skew_antipode(H))
    assert chain(ci, c) == identity(Q, M.carrier * N.carrier)
    assert chain(c, ci) == identity(Q, N.carrier * M.carrier)


def test_prebraided_on_unit_only():
    assert verify_prebraided([ONE]).passed


def test_prebraided_on_fixture_set():
    rep = verify_prebraided([B, R, ONE], lr_fixture_morphisms(Q), solve_skew_antipode(H))
    assert rep.passed and len(rep) > 50


@pytest.mark.parametrize("role", ["lc", "rc"])
def test_corrupted_coaction_is_caught(role):
    m = getattr(B, role)
    for i, j in itertools.product(*map(range, m.matrix.shape)):
        bad = m.with_entry(i, j, m.matrix[i, j] + 1)
        co = CoactionPair(bad, B.rc) if role == "lc" else CoactionPair(B.lc, bad)
        Bm = LRObject(H, B.carrier, B.actions, co, "Bm")
        assert not verify_prebraided([Bm, R, ONE], [], solve_skew_antipode(H)).passed


# Yetter-Drinfeld subcategories ---------------------------------------------


def test_embedding_of_sweedler_yd_is_the_fixture():
    assert same_structure(embed_left_yd(sweedler_yd(Q, H)), B)


def test_embedding_of_ground_field_is_trivial():
    from lrsmash.double import trivial_yd
    k = embed_left_yd(trivial_yd(H, "left"))
    assert same_structure(k, unit_object(H))


def test_pair_embedding_passes():
    V, W = sweedler_yd(Q, H), right_sweedler_yd(Q, H)
    P = embed_yd_pair(V, W)
    assert P.carrier.dim == 4 and check_lr_object(P).passed


def test_braidings_agree_with_yd_braidings():
    V, V2 = sweedler_yd(Q, H), sweedler_yd(Q, H, name="B2")
    assert braiding(embed_left_yd(V), embed_left_yd(V2)) == yd_braiding(V, V2)
    W = right_sweedler_yd(Q, H)
    assert braiding(embed_right_yd(W), embed_right_yd(W)) == yd_braiding(W, W)


@pytest.mark.parametrize("side", ["left", "right"])
def test_embedding_full_and_faithful_over_f3(side):
    f = GF(3)
    Hf = lr_fixture_objects(f)[0].H
    V = sweedler_yd(f, Hf) if side == "left" else right_sweedler_yd(f, Hf)
    embed = embed_left_yd if side == "left" else embed_right_yd
    M = embed(V)
    n = V.carrier.dim
    for vals in itertools.product(range(3), repeat=n * n):
        phi = LinMap(f, V.carrier, V.carrier, f.array(vals).reshape(n, n))
        assert check_lr_morphism(phi, M, M).passed == check_yd_morphism(phi, V, V).passed


# bialgebras in LR(H) -------------------------------------------------------


def test_ground_field_is_a_bialgebra_in_lr():
    from lrsmash.double import trivial_yd
    k = trivial_yd(H, "left")
    assert check_bialgebra_in_lr(unit_object(H), k.algebra, k.coalgebra).passed


def test_sweedler_bialgebra_in_lr_agrees_with_conditions():
    c = sweedler_candidate(Q)
    assert check_bialgebra_in_lr(c.lr_object, c.algebra, c.coalgebra).passed
    adm = check_admissible(c)
    assert all(adm[n].passed for n in CONDITIONS[:13])


def test_corrupted_comultiplication_breaks_counit_law():
    c = sweedler_candidate(Q)
    bad = LinMap.from_entries(Q, c.carrier, c.carrier * c.carrier, {("1*1", "1"): 1, ("x*1", "x"): 1})
    rep = check_bialgebra_in_lr(c.lr_object, c.algebra, CoalgebraData(c.carrier, bad, c.coalgebra.counit))
    assert [x.name for x in rep.failures] == ["coalgebra: left-counit"]
