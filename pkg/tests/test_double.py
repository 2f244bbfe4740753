import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lrsmash.biproduct import (LRAdmissibleCandidate, build_biproduct, check_admissible,
                               radford_biproduct, smash_coproduct_coalgebra, smash_product_algebra)
from lrsmash.double import (DoubleBiproductInput, PairingError, build_double_biproduct,
                            check_double_input, check_trivial_pairing, induced_lr_structure,
                            phi_isomorphism, trivial_yd, two_sided_smash_coproduct,
                            two_sided_smash_product, verify_phi)
from lrsmash.fixtures import double_input_yds, group_algebra, right_sweedler_yd, sweedler_yd
from lrsmash.hopf import BialgebraData, bialgebra
from lrsmash.linfield import Q
from lrsmash.randomized import random_yd_pair

A, B = double_input_yds(Q)
A_BAD, B_BAD = double_input_yds(Q, pairing_ok=False)
H = A.H
KL, KR = trivial_yd(H, "left"), trivial_yd(H, "right")


def inp(a, b):
    return DoubleBiproductInput(H, a, b)


def same(X, Y):
    return all((getattr(X, r).matrix.shape == getattr(Y, r).matrix.shape)
               and (getattr(X, r).matrix == getattr(Y, r).matrix).all()
               for r in ("mult", "unit", "comult", "counit"))


def smash_side(a, b):
    c = induced_lr_structure(a, b)
    return BialgebraData(smash_product_algebra(c), smash_coproduct_coalgebra(c))


# two-sided smash (co)product -----------------------------------------------


def test_degenerate_input_gives_h():
    d = inp(KL, KR)
    assert two_sided_smash_product(d).mult == H.mult
    assert two_sided_smash_coproduct(d).comult == H.comult


def test_left_factor_products():
    alg = two_sided_smash_product(inp(A, KR))
    assert alg.mult.image("x*1*1*g") == {"x*g": 1}
    assert alg.mult.image("1*g*x*1") == {"x*g": -1}


def test_right_factor_products_mirror_signs():
    alg = two_sided_smash_product(inp(KL, B))
    assert alg.mult.image("1*y*g*1") == {"g*y": -1}
    assert alg.mult.image("g*1*1*y") == {"g*y": 1}


def test_left_factor_coproduct():
    co = two_sided_smash_coproduct(inp(A, KR))
    assert co.comult.image("x*1") == {"x*1*1*1": 1, "1*g*x*1": 1}


def test_right_factor_coproduct():
    co = two_sided_smash_coproduct(inp(KL, B))
    assert co.comult.image("1*y") == {"1*y*g*1": 1, "1*1*1*y": 1}


# trivial pairing -----------------------------------------------------------


def test_pairing_with_ground_field():
    assert check_trivial_pairing(A, KR).passed and check_trivial_pairing(KL, B).passed


def test_pairing_of_fixture():
    assert check_trivial_pairing(A, B).passed


def test_bad_pairing_witness():
    c = check_trivial_pairing(A_BAD, B_BAD)["trivial-pairing"]
    # g.x (x) y.g = -x (x) y against x (x) y
    assert c.witness.inputs == ("x", "y") and c.witness.residual == ("0", "0", "0", "-2")


# double biproduct ----------------------------------------------------------


def test_degenerate_double_biproduct_is_h():
    res = build_double_biproduct(inp(KL, KR))
    assert res.passed and same(res.bialgebra, H)


def test_eight_dimensional_fixture():
    d = inp(A, B)
    assert check_double_input(d).passed
    res = build_double_biproduct(d)
    assert res.bialgebra.carrier.dim == 8 and res.passed


def test_bad_pairing_raises():
    with pytest.raises(PairingError) as err:
        build_double_biproduct(inp(A_BAD, B_BAD))
    assert not err.value.report.passed


def test_bad_pairing_b_is_not_a_yd_bialgebra():
    rep = check_double_input(inp(A_BAD, B_BAD))
    assert [c.name for c in rep.failures] == ["B: bialgebra-in-yd"]


def test_left_degeneration_is_radford():
    res = build_double_biproduct(inp(sweedler_yd(Q, H), KR))
    assert same(res.bialgebra, radford_biproduct(sweedler_yd(Q, H)).bialgebra)


def test_right_degeneration_matches_right_handed_biproduct():
    d = inp(KL, B)
    rad = build_biproduct(induced_lr_structure(KL, B))
    assert rad.passed
    assert verify_phi(rad.bialgebra, build_double_biproduct(d).bialgebra, phi_isomorphism(d)).passed


# induced structure and phi -------------------------------------------------


def test_induced_from_ground_fields_is_trivial():
    c = induced_lr_structure(KL, KR)
    assert c.carrier.dim == 1 and check_admissible(c).passed


def test_induced_from_fixture_is_admissible():
    assert check_admissible(induced_lr_structure(A, B)).passed


def test_induced_from_bad_pairing_fails_extra_condition():
    rep = check_admissible(induced_lr_structure(A_BAD, B_BAD))
    c = rep["coaction-action-cancellation"]
    assert not c.passed and c.witness.inputs == ("1*y", "x*1")


def test_phi_on_ground_fields_is_identity():
    assert phi_isomorphism(inp(KL, KR)) == H.id()


def test_phi_on_fixture():
    d = inp(A, B)
    rep = verify_phi(smash_side(A, B), build_double_biproduct(d).bialgebra, phi_isomorphism(d))
    assert rep.passed and rep.names == ["bijective", "multiplicative", "unital",
                                        "comultiplicative", "counital"]


def test_phi_detects_corrupted_double_multiplication():
    d = inp(A, B)
    D = build_double_biproduct(d).bialgebra
    i, j = 0, D.mult.matrix.shape[1] - 1
    bad = bialgebra(D.mult.with_entry(i, j, D.mult.matrix[i, j] + 1), D.unit, D.comult, D.counit)
    rep = verify_phi(smash_side(A, B), bad, phi_isomorphism(d))
    assert not rep["multiplicative"].passed


@settings(max_examples=25)
@given(st.integers(0, 2**32 - 1))
def test_random_pairs_give_bialgebra_and_isomorphism(seed):
    a, b = random_yd_pair(np.random.default_rng(seed))
    d = DoubleBiproductInput(a.H, a, b)
    if not (check_double_input(d).passed and check_trivial_pairing(a, b).passed):
        return
    res = build_double_biproduct(d)
    assert res.passed
    assert check_admissible(induced_lr_structure(a, b)).passed
    assert verify_phi(smash_side(a, b), res.bialgebra, res.phi).passed
