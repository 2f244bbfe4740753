import numpy as np
from hypothesis import given, settings, strategies as st

from lrsmash.biproduct import check_admissible, lr_agreement
from lrsmash.fixtures import sweedler_candidate
from lrsmash.linfield import GF
from lrsmash.randomized import _unipotent, change_basis, random_candidates, random_yd_pair
from lrsmash.lr import check_lr_object, check_yd, embed_left_yd, embed_right_yd

F5 = GF(5)


def test_same_seed_same_candidates():
    a = random_candidates(12, seed=7)
    b = random_candidates(12, seed=7)
    for x, y in zip(a, b):
        for role in ("mult", "comult", "left-action", "right-coaction"):
            assert np.array_equal(x.structure(role).matrix, y.structure(role).matrix)


def test_carriers_stay_small():
    assert all(c.carrier.dim <= 3 for c in random_candidates(40, seed=1))


@settings(max_examples=15)
@given(st.integers(0, 2**32 - 1))
def test_rebased_sweedler_stays_admissible(seed):
    c = sweedler_candidate(F5)
    P = _unipotent(np.random.default_rng(seed), F5, c.carrier)
    assert check_admissible(change_basis(c, P)).passed


@settings(max_examples=15)
@given(st.integers(0, 2**32 - 1))
def test_rebasing_never_changes_the_verdict(seed):
    rng = np.random.default_rng(seed)
    (c,) = random_candidates(1, seed=seed)
    if c.carrier.dim < 2:
        return
    d = change_basis(c, _unipotent(rng, F5, c.carrier))
    assert check_admissible(c).passed == check_admissible(d).passed
    assert lr_agreement(d).passed


@settings(max_examples=10)
@given(st.integers(0, 2**32 - 1))
def test_yd_pair_objects_are_yetter_drinfeld(seed):
    A, B = random_yd_pair(np.random.default_rng(seed))
    assert A.side == "left" and B.side == "right"
    assert check_yd(A).passed and check_yd(B).passed
    assert check_lr_object(embed_left_yd(A)).passed
    assert check_lr_object(embed_right_yd(B)).passed
