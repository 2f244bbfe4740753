import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lrsmash.fixtures import coaction, group_algebra, sweedler_yd
from lrsmash.linfield import (GF, K, BasedSpace, Field, FieldError, LinMap, Q, SpaceMismatch,
                              chain, compose, flip, identity, permute_factors, solve_linear,
                              tensor, tensor_spaces, zero_map)

from .conftest import F5
from .strategies import SPACES, fields, linmaps, spaces

V2 = BasedSpace("V", ("e1", "e2"))
W2 = BasedSpace("W", ("f1", "f2"))


def m(field, rows, dom=V2, cod=V2):
    return LinMap(field, dom, cod, field.array(rows))


# scalars -------------------------------------------------------------------


def test_rationals_reduced_and_residues_in_range():
    assert Q("-6/4") == Fraction(-3, 2)
    assert Q.format(Q("-6/4")) == "-3/2"
    assert Q(Fraction(6, -4)).denominator == 2
    assert F5(-1) == 4 and F5("1/2") == 3
    with pytest.raises(FieldError):
        F5("1/5")
    with pytest.raises(FieldError):
        Q(0.5)


@pytest.mark.parametrize("p", [1, 4, 9, 2**31 + 11])
def test_nonprime_or_huge_characteristic_rejected(p):
    with pytest.raises(FieldError):
        Field(p)


# compose / tensor / permute ------------------------------------------------


def test_compose_identity_and_zero():
    f = m(Q, [[1, 2], [3, 4]])
    assert compose(identity(Q, V2), identity(Q, V2)) == identity(Q, V2)
    assert compose(f, zero_map(Q, W2, V2)) == zero_map(Q, W2, V2)


def test_compose_over_f5():
    f = m(F5, [[2, 1], [0, 3]])
    g = m(F5, [[1, 1], [1, 0]])
    assert compose(f, g) == m(F5, [[3, 2], [3, 0]])


def test_compose_mismatch_names_both_spaces():
    f = m(Q, [[1, 0], [0, 1]], dom=W2, cod=W2)
    with pytest.raises(SpaceMismatch) as err:
        compose(f, identity(Q, V2))
    assert "V" in str(err.value) and "W" in str(err.value)


def test_tensor_of_identities_and_kronecker_block():
    assert tensor(identity(Q, V2), identity(Q, W2)) == identity(Q, V2 * W2)
    a = m(Q, [[1, 2], [3, 4]])
    b = m(Q, [[0, 1], [1, 0]], dom=W2, cod=W2)
    want = [[0, 1, 0, 2], [1, 0, 2, 0], [0, 3, 0, 4], [3, 0, 4, 0]]
    assert tensor(a, b) == LinMap(Q, V2 * W2, V2 * W2, Q.array(want))
    assert (tensor(a, b).matrix == np.kron(np.array([[1, 2], [3, 4]]), np.array([[0, 1], [1, 0]]))).all()


def test_tensor_labels_pairs_with_last_factor_fastest():
    assert (V2 * W2).labels == ("e1*f1", "e1*f2", "e2*f1", "e2*f2")
    assert tensor_spaces([K, V2, K]) == V2


def test_counit_contracts_left_coaction():
    H = group_algebra(2)
    B = sweedler_yd(Q, H)
    lam = coaction(H, B.carrier, lambda d: {("1", "1"): 1} if d == "1" else {("g", "x"): 1})
    assert chain(tensor(H.counit, identity(Q, B.carrier)), lam) == identity(Q, B.carrier)


def test_flip_basics():
    sw = flip(Q, V2, V2)
    assert compose(sw, sw) == identity(Q, V2 * V2)
    assert sw.image("e1*e2") == {"e2*e1": 1}
    assert sorted(set(sw.matrix.ravel())) == [0, 1]
    assert permute_factors(Q, [V2, W2], (0, 1)) == identity(Q, V2 * W2)


def test_permute_arity_error():
    with pytest.raises(SpaceMismatch):
        permute_factors(Q, [V2, W2], (0, 0))


def test_solve_linear_consistent_and_inconsistent():
    a = Q.array([[1, 1], [2, 2]])
    assert solve_linear(Q, a, Q.array([1, 3])) is None
    x = solve_linear(Q, a, Q.array([1, 2]))
    assert list(Q.matmul(a, x.reshape(2, 1)).ravel()) == [1, 2]


# properties ----------------------------------------------------------------


@st.composite
def chains3(draw):
    f = draw(fields)
    a, b, c, d = (draw(spaces) for _ in range(4))
    return (draw(linmaps(f, c, d)), draw(linmaps(f, b, c)), draw(linmaps(f, a, b)))


@given(chains3())
def test_compose_associative(maps):
    f, g, h = maps
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(fields, st.data())
def test_tensor_associative(f, data):
    a, b, c = (data.draw(linmaps(f)) for _ in range(3))
    assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))


@given(fields, st.data())
def test_interchange_law(f, data):
    s = [data.draw(spaces) for _ in range(6)]
    f1, f2 = data.draw(linmaps(f, s[1], s[2])), data.draw(linmaps(f, s[0], s[1]))
    g1, g2 = data.draw(linmaps(f, s[4], s[5])), data.draw(linmaps(f, s[3], s[4]))
    assert compose(tensor(f1, g1), tensor(f2, g2)) == tensor(compose(f1, f2), compose(g1, g2))


@given(linmaps())
def test_identity_neutral(f):
    assert compose(f, identity(f.field, f.domain)) == f
    assert compose(identity(f.field, f.codomain), f) == f


PERMS3 = list(itertools.permutations(range(3)))


@given(st.sampled_from(PERMS3), st.sampled_from(PERMS3), fields)
def test_permute_is_homomorphism(sigma, tau, f):
    facs = SPACES
    first = permute_factors(f, facs, tau)
    second = permute_factors(f, [facs[i] for i in tau], sigma)
    both = permute_factors(f, facs, tuple(tau[sigma[i]] for i in range(3)))
    assert compose(second, first) == both


@given(linmaps(), linmaps())
def test_equality_is_entrywise(f, g):
    if f.field == g.field and f.domain == g.domain and f.codomain == g.codomain:
        assert (f == g) == bool((f.matrix == g.matrix).all())
    else:
        assert f != g
