import random
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from principal_reps.characters import CharacterValue, ThetaContext, all_characters
from principal_reps.errors import AlgebraMismatch, CapExceeded, InvalidSubset
from principal_reps.fields import QQ
from principal_reps.incidence import (
    DeltaHomModule, IncidenceAlgebra, ThetaAlgebra, WeightPoset, build_A_theta, build_incidence,
    cartan_determinant, heredity_check, increasing_order, projective, reciprocity_check,
)
from principal_reps.reps import hom_dim, projective_rep
from principal_reps.roots import CartanMatrix, build_weyl_group
from principal_reps.subsets import is_subset, popcount

NEGATIVE_CONTROL = [1, 2, 0, 3]


def as_matrix(x, n):
    """Element as a 2^n x 2^n matrix: e_{Y,Z} is the matrix unit at (Y, Z)."""
    N = 1 << n
    M = np.zeros((N, N), dtype=object)
    M[:] = Fraction(0)
    for (Y, Z), c in x.coeffs.items():
        M[Y, Z] = Fraction(c)
    return M


def test_dimension_examples():
    assert IncidenceAlgebra(0).dim == 1
    assert IncidenceAlgebra(2).dim == 9
    assert IncidenceAlgebra(3).dim == 27
    with pytest.raises(CapExceeded):
        build_incidence(13)


@pytest.mark.parametrize("n", range(7))
def test_dims_and_radical(n):
    A = IncidenceAlgebra(n)
    assert A.dim == 3**n
    assert len(A.radical()) == 3**n - 2**n
    want = [sum(comb(n, j) * 2 ** (n - j) for j in range(k, n + 1)) for k in range(1, n + 2)]
    assert A.radical_powers() == want
    assert A.radical_powers()[-1] == 0  # nilpotency index n + 1


def test_multiplication_examples():
    A = IncidenceAlgebra(2)
    X = A.full
    assert A.e(0, 0) * A.e(0, X) == A.e(0, X)
    assert (A.e(0, X) * A.e(0, X)).is_zero()
    assert A.one() * A.e(1, 3) == A.e(1, 3)
    with pytest.raises(AlgebraMismatch):
        A.e(0, 0) * IncidenceAlgebra(1).e(0, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_structure_constants_match_matrix_units(n):
    A = IncidenceAlgebra(n)
    for a in A.basis:
        for b in A.basis:
            prod = as_matrix(A.e(*a) * A.e(*b), n)
            assert (prod == as_matrix(A.e(*a), n).dot(as_matrix(A.e(*b), n))).all()


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10**9))
def test_random_products_match_matrices(n, seed):
    A = IncidenceAlgebra(n)
    rng = random.Random(seed)
    x, y, z = (A.random_element(rng) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert (as_matrix(x * y, n) == as_matrix(x, n).dot(as_matrix(y, n))).all()
    assert x * A.one() == x == A.one() * x
    assert (x + y) * z == x * z + y * z


@pytest.mark.parametrize("n", range(5))
def test_cartan_matrix_is_containment(n):
    A = IncidenceAlgebra(n)
    C = A.cartan_matrix()
    N = 1 << n
    assert C == [[int(is_subset(Y, Z)) for Z in range(N)] for Y in range(N)]
    assert cartan_determinant(A) == 1


@pytest.mark.parametrize("n", range(4))
def test_projectives(n):
    A = IncidenceAlgebra(n)
    total = 0
    for Y in range(1 << n):
        P = projective(A, Y)
        assert P.dim == 2 ** (n - popcount(Y))
        assert P.multiplicities() == {Z: int(is_subset(Y, Z)) for Z in range(1 << n)}
        total += P.dim
        # the matching quiver representation has local (scalar) endomorphisms
        R = projective_rep(n, QQ, Y)
        assert hom_dim(R, R) == 1
    assert total == 3**n
    with pytest.raises(InvalidSubset):
        projective(A, 1 << n)


@pytest.mark.parametrize("n", range(4))
def test_delta_hom_modules(n):
    A = IncidenceAlgebra(n)
    for J in range(1 << n):
        M = DeltaHomModule(A, J)
        assert M.module_axioms_hold()
        assert M.dual_matches_projective()


def ideal_dim_oracle(n, weights):
    """dim A e A for e the idempotent on ``weights``: pairs K ⊆ Y ⊆ J with Y among them."""
    A = IncidenceAlgebra(n)
    return sum(1 for (K, J) in A.basis if any(is_subset(K, Y) and is_subset(Y, J) for Y in weights))


@pytest.mark.parametrize("n", range(5))
def test_heredity_increasing_order(n):
    A = IncidenceAlgebra(n)
    order = increasing_order(n)
    assert WeightPoset(A.full).is_linear_extension(order)
    layers = heredity_check(A, order)
    assert len(layers) == 1 << n
    assert all(l.passed for l in layers)
    for t, l in enumerate(layers):
        # each layer reports dim J_t / J_{t-1}
        assert l.ideal_dim == ideal_dim_oracle(n, order[: t + 1]) - ideal_dim_oracle(n, order[:t])


def test_heredity_one_point():
    layers = heredity_check(IncidenceAlgebra(1), [0, 1])
    assert [l.passed for l in layers] == [True, True]
    assert [l.ideal_dim for l in layers] == [2, 1]


def test_heredity_negative_control():
    layers = heredity_check(IncidenceAlgebra(2), NEGATIVE_CONTROL)
    assert not all(l.passed for l in layers)
    assert not WeightPoset(3).is_linear_extension(NEGATIVE_CONTROL)


@pytest.mark.parametrize("n", range(5))
def test_reciprocity(n):
    r = reciprocity_check(IncidenceAlgebra(n))
    assert r.passed
    N = 1 << n
    assert all(r.projective_table[J][J] == 1 for J in range(N))


def test_weight_poset():
    P = WeightPoset(0b111)
    assert P.maximum == 0 and P.minimum == 0b111
    for a in P.elements:
        assert P.leq(a, a)
        for b in P.elements:
            if P.leq(a, b) and P.leq(b, a):
                assert a == b
            for c in P.elements:
                if P.leq(a, b) and P.leq(b, c):
                    assert P.leq(a, c)


def test_a_theta_examples():
    A2 = build_weyl_group(CartanMatrix.preset("A2"))
    _, inc, rep = build_A_theta(ThetaContext(CharacterValue.trivial(2, 1, 2), A2))
    assert inc.dim == 9 and rep.constants_match and rep.bijective
    _, inc, rep = build_A_theta(ThetaContext(CharacterValue(3, 1, (1, 1)), A2))
    assert inc.dim == 1 and rep.constants_match


@pytest.mark.parametrize("name", ["A2", "B2", "A3", "B3"])
def test_a_theta_structure_constants_exhaustive(name):
    W = build_weyl_group(CartanMatrix.preset(name))
    tables = {}
    for q in (2, 3, 4, 5):
        for theta in all_characters(q, 1, W.datum.rank):
            T, inc, rep = build_A_theta(ThetaContext(theta, W))
            assert rep.constants_match and rep.bijective
            # tables depend only on |I(theta)|
            def relabel(x):
                return None if x is None else T.to_incidence(x)

            table = tuple((relabel(a), relabel(b), relabel(T.product(a, b))) for a in T.basis for b in T.basis)
            tables.setdefault(popcount(T.itheta), set()).add(frozenset(table))
    assert all(len(v) == 1 for v in tables.values())


def test_theta_algebra_rule():
    T = ThetaAlgebra(0b101)
    assert T.product((0, 0b100), (0b100, 0b101)) == (0, 0b101)
    assert T.product((0, 0b100), (0b001, 0b101)) is None
