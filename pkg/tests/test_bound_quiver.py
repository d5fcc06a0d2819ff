from math import comb, factorial

import pytest

from principal_reps.bound_quiver import (
    FIGURE_ORDER_N3, cardinality_profile, emit_dot, hasse_quiver, path_normal_form, figure_vertex_labels_n3,
    paths_between, quotient_dimension, relation_closure, tits_form,
)
from principal_reps.classify import A2_DIMENSION_VECTORS
from principal_reps.errors import CapExceeded, InvalidPath
from principal_reps.fields import QQ
from principal_reps.incidence import IncidenceAlgebra
from principal_reps.reps import projective_rep
from principal_reps.subsets import is_subset, popcount


@pytest.mark.parametrize("n,v,a,r", [(0, 1, 0, 0), (1, 2, 1, 0), (2, 4, 4, 1), (3, 8, 12, 6)])
def test_counts_examples(n, v, a, r):
    Q = hasse_quiver(n)
    assert (len(Q.vertices), len(Q.arrows), len(Q.relations)) == (v, a, r)


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_closed_forms(n):
    Q = hasse_quiver(n)
    assert len(Q.arrows) == n * 2 ** (n - 1)
    assert len(Q.relations) == comb(n, 2) * 2 ** (n - 2)
    for s, t in Q.arrows:
        assert is_subset(s, t) and popcount(t & ~s) == 1


def test_cap():
    with pytest.raises(CapExceeded):
        hasse_quiver(13)


def test_diamond_relation():
    Q = hasse_quiver(2)
    (w1, w2), = Q.relations
    assert {w1, w2} == {(0, 1, 3), (0, 2, 3)}


def test_normal_forms():
    Q2, Q3 = hasse_quiver(2), hasse_quiver(3)
    assert path_normal_form((2,), Q2) == (2, 2)
    assert path_normal_form((0, 1, 3), Q2) == path_normal_form((0, 2, 3), Q2) == (0, 3)
    paths = paths_between(Q3, 0, 7)
    assert len(paths) == 6
    assert {path_normal_form(p, Q3) for p in paths} == {(0, 7)}
    with pytest.raises(InvalidPath):
        path_normal_form((0, 3), Q2)
    with pytest.raises(InvalidPath):
        path_normal_form((1, 0), Q2)


@pytest.mark.parametrize("n", range(1, 5))
def test_relations_connect_all_parallel_paths(n):
    Q = hasse_quiver(n)
    for Y in Q.vertices:
        for Z in Q.vertices:
            if not is_subset(Y, Z):
                assert paths_between(Q, Y, Z) == []
                continue
            paths = paths_between(Q, Y, Z)
            assert len(paths) == factorial(popcount(Z & ~Y))
            assert relation_closure(paths[0], Q) == set(paths)


def chain(Y, Z):
    """Path from Y to Z adding the missing elements in increasing order."""
    path = [Y]
    for i in range(Z.bit_length()):
        if Z >> i & 1 and not Y >> i & 1:
            path.append(path[-1] | 1 << i)
    return tuple(path)


@pytest.mark.parametrize("n", range(0, 6))
def test_path_algebra_matches_incidence(n):
    Q = hasse_quiver(n)
    A = IncidenceAlgebra(n)
    assert quotient_dimension(Q) == 3**n == A.dim
    for a in A.basis:
        for b in A.basis:
            want = A.structure_constant(a, b)
            # concatenate canonical representatives when the endpoints meet
            if a[1] == b[0]:
                p, q = chain(*a), chain(*b)
                got = path_normal_form(p + q[1:], Q)
            else:
                got = None
            assert got == want


def test_tits_form_examples():
    assert tits_form(2)([1, 1, 1, 1]) == 1
    assert tits_form(3)([1] * 8) == 2
    assert cardinality_profile(4, [0, 1, 2, 1, 0]).count(2) == 6
    assert tits_form(4)(cardinality_profile(4, [0, 1, 2, 1, 0])) == -4


@pytest.mark.parametrize("n", range(1, 5))
def test_tits_coefficients(n):
    q = tits_form(n)
    cross = dict(q.cross)
    assert q.diag == (1,) * (1 << n)
    for i in range(1 << n):
        for j in range(i + 1, 1 << n):
            Y, Z = q.vertices[i], q.vertices[j]
            d = popcount(Z & ~Y) if is_subset(Y, Z) else -1
            assert cross.get((i, j), 0) == {1: -1, 2: 1}.get(d, 0)


def test_tits_form_on_a2_list():
    assert len(A2_DIMENSION_VECTORS) == 11
    for x in A2_DIMENSION_VECTORS:
        assert tits_form(2)(x) == 1


@pytest.mark.parametrize("n", range(1, 4))
def test_tits_on_projectives(n):
    q = tits_form(n)
    vals = [q(projective_rep(n, QQ, Y).dim_vector) for Y in range(1 << n)]
    assert min(vals) >= 1
    # P(X) is the simple at X
    assert vals[(1 << n) - 1] == 1


def test_matrix_forms_agree():
    q = tits_form(3)
    M = q.matrix()
    D = q.doubled_matrix()
    x = [1, 2, 0, 3, 1, 1, 2, 1]
    val = sum(M[i][j] * x[i] * x[j] for i in range(8) for j in range(8))
    assert val == q(x)
    assert sum(D[i][j] * x[i] * x[j] for i in range(8) for j in range(8)) == 2 * q(x)


def test_dot_output():
    d1 = emit_dot(hasse_quiver(1))
    assert d1.count("->") == 1 and d1.count("[label=") == 3
    d2 = emit_dot(hasse_quiver(2))
    assert d2.count(" -> ") == 4 and "relation" in d2
    d3 = emit_dot(hasse_quiver(3))
    assert d3.count(" -> ") == 12 and d3.count("// relation") == 6
    assert d3 == emit_dot(hasse_quiver(3))


def test_figure_numbering():
    labels = figure_vertex_labels_n3()
    assert sorted(labels.values()) == list(range(1, 9))
    assert labels[0] == 1 and labels[7] == 8
    # numbering follows |Y|
    assert [popcount(m) for m in FIGURE_ORDER_N3] == [0, 1, 1, 1, 2, 2, 2, 3]
