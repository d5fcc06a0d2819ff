import json
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from principal_reps.errors import CapExceeded
from principal_reps.roots import CartanMatrix, RootDatum, build_weyl_group, load_cartan
from principal_reps.subsets import members, submasks

SMALL = ("A1", "A2", "B2", "G2", "A3", "B3", "C3")


def reflection_matrices(C: CartanMatrix) -> list[np.ndarray]:
    """s_i on the root lattice in the simple-root basis: s_i(a_j) = a_j - C[i][j] a_i."""
    n = C.n
    mats = []
    for i in range(n):
        M = np.eye(n, dtype=np.int64)
        for j in range(n):
            M[i, j] -= C[i, j]
        mats.append(M)
    return mats


def matrix_group_oracle(C: CartanMatrix) -> dict[bytes, int]:
    """Matrix group generated by the reflections, with word length from BFS."""
    gens = reflection_matrices(C)
    e = np.eye(C.n, dtype=np.int64)
    seen = {e.tobytes(): 0}
    frontier = [e]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for g in frontier:
            for s in gens:
                h = g @ s
                if h.tobytes() not in seen:
                    seen[h.tobytes()] = depth
                    nxt.append(h)
        frontier = nxt
    return seen


@pytest.fixture(scope="module")
def groups():
    return {name: build_weyl_group(CartanMatrix.preset(name)) for name in SMALL + ("D4",)}


@pytest.mark.parametrize("name,order,top", [
    ("A1", 2, 1), ("A2", 6, 3), ("B2", 8, 4), ("G2", 12, 6), ("A3", 24, 6),
    ("B3", 48, 9), ("C3", 48, 9), ("D4", 192, 12),
])
def test_orders_and_max_length(groups, name, order, top):
    W = groups[name]
    assert W.order == order
    assert max(W.lengths) == top
    assert W.lengths.count(top) == 1


@pytest.mark.parametrize("name", SMALL)
def test_length_distribution_matches_matrix_oracle(groups, name):
    W = groups[name]
    oracle = matrix_group_oracle(W.cartan)
    assert len(oracle) == W.order
    assert sorted(oracle.values()) == sorted(W.lengths)


def test_poincare_a2(groups):
    assert groups["A2"].poincare_coefficients() == [1, 2, 2, 1]


def test_right_descents_examples(groups):
    W = groups["A2"]
    assert W.rdesc[W.from_word(())] == 0
    assert W.rdesc[W.from_word((0, 1, 0))] == 0b11
    # s_2 s_1 has right descent set {s_1}
    assert W.rdesc[W.from_word((1, 0))] == 0b01


def test_longest_element_examples(groups):
    W = groups["A2"]
    assert W.longest_element(0) == W.from_word(())
    assert W.longest_element(0b01) == W.from_word((0,))
    w0 = W.longest_element(0b11)
    assert w0 == W.from_word((0, 1, 0)) == W.from_word((1, 0, 1))
    assert W.length(w0) == 3


def test_min_coset_reps_examples(groups):
    W = groups["A2"]
    assert sorted(W.min_coset_reps(0)) == sorted(W)
    want = {W.from_word(()), W.from_word((1,)), W.from_word((0, 1))}
    assert set(W.min_coset_reps(0b01)) == want
    assert W.min_coset_reps(0b11) == [W.from_word(())]


@pytest.mark.parametrize("name", SMALL)
def test_exhaustive_structure(groups, name):
    W = groups[name]
    for w in W:
        assert len(W.word(w)) == W.length(w)
        assert W.from_word(W.word(w)) == w
        assert W.ldesc[w] == W.rdesc[W.inverse[w]]
        for i in range(W.n):
            assert bool(W.rdesc[w] >> i & 1) == (W.length(W.mul(w, W.from_word((i,)))) < W.length(w))
    for J in submasks(W.full):
        X, WJ = W.min_coset_reps(J), W.parabolic(J)
        assert len(X) * len(WJ) == W.order
        wJ = W.longest_element(J)
        assert W.mul(wJ, wJ) == W.from_word(())
        assert W.rdesc[wJ] == J
        for w in W:
            x, y = W.coset_factor(w, J)
            assert x in X and y in WJ
            assert W.mul(x, y) == w
            assert W.length(w) == W.length(x) + W.length(y)


def test_reduced_words_equal_canonical_forms(groups):
    """Braid relation in B2: (s0 s1)^2 = (s1 s0)^2, both reduced."""
    W = groups["B2"]
    assert W.from_word((0, 1, 0, 1)) == W.from_word((1, 0, 1, 0)) == W.longest
    assert W.from_word((0, 0)) == W.from_word(())


@pytest.mark.parametrize("bad", [
    ((2, 1), (1, 2)),  # positive off-diagonal
    ((2, -1), (0, 2)),  # one-sided zero
    ((1, -1), (-1, 2)),  # diagonal not 2
    ((2, -1, 0), (-1, 2)),  # ragged
])
def test_invalid_cartan(bad):
    with pytest.raises(ValueError):
        CartanMatrix(bad)


def test_cap_exceeded_for_affine_type():
    affine = CartanMatrix(((2, -2), (-2, 2)))
    with pytest.raises(CapExceeded):
        build_weyl_group(affine, cap=1000)


def test_simply_connected_pairing():
    C = CartanMatrix.preset("B3")
    D = RootDatum.simply_connected(C)
    for i, j in product(range(3), repeat=2):
        assert sum(a * b for a, b in zip(D.simple_roots[j], D.simple_coroots[i])) == C[i, j]


def test_bad_datum_rejected():
    C = CartanMatrix.preset("A2")
    with pytest.raises(ValueError):
        RootDatum(C, ((1, 0), (0, 1)), ((1, 0), (0, 1)))


def test_load_cartan_file(tmp_path):
    p = tmp_path / "g2.json"
    p.write_text(json.dumps({"cartan": [[2, -1], [-3, 2]]}))
    C, D = load_cartan(str(p))
    assert build_weyl_group(C, D).order == 12
    with pytest.raises(ValueError):
        load_cartan("Q7")


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_multiplication_is_associative_and_lengths_subadditive(name, data):
    W = build_weyl_group(CartanMatrix.preset(name))
    idx = st.integers(0, W.order - 1)
    u, v, w = data.draw(idx), data.draw(idx), data.draw(idx)
    assert W.mul(W.mul(u, v), w) == W.mul(u, W.mul(v, w))
    assert W.length(W.mul(u, v)) <= W.length(u) + W.length(v)
    assert W.length(W.inverse[u]) == W.length(u)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_coset_factor_property(name, data):
    W = build_weyl_group(CartanMatrix.preset(name))
    w = data.draw(st.integers(0, W.order - 1))
    J = data.draw(st.integers(0, W.full))
    x, y = W.coset_factor(w, J)
    assert W.rdesc[x] & J == 0
    assert set(members(W.rdesc[y])) <= set(members(J)) or y == W.from_word(())
