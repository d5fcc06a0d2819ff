import pytest
from hypothesis import given, settings, strategies as st

from principal_reps.characters import (
    CharacterValue, ThetaContext, all_characters, i_theta, orbit_and_stabilizer, reflect, w_action,
)
from principal_reps.errors import IncomparableCharacters
from principal_reps.roots import CartanMatrix, build_weyl_group

RANK3 = ("A1", "A2", "B2", "G2", "A3", "B3", "C3")
LEVELS = [(2, 1), (3, 1), (4, 1), (5, 1), (7, 1), (3, 2)]  # moduli 1..8
_W = {}


def W_of(name):
    if name not in _W:
        _W[name] = build_weyl_group(CartanMatrix.preset(name))
    return _W[name]


def by_word(theta, word, W):
    """Apply the simple reflections of a word one letter at a time."""
    for i in word:
        theta = reflect(theta, i, W.datum)
    return theta


def test_modulus_and_reduction():
    t = CharacterValue(3, 2, (9, -1))
    assert t.modulus == 8
    assert t.coords == (1, 7)
    for bad in (1, 6, 12):
        with pytest.raises(ValueError):
            CharacterValue(bad, 1, (0,))
    with pytest.raises(ValueError):
        CharacterValue(2, 0, (0,))


def test_i_theta_examples():
    A1, A2 = W_of("A1"), W_of("A2")
    assert i_theta(CharacterValue(5, 1, (0,)), A1.datum) == 1
    assert i_theta(CharacterValue(3, 1, (1,)), A1.datum) == 0
    for c in all_characters(2, 1, 2):
        assert i_theta(c, A2.datum) == 0b11


def test_action_examples():
    W = W_of("A1")
    s = W.from_word((0,))
    t = CharacterValue(5, 1, (1,))
    assert w_action(s, t, W).coords == (3,)
    assert w_action(W.from_word(()), t, W) == t
    assert w_action(s, CharacterValue(5, 1, (0,)), W).coords == (0,)


def test_orbit_examples():
    W = W_of("A1")
    orbit, stab = orbit_and_stabilizer(CharacterValue(5, 1, (1,)), W)
    assert [o.coords for o in orbit] == [(1,), (3,)] and stab == 1
    orbit, stab = orbit_and_stabilizer(CharacterValue(5, 1, (2,)), W)
    assert [o.coords for o in orbit] == [(2,)] and stab == 2
    A3 = W_of("A3")
    orbit, stab = orbit_and_stabilizer(CharacterValue.trivial(3, 1, 3), A3)
    assert len(orbit) == 1 and stab == 24


def test_incomparable_levels():
    a, b = CharacterValue(3, 1, (1,)), CharacterValue(9, 1, (1,))
    with pytest.raises(IncomparableCharacters):
        a.matches(b)


@pytest.mark.parametrize("name", RANK3)
def test_exhaustive_action_properties(name):
    """Word independence, right-action law, orbit-stabilizer and W_{I(theta)} <= W_theta."""
    W = W_of(name)
    for q, a in LEVELS:
        for theta in all_characters(q, a, W.datum.rank):
            ctx = ThetaContext(theta, W)
            images = [w_action(w, theta, W) for w in W]
            for w in W:
                assert by_word(theta, W.word(w), W) == images[w]
            orbit, stab = orbit_and_stabilizer(theta, W)
            assert len(orbit) * stab == W.order
            assert {im.coords for im in images} == {o.coords for o in orbit}
            fixed = {w for w in W if images[w] == theta}
            assert set(W.parabolic(ctx.itheta)) <= fixed
            assert ctx.stab_order == len(fixed)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(RANK3), st.sampled_from(LEVELS), st.data())
def test_right_action_law(name, level, data):
    W = W_of(name)
    q, a = level
    m = q**a - 1
    coords = tuple(data.draw(st.integers(0, max(m - 1, 0))) for _ in range(W.datum.rank))
    theta = CharacterValue(q, a, coords)
    u = data.draw(st.integers(0, W.order - 1))
    v = data.draw(st.integers(0, W.order - 1))
    assert w_action(v, w_action(u, theta, W), W) == w_action(W.mul(u, v), theta, W)
    # reflections preserve triviality on the reflected coroot
    for i in range(W.n):
        assert bool(i_theta(reflect(theta, i, W.datum), W.datum) >> i & 1) == bool(ctx_bit(theta, W, i))


def ctx_bit(theta, W, i):
    return i_theta(theta, W.datum) >> i & 1
