from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from principal_reps.bound_quiver import FIGURE_ORDER_N3, cardinality_profile, tits_form
from principal_reps.classify import A2_DIMENSION_VECTORS
from principal_reps.errors import BudgetExceeded
from principal_reps.tits import (
    brute_force_min, q3_expanded, substitute, substituted, substitution_report, unconstrained_negative_witness,
    weak_positivity_search, witness_profile,
)


def figure(x_masks):
    return [x_masks[m] for m in FIGURE_ORDER_N3]


@pytest.mark.parametrize("n,bound", [(1, 6), (2, 6), (3, 2)])
def test_search_matches_brute_force(n, bound):
    res = weak_positivity_search(n, bound, keep=None, workers=1)
    best, neg = brute_force_min(tits_form(n), bound)
    assert res.complete and res.violation_count == neg == 0
    assert res.minimum == best
    assert res.evaluated == (bound + 1) ** (1 << n)


def test_n2_values_of_one_are_the_listed_vectors():
    q = tits_form(2)
    ones = {x for x in product(range(2), repeat=4) if q(x) == 1}
    # in the 0/1 cube, q = 1 exactly on the listed vectors; (0,1,1,0) is the lone value 2
    assert ones == set(A2_DIMENSION_VECTORS)
    assert q((0, 1, 1, 0)) == 2


def test_n4_box_contains_witness():
    x, val = witness_profile(4)
    assert x == cardinality_profile(4, [0, 1, 2, 1, 0]) and val == -4
    res = weak_positivity_search(4, 2, keep=None, workers=1)
    assert tuple(x) in set(res.violations)
    assert res.violation_count == len(res.violations) > 0
    assert res.minimum <= -4


def test_n4_violations_are_negative():
    q = tits_form(4)
    res = weak_positivity_search(4, 1, keep=None, workers=1)
    assert all(q(v) < 0 for v in res.violations)
    brute = sum(1 for x in product(range(2), repeat=16) if q(x) < 0)
    assert res.violation_count == brute


def test_budget_and_resume():
    full = weak_positivity_search(4, 1, keep=None, workers=1)
    found, cursor, evaluated = [], 0, 0
    while True:
        try:
            part = weak_positivity_search(4, 1, budget=5000, resume=cursor, keep=None, workers=1)
            found += part.violations
            evaluated += part.evaluated
            break
        except BudgetExceeded as e:
            found += e.violations
            evaluated += e.evaluated
            assert e.cursor > cursor
            cursor = e.cursor
    assert sorted(found) == full.violations
    assert evaluated == full.evaluated


def test_parallel_matches_serial():
    a = weak_positivity_search(3, 3, keep=None, workers=1)
    b = weak_positivity_search(3, 3, keep=None, workers=2)
    assert a.to_json() == b.to_json()


def test_substitution_examples():
    ones = [1] * 8
    assert q3_expanded(ones) == 2 == substituted(*substitute(ones))
    e1 = [1, 0, 0, 0, 0, 0, 0, 0]
    assert q3_expanded(e1) == 1 == substituted(*substitute(e1))
    e5 = [0, 0, 0, 0, 1, 0, 0, 0]
    assert q3_expanded(e5) == 1 == substituted(*substitute(e5))


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(-10, 10), min_size=8, max_size=8))
def test_mask_form_and_rewrite_agree(x_masks):
    v = tits_form(3)(x_masks)
    x = figure(x_masks)
    assert q3_expanded(x) == v
    assert substituted(*substitute(x)) == Fraction(v)


def test_substitution_report():
    rep = substitution_report(10_000, seed=0)
    assert rep.max_discrepancy == 0 and rep.mask_form_agrees
    assert rep.min_q_nonneg_sample >= 0
    j = rep.to_json()
    assert j["unconstrainedClaim"] == "fails"


def test_unconstrained_rewrite_goes_negative():
    w = unconstrained_negative_witness()
    assert Fraction(w["value"]) < 0
    # the point comes from integer coordinates with a negative entry, where q_3 is negative too
    assert w["originalValue"] == Fraction(w["value"])
    assert not w["nonnegativeOriginalCoordinates"]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=8, max_size=8))
def test_q3_nonnegative_on_nonnegative_vectors(x):
    assert tits_form(3)(x) >= 0
