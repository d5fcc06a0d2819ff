import json

import pytest

from principal_reps.verify import (
    CRITERIA, HEREDITY_NEGATIVE_CONTROL, ConfigError, RunConfig, criterion_7, criterion_10, run_verification_suite,
    within_time, Check,
)


def test_default_suite_passes_and_is_deterministic():
    code, payload = run_verification_suite(RunConfig())
    assert code == 0 and payload["passed"]
    names = [c["name"] for c in payload["checks"]]
    assert len(names) == len(set(names))
    again = run_verification_suite(RunConfig())[1]
    assert json.dumps(payload, sort_keys=True) == json.dumps(again, sort_keys=True)


@pytest.mark.parametrize("cartan,q,coords", [("B2", 3, (1, 0)), ("A3", 4, (1, 0, 2)), ("G2", 2, None)])
def test_suite_on_other_contexts(cartan, q, coords):
    code, payload = run_verification_suite(RunConfig(cartan=cartan, q=q, coords=coords, bound=1))
    assert code == 0, [c for c in payload["checks"] if not c["passed"]]


@pytest.mark.parametrize("cfg,option", [
    (RunConfig(cartan="Z9"), "--cartan"),
    (RunConfig(coords=(1,)), "--coords"),
    (RunConfig(q=6), "--q/--level"),
    (RunConfig(n=13), "--n"),
    (RunConfig(bound=-1), "--bound"),
])
def test_config_errors(cfg, option):
    with pytest.raises(ConfigError) as e:
        run_verification_suite(cfg)
    assert e.value.flag == option


def test_criteria_table():
    assert sorted(CRITERIA) == list(range(1, 11))
    assert within_time(1, Check("x", True, seconds=0.5))
    assert not within_time(1, Check("x", True, seconds=1.5))
    assert HEREDITY_NEGATIVE_CONTROL == [1, 2, 0, 3]


def test_sampled_criteria_are_seeded():
    assert criterion_7(samples=20, seed=4).details == criterion_7(samples=20, seed=4).details
    assert criterion_10(samples=20, seed=4).details == criterion_10(samples=20, seed=4).details
