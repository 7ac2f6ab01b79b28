import numpy as np
import pytest

from paretogof.battery import (
    ALL_TESTS,
    TestStatistic,
    default_battery,
    evaluate,
    evaluate_many,
    parse_tests,
)
from paretogof.classical import edf_tests, meintanis_g, zhang_za
from paretogof.distributions import mom_estimate
from paretogof.ecf import EcfConfig, WeightKernel, ustatistic, vstatistic


@pytest.fixture()
def sample():
    rng = np.random.default_rng(4)
    return np.sort((1.0 - rng.random(25)) ** (-1.0 / 2.0))


def test_default_battery_covers_all():
    assert tuple(t.label for t in default_battery()) == ALL_TESTS


def test_parse_round_trip():
    tests = parse_tests("ks, CvM ,AD,za,MT,vl,VG,UL,ug")
    assert tuple(t.label for t in tests) == ALL_TESTS


def test_parse_errors():
    with pytest.raises(ValueError, match="BOGUS"):
        parse_tests("KS,BOGUS")
    with pytest.raises(ValueError):
        parse_tests("  ,, ")
    with pytest.raises(ValueError):
        TestStatistic("XX")


def test_display_names():
    assert TestStatistic("CVM").display == "CvM"
    assert TestStatistic("KS").display == "KS"


def test_matches_direct_calls(sample):
    beta = mom_estimate(sample)
    trio = edf_tests(sample, beta)
    assert evaluate(TestStatistic("KS"), sample) == trio.ks
    assert evaluate(TestStatistic("CVM"), sample) == trio.cvm
    assert evaluate(TestStatistic("AD"), sample) == trio.ad
    assert evaluate(TestStatistic("ZA"), sample) == zhang_za(sample, beta)
    assert evaluate(TestStatistic("MT", mellin_a=1.0), sample) == meintanis_g(
        sample, beta, 1.0
    )
    assert evaluate(TestStatistic("VL"), sample) == vstatistic(
        sample, EcfConfig(3, 2.0, WeightKernel.LAPLACE)
    )
    assert evaluate(TestStatistic("UG"), sample) == ustatistic(
        sample, EcfConfig(3, 2.0, WeightKernel.GAUSSIAN)
    )


def test_evaluate_many_matches_singletons(sample):
    tests = default_battery()
    joint = evaluate_many(tests, sample)
    solo = np.array([evaluate(t, sample) for t in tests])
    np.testing.assert_array_equal(joint, solo)


def test_fixed_beta_changes_classical_only(sample):
    tests = default_battery()
    refit = evaluate_many(tests, sample)
    fixed = evaluate_many(tests, sample, beta=1.7)
    for t, a, b in zip(tests, refit, fixed):
        if t.needs_shape:
            assert a != b, t.label
        else:
            assert a == b, t.label


def test_tuning_parameters_propagate(sample):
    wide = evaluate(TestStatistic("VG", m=2, a=0.5), sample)
    default = evaluate(TestStatistic("VG"), sample)
    assert wide != default
    assert evaluate(TestStatistic("MT", mellin_a=2.0), sample) != evaluate(
        TestStatistic("MT", mellin_a=1.0), sample
    )
