import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from paretogof.distributions import (
    EXPONENTIAL_MIX_BETA,
    LOGNORMAL_MIX_BETA,
    AlternativeSpec,
    Family,
    Sample,
    alternative_cdf,
    mom_estimate,
    pareto_cdf,
    pareto_quantile,
    sample_alternative,
    sample_pareto,
)
from paretogof.errors import DomainError, EstimationError

ALL_SPECS = [
    AlternativeSpec(Family.PARETO, 2.0),
    AlternativeSpec(Family.GAMMA, 0.8),
    AlternativeSpec(Family.GAMMA, 1.2),
    AlternativeSpec(Family.WEIBULL, 0.5),
    AlternativeSpec(Family.WEIBULL, 1.5),
    AlternativeSpec(Family.LOGNORMAL, 1.0),
    AlternativeSpec(Family.LOGNORMAL, 2.5),
    AlternativeSpec(Family.LINEAR_FAILURE_RATE, 0.5),
    AlternativeSpec(Family.BETA_EXPONENTIAL, 0.5),
    AlternativeSpec(Family.BETA_EXPONENTIAL, 1.5),
    AlternativeSpec(Family.DHILLON, 0.4),
    AlternativeSpec(Family.HALF_NORMAL, 1.0),
    AlternativeSpec(Family.LOGNORMAL_MIXTURE, 0.5),
    AlternativeSpec(Family.EXPONENTIAL_MIXTURE, 0.5),
]


class TestParetoCdf:
    def test_lower_endpoint(self):
        assert pareto_cdf(1.0, 2.0) == 0.0

    def test_halfway(self):
        assert pareto_cdf(2.0, 1.0) == pytest.approx(0.5)

    def test_direct_value(self):
        # cross-checked by inverting the quantile below
        val = pareto_cdf(1.5, 2.495)
        assert val == pytest.approx(1.0 - 1.5 ** (-2.495), rel=1e-14)
        assert pareto_quantile(val, 2.495) == pytest.approx(1.5, rel=1e-12)

    def test_monotone(self, rng):
        x = np.sort(1.0 + rng.exponential(size=100))
        u = pareto_cdf(x, 3.0)
        assert np.all(np.diff(u) >= 0)

    def test_domain(self):
        with pytest.raises(DomainError):
            pareto_cdf(0.99, 2.0)
        with pytest.raises(DomainError):
            pareto_cdf(2.0, -1.0)


class TestParetoQuantile:
    def test_at_zero(self):
        assert pareto_quantile(0.0, 5.0) == 1.0

    def test_median(self):
        assert pareto_quantile(0.5, 1.0) == pytest.approx(2.0)

    def test_three_quarters(self):
        assert pareto_quantile(0.75, 2.0) == pytest.approx(2.0)

    def test_domain(self):
        for bad in (-0.1, 1.0, 1.5):
            with pytest.raises(DomainError):
                pareto_quantile(bad, 2.0)

    @given(
        u=st.floats(min_value=0.0, max_value=0.999999, allow_nan=False),
        beta=st.floats(min_value=0.3, max_value=20.0),
    )
    def test_round_trip_u(self, u, beta):
        assert pareto_cdf(pareto_quantile(u, beta), beta) == pytest.approx(
            u, abs=1e-12
        )

    @given(
        x=st.floats(min_value=1.0, max_value=1e6),
        beta=st.floats(min_value=0.2, max_value=10.0),
    )
    def test_round_trip_x(self, x, beta):
        # the composition is float-representable only while the survival
        # probability x**-beta stays well above the ulp of 1
        assume(x ** (-beta) >= 1e-5)
        assert pareto_quantile(pareto_cdf(x, beta), beta) == pytest.approx(
            x, rel=1e-10
        )


class TestSamplePareto:
    def test_support(self, rng):
        x = sample_pareto(5, 2.0, rng)
        assert x.shape == (5,)
        assert np.all(x >= 1.0)

    def test_mean(self, rng):
        x = sample_pareto(100_000, 2.0, rng)
        se = x.std() / math.sqrt(x.size)
        assert abs(x.mean() - 2.0) < 3.0 * se

    def test_ecdf_matches_cdf(self, rng):
        x = sample_pareto(100_000, 5.0, rng)
        assert abs(np.mean(x <= 1.2) - pareto_cdf(1.2, 5.0)) < 0.01

    def test_deterministic(self):
        a = sample_pareto(10, 2.0, np.random.default_rng(7))
        b = sample_pareto(10, 2.0, np.random.default_rng(7))
        np.testing.assert_array_equal(a, b)


class TestMomEstimate:
    def test_constant_two(self):
        assert mom_estimate([2.0, 2.0, 2.0]) == pytest.approx(2.0)

    def test_golfer(self, golfer_scaled):
        assert mom_estimate(golfer_scaled) == pytest.approx(2.495, abs=1e-3)

    def test_mean_three_halves(self):
        assert mom_estimate([1.0, 2.0]) == pytest.approx(3.0)

    def test_undefined(self):
        with pytest.raises(EstimationError):
            mom_estimate([1.0, 1.0])
        with pytest.raises(EstimationError):
            mom_estimate([0.5, 0.9])

    @given(st.lists(st.floats(min_value=1.01, max_value=50.0), min_size=2, max_size=20))
    def test_depends_only_on_mean(self, values):
        x = np.asarray(values)
        direct = mom_estimate(x)
        # summation order may differ by an ulp under permutation
        assert mom_estimate(x[::-1]) == pytest.approx(direct, rel=1e-12)
        # any other sample with the same mean gives the same estimate
        flat = np.full_like(x, x.mean())
        assert mom_estimate(flat) == pytest.approx(direct, rel=1e-12)


class TestAlternativeSpec:
    def test_parse(self):
        spec = AlternativeSpec.parse("W(1.5)")
        assert spec == AlternativeSpec(Family.WEIBULL, 1.5)
        assert AlternativeSpec.parse("lnmix(0.9)").family is Family.LOGNORMAL_MIXTURE
        assert AlternativeSpec.parse("BE(0.5)").family is Family.BETA_EXPONENTIAL

    def test_label_round_trip(self):
        for spec in ALL_SPECS:
            assert AlternativeSpec.parse(spec.label) == spec

    def test_parse_errors(self):
        with pytest.raises(ValueError, match="ZIPF"):
            AlternativeSpec.parse("ZIPF(2)")
        with pytest.raises(ValueError):
            AlternativeSpec.parse("W()")

    def test_invariants(self):
        with pytest.raises(ValueError):
            AlternativeSpec(Family.WEIBULL, -1.0)
        with pytest.raises(ValueError):
            AlternativeSpec(Family.LOGNORMAL_MIXTURE, 1.5)
        AlternativeSpec(Family.LOGNORMAL_MIXTURE, 0.0)  # boundary is valid


class TestSamplers:
    def test_support_bulk(self, rng):
        # every family stays on [1, inf) over a large batch
        for spec in ALL_SPECS:
            draws = sample_alternative(spec, 1_000_000, rng)
            assert draws.min() >= 1.0, spec.label

    @pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label)
    def test_dkw_band(self, spec, rng):
        # empirical CDF within 0.015 of the analytic CDF at 20 grid points
        draws = sample_alternative(spec, 100_000, rng)
        grid = np.quantile(draws, np.linspace(0.025, 0.975, 20))
        ecdf = np.searchsorted(np.sort(draws), grid, side="right") / draws.size
        np.testing.assert_allclose(ecdf, alternative_cdf(spec, grid), atol=0.015)

    def test_weibull_one_is_shifted_exponential(self, rng):
        x = sample_alternative(AlternativeSpec(Family.WEIBULL, 1.0), 100_000, rng)
        se = x.std() / math.sqrt(x.size)
        assert abs(x.mean() - 2.0) < 3.0 * se

    def test_lfr_survival(self, rng):
        x = sample_alternative(
            AlternativeSpec(Family.LINEAR_FAILURE_RATE, 0.5), 100_000, rng
        )
        surv = np.mean(x - 1.0 > 1.0)
        assert abs(surv - math.exp(-1.25)) < 0.01

    def test_lognormal_mixture_degenerate_is_pareto(self, rng):
        spec = AlternativeSpec(Family.LOGNORMAL_MIXTURE, 0.0)
        x = sample_alternative(spec, 100_000, rng)
        grid = np.quantile(x, np.linspace(0.05, 0.95, 20))
        ecdf = np.searchsorted(np.sort(x), grid, side="right") / x.size
        np.testing.assert_allclose(
            ecdf, pareto_cdf(grid, LOGNORMAL_MIX_BETA), atol=0.015
        )
        # mean matched to the lognormal factor of the contaminant
        se = x.std() / math.sqrt(x.size)
        assert abs(x.mean() - math.exp(0.5)) < 4.0 * se

    def test_exponential_mixture_degenerate_is_pareto(self, rng):
        spec = AlternativeSpec(Family.EXPONENTIAL_MIXTURE, 0.0)
        x = sample_alternative(spec, 100_000, rng)
        grid = np.quantile(x, np.linspace(0.05, 0.95, 20))
        ecdf = np.searchsorted(np.sort(x), grid, side="right") / x.size
        np.testing.assert_allclose(
            ecdf, pareto_cdf(grid, EXPONENTIAL_MIX_BETA), atol=0.015
        )

    def test_mixture_betas(self):
        # beta / (beta - 1) equals the matched component means
        assert LOGNORMAL_MIX_BETA / (LOGNORMAL_MIX_BETA - 1) == pytest.approx(
            math.exp(0.5)
        )
        assert EXPONENTIAL_MIX_BETA / (EXPONENTIAL_MIX_BETA - 1) == pytest.approx(1.5)

    def test_reproducible(self):
        for spec in ALL_SPECS:
            a = sample_alternative(spec, 50, np.random.default_rng(3))
            b = sample_alternative(spec, 50, np.random.default_rng(3))
            np.testing.assert_array_equal(a, b)


class TestSample:
    def test_sorted_cache(self):
        s = Sample.from_values([3.0, 1.5, 2.0])
        np.testing.assert_array_equal(s.sorted, [1.5, 2.0, 3.0])
        np.testing.assert_array_equal(s.values, [3.0, 1.5, 2.0])
        assert s.n == 3

    def test_validation(self):
        with pytest.raises(ValueError):
            Sample.from_values([])
        with pytest.raises(ValueError):
            Sample.from_values([1.0, np.inf])
