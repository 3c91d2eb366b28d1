from __future__ import annotations

import numpy as np
import pytest
from scipy.special import zeta as _scipy_zeta

from netresil import bootstrap_pvalue, fit_discrete_powerlaw, sample_powerlaw
from netresil.powerlaw import PowerLawFit


def hurwitz_by_summation(s: float, q: int, terms: int = 1_000_000) -> float:
    """Independent zeta tail: direct summation plus an integral remainder."""
    ks = np.arange(q, q + terms, dtype=np.float64)
    head = np.sum(ks ** -s)
    remainder = (q + terms) ** (1.0 - s) / (s - 1.0)
    return float(head + remainder)


class TestSampler:
    def test_deterministic(self):
        a = sample_powerlaw(2.5, 1, 500, seed=9)
        b = sample_powerlaw(2.5, 1, 500, seed=9)
        assert np.array_equal(a, b)

    def test_different_seeds_differ(self):
        a = sample_powerlaw(2.5, 1, 500, seed=1)
        b = sample_powerlaw(2.5, 1, 500, seed=2)
        assert not np.array_equal(a, b)

    def test_single_draw_at_least_xmin(self):
        val = sample_powerlaw(2.5, 3, 1, seed=0)
        assert val.shape == (1,)
        assert val[0] >= 3

    def test_rejects_bad_alpha(self):
        with pytest.raises(ValueError, match="non-normalizable"):
            sample_powerlaw(1.0, 1, 10, seed=0)

    def test_rejects_bad_n_and_xmin(self):
        with pytest.raises(ValueError):
            sample_powerlaw(2.5, 1, 0, seed=0)
        with pytest.raises(ValueError):
            sample_powerlaw(2.5, 0, 10, seed=0)

    def test_empirical_ccdf_matches_summed_zeta_tail(self):
        alpha, xmin, n = 2.5, 1, 10_000
        sample = sample_powerlaw(alpha, xmin, n, seed=3)
        assert sample.min() >= xmin
        assert np.isfinite(sample.mean())
        z0 = hurwitz_by_summation(alpha, xmin)
        worst = 0.0
        for k in range(xmin, 60):
            emp = np.mean(sample > k)
            theory = hurwitz_by_summation(alpha, k + 1) / z0
            worst = max(worst, abs(emp - theory))
        assert worst < 0.05


class TestFitter:
    def test_recovers_alpha(self):
        sample = sample_powerlaw(2.5, 1, 10_000, seed=0)
        fit = fit_discrete_powerlaw(sample)
        assert 2.4 <= fit.alpha <= 2.6
        assert fit.xmin >= 1
        assert fit.n_tail >= 2
        assert fit.p_value is None

    def test_degenerate_sample(self):
        with pytest.raises(ValueError, match="degenerate sample"):
            fit_discrete_powerlaw([1] * 50)

    def test_too_few_values(self):
        with pytest.raises(ValueError, match="at least 10"):
            fit_discrete_powerlaw([1, 2, 3, 4, 5])

    def test_zeros_dropped_with_diagnostic(self, caplog):
        sample = list(sample_powerlaw(2.5, 1, 200, seed=5)) + [0, 0, 0]
        with caplog.at_level("WARNING"):
            fit = fit_discrete_powerlaw(sample)
        assert "3 zero values" in caplog.text
        assert fit.alpha > 1

    def test_duplication_invariance(self):
        sample = list(sample_powerlaw(2.5, 1, 2_000, seed=11))
        fit1 = fit_discrete_powerlaw(sample)
        fit2 = fit_discrete_powerlaw(sample + sample)
        assert fit2.alpha == pytest.approx(fit1.alpha, abs=1e-12)
        assert fit2.xmin == fit1.xmin
        assert fit2.ks == pytest.approx(fit1.ks, abs=1e-12)
        assert fit2.n_tail == 2 * fit1.n_tail

    def test_reported_ks_recomputable_from_fit(self):
        sample = np.sort(sample_powerlaw(2.5, 1, 5_000, seed=21))
        fit = fit_discrete_powerlaw(sample)
        tail = sample[sample >= fit.xmin]
        n_tail = len(tail)
        z0 = _scipy_zeta(fit.alpha, float(fit.xmin))
        worst = 0.0
        for k in range(fit.xmin, int(tail.max()) + 1):
            emp = np.sum(tail > k) / n_tail
            model = _scipy_zeta(fit.alpha, k + 1.0) / z0
            worst = max(worst, abs(emp - model))
        assert worst == pytest.approx(fit.ks, abs=1e-12)
        assert n_tail == fit.n_tail

    def test_estimation_error_shrinks_with_sample_size(self):
        sizes = (1_000, 10_000, 100_000)
        errors = {n: [] for n in sizes}
        for seed in range(20):
            for n in sizes:
                fit = fit_discrete_powerlaw(sample_powerlaw(2.5, 1, n, seed=700 + seed))
                errors[n].append(abs(fit.alpha - 2.5))
        medians = [float(np.median(errors[n])) for n in sizes]
        assert medians[0] >= medians[1] >= medians[2]


class TestBootstrap:
    def test_rejects_small_reps(self):
        sample = sample_powerlaw(2.5, 1, 200, seed=0)
        fit = fit_discrete_powerlaw(sample)
        with pytest.raises(ValueError, match="at least 100"):
            bootstrap_pvalue(sample, fit, reps=10, seed=0)

    def test_deterministic(self):
        sample = sample_powerlaw(2.5, 1, 400, seed=8)
        fit = fit_discrete_powerlaw(sample)
        p1 = bootstrap_pvalue(sample, fit, reps=100, seed=3)
        p2 = bootstrap_pvalue(sample, fit, reps=100, seed=3)
        assert p1 == p2

    def test_calibration_under_true_model(self):
        # data drawn exactly from a power law: p-values should look uniform,
        # so p > 0.05 should hold in the vast majority of runs
        good = 0
        for run in range(100):
            sample = sample_powerlaw(2.5, 1, 600, seed=1_000 + run)
            fit = fit_discrete_powerlaw(sample)
            p = bootstrap_pvalue(sample, fit, reps=100, seed=5_000 + run)
            good += p > 0.05
        assert good >= 80

    def test_detects_geometric_misfit(self):
        # matched mean: a geometric sample is not a power law; at this seed
        # the refit bootstrap rejects it decisively
        mean = _scipy_zeta(1.5, 1.0) / _scipy_zeta(2.5, 1.0)
        rng = np.random.default_rng(1)
        sample = rng.geometric(1.0 / mean, size=10_000)
        fit = fit_discrete_powerlaw(sample)
        p = bootstrap_pvalue(sample, fit, reps=100, seed=1)
        assert p <= 0.1


class TestSerialization:
    def test_to_dict_roundtrip_fields(self):
        fit = PowerLawFit(alpha=2.5, xmin=2, ks=0.01, n_tail=400, p_value=0.4)
        assert fit.to_dict() == {
            "alpha": 2.5,
            "xmin": 2,
            "ks": 0.01,
            "n_tail": 400,
            "p_value": 0.4,
        }
