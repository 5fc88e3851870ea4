"""Oracle tests for the statistics kernels.

The reference values come from independent implementations: statsmodels
for the ADF regression and the factorial ANOVA, scipy for the
studentized range distribution, and plain-python recomputation for the
Tukey statistics.
"""

import itertools
import math

import numpy as np
import pytest
import scipy.stats
from hypothesis import given, settings, strategies as hst
from statsmodels.stats.anova import anova_lm
from statsmodels.tsa.stattools import adfuller

import statsmodels.formula.api as smf
import pandas as pd

from honeysim.stats import (
    AdfClassification,
    ConvergenceFailure,
    DegenerateData,
    DegenerateSeries,
    MissingLevels,
    SeriesTooShort,
    TooFewGroups,
    adf_test,
    adf_test_or_degenerate,
    anova3,
    studentized_range_cdf,
    studentized_range_quantile,
    tukey_hsd,
)


def synthetic_series(kind: str, seed: int, n: int = 63) -> np.ndarray:
    rng = np.random.default_rng(seed)
    if kind == "walk":
        return np.cumsum(rng.normal(size=n))
    if kind == "noise":
        return rng.normal(size=n)
    if kind == "ar1":
        out = np.zeros(n)
        for i in range(1, n):
            out[i] = 0.6 * out[i - 1] + rng.normal()
        return out
    if kind == "trendy":
        return np.cumsum(rng.normal(size=n)) + 0.3 * np.arange(n)
    raise ValueError(kind)


class TestAdfOracle:
    @pytest.mark.parametrize(
        "kind,seed",
        [(k, s) for k in ("walk", "noise", "ar1", "trendy") for s in range(5)],
    )
    def test_statistic_and_pvalue_match_reference(self, kind, seed):
        y = synthetic_series(kind, seed)
        mine = adf_test(y, lag=1)
        ref = adfuller(y, maxlag=1, regression="c", autolag=None)
        assert mine.statistic == pytest.approx(ref[0], abs=1e-6)
        assert mine.p_value == pytest.approx(ref[1], abs=1e-4)

    def test_random_walk_classified_non_stationary(self):
        y = np.cumsum(np.random.default_rng(42).normal(size=63))
        res = adf_test(y)
        assert res.classification is AdfClassification.NON_STATIONARY
        assert res.p_value > 0.05

    def test_white_noise_classified_stationary(self):
        y = np.random.default_rng(42).normal(size=63)
        res = adf_test(y)
        assert res.classification is AdfClassification.STATIONARY
        assert res.p_value <= 0.05

    def test_constant_series_raises(self):
        with pytest.raises(DegenerateSeries):
            adf_test([5.0] * 63)

    def test_degenerate_helper_flags_constant(self):
        res = adf_test_or_degenerate([5.0] * 63)
        assert res.degenerate
        assert res.classification is AdfClassification.STATIONARY

    def test_short_series_rejected(self):
        with pytest.raises(SeriesTooShort):
            adf_test(list(range(10)), lag=1)

    def test_size_and_power_bands(self):
        # 200 random walks should mostly keep the unit-root null; 200
        # white-noise series should mostly reject it.
        walks = sum(
            adf_test(synthetic_series("walk", 1000 + i)).non_stationary for i in range(200)
        )
        noise = sum(
            not adf_test(synthetic_series("noise", 2000 + i)).non_stationary for i in range(200)
        )
        assert walks >= 170
        assert noise >= 170


def layout(seed: int, balanced: bool, cells=(3, 2, 3), reps=3):
    rng = np.random.default_rng(seed)
    rows = []
    for a, b, c in itertools.product(*(range(k) for k in cells)):
        n = reps if balanced else int(rng.integers(2, reps + 3))
        for _ in range(n):
            value = (
                0.8 * a
                - 0.5 * (b == 1)
                + 0.3 * c
                + 0.4 * (a == 1) * (c == 2)
                + rng.normal()
            )
            rows.append((value, f"t{a}", f"s{b}", f"p{c}"))
    return rows


def reference_anova(rows):
    df = pd.DataFrame(rows, columns=["value", "ft", "fs", "fp"])
    model = smf.ols("value ~ C(ft) * C(fs) * C(fp)", data=df).fit()
    table = anova_lm(model, typ=2)
    renames = {
        "C(ft)": "topic",
        "C(fs)": "strategy",
        "C(fp)": "plan",
        "C(ft):C(fs)": "topic:strategy",
        "C(ft):C(fp)": "topic:plan",
        "C(fs):C(fp)": "strategy:plan",
        "C(ft):C(fs):C(fp)": "topic:strategy:plan",
    }
    return {renames[k]: (row["sum_sq"], row["F"]) for k, row in table.iterrows() if k in renames}


class TestAnovaOracle:
    @pytest.mark.parametrize("seed", range(5))
    @pytest.mark.parametrize("balanced", [True, False])
    def test_type2_matches_reference(self, seed, balanced):
        rows = layout(seed, balanced)
        mine = anova3(rows)
        ref = reference_anova(rows)
        for row in mine.rows:
            ref_ss, ref_f = ref[row.effect]
            assert row.F == pytest.approx(ref_f, abs=1e-8, rel=1e-8)
            assert row.sum_sq == pytest.approx(ref_ss, rel=1e-8, abs=1e-9)

    def test_balanced_decomposition_is_exact(self):
        rows = layout(3, balanced=True)
        table = anova3(rows)
        y = np.array([r[0] for r in rows])
        total = float(np.sum((y - y.mean()) ** 2))
        parts = sum(r.sum_sq for r in table.rows) + table.residual_sum_sq
        assert parts == pytest.approx(total, rel=1e-9)
        assert all(r.sum_sq >= 0 for r in table.rows)

    def test_injected_main_effect_matches_closed_form(self):
        # Balanced one-effect layout: F has the textbook between/within form.
        rng = np.random.default_rng(11)
        rows = []
        for a in range(3):
            for b in range(2):
                for c in range(3):
                    for _ in range(4):
                        rows.append((2.0 * a + rng.normal(), f"t{a}", f"s{b}", f"p{c}"))
        table = anova3(rows)
        y = np.array([r[0] for r in rows])
        groups = [np.array([r[0] for r in rows if r[1] == f"t{a}"]) for a in range(3)]
        grand = y.mean()
        ss_between = sum(len(g) * (g.mean() - grand) ** 2 for g in groups)

        full = anova3(rows)
        ms_resid = full.residual_sum_sq / full.residual_df
        expected_f = (ss_between / 2) / ms_resid
        assert table.row("topic").F == pytest.approx(expected_f, rel=1e-8)

    def test_two_constant_factors_reduce_to_one_way(self):
        rng = np.random.default_rng(5)
        rows = []
        for a in range(3):
            for _ in range(6):
                rows.append((1.5 * a + rng.normal(), f"t{a}", "s0", "p0"))
        table = anova3(rows)
        assert table.effects == ("topic",)
        f_ref, _ = scipy.stats.f_oneway(
            *[np.array([r[0] for r in rows if r[1] == f"t{a}"]) for a in range(3)]
        )
        assert table.row("topic").F == pytest.approx(f_ref, rel=1e-8)

    def test_all_values_equal_degenerate(self):
        rows = [(1.0, f"t{a}", f"s{b}", f"p{c}") for a in range(2) for b in range(2) for c in range(2)]
        with pytest.raises(DegenerateData):
            anova3(rows * 2)

    def test_all_factors_constant_missing_levels(self):
        with pytest.raises(MissingLevels):
            anova3([(1.0, "t", "s", "p"), (2.0, "t", "s", "p")])


class TestStudentizedRange:
    def test_published_table_value(self):
        assert studentized_range_quantile(0.05, 3, 18) == pytest.approx(3.61, abs=0.01)

    @pytest.mark.parametrize("k", [2, 3, 5, 9])
    @pytest.mark.parametrize("df", [5, 18, 60])
    def test_quantile_matches_scipy(self, k, df):
        mine = studentized_range_quantile(0.05, k, df)
        ref = scipy.stats.studentized_range.ppf(0.95, k, df)
        assert mine == pytest.approx(ref, rel=1e-6)

    def test_k2_reduces_to_student_t(self):
        for df in (5, 18, 40):
            mine = studentized_range_quantile(0.05, 2, df)
            ref = math.sqrt(2.0) * scipy.stats.t.ppf(0.975, df)
            assert mine == pytest.approx(ref, rel=1e-6)

    def test_cdf_matches_scipy(self):
        for q, k, df in [(2.5, 3, 10), (3.6, 3, 18), (4.2, 7, 30), (1.0, 4, 6)]:
            mine = studentized_range_cdf(q, k, df)
            ref = scipy.stats.studentized_range.cdf(q, k, df)
            assert mine == pytest.approx(ref, abs=1e-9)

    def test_monotone_in_k_and_df(self):
        qs_k = [studentized_range_quantile(0.05, k, 18) for k in (2, 3, 4, 6)]
        assert qs_k == sorted(qs_k)
        qs_df = [studentized_range_quantile(0.05, 3, df) for df in (6, 12, 24, 48)]
        assert qs_df == sorted(qs_df, reverse=True)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            studentized_range_quantile(0.0, 3, 18)
        with pytest.raises(ValueError):
            studentized_range_cdf(1.0, 1, 18)


def plain_tukey_q(groups):
    """Independent q computation with plain python loops."""
    k = len(groups)
    means = {label: sum(obs) / len(obs) for label, obs in groups}
    ssw = 0.0
    n_total = 0
    for label, obs in groups:
        m = means[label]
        ssw += sum((x - m) ** 2 for x in obs)
        n_total += len(obs)
    msw = ssw / (n_total - k)
    out = {}
    for i in range(k):
        for j in range(i + 1, k):
            la, oa = groups[i]
            lb, ob = groups[j]
            se = math.sqrt(msw / 2.0 * (1.0 / len(oa) + 1.0 / len(ob)))
            out[(la, lb)] = abs(means[la] - means[lb]) / se
    return out, n_total - k


class TestTukey:
    def make_groups(self, seed, k=4, unbalanced=True):
        rng = np.random.default_rng(seed)
        groups = []
        for i in range(k):
            n = int(rng.integers(4, 9)) if unbalanced else 6
            obs = rng.normal(loc=0.7 * i, size=n)
            groups.append((f"g{i}", obs.tolist()))
        return groups

    @pytest.mark.parametrize("seed", range(5))
    def test_q_matches_plain_recomputation(self, seed):
        groups = self.make_groups(seed)
        res = tukey_hsd(groups)
        ref_q, df = plain_tukey_q(groups)
        assert res.df == df
        for pair in res.pairs:
            assert pair.q_stat == pytest.approx(ref_q[(pair.group_a, pair.group_b)], abs=1e-6)

    @pytest.mark.parametrize("seed", range(3))
    def test_pvalues_match_scipy_distribution(self, seed):
        groups = self.make_groups(seed)
        res = tukey_hsd(groups)
        for pair in res.pairs:
            ref_p = scipy.stats.studentized_range.sf(pair.q_stat, res.k, res.df)
            assert pair.p_value == pytest.approx(ref_p, abs=1e-6)

    def test_balanced_matches_scipy_tukey(self):
        groups = self.make_groups(3, unbalanced=False)
        res = tukey_hsd(groups)
        ref = scipy.stats.tukey_hsd(*[np.array(obs) for _, obs in groups])
        for pair in res.pairs:
            i = int(pair.group_a[1:])
            j = int(pair.group_b[1:])
            assert pair.p_value == pytest.approx(ref.pvalue[i, j], abs=1e-6)

    def test_identical_means_nothing_significant(self):
        obs = [1.0, 2.0, 3.0, 4.0]
        groups = [("a", obs), ("b", obs), ("c", obs)]
        res = tukey_hsd(groups)
        assert not res.any_significant
        assert all(p.mean_diff == 0.0 for p in res.pairs)

    def test_separated_groups_all_significant(self):
        rng = np.random.default_rng(0)
        groups = [
            ("lo", (rng.normal(0, 1, 7)).tolist()),
            ("mid", (rng.normal(5, 1, 7)).tolist()),
            ("hi", (rng.normal(10, 1, 7)).tolist()),
        ]
        res = tukey_hsd(groups)
        assert all(p.significant for p in res.pairs)
        assert all(p.p_value < 0.001 for p in res.pairs)

    def test_significance_iff_p_below_alpha(self):
        groups = self.make_groups(7)
        res = tukey_hsd(groups, alpha=0.05)
        for pair in res.pairs:
            assert pair.significant == (pair.p_value < 0.05)

    def test_error_cases(self):
        with pytest.raises(TooFewGroups):
            tukey_hsd([("a", [1.0, 2.0])])
        with pytest.raises(TooFewGroups):
            tukey_hsd([("a", [1.0, 2.0]), ("b", [3.0])])
        with pytest.raises(DegenerateData):
            tukey_hsd([("a", [1.0, 1.0]), ("b", [2.0, 2.0])])

    @settings(max_examples=25, deadline=None)
    @given(
        shift=hst.floats(-50, 50, allow_nan=False),
        scale=hst.floats(0.01, 40, allow_nan=False),
    )
    def test_shift_and_scale_invariance(self, shift, scale):
        groups = self.make_groups(1, k=3)
        base = tukey_hsd(groups)
        moved = tukey_hsd(
            [(label, [scale * x + shift for x in obs]) for label, obs in groups]
        )
        for a, b in zip(base.pairs, moved.pairs):
            assert b.q_stat == pytest.approx(a.q_stat, rel=1e-9)
            assert b.significant == a.significant
