import numpy as np
import pytest

from honeysim.analytics import HoneypotSeries
from honeysim.behavior import DEFAULT_PROFILE, PAPER_PROFILE_NAME, load_profile
from honeysim.calibrate import (
    DEFAULT_SPACE,
    PAPER_TARGETS,
    BudgetExhausted,
    ProfileSpace,
    calibrate,
    evaluate_profile,
    group_means,
)
from honeysim.config import (
    STRATEGY_MIX_AI,
    STRATEGY_MIX_NONAI,
    ExperimentConfig,
    HoneypotSpec,
    topic_from_name,
)
from honeysim.core import ValidationError
from honeysim.plans import Plan


class TestTargets:
    def test_topic_rows(self):
        assert PAPER_TARGETS["cat"][0] == 47.4
        assert PAPER_TARGETS["food"][0] == 38.5
        assert PAPER_TARGETS["car"][0] == 21.9

    def test_metric_columns(self):
        assert PAPER_TARGETS["cat"] == (47.4, 182.1, 923.1)
        assert PAPER_TARGETS["plan1"] == (60.0, 254.2, 835.2)
        assert PAPER_TARGETS["NonAI"] == (32.7, 264.2, 842.5)

    def test_nine_groups(self):
        assert set(PAPER_TARGETS) == {
            "food", "cat", "car", "AI", "NonAI", "Mixed",
            "plan0", "plan1", "plan2",
        }


class TestProfileSpace:
    def test_unknown_field_rejected(self):
        with pytest.raises(ValidationError):
            ProfileSpace(ranges={"warp_speed": (0, 1)})

    def test_calibration_name_not_samplable(self):
        with pytest.raises(ValidationError):
            ProfileSpace(ranges={"calibration_name": (0, 1)})

    def test_empty_range_rejected(self):
        with pytest.raises(ValidationError):
            ProfileSpace(ranges={"base_like": (0.5, 0.1)})

    def test_sample_within_bounds(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            profile = DEFAULT_SPACE.sample(rng)
            for name, (low, high) in DEFAULT_SPACE.ranges.items():
                assert low <= getattr(profile, name) <= high

    def test_unlisted_fields_keep_defaults(self):
        rng = np.random.default_rng(0)
        profile = DEFAULT_SPACE.sample(rng)
        assert profile.follow_reciprocity == DEFAULT_PROFILE.follow_reciprocity
        assert profile.appeal_ai == DEFAULT_PROFILE.appeal_ai

    def test_appeal_pseudo_fields(self):
        space = ProfileSpace(ranges={"appeal_nonai_a": (3.5, 3.5)})
        profile = space.sample(np.random.default_rng(1))
        assert profile.appeal_nonai == (3.5, DEFAULT_PROFILE.appeal_nonai[1])
        assert profile.appeal_ai == DEFAULT_PROFILE.appeal_ai


def _series(hid, topic, strategy, plan, followers, likes, comments):
    return HoneypotSeries(
        honeypot_id=hid,
        topic=topic,
        strategy_class=strategy,
        plan=plan,
        followers=(followers,),
        post_likes=(likes,),
        post_comments=(comments,),
    )


class TestGroupMeans:
    def test_hand_check(self):
        series = [
            _series("x1", "food", "NonAI", "plan0", 10, 100, 5),
            _series("x2", "food", "AI", "plan1", 30, 200, 15),
            _series("x3", "cat", "NonAI", "plan1", 50, 300, 25),
        ]
        gm = group_means(series)
        assert gm["food"] == (20.0, 10.0, 150.0)
        assert gm["cat"] == (50.0, 25.0, 300.0)
        assert gm["NonAI"] == (30.0, 15.0, 200.0)
        assert gm["plan1"] == (40.0, 20.0, 250.0)


@pytest.fixture(scope="module")
def tiny_config():
    return ExperimentConfig(
        topics=(topic_from_name("food"), topic_from_name("cat")),
        honeypots=(
            HoneypotSpec("c0", "food", STRATEGY_MIX_NONAI, Plan.PLAN0),
            HoneypotSpec("c1", "food", STRATEGY_MIX_AI, Plan.PLAN1),
            HoneypotSpec("c2", "cat", STRATEGY_MIX_NONAI, Plan.PLAN2),
        ),
        horizon_days=7,
        population_size=2400,
        seed=0,
    )


class TestEvaluate:
    def test_deterministic(self, tiny_config):
        a = evaluate_profile(DEFAULT_PROFILE, config=tiny_config, replicates=1)
        b = evaluate_profile(DEFAULT_PROFILE, config=tiny_config, replicates=1)
        assert a == b
        assert np.isfinite(a) and a >= 0.0

    def test_unknown_target_groups_ignored(self, tiny_config):
        targets = {"food": (10.0, 10.0, 10.0), "boats": (1.0, 1.0, 1.0)}
        loss = evaluate_profile(
            DEFAULT_PROFILE, targets=targets, config=tiny_config, replicates=1
        )
        assert np.isfinite(loss)

    def test_replicate_floor(self, tiny_config):
        with pytest.raises(ValidationError):
            evaluate_profile(DEFAULT_PROFILE, config=tiny_config, replicates=0)


class TestCalibrate:
    def test_budget_floor(self, tiny_config):
        with pytest.raises(ValidationError):
            calibrate(budget=0, config=tiny_config, replicates=1)

    def test_budget_one_returns_start(self, tiny_config):
        result = calibrate(budget=1, config=tiny_config, replicates=1, seed=4)
        assert result.evaluations == 1
        assert result.loss == evaluate_profile(
            DEFAULT_PROFILE, config=tiny_config, replicates=1
        )
        assert result.profile.calibration_name == "paper-calibrated"

    def test_search_never_worse_than_start(self, tiny_config):
        result = calibrate(budget=3, config=tiny_config, replicates=1, seed=4)
        assert result.loss == min(result.losses)
        assert result.loss <= result.losses[0]
        assert result.evaluations == 3

    def test_target_loss_short_circuits(self, tiny_config):
        result = calibrate(
            budget=5, config=tiny_config, replicates=1, target_loss=1e12
        )
        assert result.evaluations == 1

    def test_budget_exhausted_carries_best(self, tiny_config):
        with pytest.raises(BudgetExhausted) as exc_info:
            calibrate(budget=2, config=tiny_config, replicates=1, target_loss=0.0)
        best = exc_info.value.best
        assert best.evaluations == 2
        assert best.loss == min(best.losses)


class TestShippedProfile:
    def test_loads_by_name(self):
        profile = load_profile(PAPER_PROFILE_NAME)
        assert profile.calibration_name == PAPER_PROFILE_NAME

    def test_not_the_default(self):
        profile = load_profile(PAPER_PROFILE_NAME)
        assert profile != DEFAULT_PROFILE

    def test_loss_not_worse_than_default(self):
        # two replicates of the full testbed per profile, fixed seeds
        shipped = load_profile(PAPER_PROFILE_NAME)
        loss_shipped = evaluate_profile(shipped, replicates=2)
        loss_default = evaluate_profile(DEFAULT_PROFILE, replicates=2)
        assert loss_shipped <= loss_default

    def test_likes_per_post_in_reported_band(self):
        # global mean across honeypots must land within 30% of 5.94
        from honeysim.analytics import series_from_run
        from honeysim.config import preset_paper_testbed
        from honeysim.engine import replicate_seeds, run

        config = preset_paper_testbed(seed=0, replicates=2)
        likes = 0
        posts = 0
        for seed in replicate_seeds(config):
            series = series_from_run(run(config, seed))
            likes += sum(s.total_likes for s in series)
            posts += sum(len(s.post_likes) for s in series)
        rate = likes / posts
        assert 5.94 * 0.7 <= rate <= 5.94 * 1.3
