"""Tests for the synthetic population builder."""

import numpy as np
import pytest

from honeysim.core import AgentCategory, Gender, ValidationError, seeded_rng
from honeysim.population import (
    DEFAULT_STRUCTURE,
    Population,
    TopicStructure,
    topic_structure,
)

TOPICS = ("food", "cat", "car")


@pytest.fixture(scope="module")
def pop():
    return Population.build(10_000, TOPICS, seeded_rng(7))


class TestBuild:
    def test_category_mix_close_to_default(self, pop):
        counts = pop.category_counts()
        assert counts[AgentCategory.BOT] == 1500
        assert counts[AgentCategory.REAL_PERSON] == pytest.approx(6000, abs=200)
        assert counts[AgentCategory.PAGE] == pytest.approx(2500, abs=200)

    def test_deterministic_for_equal_seed(self):
        a = Population.build(2_000, TOPICS, seeded_rng(3))
        b = Population.build(2_000, TOPICS, seeded_rng(3))
        assert np.array_equal(a.category, b.category)
        assert np.array_equal(a.followers, b.followers)
        assert np.array_equal(a.topic_idx, b.topic_idx)

    def test_different_seed_differs(self):
        a = Population.build(2_000, TOPICS, seeded_rng(3))
        b = Population.build(2_000, TOPICS, seeded_rng(4))
        assert not np.array_equal(a.followers, b.followers)

    def test_size_and_topic_validation(self):
        with pytest.raises(ValidationError):
            Population.build(50, TOPICS, seeded_rng(1))
        with pytest.raises(ValidationError):
            Population.build(1_000, (), seeded_rng(1))

    def test_unknown_topic_uses_default_structure(self):
        p = Population.build(1_000, ("gardening",), seeded_rng(5))
        assert topic_structure("gardening") is DEFAULT_STRUCTURE
        assert len(p.topic_pool("gardening")) > 0

    def test_structure_validation(self):
        with pytest.raises(ValidationError):
            TopicStructure(
                interest_share=0.0, page_fraction=0.2, author_page_weight=0.5,
                bot_pressure=1.0, follow_scale=1.0, ad_affinity=0.1,
                wild_like_mean=10.0,
            )


class TestPools:
    def test_pools_partition_organics(self, pop):
        total = sum(len(pop.topic_pool(t)) for t in TOPICS)
        counts = pop.category_counts()
        assert total == counts[AgentCategory.REAL_PERSON] + counts[AgentCategory.PAGE]

    def test_cat_pool_most_page_heavy(self, pop):
        page_share = {}
        for t in TOPICS:
            pool = pop.topic_pool(t)
            page_share[t] = float(np.mean(pop.category[pool] == 1))
        assert page_share["cat"] > page_share["food"]
        assert page_share["cat"] > page_share["car"]

    def test_car_has_most_trigger_bots(self, pop):
        sizes = {t: len(pop.trigger_bots[t]) for t in TOPICS}
        assert sizes["car"] > sizes["food"] > sizes["cat"]

    def test_purchasable_are_bots_outside_trigger_pools(self, pop):
        assert len(pop.purchasable) >= 400
        assert set(pop.category[pop.purchasable]) == {2}
        all_triggers = np.concatenate([pop.trigger_bots[t] for t in TOPICS])
        assert not set(pop.purchasable) & set(all_triggers)

    def test_unknown_pool_raises(self, pop):
        with pytest.raises(ValidationError):
            pop.topic_pool("music")


class TestSampling:
    def test_sample_interested_from_pool(self, pop):
        rng = seeded_rng(11).split("s").generator()
        idx = pop.sample_interested("cat", 500, rng)
        assert len(idx) == 500
        assert set(idx) <= set(pop.topic_pool("cat"))

    def test_sample_authors_page_weighted(self, pop):
        rng = seeded_rng(12).split("a").generator()
        idx = pop.sample_authors("cat", 2_000, rng)
        page_frac = float(np.mean(pop.category[idx] == 1))
        pool = pop.topic_pool("cat")
        pool_page_frac = float(np.mean(pop.category[pool] == 1))
        assert page_frac > pool_page_frac

    def test_trigger_bot_sampling_unique(self, pop):
        rng = seeded_rng(13).split("b").generator()
        idx = pop.sample_trigger_bots("car", 50, rng)
        assert len(idx) == 50
        assert len(set(idx.tolist())) == 50
        assert set(idx) <= set(pop.trigger_bots["car"])

    def test_affinity_on_vs_off_topic(self, pop):
        pool = pop.topic_pool("food")[:200]
        on = pop.affinity_for(pool, "food")
        off = pop.affinity_for(pool, "car")
        assert np.all(on >= 0) and np.all(on <= 1)
        assert np.allclose(off, on * 0.15)

    def test_zero_k_empty(self, pop):
        rng = seeded_rng(14).split("z").generator()
        assert len(pop.sample_interested("food", 0, rng)) == 0


class TestAgentViews:
    def test_roundtrip_id(self, pop):
        assert pop.index_of(pop.id_of(42)) == 42

    def test_to_agent_fields(self, pop):
        a = pop.to_agent(0)
        assert a.id == "u00000"
        assert a.category in set(AgentCategory)
        assert a.gender in set(Gender)
        assert a.age_bucket is not None
        assert a.region is not None

    def test_bot_profiles_show_bot_signals(self, pop):
        bots = np.where(pop.category == 2)[0][:500]
        signal_counts = []
        for i in bots:
            a = pop.to_agent(int(i))
            signals = sum([
                not a.has_profile_picture,
                a.username_entropy > 0.8,
                a.followings > 500 and a.followers < 0.1 * a.followings,
                a.posts < 5,
            ])
            signal_counts.append(signals)
        assert np.mean(np.array(signal_counts) >= 2) > 0.9

    def test_real_profiles_lack_bot_signals(self, pop):
        reals = np.where(pop.category == 0)[0][:500]
        flagged = 0
        for i in reals:
            a = pop.to_agent(int(i))
            signals = sum([
                not a.has_profile_picture,
                a.username_entropy > 0.8,
                a.followings > 500 and a.followers < 0.1 * a.followings,
                a.posts < 5,
            ])
            flagged += signals >= 2
        assert flagged / len(reals) < 0.05

    def test_small_pages_are_topic_specific(self, pop):
        pages = np.where(pop.category == 1)[0]
        small = pages[pop.followers[pages] <= 1000]
        assert np.all(pop.topic_specific[small])

    def test_register_extra_and_ground_truth(self, pop):
        from honeysim.core import Agent

        extra = Agent(id="ad-h3-001", category=AgentCategory.REAL_PERSON)
        pop.register_extra(extra, topic_specific=False)
        assert pop.agent("ad-h3-001") is extra
        assert pop.ground_truth("ad-h3-001") is AgentCategory.REAL_PERSON
        assert pop.ground_truth("u00000") is pop.to_agent(0).category

    def test_region_distribution_top_is_india(self, pop):
        from honeysim.population import REGION_NAMES

        names, counts = np.unique(pop.region_idx, return_counts=True)
        top = REGION_NAMES[int(names[np.argmax(counts)])]
        assert top == "India"
