import pytest
from hypothesis import given, settings
from hypothesis import strategies as hst

from honeysim.classifiers import (
    EmptyInput,
    FollowerCategory,
    bot_signals,
    category_to_expected,
    classify_comment,
    classify_follower,
    follower_accuracy,
    load_labeled_comments,
    load_spam_patterns,
    spam_fraction,
    spam_percent,
)
from honeysim.core import (
    Agent,
    AgentCategory,
    Comment,
    SimTime,
    seeded_rng,
)
from honeysim.population import Population


def _comment(text, latency=None):
    return Comment(author="a", text=text, at=SimTime(0, 0), latency_seconds=latency)


@pytest.fixture(scope="module")
def patterns():
    return load_spam_patterns()


# ---------------------------------------------------------------------------
# classify_comment
# ---------------------------------------------------------------------------


class TestClassifyComment:
    def test_pattern_match_regardless_of_latency(self, patterns):
        v = classify_comment(_comment("DM us for collab", latency=300), patterns)
        assert v.is_spam
        assert "dm us" in v.matched_patterns
        assert not v.immediacy_flag

    def test_praise_is_legit(self, patterns):
        v = classify_comment(_comment("So pretty!", latency=3600), patterns)
        assert not v.is_spam
        assert v.matched_patterns == ()

    def test_mention_plus_immediacy(self, patterns):
        v = classify_comment(_comment("@user look here", latency=15), patterns)
        assert v.is_spam
        assert v.matched_patterns == ()
        assert v.mention_flag and v.immediacy_flag

    def test_case_insensitive_match(self, patterns):
        assert classify_comment(_comment("SEND PIC pls"), patterns).is_spam
        assert classify_comment(_comment("Check My Page"), patterns).is_spam

    def test_mention_without_immediacy_is_legit(self, patterns):
        v = classify_comment(_comment("@bestie we should try this", latency=3600), patterns)
        assert not v.is_spam
        assert v.mention_flag and not v.immediacy_flag

    def test_immediacy_without_mention_is_legit(self, patterns):
        v = classify_comment(_comment("first!", latency=5), patterns)
        assert not v.is_spam
        assert v.immediacy_flag and not v.mention_flag

    def test_unknown_latency_never_immediate(self, patterns):
        v = classify_comment(_comment("@user hello", latency=None), patterns)
        assert not v.is_spam
        assert not v.immediacy_flag

    def test_threshold_boundary(self, patterns):
        at = classify_comment(_comment("@u hi", latency=120), patterns)
        over = classify_comment(_comment("@u hi", latency=121), patterns)
        assert at.is_spam
        assert not over.is_spam

    def test_empty_patterns_rejected(self):
        with pytest.raises(ValueError):
            classify_comment(_comment("hello"), [])

    @given(
        text=hst.text(
            alphabet=hst.characters(min_codepoint=32, max_codepoint=126),
            max_size=60,
        ),
        latency=hst.one_of(hst.none(), hst.integers(min_value=0, max_value=7200)),
    )
    @settings(max_examples=150, deadline=None)
    def test_verdict_invariant(self, text, latency):
        pats = load_spam_patterns()
        v = classify_comment(_comment(text, latency), pats)
        if v.is_spam:
            assert v.matched_patterns or (v.mention_flag and v.immediacy_flag)

    @given(
        text=hst.text(
            alphabet=hst.characters(min_codepoint=32, max_codepoint=126),
            max_size=60,
        ),
        extra=hst.sampled_from(["free stuff", "zzz", "look", "pic"]),
    )
    @settings(max_examples=100, deadline=None)
    def test_monotone_in_patterns(self, text, extra):
        base = load_spam_patterns()
        before = classify_comment(_comment(text, 60), base).is_spam
        after = classify_comment(_comment(text, 60), list(base) + [extra], 120).is_spam
        assert not before or after


# ---------------------------------------------------------------------------
# classify_follower
# ---------------------------------------------------------------------------


def _agent(**kw):
    defaults = dict(
        id="a",
        category=AgentCategory.REAL_PERSON,
        followers=500,
        followings=300,
        posts=50,
        has_profile_picture=True,
        username_entropy=0.5,
    )
    defaults.update(kw)
    return Agent(**defaults)


class TestClassifyFollower:
    def test_hand_profile_real_person(self):
        profile = _agent(followers=500, posts=50)
        assert classify_follower(profile, topic_specific=False) is FollowerCategory.REAL_PERSON

    def test_hand_profile_page_influencer(self):
        profile = _agent(followers=5000, posts=200)
        assert classify_follower(profile, topic_specific=True) is FollowerCategory.PAGE_INFLUENCER

    def test_hand_profile_bot(self):
        profile = _agent(
            has_profile_picture=False,
            username_entropy=0.95,
            followers=10,
            followings=2000,
            posts=2,
        )
        assert classify_follower(profile, topic_specific=False) is FollowerCategory.BOT
        assert len(bot_signals(profile)) == 4

    def test_follower_count_alone_makes_page(self):
        profile = _agent(followers=1500)
        assert classify_follower(profile, topic_specific=False) is FollowerCategory.PAGE_INFLUENCER

    def test_thousand_followers_is_not_page_yet(self):
        profile = _agent(followers=1000)
        assert classify_follower(profile, topic_specific=False) is FollowerCategory.REAL_PERSON

    def test_single_signal_not_bot(self):
        profile = _agent(has_profile_picture=False)
        assert bot_signals(profile) == ("no_picture",)
        assert classify_follower(profile, topic_specific=False) is FollowerCategory.REAL_PERSON

    def test_two_signals_beat_topic_specific(self):
        profile = _agent(has_profile_picture=False, posts=2)
        assert classify_follower(profile, topic_specific=True) is FollowerCategory.BOT

    def test_ratio_signal_needs_following_volume(self):
        quiet = _agent(followers=10, followings=400)
        assert "skewed_ratio" not in bot_signals(quiet)
        busy = _agent(followers=10, followings=2000)
        assert "skewed_ratio" in bot_signals(busy)

    @given(
        picture=hst.booleans(),
        entropy=hst.floats(min_value=0.0, max_value=1.0),
        followers=hst.integers(min_value=0, max_value=5000),
        followings=hst.integers(min_value=0, max_value=5000),
        posts=hst.integers(min_value=0, max_value=500),
    )
    @settings(max_examples=150, deadline=None)
    def test_signal_count_is_order_free(self, picture, entropy, followers, followings, posts):
        profile = _agent(
            has_profile_picture=picture,
            username_entropy=entropy,
            followers=followers,
            followings=followings,
            posts=posts,
        )
        checks = [
            not picture,
            entropy > 0.8,
            followings > 500 and followers < 0.1 * followings,
            posts < 5,
        ]
        assert len(bot_signals(profile)) == sum(checks)
        assert len(bot_signals(profile)) == sum(reversed(checks))

    @given(
        picture=hst.booleans(),
        entropy=hst.floats(min_value=0.0, max_value=1.0),
        followers=hst.integers(min_value=0, max_value=5000),
        followings=hst.integers(min_value=0, max_value=5000),
        posts=hst.integers(min_value=0, max_value=500),
        specific=hst.booleans(),
    )
    @settings(max_examples=150, deadline=None)
    def test_total_function(self, picture, entropy, followers, followings, posts, specific):
        profile = _agent(
            has_profile_picture=picture,
            username_entropy=entropy,
            followers=followers,
            followings=followings,
            posts=posts,
        )
        assert classify_follower(profile, specific) in FollowerCategory


# ---------------------------------------------------------------------------
# spam_fraction and the labeled fixture
# ---------------------------------------------------------------------------


class TestSpamFraction:
    def test_empty_rejected(self, patterns):
        with pytest.raises(EmptyInput):
            spam_fraction([], patterns)

    def test_all_legit(self, patterns):
        comments = [_comment("Lovely!", 900), _comment("Great view", 1200)]
        assert spam_percent(comments, patterns) == 0.0

    def test_all_spam(self, patterns):
        comments = [_comment("dm us", 10), _comment("buy now", 50)]
        assert spam_percent(comments, patterns) == 100.0

    def test_fixture_composition(self):
        labeled = load_labeled_comments()
        assert len(labeled) == 300
        assert sum(1 for lc in labeled if lc.label == "spam") == 286
        assert sum(1 for lc in labeled if lc.label == "legit") == 14

    def test_fixture_spam_percent(self, patterns):
        labeled = load_labeled_comments()
        pct = spam_percent([lc.comment for lc in labeled], patterns)
        assert pct == 95.33

    def test_fixture_classified_perfectly(self, patterns):
        labeled = load_labeled_comments()
        for lc in labeled:
            verdict = classify_comment(lc.comment, patterns)
            assert verdict.is_spam == (lc.label == "spam"), lc.comment.text


# ---------------------------------------------------------------------------
# ground-truth accuracy on generated agents
# ---------------------------------------------------------------------------


class TestGroundTruth:
    def test_accuracy_over_population(self):
        pop = Population.build(
            5000, topics=("food", "cat", "car"), source=seeded_rng(123)
        )
        profiles = []
        for i in range(5000):
            aid = pop.id_of(i)
            profiles.append((pop.to_agent(i), pop.is_topic_specific(aid)))
        acc = follower_accuracy(profiles)
        assert acc >= 0.90

    def test_accuracy_stable_across_seeds(self):
        for seed in (1, 2, 3):
            pop = Population.build(2000, topics=("food",), source=seeded_rng(seed))
            profiles = [
                (pop.to_agent(i), pop.is_topic_specific(pop.id_of(i)))
                for i in range(2000)
            ]
            assert follower_accuracy(profiles) >= 0.90

    def test_expected_mapping(self):
        assert category_to_expected(AgentCategory.REAL_PERSON) is FollowerCategory.REAL_PERSON
        assert category_to_expected(AgentCategory.PAGE) is FollowerCategory.PAGE_INFLUENCER
        assert category_to_expected(AgentCategory.BOT) is FollowerCategory.BOT

    def test_empty_profiles_rejected(self):
        with pytest.raises(EmptyInput):
            follower_accuracy([])
