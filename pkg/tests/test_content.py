import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as hst

from honeysim.core import EmptyPool, InsufficientPool, Topic, seeded_rng
from honeysim.content import (
    Caption,
    ContentDescriptor,
    Detection,
    EmptyDetections,
    ExhaustedFeed,
    ExhaustedStockLibrary,
    PostDraft,
    RetriesExhausted,
    ReviewDecision,
    ReviewPolicy,
    StockLibrary,
    Strategy,
    StubEnvironment,
    StubFeedItem,
    art_prompt,
    attach_cta,
    english_caption,
    generate_approved_post,
    generate_post,
    insert_emojis,
    keyword_filter,
    load_cta_pool,
    load_quote_pool,
    owner_review,
    sample_quote,
    select_hashtags,
)


def make_topic(name="food", coverage=493_000_000, size=30):
    pool = tuple((f"{name}{i}", coverage - i * 1_000_000) for i in range(size))
    return Topic(name=name, hashtag_pool=pool)


def rng_for(label, seed=7):
    return seeded_rng(seed).split(label).generator()


class TestSelectHashtags:
    def test_pool_of_30_gives_8_7_split(self):
        topic = make_topic(size=30)
        tags = select_hashtags(topic.hashtag_pool, rng_for("tags"))
        ranks = {tag: i for i, (tag, _) in enumerate(topic.hashtag_pool)}
        top = [t for t in tags if ranks[t] < 15]
        tail = [t for t in tags if ranks[t] >= 15]
        assert len(tags) == 15 and len(set(tags)) == 15
        assert len(top) == 8 and len(tail) == 7

    def test_pool_of_exactly_15_returns_whole_pool(self):
        topic = make_topic(size=15)
        tags = select_hashtags(topic.hashtag_pool, rng_for("x"))
        assert sorted(tags) == sorted(t for t, _ in topic.hashtag_pool)

    def test_pool_of_14_rejected(self):
        topic = make_topic(size=15)
        with pytest.raises(InsufficientPool):
            select_hashtags(topic.hashtag_pool[:14], rng_for("x"))

    @given(size=hst.integers(15, 60), seed=hst.integers(0, 10_000))
    @settings(max_examples=80, deadline=None)
    def test_split_property(self, size, seed):
        topic = make_topic(size=size)
        tags = select_hashtags(topic.hashtag_pool, np.random.default_rng(seed))
        ranks = {tag: i for i, (tag, _) in enumerate(topic.hashtag_pool)}
        split = math.ceil(size / 2)
        assert len(tags) == 15 and len(set(tags)) == 15
        assert sum(ranks[t] < split for t in tags) == 8
        assert sum(ranks[t] >= split for t in tags) == 7

    def test_weights_favor_head_and_tail(self):
        topic = make_topic(size=30)
        rng = np.random.default_rng(3)
        head_hits = tail_hits = mid_top = mid_tail = 0
        first = topic.hashtag_pool[0][0]
        mid_a = topic.hashtag_pool[14][0]
        mid_b = topic.hashtag_pool[15][0]
        last = topic.hashtag_pool[-1][0]
        for _ in range(3000):
            tags = set(select_hashtags(topic.hashtag_pool, rng))
            head_hits += first in tags
            mid_top += mid_a in tags
            mid_tail += mid_b in tags
            tail_hits += last in tags
        assert head_hits > mid_top * 2
        assert tail_hits > mid_tail * 2


class TestAttachCta:
    def test_separator_and_sampling(self):
        out = attach_cta("Sunset pasta.", ["What do you think about it?"], rng_for("cta"))
        assert out == "Sunset pasta. What do you think about it?"

    def test_empty_body_allowed(self):
        out = attach_cta("", ["How was your day?"], rng_for("cta"))
        assert out == " How was your day?"

    def test_empty_pool(self):
        with pytest.raises(EmptyPool):
            attach_cta("hello", [], rng_for("cta"))

    def test_fixture_pool_has_reference_lines(self):
        pool = load_cta_pool()
        assert "What do you think about it?" in pool
        assert "How was your day?" in pool


class TestInsertEmojis:
    def test_empty_caption(self):
        assert insert_emojis("", {"cat": "🐱"}, ["😀"], rng_for("e")) == ""

    def test_mapped_word_and_per_sentence_joy(self):
        out = insert_emojis(
            "I love my cat. She is sweet.", {"cat": "🐱"}, ["😀"], rng_for("e")
        )
        assert "🐱" in out
        assert out.count("😀") == 2

    def test_single_sentence_empty_map(self):
        out = insert_emojis("Just a simple caption", {}, ["😀"], rng_for("e"))
        assert out.count("😀") == 1

    def test_mapped_emoji_follows_word(self):
        out = insert_emojis("my cat sleeps.", {"cat": "🐱"}, ["😀"], rng_for("e"))
        assert "cat 🐱" in out


class TestSampleQuote:
    def test_fixture_pool_size_and_reference_entry(self):
        pool = load_quote_pool()
        assert len(pool) == 1665
        assert ("Stay hungry, stay foolish", "Steve Jobs") in pool

    def test_uniform_draw_deterministic(self):
        pool = load_quote_pool()
        first = sample_quote(pool, rng_for("q", seed=99))
        again = sample_quote(pool, rng_for("q", seed=99))
        assert first == again
        assert first in pool

    def test_singleton(self):
        assert sample_quote([("one", "me")], rng_for("q")) == ("one", "me")

    def test_empty_pool(self):
        with pytest.raises(EmptyPool):
            sample_quote([], rng_for("q"))


class TestKeywordFilter:
    def test_keeps_top_and_above_threshold(self):
        dets = [Detection("cat", 0.60), Detection("bowl", 0.10), Detection("grass", 0.04)]
        assert keyword_filter(dets) == ["cat", "bowl"]

    def test_discards_weak_top(self):
        assert keyword_filter([Detection("dog", 0.20), Detection("grass", 0.10)]) is None

    def test_boundary_quarter_kept(self):
        assert keyword_filter([Detection("cat", 0.25)]) == ["cat"]

    def test_boundary_024_discarded(self):
        assert keyword_filter([Detection("cat", 0.24)]) is None

    def test_boundary_005_excluded(self):
        dets = [Detection("cat", 0.6), Detection("rim", 0.05)]
        assert keyword_filter(dets) == ["cat"]

    def test_empty_rejected(self):
        with pytest.raises(EmptyDetections):
            keyword_filter([])

    @given(
        scores=hst.lists(hst.floats(0.06, 1.0), min_size=1, max_size=5),
        weak=hst.floats(0.0, 0.05),
    )
    @settings(max_examples=60, deadline=None)
    def test_weak_detection_never_changes_kept_set(self, scores, weak):
        dets = sorted(
            (Detection(f"l{i}", round(s, 6)) for i, s in enumerate(scores)),
            key=lambda d: d.score,
            reverse=True,
        )
        base = keyword_filter(dets)
        extended = sorted(dets + [Detection("weak", weak)], key=lambda d: d.score, reverse=True)
        assert keyword_filter(extended) == base


class TestArtPrompt:
    def test_template_fill(self):
        assert art_prompt("cat", "cyberpunk", "painting") == "a cyberpunk painting of a cat"

    def test_article_normalization(self):
        assert art_prompt("car", "abstract", "sketch") == "an abstract sketch of a car"
        assert art_prompt("apple", "realistic", "drawing") == "a realistic drawing of an apple"

    def test_unknown_style(self):
        from honeysim.content import UnknownStyle

        with pytest.raises(UnknownStyle):
            art_prompt("food", "vaporwave", "painting")

    def test_unknown_medium(self):
        from honeysim.content import UnknownMedium

        with pytest.raises(UnknownMedium):
            art_prompt("food", "cyberpunk", "hologram")


class TestEnglishCaption:
    def test_english_passes(self):
        assert english_caption("Nothing beats a quiet morning with my favorite coffee.")

    def test_foreign_fails(self):
        assert not english_caption("Ecco il mio gatto preferito, che meraviglia davvero.")

    def test_too_short_fails(self):
        assert not english_caption("wow")


class TestStockLibrary:
    def test_ids_never_repeat(self):
        lib = StockLibrary("unsplash", capacity=100)
        ids = [lib.draw() for _ in range(100)]
        assert len(set(ids)) == 100

    def test_exhaustion(self):
        lib = StockLibrary("unsplash", capacity=2)
        lib.draw(), lib.draw()
        with pytest.raises(ExhaustedStockLibrary):
            lib.draw()


class TestGeneratePost:
    def test_quotes_draft_shape(self):
        env = StubEnvironment()
        draft = generate_post(Strategy.QUOTES, make_topic(), env, rng_for("g"))
        cap = draft.content.caption
        assert cap.is_quote
        assert cap.emoji_count == 0
        assert cap.cta is not None and cap.cta in cap.body
        assert len(cap.hashtags) == 15
        assert draft.content.provenance is Strategy.QUOTES

    def test_insta_draft_rephrased_english(self):
        env = StubEnvironment()
        draft = generate_post(Strategy.INSTA, make_topic(), env, rng_for("g2"))
        cap = draft.content.caption
        assert not cap.is_quote
        assert len(cap.hashtags) == 15
        assert cap.emoji_count >= 1
        assert draft.source_ref.startswith("feed-")
        assert english_caption(cap.body)

    def test_art_draft_uses_template(self):
        env = StubEnvironment()
        draft = generate_post(Strategy.ART, make_topic("car", 93_000_000), env, rng_for("g3"))
        assert draft.source_ref.endswith("of a car")
        assert draft.content.caption.body[0].isupper()

    def test_unsplash_ids_unique_within_run(self):
        env = StubEnvironment()
        drafts = [
            generate_post(Strategy.UNSPLASH, make_topic(), env, rng_for(f"u{i}"))
            for i in range(50)
        ]
        ids = [d.image_id for d in drafts]
        assert None not in ids
        assert len(set(ids)) == 50

    def test_exhausted_feed(self):
        def bad_feed(topic, rng):
            dets = (Detection(topic.name, 0.2), Detection("grass", 0.1))
            return [StubFeedItem(f"feed-{i}", "A nice day with my friends here.", dets) for i in range(25)]

        env = StubEnvironment(feed_factory=bad_feed)
        with pytest.raises(ExhaustedFeed):
            generate_post(Strategy.INSTA, make_topic(), env, rng_for("g4"))

    def test_deterministic_given_seed(self):
        a = generate_post(Strategy.QUOTES, make_topic(), StubEnvironment(), rng_for("same"))
        b = generate_post(Strategy.QUOTES, make_topic(), StubEnvironment(), rng_for("same"))
        assert a == b

    def test_non_ai_appeal_above_ai_on_average(self):
        env = StubEnvironment()
        rng = np.random.default_rng(5)
        means = {}
        for strat in Strategy:
            a, b = env.appeal_params[strat]
            means[strat] = np.mean(rng.beta(a, b, size=10_000))
        non_ai = (means[Strategy.UNSPLASH] + means[Strategy.QUOTES]) / 2
        ai = (means[Strategy.INSTA] + means[Strategy.ART]) / 2
        assert non_ai > ai


class TestOwnerReview:
    def _draft(self, appeal):
        cap = Caption(body="x", hashtags=("a",) * 15, cta=None, emoji_count=0, is_quote=False)
        return PostDraft(
            content=ContentDescriptor(
                appeal=appeal, topic_affinity=1.0, caption=cap, provenance=Strategy.ART
            )
        )

    def test_auto_approve(self):
        assert owner_review(self._draft(0.01), ReviewPolicy.auto_approve()) is ReviewDecision.APPROVED

    def test_threshold_boundary(self):
        policy = ReviewPolicy.reject_below(0.3)
        assert owner_review(self._draft(0.31), policy) is ReviewDecision.APPROVED
        assert owner_review(self._draft(0.30), policy) is ReviewDecision.APPROVED
        assert owner_review(self._draft(0.29), policy) is ReviewDecision.REGENERATE

    def test_retries_exhausted(self):
        env = StubEnvironment()
        with pytest.raises(RetriesExhausted):
            generate_approved_post(
                Strategy.QUOTES,
                make_topic(),
                env,
                rng_for("r"),
                policy=ReviewPolicy.reject_below(2.0),
            )

    def test_loop_returns_first_approved(self):
        env = StubEnvironment()
        draft = generate_approved_post(
            Strategy.QUOTES, make_topic(), env, rng_for("r2"), policy=ReviewPolicy.reject_below(0.05)
        )
        assert draft.content.appeal >= 0.05
