import pytest

from honeysim.core import (
    FollowerEntry,
    FollowingEntry,
    Honeypot,
    InsufficientPool,
    EmptyPool,
    Post,
    SimTime,
    Topic,
    seeded_rng,
)
from honeysim.plans import (
    ActionKind,
    AlreadySponsored,
    DayContext,
    EngagementPlanConfig,
    Plan,
    PlanAction,
    WrongPlan,
    buy_followers,
    follow_back_decision,
    fu_step,
    load_spam_comment_pool,
    pick_sponsor_targets,
    plan_config,
    plan_daily_actions,
    spam_comment_text,
    sponsor_post,
)


def make_topic(name="food"):
    pool = tuple((f"{name}{i}", 500_000_000 - i * 1_000_000) for i in range(30))
    return Topic(name=name, hashtag_pool=pool)


def make_honeypot(plan, hp_id="h1", followers=0, followings=0):
    h = Honeypot(
        id=hp_id,
        topic=make_topic(),
        strategies=("quotes", "unsplash"),
        plan=plan_config(plan),
    )
    for i in range(followers):
        h.followers[f"a{i}"] = FollowerEntry(f"a{i}", SimTime(0), purchased=False)
    for i in range(followings):
        h.followings[f"f{i}"] = FollowingEntry(f"f{i}", SimTime(0))
    return h


def rng_for(label, seed=11):
    return seeded_rng(seed).split(label).generator()


FEED = [f"w{i:03d}" for i in range(25)]


class TestPlanConfig:
    def test_field_defaults(self):
        cfg = plan_config(Plan.PLAN2)
        assert cfg.follow_back_p == 0.5
        assert cfg.purchased_followers_n == 100
        assert cfg.sponsor_daily_budget == 2.0
        assert cfg.sponsor_duration_days == 7
        assert cfg.fu_unfollow_delay_days == 2
        assert cfg.aggressive_start_week == 9
        assert cfg.aggressive_from_day() == 56

    def test_validation(self):
        with pytest.raises(ValueError):
            plan_config(Plan.PLAN1, follow_back_p=1.5)

    def test_capability_matrix(self):
        assert not plan_config(Plan.PLAN0).spams
        assert plan_config(Plan.PLAN1).spams and plan_config(Plan.PLAN1).does_fu
        p2 = plan_config(Plan.PLAN2)
        assert p2.spams and p2.buys_followers and p2.sponsors and not p2.does_fu


class TestSpamComment:
    def test_fixture_contains_reference_praise(self):
        pool = load_spam_comment_pool()
        assert "So pretty!" in pool
        assert all("follow my page" not in c.lower() for c in pool)

    def test_singleton(self):
        assert spam_comment_text(["Nice!"], rng_for("s")) == "Nice!"

    def test_empty_pool(self):
        with pytest.raises(EmptyPool):
            spam_comment_text([], rng_for("s"))


class TestFollowBackDecision:
    def test_degenerate_probabilities(self):
        rng = rng_for("fb")
        assert not any(follow_back_decision(rng, 0.0) for _ in range(100))
        assert all(follow_back_decision(rng, 1.0) for _ in range(100))

    def test_half_rate(self):
        rng = rng_for("fb2")
        hits = sum(follow_back_decision(rng, 0.5) for _ in range(10_000))
        assert 4800 <= hits <= 5200


class TestFuStep:
    def test_balance_blocks_at_boundary(self):
        h = make_honeypot(Plan.PLAN1, followers=10, followings=9)
        follows, unfollows = fu_step(h, ["x1", "x2"], rng_for("fu"), SimTime(56))
        assert follows == [] and unfollows == []

    def test_balance_slack_allows_follows(self):
        h = make_honeypot(Plan.PLAN1, followers=10, followings=4)
        follows, _ = fu_step(h, ["x1", "x2", "x3"], rng_for("fu"), SimTime(56))
        assert follows == ["x1", "x2", "x3"]

    def test_due_unfollows_emitted(self):
        h = make_honeypot(Plan.PLAN1, followers=10)
        h.followings["y1"] = FollowingEntry("y1", SimTime(54), unfollow_at=SimTime(56, 520))
        h.followings["y2"] = FollowingEntry("y2", SimTime(55), unfollow_at=SimTime(57, 520))
        _, unfollows = fu_step(h, [], rng_for("fu"), SimTime(56, 520))
        assert unfollows == ["y1"]

    def test_unfollow_frees_capacity(self):
        h = make_honeypot(Plan.PLAN1, followers=5, followings=4)
        for entry in list(h.followings.values())[:2]:
            h.followings[entry.agent_id] = entry._replace(unfollow_at=SimTime(56))
        follows, unfollows = fu_step(h, ["x1", "x2", "x3"], rng_for("fu"), SimTime(56))
        assert len(unfollows) == 2
        # capacity: followings drop to 2, follows allowed while count+1 < 5
        assert follows == ["x1", "x2"]

    def test_daily_limit(self):
        h = make_honeypot(Plan.PLAN1, followers=100)
        follows, _ = fu_step(h, [f"x{i}" for i in range(30)], rng_for("fu"), SimTime(56))
        assert len(follows) == 10

    def test_skips_existing_followings(self):
        h = make_honeypot(Plan.PLAN1, followers=10, followings=1)
        follows, _ = fu_step(h, ["f0", "x1"], rng_for("fu"), SimTime(56))
        assert follows == ["x1"]

    def test_disabled_when_one_follower(self):
        h = make_honeypot(Plan.PLAN1, followers=1)
        follows, _ = fu_step(h, ["x1"], rng_for("fu"), SimTime(56))
        assert follows == []


class TestBuyFollowers:
    def test_raw_up_analytic_unchanged(self):
        h = make_honeypot(Plan.PLAN2, followers=3)
        pool = [f"b{i}" for i in range(200)]
        buy_followers(h, 100, pool, at=SimTime(0))
        assert h.follower_count == 103
        assert h.analytic_follower_count == 3
        assert h.purchased_follower_count == 100

    def test_zero_is_identity(self):
        h = make_honeypot(Plan.PLAN2, followers=3)
        buy_followers(h, 0, ["b1"], at=SimTime(0))
        assert h.follower_count == 3

    def test_insufficient_pool(self):
        h = make_honeypot(Plan.PLAN2)
        with pytest.raises(InsufficientPool):
            buy_followers(h, 5, ["b1", "b2"], at=SimTime(0))


def make_post(pid, likes, day=1):
    return Post(id=pid, honeypot_id="h1", published_at=SimTime(day), caption="c", likes=likes)


class TestSponsorPost:
    def test_window_and_cost(self):
        p = sponsor_post(make_post("p1", 5), SimTime(56), Plan.PLAN2)
        assert p.sponsored_window.start == SimTime(56)
        assert p.sponsored_window.end == SimTime(63)
        assert p.sponsored_window.total_cost == pytest.approx(14.0)
        assert p.is_sponsored_at(SimTime(62, 1439))
        assert not p.is_sponsored_at(SimTime(63))

    def test_wrong_plan(self):
        with pytest.raises(WrongPlan):
            sponsor_post(make_post("p1", 5), SimTime(56), Plan.PLAN1)

    def test_double_sponsor(self):
        p = sponsor_post(make_post("p1", 5), SimTime(56), Plan.PLAN2)
        with pytest.raises(AlreadySponsored):
            sponsor_post(p, SimTime(57), Plan.PLAN2)

    def test_targets_by_likes_then_age(self):
        posts = [
            make_post("p1", 10, day=3),
            make_post("p2", 30, day=2),
            make_post("p3", 10, day=1),
        ]
        picked = pick_sponsor_targets(posts)
        assert [p.id for p in picked] == ["p2", "p3"]


class TestPlanDailyActions:
    def test_plan0_only_replies(self):
        h = make_honeypot(Plan.PLAN0)
        ctx = DayContext(comments_to_reply=("h1-p001",), new_follower_ids=("a9",))
        actions = plan_daily_actions(h, 3, FEED, rng_for("p0"), ctx)
        assert {a.kind for a in actions} == {ActionKind.REPLY_TO_COMMENT}

    def test_plan1_spams_whole_feed(self):
        h = make_honeypot(Plan.PLAN1)
        actions = plan_daily_actions(h, 3, FEED, rng_for("p1"))
        likes = [a for a in actions if a.kind is ActionKind.LIKE_TOP25]
        comments = [a for a in actions if a.kind is ActionKind.COMMENT_TOP25]
        assert len(likes) == 25 and len(comments) == 25
        assert len(actions) == 50
        assert {a.target for a in likes} == set(FEED)

    def test_plan2_buys_once_at_day0(self):
        h = make_honeypot(Plan.PLAN2)
        day0 = plan_daily_actions(h, 0, FEED, rng_for("p2"))
        buys = [a for a in day0 if a.kind is ActionKind.BUY_FOLLOWERS]
        assert len(buys) == 1
        assert buys[0].amount == 100
        day1 = plan_daily_actions(h, 1, FEED, rng_for("p2"))
        assert not [a for a in day1 if a.kind is ActionKind.BUY_FOLLOWERS]

    def test_plan1_fu_starts_week9(self):
        h = make_honeypot(Plan.PLAN1, followers=20)
        ctx = DayContext(fu_candidates=("x1", "x2"))
        before = plan_daily_actions(h, 55, FEED, rng_for("p3"), ctx)
        at56 = plan_daily_actions(h, 56, FEED, rng_for("p3"), ctx)
        assert not [a for a in before if a.kind is ActionKind.PROACTIVE_FOLLOW]
        assert [a.target for a in at56 if a.kind is ActionKind.PROACTIVE_FOLLOW] == ["x1", "x2"]

    def test_plan2_sponsors_two_most_liked(self):
        h = make_honeypot(Plan.PLAN2, followers=20)
        h.posts.extend([make_post("h1-p1", 4), make_post("h1-p2", 9), make_post("h1-p3", 7)])
        ctx = DayContext(fu_candidates=("x1",))
        actions = plan_daily_actions(h, 56, FEED, rng_for("p4"), ctx)
        sponsors = [a for a in actions if a.kind is ActionKind.SPONSOR_POST]
        assert [a.target for a in sponsors] == ["h1-p2", "h1-p3"]
        assert not [a for a in actions if a.kind is ActionKind.PROACTIVE_FOLLOW]
        after = plan_daily_actions(h, 57, FEED, rng_for("p4"), ctx)
        assert not [a for a in after if a.kind is ActionKind.SPONSOR_POST]

    def test_follow_back_rate(self):
        h = make_honeypot(Plan.PLAN1)
        new = tuple(f"n{i}" for i in range(2000))
        actions = plan_daily_actions(h, 2, [], rng_for("p5"), DayContext(new_follower_ids=new))
        fbs = [a for a in actions if a.kind is ActionKind.FOLLOW_BACK]
        assert 900 <= len(fbs) <= 1100

    def test_actions_carry_simtime(self):
        h = make_honeypot(Plan.PLAN1)
        actions = plan_daily_actions(h, 3, FEED, rng_for("p6"))
        assert all(a.at.day == 3 for a in actions)
