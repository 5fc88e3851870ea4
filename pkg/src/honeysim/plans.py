"""Engagement plan state machines.

Three plans of increasing aggressiveness drive a honeypot's outbound
behavior:

* Plan 0 stays passive: it only replies to comments received.
* Plan 1 adds daily spamming (a like and a praise comment on each entry
  of the topic's top-25 feed), follow-backs with probability 0.5, and
  from week 9 the Follow & Unfollow routine.
* Plan 2 keeps Plan 1's spamming and follow-backs but swaps the week-9
  aggression: it buys 100 passive followers at creation and sponsors its
  two most liked posts for a week starting at week 9.

Plans emit :class:`PlanAction` values once per simulated day; the engine
is responsible for materializing them into engagement events.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .core import (
    EmptyPool,
    FollowerEntry,
    Honeypot,
    HoneysimError,
    InsufficientPool,
    Post,
    SimTime,
    SponsoredWindow,
)

FIXTURES = Path(__file__).parent / "fixtures"


class AlreadySponsored(HoneysimError):
    """The post already carries a sponsored window."""


class WrongPlan(HoneysimError):
    """The action is not available under the honeypot's plan."""


class Plan(Enum):
    PLAN0 = "plan0"
    PLAN1 = "plan1"
    PLAN2 = "plan2"


@dataclass(frozen=True)
class EngagementPlanConfig:
    """Knobs of one plan instance; defaults match the field deployment."""

    plan: Plan
    follow_back_p: float = 0.5
    purchased_followers_n: int = 100
    sponsor_daily_budget: float = 2.0
    sponsor_duration_days: int = 7
    fu_unfollow_delay_days: int = 2
    fu_daily_follows: int = 10
    aggressive_start_week: int = 9

    def __post_init__(self) -> None:
        if not 0.0 <= self.follow_back_p <= 1.0:
            raise ValueError(f"follow_back_p must be in [0,1], got {self.follow_back_p}")
        if self.purchased_followers_n < 0 or self.sponsor_daily_budget < 0:
            raise ValueError("purchase size and budgets must be >= 0")

    @property
    def spams(self) -> bool:
        return self.plan in (Plan.PLAN1, Plan.PLAN2)

    @property
    def does_fu(self) -> bool:
        return self.plan is Plan.PLAN1

    @property
    def buys_followers(self) -> bool:
        return self.plan is Plan.PLAN2

    @property
    def sponsors(self) -> bool:
        return self.plan is Plan.PLAN2

    def aggressive_from_day(self) -> int:
        return (self.aggressive_start_week - 1) * 7


def plan_config(plan: Plan, **overrides) -> EngagementPlanConfig:
    return EngagementPlanConfig(plan=plan, **overrides)


class ActionKind(Enum):
    LIKE_TOP25 = "like_top25"
    COMMENT_TOP25 = "comment_top25"
    FOLLOW_BACK = "follow_back"
    PROACTIVE_FOLLOW = "proactive_follow"
    UNFOLLOW = "unfollow"
    BUY_FOLLOWERS = "buy_followers"
    SPONSOR_POST = "sponsor_post"
    REPLY_TO_COMMENT = "reply_to_comment"


class PlanAction(NamedTuple):
    kind: ActionKind
    target: str
    at: SimTime
    amount: int = 0


@dataclass(frozen=True)
class DayContext:
    """Per-day inputs the plan reacts to.

    ``new_follower_ids``: organic followers gained since the previous
    batch (follow-back candidates).  ``fu_candidates``: agent ids the
    Follow & Unfollow routine may follow.  ``comments_to_reply``: post
    ids with fresh inbound comments.
    """

    new_follower_ids: tuple[str, ...] = ()
    fu_candidates: tuple[str, ...] = ()
    comments_to_reply: tuple[str, ...] = ()


@lru_cache(maxsize=None)
def load_spam_comment_pool() -> tuple[str, ...]:
    path = FIXTURES / "spam_comments.txt"
    return tuple(
        line.strip() for line in path.read_text(encoding="utf-8").splitlines() if line.strip()
    )


def spam_comment_text(pool: Sequence[str], rng: np.random.Generator) -> str:
    """Uniform draw of a praise-style comment."""
    if not pool:
        raise EmptyPool("spam comment pool is empty")
    return pool[int(rng.integers(len(pool)))]


def follow_back_decision(rng: np.random.Generator, p: float = 0.5) -> bool:
    """True iff a uniform draw falls below p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0,1], got {p}")
    return bool(rng.random() < p)


def fu_step(
    h: Honeypot,
    candidates: Sequence[str],
    rng: np.random.Generator,
    now: SimTime,
    max_follows: Optional[int] = None,
) -> tuple[list[str], list[str]]:
    """One Follow & Unfollow round.

    Emits unfollows for every following whose scheduled unfollow time has
    arrived, then proactive follows from ``candidates`` while the strict
    balance |followings| < |non-purchased followers| survives each added
    follow.  Returns (follows, unfollows); the caller applies them.
    """
    config: EngagementPlanConfig = h.plan
    limit = config.fu_daily_follows if max_follows is None else max_follows

    unfollows = [
        entry.agent_id
        for entry in h.followings.values()
        if entry.unfollow_at is not None and entry.unfollow_at <= now
    ]
    following_count = len(h.followings) - len(unfollows)
    cap = h.analytic_follower_count

    follows: list[str] = []
    for candidate in candidates:
        if len(follows) >= limit:
            break
        if candidate in h.followings or candidate in follows:
            continue
        if following_count + 1 >= cap:
            break
        follows.append(candidate)
        following_count += 1
    return follows, unfollows


def buy_followers(
    h: Honeypot,
    n: int,
    population_pool: Sequence[str],
    at: SimTime = SimTime(0, 0),
) -> Honeypot:
    """Attach n purchased (passive) followers from the pool.

    Purchased entries are flagged so analytics can discard them; the
    analytic follower count is unchanged by construction.

    Raises :class:`InsufficientPool` when the pool is smaller than n.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    available = [aid for aid in population_pool if aid not in h.followers]
    if len(available) < n:
        raise InsufficientPool(f"need {n} purchasable accounts, pool has {len(available)}")
    for aid in available[:n]:
        h.followers[aid] = FollowerEntry(agent_id=aid, since=at, purchased=True)
    return h


def sponsor_post(
    post: Post,
    start: SimTime,
    plan: Plan,
    duration_days: int = 7,
    daily_budget: float = 2.0,
) -> Post:
    """Open a sponsored window on a post (Plan 2 only).

    The window spans [start, start + duration) at the configured daily
    budget; with the defaults the total spend is 14 units.
    """
    if plan is not Plan.PLAN2:
        raise WrongPlan(f"sponsoring requires plan2, honeypot runs {plan.value}")
    if post.sponsored_window is not None:
        raise AlreadySponsored(f"post {post.id} already sponsored")
    post.sponsored_window = SponsoredWindow(
        start=start, end=start.plus_days(duration_days), daily_budget=daily_budget
    )
    return post


def pick_sponsor_targets(posts: Sequence[Post], count: int = 2) -> list[Post]:
    """The posts to sponsor: highest likes, ties to the earlier post."""
    ranked = sorted(posts, key=lambda p: (-p.likes, p.published_at, p.id))
    return list(ranked[:count])


# fixed minutes-of-day for each activity block, so action ordering within
# a day is stable and readable in event logs
_MINUTE_BUY = 0
_MINUTE_SPONSOR = 10
_MINUTE_REPLY = 480
_MINUTE_FOLLOW_BACK = 500
_MINUTE_FU = 520
_MINUTE_SPAM = 600


def plan_daily_actions(
    h: Honeypot,
    day: int,
    feed: Sequence,
    rng: np.random.Generator,
    ctx: Optional[DayContext] = None,
) -> list[PlanAction]:
    """All actions the honeypot's plan takes on one day.

    ``feed`` is the topic's top-25 ranking (anything with an ``id``
    attribute or string entries).  Week 9 behavior: Plan 1 starts
    Follow & Unfollow; Plan 2 sponsors its two most liked posts on the
    first aggressive day.
    """
    config: EngagementPlanConfig = h.plan
    ctx = ctx or DayContext()
    actions: list[PlanAction] = []

    if config.buys_followers and day == 0:
        actions.append(
            PlanAction(
                ActionKind.BUY_FOLLOWERS,
                h.id,
                SimTime(day, _MINUTE_BUY),
                amount=config.purchased_followers_n,
            )
        )

    if config.sponsors and day == config.aggressive_from_day():
        for post in pick_sponsor_targets(h.posts):
            actions.append(
                PlanAction(ActionKind.SPONSOR_POST, post.id, SimTime(day, _MINUTE_SPONSOR))
            )

    for post_id in ctx.comments_to_reply:
        actions.append(PlanAction(ActionKind.REPLY_TO_COMMENT, post_id, SimTime(day, _MINUTE_REPLY)))

    if config.spams:
        for agent_id in ctx.new_follower_ids:
            if follow_back_decision(rng, config.follow_back_p):
                actions.append(
                    PlanAction(ActionKind.FOLLOW_BACK, agent_id, SimTime(day, _MINUTE_FOLLOW_BACK))
                )

        if config.does_fu and day >= config.aggressive_from_day():
            now = SimTime(day, _MINUTE_FU)
            follows, unfollows = fu_step(h, ctx.fu_candidates, rng, now)
            for agent_id in unfollows:
                actions.append(PlanAction(ActionKind.UNFOLLOW, agent_id, now))
            for agent_id in follows:
                actions.append(PlanAction(ActionKind.PROACTIVE_FOLLOW, agent_id, now))

        minute = _MINUTE_SPAM
        for entry in feed:
            target = getattr(entry, "id", entry)
            actions.append(PlanAction(ActionKind.LIKE_TOP25, target, SimTime(day, minute)))
            actions.append(PlanAction(ActionKind.COMMENT_TOP25, target, SimTime(day, minute + 1)))
            minute += 2

    return actions
