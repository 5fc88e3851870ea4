"""Discrete-event simulation engine.

One run simulates every configured honeypot over the horizon: two posts
per day on a seeded schedule, plan actions applied each morning under the
strict follow balance guard, agent reactions through four exposure
channels (followers, hashtag-feed discovery, spam-bot triggers, profile
visits redirected by spam comments), and sponsored delivery with
demographic sampling.  The full event log and daily snapshots come back
in a RunRecord whose CSV exports are byte-stable for a given
(config, seed).
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from .behavior import (
    BehaviorProfile,
    SponsorAudienceModel,
    deliver_sponsorship,
    load_profile,
    load_spam_patterns,
    reaction_probabilities,
    spambot_react,
)
from .config import ExperimentConfig, HoneypotSpec, strategy_for
from .content import ExhaustedFeed, Strategy, StubEnvironment, generate_approved_post
from .core import (
    Agent,
    AgentCategory,
    Comment,
    EngagementEvent,
    EventKind,
    FollowerEntry,
    FollowingEntry,
    Gender,
    Honeypot,
    MetricsSnapshot,
    Post,
    RandomSource,
    SimTime,
    Topic,
    iter_days,
    seeded_rng,
    sorted_events,
)
from .plans import (
    ActionKind,
    DayContext,
    EngagementPlanConfig,
    buy_followers,
    load_spam_comment_pool,
    plan_config,
    plan_daily_actions,
    spam_comment_text,
    sponsor_post,
)
from .population import Population, TopicStructure, topic_structure

__all__ = [
    "MIN_POST_GAP_MINUTES",
    "FEED_SIZE",
    "WildPost",
    "schedule_posts",
    "rank_top25",
    "RunRecord",
    "run",
    "replicate_seed",
    "replicate_seeds",
]

MIN_POST_GAP_MINUTES = 480
# latest feasible first-post minute: 1440 - 480 - 1
_LAST_FIRST_MINUTE = 1440 - MIN_POST_GAP_MINUTES - 1
_DETERMINISTIC_TIMES = (540, 1020)

FEED_SIZE = 25
_WILD_CANDIDATES = 40
_FEED_BUILD_MINUTE = 600

# shape parameter of the Beta draw for sponsored viewers' topic affinity;
# the mean comes from the topic structure's ad_affinity
_AD_AFFINITY_SHAPE = 1.2
# share of minted sponsored-audience reactors registered as pages
_AD_PAGE_SHARE = 0.15

_CONTENT_RETRIES = 5


def schedule_posts(
    day: int, rng: np.random.Generator, deterministic: bool = False
) -> tuple[SimTime, SimTime]:
    """Two same-day publication times at least eight hours apart.

    The first time is uniform over its feasible minutes [0, 959]; the
    second is uniform over the minutes that keep the gap.  Deterministic
    mode pins 09:00 and 17:00 (the boundary gap of exactly 8 h).
    """
    if deterministic:
        return SimTime(day, _DETERMINISTIC_TIMES[0]), SimTime(day, _DETERMINISTIC_TIMES[1])
    t1 = int(rng.integers(0, _LAST_FIRST_MINUTE + 1))
    t2 = int(rng.integers(t1 + MIN_POST_GAP_MINUTES, 1440))
    return SimTime(day, t1), SimTime(day, t2)


def rank_top25(posts: Sequence, now: SimTime, limit: int = FEED_SIZE) -> list:
    """Feed ranking: (likes + 2*comments) * exp(-age_days/3), ties by id.

    Accepts anything with ``likes``, ``comment_count``, ``published_at``
    and ``id`` attributes; fewer than ``limit`` candidates are all
    returned, still sorted.
    """

    def score(post) -> float:
        age_days = (now.total_minutes() - post.published_at.total_minutes()) / 1440.0
        return (post.likes + 2 * post.comment_count) * math.exp(-max(age_days, 0.0) / 3.0)

    ranked = sorted(posts, key=lambda p: (-score(p), p.id))
    return ranked[:limit]


@dataclass(frozen=True)
class WildPost:
    """A non-honeypot post circulating in a topic's hashtag feed."""

    id: str
    author_index: int
    published_at: SimTime
    likes: int
    comment_count: int


def replicate_seed(base_seed: int, index: int) -> int:
    """Stable per-replicate sub-seed derived from the experiment seed."""
    material = f"{base_seed}|replicate|{index}".encode("utf-8")
    return int.from_bytes(hashlib.sha256(material).digest()[:8], "big")


def replicate_seeds(config: ExperimentConfig) -> list[int]:
    return [replicate_seed(config.seed, r) for r in range(config.replicates)]


# ---------------------------------------------------------------------------
# Run record
# ---------------------------------------------------------------------------


@dataclass
class RunRecord:
    """Everything one run produced: honeypots, event log, population."""

    seed: int
    config: ExperimentConfig
    profile: BehaviorProfile
    honeypots: tuple[Honeypot, ...]
    events: tuple[EngagementEvent, ...]
    population: Population

    def honeypot(self, honeypot_id: str) -> Honeypot:
        for h in self.honeypots:
            if h.id == honeypot_id:
                return h
        raise KeyError(honeypot_id)

    def spec(self, honeypot_id: str) -> HoneypotSpec:
        return self.config.spec(honeypot_id)

    def follower_series(self, honeypot_id: str) -> list[int]:
        """Daily analytic follower counts, one value per simulated day."""
        return [s.followers_analytic for s in self.honeypot(honeypot_id).snapshots]

    def per_post_likes(self, honeypot_id: str) -> list[int]:
        return [p.likes for p in self.honeypot(honeypot_id).posts]

    def per_post_comments(self, honeypot_id: str) -> list[int]:
        return [p.comment_count for p in self.honeypot(honeypot_id).posts]

    def events_csv(self) -> str:
        lines = ["seq,day,minute,kind,actor,target,honeypot"]
        for e in self.events:
            lines.append(
                f"{e.seq},{e.at.day},{e.at.minute},{e.kind.value},"
                f"{e.actor},{e.target},{e.honeypot}"
            )
        return "\n".join(lines) + "\n"

    def snapshots_csv(self) -> str:
        lines = ["honeypot,day,followers,cum_likes,cum_comments"]
        for h in self.honeypots:
            for s in h.snapshots:
                lines.append(
                    f"{h.id},{s.day},{s.followers_analytic},"
                    f"{s.cumulative_likes},{s.cumulative_comments}"
                )
        return "\n".join(lines) + "\n"

    def posts_csv(self) -> str:
        lines = ["honeypot,post_id,day,minute,strategy,appeal,likes,comments,sponsored_start"]
        for h in self.honeypots:
            for p in h.posts:
                start = "" if p.sponsored_window is None else str(p.sponsored_window.start.day)
                lines.append(
                    f"{h.id},{p.id},{p.published_at.day},{p.published_at.minute},"
                    f"{p.strategy},{p.appeal:.6f},{p.likes},{p.comment_count},{start}"
                )
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        """Hash of the exported artifacts; equal runs hash equal."""
        payload = (self.events_csv() + self.snapshots_csv() + self.posts_csv()).encode("utf-8")
        return hashlib.sha256(payload).hexdigest()

    def write_csvs(self, out_dir: Union[str, Path]) -> dict[str, Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        paths = {
            "events": out / "events.csv",
            "snapshots": out / "snapshots.csv",
            "posts": out / "posts.csv",
        }
        paths["events"].write_text(self.events_csv(), encoding="utf-8")
        paths["snapshots"].write_text(self.snapshots_csv(), encoding="utf-8")
        paths["posts"].write_text(self.posts_csv(), encoding="utf-8")
        return paths


# ---------------------------------------------------------------------------
# Engine internals
# ---------------------------------------------------------------------------


@dataclass
class _HoneypotState:
    """Mutable per-honeypot engine bookkeeping."""

    h: Honeypot
    spec: HoneypotSpec
    topic: Topic
    struct: TopicStructure
    trigger_tags: frozenset[str]
    post_counter: int = 0
    engaging_ids: list[str] = field(default_factory=list)
    engaging_aff: list[float] = field(default_factory=list)
    follower_ids: set[str] = field(default_factory=set)
    pending_follow_backs: list[str] = field(default_factory=list)
    commented_posts: list[str] = field(default_factory=list)
    commented_seen: set[str] = field(default_factory=set)
    likers: dict[str, set[str]] = field(default_factory=dict)
    cum_likes: int = 0
    cum_comments: int = 0
    ad_counter: int = 0

    @property
    def plan_cfg(self) -> EngagementPlanConfig:
        return self.h.plan

    def distrust_damp(self, kappa: float) -> float:
        """Follow-through damp from visible purchased-follower share."""
        purchased = self.h.purchased_follower_count
        if purchased == 0:
            return 1.0
        share = purchased / len(self.h.followers)
        return 1.0 / (1.0 + kappa * share)


class _Engine:
    def __init__(
        self,
        config: ExperimentConfig,
        seed: int,
        profile: Optional[BehaviorProfile],
        sponsor_model: Optional[SponsorAudienceModel],
        deterministic_schedule: bool,
    ):
        self.config = config
        self.seed = seed
        self.profile = profile if profile is not None else load_profile(config.profile)
        self.sponsor_model = (
            sponsor_model if sponsor_model is not None else SponsorAudienceModel.paper_default()
        )
        self.deterministic_schedule = deterministic_schedule
        self.source: RandomSource = seeded_rng(seed)
        self.topic_names = tuple(t.name for t in config.topics)
        self.population = Population.build(
            config.population_size, self.topic_names, self.source
        )
        self.env = StubEnvironment(
            appeal_params={s: self.profile.appeal_params(s.ai_based) for s in Strategy}
        )
        self.spam_patterns = load_spam_patterns()
        self.praise_pool = load_spam_comment_pool()
        self.purchase_pool = self.population.purchasable_ids()
        self.events: list[EngagementEvent] = []
        self.states: list[_HoneypotState] = []
        for spec in config.honeypots:
            topic = config.topic(spec.topic)
            h = Honeypot(
                id=spec.id,
                topic=topic,
                strategies=spec.strategies,
                plan=plan_config(spec.plan),
            )
            self.states.append(
                _HoneypotState(
                    h=h,
                    spec=spec,
                    topic=topic,
                    struct=topic_structure(spec.topic),
                    trigger_tags=frozenset(tag for tag, _ in topic.hashtag_pool),
                )
            )

    # -- event plumbing ----------------------------------------------------

    def emit(self, at: SimTime, kind: EventKind, actor: str, target: str, hid: str) -> None:
        self.events.append(EngagementEvent(at, len(self.events), kind, actor, target, hid))

    # -- wild feeds ----------------------------------------------------------

    def wild_feed(self, topic_name: str, day: int) -> list[WildPost]:
        """The day's top-25 hashtag feed for one topic."""
        rng = self.source.split("wild", topic_name, str(day)).generator()
        struct = topic_structure(topic_name)
        authors = self.population.sample_authors(topic_name, _WILD_CANDIDATES, rng)
        minutes = rng.integers(0, _FEED_BUILD_MINUTE, _WILD_CANDIDATES)
        likes = rng.poisson(struct.wild_like_mean, _WILD_CANDIDATES)
        comments = rng.poisson(max(1.0, struct.wild_like_mean / 15.0), _WILD_CANDIDATES)
        candidates = [
            WildPost(
                id=f"w-{topic_name}-d{day:02d}-{i:02d}",
                author_index=int(authors[i]),
                published_at=SimTime(day, int(minutes[i])),
                likes=int(likes[i]),
                comment_count=int(comments[i]),
            )
            for i in range(_WILD_CANDIDATES)
        ]
        return rank_top25(candidates, SimTime(day, _FEED_BUILD_MINUTE))

    # -- follower bookkeeping ------------------------------------------------

    def add_follower(
        self,
        st: _HoneypotState,
        agent_id: str,
        at: SimTime,
        affinity: float,
        engaging: bool = True,
    ) -> None:
        st.h.followers[agent_id] = FollowerEntry(agent_id, at, purchased=False)
        st.follower_ids.add(agent_id)
        st.pending_follow_backs.append(agent_id)
        if engaging and affinity > 0.0:
            st.engaging_ids.append(agent_id)
            st.engaging_aff.append(float(affinity))

    @staticmethod
    def balance_allows(h: Honeypot) -> bool:
        """Strict follow balance: one more following stays below the cap."""
        return len(h.followings) + 1 < max(1, h.analytic_follower_count)

    def note_comment(self, st: _HoneypotState, post: Post, comment: Comment) -> None:
        post.comments.append(comment)
        st.cum_comments += 1
        if post.id not in st.commented_seen:
            st.commented_seen.add(post.id)
            st.commented_posts.append(post.id)

    def note_like(self, st: _HoneypotState, post: Post, actor_id: str) -> bool:
        seen = st.likers.setdefault(post.id, set())
        if actor_id in seen:
            return False
        seen.add(actor_id)
        post.likes += 1
        st.cum_likes += 1
        return True

    # -- plan phase ----------------------------------------------------------

    def plan_phase(
        self, st: _HoneypotState, day: int, feed: list[WildPost], rng: np.random.Generator
    ) -> None:
        h = st.h
        cfg = st.plan_cfg
        fu_candidates: tuple[str, ...] = ()
        if cfg.does_fu and day >= cfg.aggressive_from_day():
            raw = np.unique(
                self.population.sample_interested(st.spec.topic, 15, rng)
            )
            fu_candidates = tuple(
                aid
                for aid in (self.population.id_of(int(i)) for i in raw)
                if aid not in st.follower_ids and aid not in h.followings
            )
        ctx = DayContext(
            new_follower_ids=tuple(st.pending_follow_backs),
            fu_candidates=fu_candidates,
            comments_to_reply=tuple(st.commented_posts),
        )
        st.pending_follow_backs = []
        st.commented_posts = []
        st.commented_seen = set()

        for action in plan_daily_actions(h, day, feed, rng, ctx):
            if action.kind is ActionKind.BUY_FOLLOWERS:
                self.apply_purchase(st, action.amount, action.at, rng)
            elif action.kind is ActionKind.SPONSOR_POST:
                post = next(p for p in h.posts if p.id == action.target)
                sponsor_post(
                    post,
                    action.at,
                    cfg.plan,
                    duration_days=cfg.sponsor_duration_days,
                    daily_budget=cfg.sponsor_daily_budget,
                )
            elif action.kind is ActionKind.REPLY_TO_COMMENT:
                # owner replies stay on the thread; they are not inbound
                # engagement and earn no event row
                continue
            elif action.kind is ActionKind.FOLLOW_BACK:
                aid = action.target
                if aid in h.followings or not self.balance_allows(h):
                    continue
                h.followings[aid] = FollowingEntry(aid, action.at, None)
                self.emit(action.at, EventKind.FOLLOW_BACK, h.id, aid, h.id)
            elif action.kind is ActionKind.UNFOLLOW:
                if action.target in h.followings:
                    del h.followings[action.target]
                    self.emit(action.at, EventKind.UNFOLLOW, h.id, action.target, h.id)
            elif action.kind is ActionKind.PROACTIVE_FOLLOW:
                self.apply_proactive_follow(st, action.target, action.at, rng)
            elif action.kind is ActionKind.LIKE_TOP25:
                self.emit(action.at, EventKind.LIKE, h.id, action.target, h.id)
            elif action.kind is ActionKind.COMMENT_TOP25:
                spam_comment_text(self.praise_pool, rng)
                self.emit(action.at, EventKind.COMMENT, h.id, action.target, h.id)

    def apply_purchase(
        self, st: _HoneypotState, amount: int, at: SimTime, rng: np.random.Generator
    ) -> None:
        perm = rng.permutation(len(self.purchase_pool))
        pool = [self.purchase_pool[int(i)] for i in perm]
        before = set(st.h.followers)
        buy_followers(st.h, amount, pool, at)
        for aid in st.h.followers:
            if aid not in before:
                st.follower_ids.add(aid)
                self.emit(at, EventKind.PURCHASED_FOLLOW, st.h.id, aid, st.h.id)

    def apply_proactive_follow(
        self, st: _HoneypotState, aid: str, at: SimTime, rng: np.random.Generator
    ) -> None:
        h = st.h
        if aid in h.followings or not self.balance_allows(h):
            return
        cfg = st.plan_cfg
        h.followings[aid] = FollowingEntry(
            aid, at, at.plus_days(cfg.fu_unfollow_delay_days)
        )
        self.emit(at, EventKind.FOLLOW, h.id, aid, h.id)
        if aid not in st.follower_ids and rng.random() < self.profile.follow_reciprocity:
            back_at = SimTime(at.day, min(1439, at.minute + 1 + int(rng.integers(0, 300))))
            index = self.population.index_of(aid)
            affinity = float(
                self.population.affinity_for(np.array([index]), st.spec.topic)[0]
            )
            self.add_follower(st, aid, back_at, affinity)
            self.emit(back_at, EventKind.FOLLOW, aid, h.id, h.id)

    # -- publication and reaction channels ------------------------------------

    def publish(self, st: _HoneypotState, at: SimTime, rng: np.random.Generator) -> Post:
        name = st.spec.strategies[st.post_counter % len(st.spec.strategies)]
        strategy = strategy_for(name)
        draft = None
        for attempt in range(_CONTENT_RETRIES):
            try:
                draft = generate_approved_post(strategy, st.topic, self.env, rng)
                break
            except ExhaustedFeed:
                if attempt == _CONTENT_RETRIES - 1:
                    raise
        caption = draft.content.caption
        post = Post(
            id=f"{st.h.id}-p{st.post_counter:03d}",
            honeypot_id=st.h.id,
            published_at=at,
            caption=caption.text,
            hashtags=caption.hashtags,
            cta=caption.cta,
            strategy=name,
            appeal=draft.content.appeal,
        )
        st.post_counter += 1
        st.h.posts.append(post)
        st.likers[post.id] = set()
        return post

    def reaction_minute(self, post: Post, rng: np.random.Generator) -> SimTime:
        minute = post.published_at.minute + 1 + int(rng.integers(0, 400))
        return SimTime(post.published_at.day, min(1439, minute))

    def bot_channel(self, st: _HoneypotState, post: Post, rng: np.random.Generator) -> None:
        k = int(rng.poisson(st.struct.bot_pressure))
        if k == 0:
            return
        sampled = self.population.sample_trigger_bots(st.spec.topic, k, rng)
        base_minute = post.published_at.minute
        for raw in sampled:
            bot = self.population.to_agent(int(raw))
            result = spambot_react(
                bot,
                post,
                rng,
                st.trigger_tags,
                self.profile.spambot_trigger_p,
                self.spam_patterns,
            )
            if result is not None:
                text, latency = result
                at = SimTime(post.published_at.day, min(1439, base_minute + latency // 60))
                self.note_comment(
                    st, post, Comment(author=bot.id, text=text, at=at, latency_seconds=float(latency))
                )
                self.emit(at, EventKind.COMMENT, bot.id, post.id, st.h.id)
            if rng.random() < self.profile.bot_follow_p and bot.id not in st.follower_ids:
                at = SimTime(post.published_at.day, min(1439, base_minute + 1 + int(rng.integers(0, 60))))
                self.add_follower(st, bot.id, at, 0.0, engaging=False)
                self.emit(at, EventKind.FOLLOW, bot.id, st.h.id, st.h.id)

    def follower_channel(self, st: _HoneypotState, post: Post, rng: np.random.Generator) -> None:
        n = len(st.engaging_ids)
        if n == 0:
            return
        aff = np.asarray(st.engaging_aff)
        p_like, p_comment, _ = reaction_probabilities(
            self.profile, aff, post.appeal, post.cta is not None, False
        )
        draws = rng.random((n, 2))
        for j in np.nonzero(draws[:, 0] < p_like)[0]:
            actor = st.engaging_ids[int(j)]
            if self.note_like(st, post, actor):
                self.emit(self.reaction_minute(post, rng), EventKind.LIKE, actor, post.id, st.h.id)
        for j in np.nonzero(draws[:, 1] < p_comment)[0]:
            actor = st.engaging_ids[int(j)]
            at = self.reaction_minute(post, rng)
            latency = (at.total_minutes() - post.published_at.total_minutes()) * 60.0
            text = spam_comment_text(self.praise_pool, rng)
            self.note_comment(st, post, Comment(author=actor, text=text, at=at, latency_seconds=latency))
            self.emit(at, EventKind.COMMENT, actor, post.id, st.h.id)

    def discovery_channel(self, st: _HoneypotState, post: Post, rng: np.random.Generator) -> None:
        pool_size = len(self.population.topic_pool(st.spec.topic))
        lam = self.profile.discovery_rate * pool_size / 2.0
        k = int(rng.poisson(lam))
        if k == 0:
            return
        indices = np.unique(self.population.sample_interested(st.spec.topic, k, rng))
        aff = self.population.affinity_for(indices, st.spec.topic)
        p_like, p_comment, p_follow = reaction_probabilities(
            self.profile, aff, post.appeal, post.cta is not None, False
        )
        p_follow = np.clip(
            p_follow * st.struct.follow_scale * st.distrust_damp(self.profile.purchase_distrust),
            0.0,
            1.0,
        )
        draws = rng.random((len(indices), 3))
        for j in range(len(indices)):
            actor = self.population.id_of(int(indices[j]))
            if draws[j, 0] < p_like[j] and self.note_like(st, post, actor):
                self.emit(self.reaction_minute(post, rng), EventKind.LIKE, actor, post.id, st.h.id)
            if draws[j, 1] < p_comment[j]:
                at = self.reaction_minute(post, rng)
                latency = (at.total_minutes() - post.published_at.total_minutes()) * 60.0
                text = spam_comment_text(self.praise_pool, rng)
                self.note_comment(
                    st, post, Comment(author=actor, text=text, at=at, latency_seconds=latency)
                )
                self.emit(at, EventKind.COMMENT, actor, post.id, st.h.id)
            if draws[j, 2] < p_follow[j] and actor not in st.follower_ids:
                at = self.reaction_minute(post, rng)
                self.add_follower(st, actor, at, float(aff[j]))
                self.emit(at, EventKind.FOLLOW, actor, st.h.id, st.h.id)

    # -- spam redirects --------------------------------------------------------

    def redirect_channel(self, st: _HoneypotState, day: int, rng: np.random.Generator) -> None:
        cfg = st.plan_cfg
        if not cfg.spams or not st.h.posts:
            return
        lam = self.profile.spam_redirect_rate * FEED_SIZE
        k = int(rng.poisson(lam))
        if k == 0:
            return
        indices = np.unique(self.population.sample_interested(st.spec.topic, k, rng))
        aff = self.population.affinity_for(indices, st.spec.topic)
        damp = st.distrust_damp(self.profile.purchase_distrust)
        for j in range(len(indices)):
            actor = self.population.id_of(int(indices[j]))
            minute = 601 + int(rng.integers(0, 200))
            visible = [
                p
                for p in st.h.posts
                if p.published_at.total_minutes() <= day * 1440 + minute
            ][-2:]
            if not visible:
                continue
            followed = False
            for post in visible:
                p_like, p_comment, p_follow = reaction_probabilities(
                    self.profile, float(aff[j]), post.appeal, post.cta is not None, False
                )
                at = SimTime(day, min(1439, minute + int(rng.integers(0, 30))))
                if rng.random() < p_like and self.note_like(st, post, actor):
                    self.emit(at, EventKind.LIKE, actor, post.id, st.h.id)
                if rng.random() < p_comment:
                    latency = (at.total_minutes() - post.published_at.total_minutes()) * 60.0
                    text = spam_comment_text(self.praise_pool, rng)
                    self.note_comment(
                        st, post, Comment(author=actor, text=text, at=at, latency_seconds=latency)
                    )
                    self.emit(at, EventKind.COMMENT, actor, post.id, st.h.id)
                p_eff = min(1.0, self.profile.visit_follow_p * float(aff[j]) * st.struct.follow_scale * damp)
                if not followed and actor not in st.follower_ids and rng.random() < p_eff:
                    followed = True
                    self.add_follower(st, actor, at, float(aff[j]))
                    self.emit(at, EventKind.FOLLOW, actor, st.h.id, st.h.id)

    # -- sponsorship -------------------------------------------------------------

    def sponsor_channel(self, st: _HoneypotState, day: int, rng: np.random.Generator) -> None:
        probe = SimTime(day, 0)
        active = [p for p in st.h.posts if p.is_sponsored_at(probe)]
        if not active:
            return
        damp = st.distrust_damp(self.profile.purchase_distrust)
        mean_aff = min(0.95, max(1e-6, st.struct.ad_affinity))
        beta_b = _AD_AFFINITY_SHAPE * (1.0 - mean_aff) / mean_aff
        for post in active:
            reach, (genders, ages, regions) = deliver_sponsorship(
                post, self.sponsor_model, rng, probe, st.spec.topic
            )
            if reach <= 0:
                continue
            minutes = rng.integers(0, 1440, reach)
            aff = rng.beta(_AD_AFFINITY_SHAPE, beta_b, reach)
            p_like, p_comment, p_follow = reaction_probabilities(
                self.profile, aff, post.appeal, post.cta is not None, True
            )
            p_follow = np.clip(p_follow * st.struct.follow_scale * damp, 0.0, 1.0)
            draws = rng.random((reach, 3))
            for i in range(reach):
                actor = f"ad-{st.h.id}-{st.ad_counter + i}"
                at = SimTime(day, int(minutes[i]))
                self.emit(at, EventKind.SPONSORED_IMPRESSION, actor, post.id, st.h.id)
                liked = draws[i, 0] < p_like[i]
                commented = draws[i, 1] < p_comment[i]
                followed = draws[i, 2] < p_follow[i]
                if not (liked or commented or followed):
                    continue
                self.mint_ad_agent(actor, str(genders[i]), str(ages[i]), str(regions[i]), rng)
                if liked and self.note_like(st, post, actor):
                    self.emit(at, EventKind.LIKE, actor, post.id, st.h.id)
                if commented:
                    latency = (at.total_minutes() - post.published_at.total_minutes()) * 60.0
                    text = spam_comment_text(self.praise_pool, rng)
                    self.note_comment(
                        st, post, Comment(author=actor, text=text, at=at, latency_seconds=latency)
                    )
                    self.emit(at, EventKind.COMMENT, actor, post.id, st.h.id)
                if followed:
                    self.add_follower(st, actor, at, float(aff[i]))
                    self.emit(at, EventKind.FOLLOW, actor, st.h.id, st.h.id)
            st.ad_counter += reach

    def mint_ad_agent(
        self, actor: str, gender: str, age: str, region: str, rng: np.random.Generator
    ) -> None:
        is_page = rng.random() < _AD_PAGE_SHARE
        if is_page:
            followers = int(rng.integers(1200, 20000))
            category = AgentCategory.PAGE
        else:
            followers = int(rng.integers(30, 900))
            category = AgentCategory.REAL_PERSON
        agent = Agent(
            id=actor,
            category=category,
            gender=Gender(gender),
            age_bucket=age,
            region=region,
            followers=followers,
            followings=int(rng.integers(100, 900)),
            posts=int(rng.integers(5, 300)),
            has_profile_picture=True,
            username_entropy=float(rng.uniform(0.30, 0.75)),
        )
        self.population.register_extra(agent, topic_specific=is_page)

    # -- top level ----------------------------------------------------------------

    def honeypot_day(self, st: _HoneypotState, day: int, feed: list[WildPost]) -> None:
        rng = self.source.split("h", st.h.id, str(day)).generator()
        self.plan_phase(st, day, feed, rng)
        t1, t2 = schedule_posts(day, rng, self.deterministic_schedule)
        for at in (t1, t2):
            post = self.publish(st, at, rng)
            self.bot_channel(st, post, rng)
            self.follower_channel(st, post, rng)
            self.discovery_channel(st, post, rng)
        self.redirect_channel(st, day, rng)
        self.sponsor_channel(st, day, rng)
        st.h.snapshots.append(
            MetricsSnapshot(
                day=day,
                followers_analytic=st.h.analytic_follower_count,
                followings=len(st.h.followings),
                cumulative_likes=st.cum_likes,
                cumulative_comments=st.cum_comments,
                posts_published=len(st.h.posts),
            )
        )

    def execute(self) -> RunRecord:
        for day in iter_days(self.config.horizon_days):
            feeds = {name: self.wild_feed(name, day) for name in self.topic_names}
            for st in self.states:
                self.honeypot_day(st, day, feeds[st.spec.topic])
        for st in self.states:
            final = st.h.snapshots[-1]
            final.per_post = tuple((p.id, p.likes, p.comment_count) for p in st.h.posts)
        ordered = sorted_events(self.events)
        events = tuple(e._replace(seq=i) for i, e in enumerate(ordered))
        return RunRecord(
            seed=self.seed,
            config=self.config,
            profile=self.profile,
            honeypots=tuple(st.h for st in self.states),
            events=events,
            population=self.population,
        )


def run(
    config: ExperimentConfig,
    seed: int,
    profile: Optional[BehaviorProfile] = None,
    sponsor_model: Optional[SponsorAudienceModel] = None,
    deterministic_schedule: bool = False,
) -> RunRecord:
    """Simulate every honeypot over the configured horizon.

    The result depends only on (config, seed) and the optional overrides;
    repeated calls produce identical RunRecords.
    """
    engine = _Engine(config, seed, profile, sponsor_model, deterministic_schedule)
    return engine.execute()
