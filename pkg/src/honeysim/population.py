"""Synthetic agent population behind the simulated network.

The population is a flat table of agents (60% real people, 25% pages,
15% bots by default) with demographics, profile counters and a primary
topic interest.  Per-topic structure lives in :class:`TopicStructure`:
pool sizes, page density, spam-bot pressure and follow propensity differ
across topics, which is what makes the three deployed topics behave
differently downstream.  Structural constants are modeling choices tuned
against the field deployment's per-topic outcome ratios; the global
behavioral knobs stay in the behavior profile.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .core import (
    AGE_BUCKETS,
    Agent,
    AgentCategory,
    Gender,
    RandomSource,
    ValidationError,
)

DEFAULT_CATEGORY_MIX = (0.60, 0.25, 0.15)

# organic population demographics (self-declared, bots included); region
# names are countries for the organic audience, matching the insight
# reports honeypot owners see
GENDER_LEVELS = (Gender.WOMAN, Gender.MAN)
GENDER_P = (0.54, 0.46)

AGE_P = (0.05, 0.27, 0.31, 0.17, 0.10, 0.06, 0.04)

REGION_NAMES = (
    "India", "Bangladesh", "Japan", "United States", "Brazil", "Indonesia",
    "Italy", "United Kingdom", "Germany", "Nigeria", "Mexico", "Egypt",
    "Philippines", "Vietnam", "France", "Other",
)
REGION_P = (
    0.117, 0.107, 0.097, 0.085, 0.075, 0.065,
    0.060, 0.050, 0.045, 0.040, 0.040, 0.035,
    0.035, 0.030, 0.030, 0.089,
)


@dataclass(frozen=True)
class TopicStructure:
    """Structural constants of one topic's community."""

    interest_share: float
    page_fraction: float
    author_page_weight: float
    bot_pressure: float
    follow_scale: float
    ad_affinity: float
    wild_like_mean: float

    def __post_init__(self) -> None:
        if not 0 < self.interest_share <= 1:
            raise ValidationError("interest_share must be in (0,1]")
        for name in ("page_fraction", "author_page_weight"):
            if not 0 <= getattr(self, name) <= 1:
                raise ValidationError(f"{name} must be in [0,1]")
        if min(self.bot_pressure, self.follow_scale, self.ad_affinity) < 0:
            raise ValidationError("topic rates must be >= 0")


TOPIC_STRUCTURES: dict[str, TopicStructure] = {
    "food": TopicStructure(
        interest_share=0.32, page_fraction=0.22, author_page_weight=0.55,
        bot_pressure=4.6, follow_scale=0.92, ad_affinity=0.022, wild_like_mean=60.0,
    ),
    "cat": TopicStructure(
        interest_share=0.38, page_fraction=0.43, author_page_weight=0.85,
        bot_pressure=3.8, follow_scale=1.14, ad_affinity=0.105, wild_like_mean=80.0,
    ),
    "car": TopicStructure(
        interest_share=0.30, page_fraction=0.20, author_page_weight=0.45,
        bot_pressure=8.1, follow_scale=0.30, ad_affinity=0.022, wild_like_mean=55.0,
    ),
}

DEFAULT_STRUCTURE = TopicStructure(
    interest_share=0.25, page_fraction=0.25, author_page_weight=0.55,
    bot_pressure=4.5, follow_scale=0.8, ad_affinity=0.05, wild_like_mean=60.0,
)

# fraction of bots held out of the trigger pools as purchasable
# (passive) accounts
PURCHASABLE_BOT_FRACTION = 0.30

OFF_TOPIC_AFFINITY = 0.15

_CAT_REAL, _CAT_PAGE, _CAT_BOT = 0, 1, 2
_CAT_TO_ENUM = {
    _CAT_REAL: AgentCategory.REAL_PERSON,
    _CAT_PAGE: AgentCategory.PAGE,
    _CAT_BOT: AgentCategory.BOT,
}


def topic_structure(name: str) -> TopicStructure:
    return TOPIC_STRUCTURES.get(name, DEFAULT_STRUCTURE)


@dataclass
class Population:
    """Column-oriented agent table plus minted extras.

    Organic agents are indexed 0..size-1 with ids ``u<index>``. Agents
    minted during a run (sponsored-ad converts) live in ``extras`` and
    share the same Agent interface through :meth:`agent`.
    """

    topics: tuple[str, ...]
    category: np.ndarray
    gender: np.ndarray
    age_idx: np.ndarray
    region_idx: np.ndarray
    followers: np.ndarray
    followings: np.ndarray
    posts_count: np.ndarray
    has_picture: np.ndarray
    entropy: np.ndarray
    topic_idx: np.ndarray
    affinity_level: np.ndarray
    topic_specific: np.ndarray
    purchasable: np.ndarray
    trigger_bots: dict[str, np.ndarray]
    organic_pools: dict[str, np.ndarray]
    extras: dict[str, Agent] = field(default_factory=dict)
    extras_topic_specific: dict[str, bool] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.category)

    # -- construction -------------------------------------------------

    @classmethod
    def build(
        cls,
        size: int,
        topics: Sequence[str],
        source: RandomSource,
        category_mix: tuple[float, float, float] = DEFAULT_CATEGORY_MIX,
    ) -> "Population":
        if size < 100:
            raise ValidationError(f"population size must be >= 100, got {size}")
        if not topics:
            raise ValidationError("at least one topic required")
        if abs(sum(category_mix) - 1.0) > 1e-9:
            raise ValidationError("category mix must sum to 1")
        rng = source.split("population").generator()
        topics = tuple(dict.fromkeys(topics))
        structures = [topic_structure(t) for t in topics]

        n_bots = int(round(size * category_mix[2]))
        n_organic = size - n_bots

        category = np.empty(size, dtype=np.int8)
        topic_idx = np.full(size, -1, dtype=np.int16)

        shares = np.array([s.interest_share for s in structures], dtype=float)
        shares = shares / shares.sum()
        organic_topics = rng.choice(len(topics), size=n_organic, p=shares)
        topic_idx[:n_organic] = organic_topics

        page_frac = np.array([s.page_fraction for s in structures])
        is_page = rng.random(n_organic) < page_frac[organic_topics]
        category[:n_organic] = np.where(is_page, _CAT_PAGE, _CAT_REAL)
        category[n_organic:] = _CAT_BOT

        gender = rng.choice(len(GENDER_LEVELS), size=size, p=np.array(GENDER_P))
        age_idx = rng.choice(len(AGE_BUCKETS), size=size, p=np.array(AGE_P))
        region_idx = rng.choice(len(REGION_NAMES), size=size, p=np.array(REGION_P))

        followers = np.zeros(size, dtype=np.int32)
        followings = np.zeros(size, dtype=np.int32)
        posts_count = np.zeros(size, dtype=np.int32)
        has_picture = np.ones(size, dtype=bool)
        entropy = np.zeros(size, dtype=float)
        topic_specific = np.zeros(size, dtype=bool)

        real_m = category == _CAT_REAL
        n_real = int(real_m.sum())
        followers[real_m] = rng.integers(30, 901, size=n_real)
        followings[real_m] = rng.integers(100, 901, size=n_real)
        posts_count[real_m] = rng.integers(5, 301, size=n_real)
        has_picture[real_m] = rng.random(n_real) < 0.97
        entropy[real_m] = rng.uniform(0.30, 0.75, size=n_real)

        page_m = category == _CAT_PAGE
        n_page = int(page_m.sum())
        big = rng.random(n_page) < 0.75
        page_followers = np.where(
            big,
            rng.integers(1200, 50001, size=n_page),
            rng.integers(200, 1000, size=n_page),
        )
        followers[page_m] = page_followers
        followings[page_m] = rng.integers(50, 1501, size=n_page)
        posts_count[page_m] = rng.integers(30, 2001, size=n_page)
        entropy[page_m] = rng.uniform(0.30, 0.75, size=n_page)
        # small pages must be topic-specific to read as pages at all;
        # most big ones are too
        page_specific = np.where(big, rng.random(n_page) < 0.80, True)
        topic_specific[page_m] = page_specific

        bot_m = category == _CAT_BOT
        followers[bot_m] = rng.integers(0, 41, size=n_bots)
        followings[bot_m] = np.where(
            rng.random(n_bots) < 0.75,
            rng.integers(600, 3001, size=n_bots),
            rng.integers(50, 500, size=n_bots),
        )
        posts_count[bot_m] = np.where(
            rng.random(n_bots) < 0.75,
            rng.integers(0, 5, size=n_bots),
            rng.integers(5, 40, size=n_bots),
        )
        has_picture[bot_m] = rng.random(n_bots) < 0.25
        entropy[bot_m] = np.where(
            rng.random(n_bots) < 0.85,
            rng.uniform(0.82, 0.98, size=n_bots),
            rng.uniform(0.50, 0.80, size=n_bots),
        )

        affinity_level = np.zeros(size, dtype=float)
        affinity_level[:n_organic] = rng.beta(2.5, 1.8, size=n_organic)

        bot_indices = np.arange(n_organic, size)
        n_reserved = int(round(n_bots * PURCHASABLE_BOT_FRACTION))
        purchasable = bot_indices[:n_reserved]
        active_bots = bot_indices[n_reserved:]
        pressures = np.array([s.bot_pressure for s in structures])
        pressures = pressures / pressures.sum()
        bot_topics = rng.choice(len(topics), size=len(active_bots), p=pressures)
        topic_idx[active_bots] = bot_topics

        trigger_bots = {
            t: active_bots[bot_topics == i] for i, t in enumerate(topics)
        }
        organic = np.arange(n_organic)
        organic_pools = {
            t: organic[organic_topics == i] for i, t in enumerate(topics)
        }
        for t, pool in organic_pools.items():
            if len(pool) == 0:
                raise ValidationError(f"topic {t!r} received an empty organic pool")

        return cls(
            topics=topics,
            category=category,
            gender=gender,
            age_idx=age_idx,
            region_idx=region_idx,
            followers=followers,
            followings=followings,
            posts_count=posts_count,
            has_picture=has_picture,
            entropy=entropy,
            topic_idx=topic_idx,
            affinity_level=affinity_level,
            topic_specific=topic_specific,
            purchasable=purchasable,
            trigger_bots=trigger_bots,
            organic_pools=organic_pools,
        )

    # -- lookups -------------------------------------------------------

    def id_of(self, index: int) -> str:
        return f"u{index:05d}"

    def index_of(self, agent_id: str) -> int:
        return int(agent_id[1:])

    def agent(self, agent_id: str) -> Agent:
        if agent_id in self.extras:
            return self.extras[agent_id]
        return self.to_agent(self.index_of(agent_id))

    def to_agent(self, index: int) -> Agent:
        return Agent(
            id=self.id_of(index),
            category=_CAT_TO_ENUM[int(self.category[index])],
            gender=GENDER_LEVELS[int(self.gender[index])],
            age_bucket=AGE_BUCKETS[int(self.age_idx[index])],
            region=REGION_NAMES[int(self.region_idx[index])],
            followers=int(self.followers[index]),
            followings=int(self.followings[index]),
            posts=int(self.posts_count[index]),
            has_profile_picture=bool(self.has_picture[index]),
            username_entropy=float(self.entropy[index]),
        )

    def register_extra(self, agent: Agent, topic_specific: bool = False) -> None:
        self.extras[agent.id] = agent
        self.extras_topic_specific[agent.id] = topic_specific

    def ground_truth(self, agent_id: str) -> AgentCategory:
        if agent_id in self.extras:
            return self.extras[agent_id].category
        return _CAT_TO_ENUM[int(self.category[self.index_of(agent_id)])]

    def is_topic_specific(self, agent_id: str) -> bool:
        if agent_id in self.extras:
            return self.extras_topic_specific.get(agent_id, False)
        return bool(self.topic_specific[self.index_of(agent_id)])

    # -- sampling ------------------------------------------------------

    def topic_pool(self, topic: str) -> np.ndarray:
        if topic not in self.organic_pools:
            raise ValidationError(f"unknown topic {topic!r}")
        return self.organic_pools[topic]

    def sample_interested(self, topic: str, k: int, rng: np.random.Generator) -> np.ndarray:
        """k organic agents interested in the topic (with replacement)."""
        pool = self.topic_pool(topic)
        if k <= 0:
            return np.empty(0, dtype=pool.dtype)
        return rng.choice(pool, size=k, replace=True)

    def sample_authors(self, topic: str, k: int, rng: np.random.Generator) -> np.ndarray:
        """Authors of wild feed posts: pages weighted per topic."""
        pool = self.topic_pool(topic)
        if k <= 0:
            return np.empty(0, dtype=pool.dtype)
        w = np.where(
            self.category[pool] == _CAT_PAGE,
            topic_structure(topic).author_page_weight,
            1.0 - topic_structure(topic).author_page_weight,
        )
        return rng.choice(pool, size=k, replace=True, p=w / w.sum())

    def sample_trigger_bots(self, topic: str, k: int, rng: np.random.Generator) -> np.ndarray:
        bots = self.trigger_bots.get(topic)
        if bots is None or len(bots) == 0 or k <= 0:
            return np.empty(0, dtype=np.int64)
        k = min(k, len(bots))
        return rng.choice(bots, size=k, replace=False)

    def affinity_for(self, indices: np.ndarray, topic: str) -> np.ndarray:
        """Topic affinity in [0,1]: full level on-topic, damped off-topic."""
        if topic not in self.organic_pools:
            raise ValidationError(f"unknown topic {topic!r}")
        t = self.topics.index(topic)
        level = self.affinity_level[indices]
        return np.where(self.topic_idx[indices] == t, level, level * OFF_TOPIC_AFFINITY)

    def purchasable_ids(self) -> list[str]:
        return [self.id_of(int(i)) for i in self.purchasable]

    def category_counts(self) -> dict[AgentCategory, int]:
        return {
            enum: int((self.category == code).sum())
            for code, enum in _CAT_TO_ENUM.items()
        }
