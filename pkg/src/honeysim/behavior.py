"""Agent behavior model and sponsored-audience demographics.

The reaction model is intentionally small: per-event base rates scaled by
agent-topic affinity and content appeal, with multiplicative bonuses for
call-to-action captions and sponsored delivery.  A
:class:`BehaviorProfile` bundles those knobs; the shipped
"paper-calibrated" profile was fitted against the field deployment's
per-group engagement means.

Sponsored delivery samples audience demographics from per-topic
distributions (gender, age bucket, Italian region) derived from the
observed sponsored-campaign reports; they are embedded as data below.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from functools import lru_cache
from pathlib import Path
from typing import Mapping, Optional, Sequence

import numpy as np

from .core import (
    AGE_BUCKETS,
    Agent,
    EngagementEvent,
    EventKind,
    HoneysimError,
    Post,
    SimTime,
)

FIXTURES = Path(__file__).parent / "fixtures"

SPAM_LATENCY_MIN_S = 5
SPAM_LATENCY_MAX_S = 120


class UnknownProfile(HoneysimError):
    """No behavior profile registered or stored under that name."""


class WindowClosed(HoneysimError):
    """Sponsored delivery requested outside the post's sponsored window."""


@dataclass(frozen=True)
class BehaviorProfile:
    """Tunable parameters of the synthetic audience.

    The first block holds the per-event reaction model; the second block
    holds exposure behavior (how agents find honeypot content); the
    third holds the appeal Beta parameters per strategy class.
    ``discovery_rate`` is the expected number of daily exposures of one
    honeypot's content per interested agent.  ``purchase_distrust``
    damps follow conversions for accounts whose follower base looks
    bought: conversion is divided by
    (1 + purchase_distrust * purchased_fraction).
    """

    calibration_name: str = "default"
    base_like: float = 0.22
    base_comment: float = 0.0042
    base_follow: float = 0.0042
    cta_bonus: float = 0.25
    sponsor_boost: float = 0.6
    discovery_rate: float = 0.028
    spambot_trigger_p: float = 0.35
    spam_redirect_rate: float = 0.12
    visit_follow_p: float = 0.30
    follow_reciprocity: float = 0.15
    bot_follow_p: float = 0.03
    purchase_distrust: float = 0.8
    sponsor_follow_scale: float = 1.75
    appeal_ai: tuple[float, float] = (2.3, 2.7)
    appeal_nonai: tuple[float, float] = (3.0, 2.1)

    def __post_init__(self) -> None:
        for name in ("base_like", "base_comment", "base_follow", "spambot_trigger_p",
                     "visit_follow_p", "follow_reciprocity", "bot_follow_p"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0,1], got {value}")
        for name in ("cta_bonus", "sponsor_boost", "discovery_rate", "spam_redirect_rate",
                     "purchase_distrust", "sponsor_follow_scale"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")

    def appeal_params(self, ai_based: bool) -> tuple[float, float]:
        return self.appeal_ai if ai_based else self.appeal_nonai

    def to_json(self) -> str:
        payload = {
            k: (list(v) if isinstance(v, tuple) else v)
            for k, v in self.__dict__.items()
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "BehaviorProfile":
        raw = json.loads(text)
        for key in ("appeal_ai", "appeal_nonai"):
            if key in raw:
                raw[key] = tuple(raw[key])
        return cls(**raw)


DEFAULT_PROFILE = BehaviorProfile()

_PROFILE_DIR = FIXTURES / "profiles"
PAPER_PROFILE_NAME = "paper-calibrated"


@lru_cache(maxsize=None)
def load_profile(name: str = "default") -> BehaviorProfile:
    """Resolve a profile by name: built-in, shipped fixture, or file path."""
    if name == "default":
        return DEFAULT_PROFILE
    fixture = _PROFILE_DIR / f"{name.replace(' ', '_')}.json"
    if fixture.exists():
        return BehaviorProfile.from_json(fixture.read_text(encoding="utf-8"))
    path = Path(name)
    if path.exists():
        return BehaviorProfile.from_json(path.read_text(encoding="utf-8"))
    raise UnknownProfile(f"no profile named {name!r} (and no such file)")


def reaction_probabilities(
    profile: BehaviorProfile,
    affinity,
    appeal,
    has_cta,
    sponsored,
):
    """(p_like, p_comment, p_follow) for one exposure; numpy-broadcastable.

    Each probability is base * affinity * appeal * (1 + cta_bonus) *
    (1 + sponsor_boost), clamped to [0, 1].  Follow probabilities for
    sponsored exposures carry an extra scale: ad viewers convert to
    followers at a different rate than feed viewers because the ad
    funnels them through a profile tap first.
    """
    affinity = np.asarray(affinity, dtype=float)
    appeal = np.asarray(appeal, dtype=float)
    cta_mult = 1.0 + profile.cta_bonus * np.asarray(has_cta, dtype=float)
    sponsored = np.asarray(sponsored, dtype=float)
    sp_mult = 1.0 + profile.sponsor_boost * sponsored
    core = affinity * appeal * cta_mult * sp_mult
    p_like = np.clip(profile.base_like * core, 0.0, 1.0)
    p_comment = np.clip(profile.base_comment * core, 0.0, 1.0)
    follow_scale = np.where(sponsored > 0, profile.sponsor_follow_scale, 1.0)
    p_follow = np.clip(profile.base_follow * core * follow_scale, 0.0, 1.0)
    return p_like, p_comment, p_follow


def agent_react(
    profile: BehaviorProfile,
    agent: Agent,
    post: Post,
    rng: np.random.Generator,
    at: SimTime,
    affinity: Optional[float] = None,
    already_following: bool = False,
    sponsored: bool = False,
) -> list[EngagementEvent]:
    """Scalar reaction of one agent to one exposed post.

    Independent Bernoulli draws for like, comment, follow; a follow is
    suppressed when the agent already follows the honeypot.  Events are
    emitted with seq = 0; the engine assigns the final sequence numbers.
    """
    if affinity is None:
        affinity = 1.0
    appeal = post.appeal
    has_cta = post.cta is not None
    p_like, p_comment, p_follow = reaction_probabilities(
        profile, affinity, appeal, has_cta, sponsored
    )
    draws = rng.random(3)
    events: list[EngagementEvent] = []
    if draws[0] < p_like:
        events.append(EngagementEvent(at, 0, EventKind.LIKE, agent.id, post.id, post.honeypot_id))
    if draws[1] < p_comment:
        events.append(EngagementEvent(at, 0, EventKind.COMMENT, agent.id, post.id, post.honeypot_id))
    if draws[2] < p_follow and not already_following:
        events.append(
            EngagementEvent(at, 0, EventKind.FOLLOW, agent.id, post.honeypot_id, post.honeypot_id)
        )
    return events


_SPAM_MENTION_HANDLES = (
    "style_daily", "gooddeals4u", "trendwatch", "bestclips", "viewbooster",
)


@lru_cache(maxsize=None)
def load_spam_patterns() -> tuple[str, ...]:
    path = FIXTURES / "spam_patterns.txt"
    return tuple(
        line.strip() for line in path.read_text(encoding="utf-8").splitlines() if line.strip()
    )


def spambot_react(
    bot: Agent,
    post: Post,
    rng: np.random.Generator,
    trigger_tags: frozenset[str],
    trigger_p: float,
    patterns: Optional[Sequence[str]] = None,
):
    """Optional bot comment on a freshly published post.

    Fires only when the post's hashtags intersect the bot's monitored
    tags; the emitted comment carries an '@' mention plus one promotional
    pattern and lands within [5, 120] seconds of publication.
    Returns a (text, latency_seconds) tuple or None.
    """
    if not trigger_tags.intersection(post.hashtags):
        return None
    if rng.random() >= trigger_p:
        return None
    pool = patterns if patterns is not None else load_spam_patterns()
    pattern = pool[int(rng.integers(len(pool)))]
    handle = _SPAM_MENTION_HANDLES[int(rng.integers(len(_SPAM_MENTION_HANDLES)))]
    latency = int(rng.integers(SPAM_LATENCY_MIN_S, SPAM_LATENCY_MAX_S + 1))
    text = f"@{handle} {pattern}"
    return text, latency


# ---------------------------------------------------------------------------
# Sponsored audience demographics
# ---------------------------------------------------------------------------

# Observed sponsored-campaign reports: per sponsored honeypot, the total
# reached audience, the male share, the age-bucket shares and the region
# shares (unreported regions were below the platform's cutoff and count
# as 0 toward the topic mean; the remainder maps to "Other").
_SPONSOR_REPORTS: dict[str, dict] = {
    "food": {
        "audience": (3126, 3412, 5337),
        "men": (57.0, 38.7, 11.7),
        "ages": {
            "13-17": (0.1, 0.1, 0.0),
            "18-24": (39.1, 37.7, 35.9),
            "25-34": (29.8, 12.9, 36.0),
            "35-44": (14.5, 11.6, 14.3),
            "45-54": (9.0, 18.3, 8.2),
            "55-64": (4.7, 12.9, 3.8),
            "65+": (2.5, 6.0, 1.3),
        },
        "regions": {
            "Campania": (14.7, 11.3, 9.1),
            "Lazio": (0.0, 7.9, 8.3),
            "Lombardia": (12.4, 12.0, 13.2),
            "Puglia": (12.5, 10.9, 8.9),
            "Sicilia": (9.0, 10.0, 9.2),
            "Veneto": (9.0, 0.0, 0.0),
        },
    },
    "cat": {
        "audience": (3245, 4597, 2863),
        "men": (31.5, 30.7, 39.3),
        "ages": {
            "13-17": (0.0, 0.0, 0.1),
            "18-24": (20.8, 33.8, 38.6),
            "25-34": (21.2, 25.2, 15.2),
            "35-44": (15.6, 13.0, 12.4),
            "45-54": (18.7, 14.0, 13.7),
            "55-64": (15.8, 9.3, 12.4),
            "65+": (7.5, 4.3, 7.2),
        },
        "regions": {
            "Campania": (0.0, 0.0, 8.7),
            "Emilia-Romagna": (9.7, 8.7, 9.2),
            "Lazio": (9.4, 10.5, 0.0),
            "Lombardia": (19.6, 18.8, 17.2),
            "Piemonte": (9.0, 8.5, 7.5),
            "Tuscany": (7.2, 0.0, 0.0),
            "Veneto": (0.0, 7.7, 8.4),
        },
    },
    "car": {
        "audience": (10698, 6824, 9633),
        "men": (89.5, 90.7, 93.6),
        "ages": {
            "13-17": (0.2, 0.1, 0.1),
            "18-24": (64.3, 45.7, 52.5),
            "25-34": (12.7, 31.8, 26.8),
            "35-44": (6.5, 10.8, 9.4),
            "45-54": (8.1, 5.1, 6.1),
            "55-64": (5.0, 3.6, 3.0),
            "65+": (2.9, 2.6, 1.8),
        },
        "regions": {
            "Campania": (7.8, 8.7, 0.0),
            "Emilia-Romagna": (0.0, 8.6, 9.2),
            "Lazio": (8.2, 11.1, 9.5),
            "Lombardia": (14.0, 19.0, 20.9),
            "Piemonte": (0.0, 0.0, 8.0),
            "Puglia": (8.9, 0.0, 0.0),
            "Sicilia": (10.4, 0.0, 0.0),
            "Veneto": (0.0, 8.8, 10.1),
        },
    },
}

SPONSOR_DURATION_DAYS = 7


@dataclass(frozen=True)
class TopicAudience:
    """Delivery distribution of sponsored impressions for one topic."""

    male_share: float
    age_probs: tuple[float, ...]
    regions: tuple[str, ...]
    region_probs: tuple[float, ...]
    daily_reach_mean: float
    reach_rel_std: float = 0.2

    def __post_init__(self) -> None:
        for probs in (self.age_probs, self.region_probs):
            if abs(sum(probs) - 1.0) > 1e-9:
                raise ValueError("categorical distribution must sum to 1")
        if not 0.0 <= self.male_share <= 1.0:
            raise ValueError("male_share must be in [0,1]")


def _mean(values: Sequence[float]) -> float:
    return sum(values) / len(values)


def _topic_audience(report: dict) -> TopicAudience:
    male = _mean(report["men"]) / 100.0
    ages = np.array([_mean(report["ages"][b]) for b in AGE_BUCKETS])
    ages = ages / ages.sum()
    region_names = tuple(sorted(report["regions"])) + ("Other",)
    named = np.array([_mean(report["regions"][r]) for r in region_names[:-1]]) / 100.0
    other = max(0.0, 1.0 - named.sum())
    region_probs = tuple(named) + (other,)
    total_reach = _mean(report["audience"])
    return TopicAudience(
        male_share=male,
        age_probs=tuple(ages),
        regions=region_names,
        region_probs=region_probs,
        daily_reach_mean=total_reach / SPONSOR_DURATION_DAYS,
    )


_GENERIC_AUDIENCE = TopicAudience(
    male_share=0.5,
    age_probs=(0.01, 0.34, 0.27, 0.16, 0.12, 0.06, 0.04),
    regions=("Lombardia", "Lazio", "Campania", "Other"),
    region_probs=(0.15, 0.10, 0.08, 0.67),
    daily_reach_mean=700.0,
)


@dataclass(frozen=True)
class SponsorAudienceModel:
    """Per-topic sponsored delivery distributions."""

    topics: Mapping[str, TopicAudience] = field(default_factory=dict)
    fallback: TopicAudience = _GENERIC_AUDIENCE

    @classmethod
    def paper_default(cls) -> "SponsorAudienceModel":
        return cls(topics={name: _topic_audience(rep) for name, rep in _SPONSOR_REPORTS.items()})

    def audience(self, topic_name: str) -> TopicAudience:
        return self.topics.get(topic_name, self.fallback)

    def daily_reach(self, topic_name: str, rng: np.random.Generator) -> int:
        aud = self.audience(topic_name)
        if aud.reach_rel_std <= 0:
            return int(round(aud.daily_reach_mean))
        draw = rng.normal(aud.daily_reach_mean, aud.daily_reach_mean * aud.reach_rel_std)
        return max(0, int(round(draw)))

    def sample_demographics(
        self, topic_name: str, n: int, rng: np.random.Generator
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(genders, age buckets, regions) for n impressions.

        Genders are "men"/"women" strings; ages use the standard bucket
        labels; regions are the topic's reported regions plus "Other".
        """
        aud = self.audience(topic_name)
        genders = np.where(rng.random(n) < aud.male_share, "men", "women")
        ages = rng.choice(np.array(AGE_BUCKETS), size=n, p=np.array(aud.age_probs))
        regions = rng.choice(np.array(aud.regions), size=n, p=np.array(aud.region_probs))
        return genders, ages, regions


def deliver_sponsorship(
    post: Post,
    model: SponsorAudienceModel,
    rng: np.random.Generator,
    at: SimTime,
    topic_name: str,
) -> tuple[int, tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """One day of sponsored delivery for a post inside its window.

    Returns the impression count and the sampled demographics; the
    engine turns them into SponsoredImpression events and reactions.

    Raises :class:`WindowClosed` outside the sponsored window.
    """
    if not post.is_sponsored_at(at):
        raise WindowClosed(f"post {post.id} has no active sponsorship at day {at.day}")
    reach = model.daily_reach(topic_name, rng)
    return reach, model.sample_demographics(topic_name, reach, rng)


def profile_with(profile: BehaviorProfile, **changes) -> BehaviorProfile:
    """Functional update helper used by calibration."""
    return replace(profile, **changes)
