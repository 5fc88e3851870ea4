"""Core domain types for the honeypot simulator.

Everything downstream (content generation, engagement plans, the network
engine, analytics) builds on the vocabulary defined here: topics and their
coverage classes, simulated wall-clock time, agents, posts, comments,
honeypot accounts and the append-only engagement event log.

The module also provides the seeding scheme used across the package.  A
:class:`RandomSource` wraps an integer seed plus a label path and can be
split into independent child sources; the same seed and path always yield
the same stream, regardless of platform or process count.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, NamedTuple, Optional, Sequence

import numpy as np

MINUTES_PER_DAY = 1440
DAYS_PER_WEEK = 7

# Coverage thresholds (number of posts published under a topic's rank-1
# hashtag).  High starts at 400M so that a 493M topic is High while a 270M
# one is Medium; Medium starts at 150M so a 93M topic is Low.
HIGH_COVERAGE_MIN = 400_000_000
MEDIUM_COVERAGE_MIN = 150_000_000


class HoneysimError(Exception):
    """Base class for all package-specific errors."""


class NonPositiveCoverage(HoneysimError):
    """Raised when a topic coverage count is zero or negative."""


class EmptyPool(HoneysimError):
    """Raised when sampling is requested from an empty pool."""


class InsufficientPool(HoneysimError):
    """Raised when a pool holds fewer items than a request needs."""


class ValidationError(HoneysimError):
    """Raised when a config or domain object fails validation."""


class CoverageClass(Enum):
    HIGH = "High"
    MEDIUM = "Medium"
    LOW = "Low"


def classify_coverage(coverage_count: int) -> CoverageClass:
    """Bucket a topic by the post count of its most popular hashtag.

    ``coverage_count`` is the number of posts published under the rank-1
    hashtag of the topic.  Counts of at least 400M classify as High,
    counts in [150M, 400M) as Medium, anything below as Low.

    Raises :class:`NonPositiveCoverage` for counts < 1.
    """
    if coverage_count < 1:
        raise NonPositiveCoverage(f"coverage count must be >= 1, got {coverage_count}")
    if coverage_count >= HIGH_COVERAGE_MIN:
        return CoverageClass.HIGH
    if coverage_count >= MEDIUM_COVERAGE_MIN:
        return CoverageClass.MEDIUM
    return CoverageClass.LOW


@dataclass(frozen=True, order=True)
class SimTime:
    """A point in simulated time: day index plus minute of day.

    Days are 0-based, minutes run from 0 to 1439.  Ordering is
    lexicographic on (day, minute), which matches chronological order.
    """

    day: int
    minute: int = 0

    def __post_init__(self) -> None:
        if self.day < 0:
            raise ValidationError(f"day must be >= 0, got {self.day}")
        if not 0 <= self.minute < MINUTES_PER_DAY:
            raise ValidationError(f"minute must be in [0, 1440), got {self.minute}")

    @property
    def week(self) -> int:
        """1-based week index (days 0..6 are week 1)."""
        return self.day // DAYS_PER_WEEK + 1

    def total_minutes(self) -> int:
        return self.day * MINUTES_PER_DAY + self.minute

    def plus_minutes(self, minutes: int) -> "SimTime":
        total = self.total_minutes() + minutes
        if total < 0:
            raise ValidationError("time arithmetic went before day 0")
        return SimTime(total // MINUTES_PER_DAY, total % MINUTES_PER_DAY)

    def plus_days(self, days: int) -> "SimTime":
        return self.plus_minutes(days * MINUTES_PER_DAY)


class Gender(Enum):
    WOMAN = "women"
    MAN = "men"


# Age buckets as reported by profile insight panels.
AGE_BUCKETS: tuple[str, ...] = (
    "13-17",
    "18-24",
    "25-34",
    "35-44",
    "45-54",
    "55-64",
    "65+",
)


class AgentCategory(Enum):
    REAL_PERSON = "real_person"
    PAGE = "page"
    BOT = "bot"


@dataclass
class Agent:
    """A network account other than the honeypots themselves."""

    id: str
    category: AgentCategory
    gender: Optional[Gender] = None
    age_bucket: Optional[str] = None
    region: Optional[str] = None
    followers: int = 0
    followings: int = 0
    posts: int = 0
    has_profile_picture: bool = True
    username_entropy: float = 0.0

    def __post_init__(self) -> None:
        if self.age_bucket is not None and self.age_bucket not in AGE_BUCKETS:
            raise ValidationError(f"unknown age bucket {self.age_bucket!r}")
        if min(self.followers, self.followings, self.posts) < 0:
            raise ValidationError("profile counters must be non-negative")


@dataclass(frozen=True)
class Topic:
    """A content topic with its hashtag pool.

    ``hashtag_pool`` is a tuple of (tag, post_count) pairs sorted by
    descending post count; the first entry defines the topic coverage.
    """

    name: str
    hashtag_pool: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if not self.name:
            raise ValidationError("topic name must be non-empty")
        if not self.hashtag_pool:
            raise EmptyPool(f"topic {self.name!r} has an empty hashtag pool")
        counts = [count for _, count in self.hashtag_pool]
        if any(c < 1 for c in counts):
            raise NonPositiveCoverage(f"topic {self.name!r} has a non-positive hashtag count")
        if counts != sorted(counts, reverse=True):
            raise ValidationError(f"hashtag pool for {self.name!r} must be sorted by descending count")

    @property
    def coverage_count(self) -> int:
        return self.hashtag_pool[0][1]

    @property
    def coverage_class(self) -> CoverageClass:
        return classify_coverage(self.coverage_count)


class EventKind(Enum):
    LIKE = "like"
    COMMENT = "comment"
    FOLLOW = "follow"
    FOLLOW_BACK = "follow_back"
    UNFOLLOW = "unfollow"
    PURCHASED_FOLLOW = "purchased_follow"
    SPONSORED_IMPRESSION = "sponsored_impression"


# Events that count as interactions received by a honeypot.
INBOUND_EVENT_KINDS = frozenset({EventKind.LIKE, EventKind.COMMENT, EventKind.FOLLOW})


class EngagementEvent(NamedTuple):
    """One row of the append-only engagement log.

    ``actor`` performed ``kind`` against ``target`` (a post id or an
    account id, depending on the kind); ``honeypot`` names the honeypot
    whose ledger the event belongs to.  ``seq`` breaks ordering ties and
    makes the canonical sort total.
    """

    at: SimTime
    seq: int
    kind: EventKind
    actor: str
    target: str
    honeypot: str


@dataclass
class Comment:
    author: str
    text: str
    at: SimTime
    latency_seconds: Optional[float] = None


@dataclass(frozen=True)
class SponsoredWindow:
    """An active ad campaign on a single post."""

    start: SimTime
    end: SimTime
    daily_budget: float

    def __post_init__(self) -> None:
        if self.end < self.start:
            raise ValidationError("sponsored window ends before it starts")
        if self.daily_budget <= 0:
            raise ValidationError("sponsored budget must be positive")

    def contains(self, at: SimTime) -> bool:
        return self.start.day <= at.day < self.end.day

    @property
    def total_cost(self) -> float:
        return self.daily_budget * (self.end.day - self.start.day)


@dataclass
class Post:
    """A honeypot post and its accumulated engagement."""

    id: str
    honeypot_id: str
    published_at: SimTime
    caption: str
    hashtags: tuple[str, ...] = ()
    cta: Optional[str] = None
    strategy: str = ""
    appeal: float = 0.0
    likes: int = 0
    comments: list[Comment] = field(default_factory=list)
    sponsored_window: Optional[SponsoredWindow] = None

    @property
    def comment_count(self) -> int:
        return len(self.comments)

    def is_sponsored_at(self, at: SimTime) -> bool:
        return self.sponsored_window is not None and self.sponsored_window.contains(at)


class FollowerEntry(NamedTuple):
    agent_id: str
    since: SimTime
    purchased: bool


class FollowingEntry(NamedTuple):
    agent_id: str
    since: SimTime
    unfollow_at: Optional[SimTime] = None


@dataclass
class MetricsSnapshot:
    """End-of-day account state for one honeypot.

    ``per_post`` carries (post id, likes, comments) tuples; to keep runs
    lean it is only populated on the final snapshot of a run.
    """

    day: int
    followers_analytic: int
    followings: int
    cumulative_likes: int
    cumulative_comments: int
    posts_published: int
    per_post: tuple[tuple[str, int, int], ...] = ()


@dataclass
class Honeypot:
    """A honeypot account: topic, content strategies, plan and ledgers.

    ``plan`` holds an EngagementPlanConfig; the field is untyped here so
    the domain layer stays import-free of the plan machinery.
    """

    id: str
    topic: Topic
    strategies: tuple[str, ...]
    plan: object = None
    followers: dict[str, FollowerEntry] = field(default_factory=dict)
    followings: dict[str, FollowingEntry] = field(default_factory=dict)
    posts: list[Post] = field(default_factory=list)
    snapshots: list[MetricsSnapshot] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.strategies:
            raise ValidationError(f"honeypot {self.id!r} needs at least one strategy")

    @property
    def follower_count(self) -> int:
        """Followers as the platform would report them, purchased included."""
        return len(self.followers)

    @property
    def purchased_follower_count(self) -> int:
        return sum(1 for e in self.followers.values() if e.purchased)

    @property
    def analytic_follower_count(self) -> int:
        """Organic followers only; the number analytics and reports use."""
        return len(self.followers) - self.purchased_follower_count

    @property
    def total_likes(self) -> int:
        return sum(p.likes for p in self.posts)

    @property
    def total_comments(self) -> int:
        return sum(p.comment_count for p in self.posts)


def _digest_to_entropy(material: str) -> list[int]:
    digest = hashlib.sha256(material.encode("utf-8")).digest()
    return [int.from_bytes(digest[i : i + 8], "little") for i in range(0, 32, 8)]


@dataclass(frozen=True)
class RandomSource:
    """A splittable, platform-stable source of numpy generators.

    The stream is fully determined by ``(seed, path)``.  Splitting appends
    a label to the path; the derived entropy comes from a sha256 digest of
    the seed and path, so it does not depend on Python's hash
    randomization or on the order in which siblings are created.
    """

    seed: int
    path: tuple[str, ...] = ()

    def split(self, *labels: str) -> "RandomSource":
        return RandomSource(self.seed, self.path + tuple(str(l) for l in labels))

    def generator(self) -> np.random.Generator:
        """A fresh generator for this source; repeat calls restart the stream."""
        material = f"{self.seed}\x1f" + "\x1f".join(self.path)
        entropy = _digest_to_entropy(material)
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def seeded_rng(seed: int) -> RandomSource:
    """Root random source for a run. Equal seeds give equal streams."""
    return RandomSource(int(seed))


def sorted_events(events: Sequence[EngagementEvent]) -> list[EngagementEvent]:
    """Events in canonical order: by time, then by sequence number."""
    return sorted(events, key=lambda e: (e.at.day, e.at.minute, e.seq))


def iter_days(horizon_days: int) -> Iterator[int]:
    if horizon_days < 1:
        raise ValidationError(f"horizon must be >= 1 day, got {horizon_days}")
    return iter(range(horizon_days))
