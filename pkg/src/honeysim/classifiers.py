"""Rule-based spam and follower classifiers.

Two detectors: a pattern/mention matcher for comments and a signal
counter for profiles. Both are pure functions over their inputs; the
shipped pattern list and the labeled comment fixture live under
``fixtures/``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import NamedTuple, Optional, Sequence

from .behavior import load_spam_patterns
from .core import Agent, AgentCategory, Comment, HoneysimError

__all__ = [
    "EmptyInput",
    "SpamVerdict",
    "FollowerCategory",
    "classify_comment",
    "bot_signals",
    "classify_follower",
    "spam_fraction",
    "spam_percent",
    "LabeledComment",
    "load_labeled_comments",
    "category_to_expected",
    "follower_accuracy",
    "load_spam_patterns",
    "IMMEDIACY_THRESHOLD_S",
]


class EmptyInput(HoneysimError):
    """A fraction over zero comments is undefined."""


IMMEDIACY_THRESHOLD_S = 120


@dataclass(frozen=True)
class SpamVerdict:
    is_spam: bool
    matched_patterns: tuple[str, ...]
    mention_flag: bool
    immediacy_flag: bool


def classify_comment(
    c: Comment,
    patterns: Sequence[str],
    immediacy_threshold_s: int = IMMEDIACY_THRESHOLD_S,
) -> SpamVerdict:
    """Spam iff a pattern matches, or a mention lands almost immediately.

    Pattern matching is case-insensitive substring search. The mention
    route needs both an '@' in the text and a known latency at or below
    the threshold.
    """
    if not patterns:
        raise ValueError("pattern list must be non-empty")
    text = c.text.lower()
    matched = tuple(p for p in patterns if p.lower() in text)
    mention = "@" in c.text
    immediate = (
        c.latency_seconds is not None and c.latency_seconds <= immediacy_threshold_s
    )
    return SpamVerdict(
        is_spam=bool(matched) or (mention and immediate),
        matched_patterns=matched,
        mention_flag=mention,
        immediacy_flag=immediate,
    )


class FollowerCategory(Enum):
    REAL_PERSON = "RealPerson"
    PAGE_INFLUENCER = "PageInfluencer"
    BOT = "Bot"


# Signal names double as a stable report vocabulary.
_BOT_SIGNALS = (
    "no_picture",
    "random_username",
    "skewed_ratio",
    "few_posts",
)


def bot_signals(profile: Agent) -> tuple[str, ...]:
    """The automation signals a profile trips, in fixed order."""
    fired = []
    if not profile.has_profile_picture:
        fired.append("no_picture")
    if profile.username_entropy > 0.8:
        fired.append("random_username")
    if profile.followings > 500 and profile.followers < 0.1 * profile.followings:
        fired.append("skewed_ratio")
    if profile.posts < 5:
        fired.append("few_posts")
    return tuple(fired)


def classify_follower(profile: Agent, topic_specific: bool) -> FollowerCategory:
    """Bot on >= 2 automation signals, then page, then real person.

    The order matters: a topic-specific account tripping two bot
    signals still reads as a bot.
    """
    if len(bot_signals(profile)) >= 2:
        return FollowerCategory.BOT
    if topic_specific or profile.followers > 1000:
        return FollowerCategory.PAGE_INFLUENCER
    return FollowerCategory.REAL_PERSON


def spam_fraction(comments: Sequence[Comment], patterns: Sequence[str]) -> float:
    if not comments:
        raise EmptyInput("spam fraction needs at least one comment")
    hits = sum(1 for c in comments if classify_comment(c, patterns).is_spam)
    return hits / len(comments)


def spam_percent(comments: Sequence[Comment], patterns: Sequence[str]) -> float:
    """Report form of spam_fraction: percentage rounded to 2 decimals."""
    return round(100.0 * spam_fraction(comments, patterns), 2)


# ---------------------------------------------------------------------------
# Labeled fixture
# ---------------------------------------------------------------------------

_FIXTURE = Path(__file__).parent / "fixtures" / "labeled_comments.csv"


class LabeledComment(NamedTuple):
    comment: Comment
    label: str  # "spam" | "legit"


def load_labeled_comments(path: Optional[Path] = None) -> tuple[LabeledComment, ...]:
    import csv

    from .core import SimTime

    out = []
    with open(path or _FIXTURE, encoding="utf-8", newline="") as f:
        for row in csv.DictReader(f):
            out.append(
                LabeledComment(
                    comment=Comment(
                        author="fixture",
                        text=row["text"],
                        at=SimTime(0, 0),
                        latency_seconds=float(row["latency_seconds"]),
                    ),
                    label=row["label"],
                )
            )
    return tuple(out)


# ---------------------------------------------------------------------------
# Ground-truth evaluation helpers
# ---------------------------------------------------------------------------

_EXPECTED = {
    AgentCategory.REAL_PERSON: FollowerCategory.REAL_PERSON,
    AgentCategory.PAGE: FollowerCategory.PAGE_INFLUENCER,
    AgentCategory.BOT: FollowerCategory.BOT,
}


def category_to_expected(category: AgentCategory) -> FollowerCategory:
    return _EXPECTED[category]


def follower_accuracy(
    profiles: Sequence[tuple[Agent, bool]],
) -> float:
    """Share of (profile, topic_specific) pairs classified as generated."""
    if not profiles:
        raise EmptyInput("accuracy needs at least one profile")
    hits = sum(
        1
        for agent, specific in profiles
        if classify_follower(agent, specific) is category_to_expected(agent.category)
    )
    return hits / len(profiles)
