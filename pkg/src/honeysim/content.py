"""Post generation pipelines.

Four strategies produce post drafts: two AI-flavored ones (caption first,
then a generated image) and two non-AI ones (image first, then a
caption).  Real models and media are replaced by deterministic stubs: a
synthetic popular-posts feed, a fake object detector, template
keyword-to-text and rephrase transforms, and a stock-image library that
hands out non-repeating ids.  What survives of a post is a
ContentDescriptor: an appeal score, a topic affinity and the measurable
caption features (hashtags, CTA, emojis, quote flag).

Caption assembly follows a fixed recipe: 15 hashtags sampled 8 from the
popular half of the topic pool and 7 from the tail, a call-to-action
line, and one joy emoji per sentence (quotes stay emoji-free since the
quote alone is the caption).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np

from .core import EmptyPool, HoneysimError, InsufficientPool, Topic

FIXTURES = Path(__file__).parent / "fixtures"

HASHTAGS_TOTAL = 15
HASHTAGS_FROM_TOP = 8
HASHTAGS_FROM_TAIL = 7
REVIEW_MAX_RETRIES = 5


class UnknownStyle(HoneysimError):
    """Art prompt style is not in the style pool."""


class UnknownMedium(HoneysimError):
    """Art prompt medium is not in the medium pool."""


class EmptyDetections(HoneysimError):
    """Keyword filter got an empty detection list."""


class ExhaustedFeed(HoneysimError):
    """Every candidate feed item was discarded."""


class ExhaustedStockLibrary(HoneysimError):
    """The stock library has no unused image ids left."""


class RetriesExhausted(HoneysimError):
    """Owner review rejected every draft within the retry budget."""


class Strategy(Enum):
    INSTA = "insta"
    ART = "art"
    UNSPLASH = "unsplash"
    QUOTES = "quotes"

    @property
    def ai_based(self) -> bool:
        return self in (Strategy.INSTA, Strategy.ART)

    @property
    def ai_class(self) -> str:
        return "AI" if self.ai_based else "NonAI"


@dataclass(frozen=True)
class Detection:
    label: str
    score: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.score <= 1.0:
            raise ValueError(f"detection score must be in [0,1], got {self.score}")


@dataclass(frozen=True)
class Caption:
    body: str
    hashtags: tuple[str, ...]
    cta: Optional[str]
    emoji_count: int
    is_quote: bool

    @property
    def text(self) -> str:
        tags = " ".join(f"#{t}" for t in self.hashtags)
        return f"{self.body} {tags}".strip()


@dataclass(frozen=True)
class ContentDescriptor:
    appeal: float
    topic_affinity: float
    caption: Caption
    provenance: Strategy

    def __post_init__(self) -> None:
        if not 0.0 <= self.appeal <= 1.0:
            raise ValueError(f"appeal must be in [0,1], got {self.appeal}")
        if not 0.0 <= self.topic_affinity <= 1.0:
            raise ValueError(f"topic affinity must be in [0,1], got {self.topic_affinity}")


@dataclass(frozen=True)
class PostDraft:
    content: ContentDescriptor
    image_id: Optional[str] = None
    source_ref: Optional[str] = None


# ---------------------------------------------------------------------------
# Fixture loading
# ---------------------------------------------------------------------------


def _read_lines(name: str) -> tuple[str, ...]:
    path = FIXTURES / name
    return tuple(
        line.strip() for line in path.read_text(encoding="utf-8").splitlines() if line.strip()
    )


@lru_cache(maxsize=None)
def load_cta_pool() -> tuple[str, ...]:
    return _read_lines("cta_pool.txt")


@lru_cache(maxsize=None)
def load_joy_pool() -> tuple[str, ...]:
    return _read_lines("joy_emojis.txt")


@lru_cache(maxsize=None)
def load_emoji_map() -> dict[str, str]:
    out = {}
    for line in _read_lines("emoji_map.tsv"):
        word, emoji = line.split("\t")
        out[word] = emoji
    return out


@lru_cache(maxsize=None)
def load_quote_pool() -> tuple[tuple[str, str], ...]:
    out = []
    for line in _read_lines("quotes.tsv"):
        text, author = line.split("\t")
        out.append((text, author))
    return tuple(out)


@lru_cache(maxsize=None)
def load_style_pool() -> tuple[str, ...]:
    return _read_lines("art_styles.txt")


@lru_cache(maxsize=None)
def load_medium_pool() -> tuple[str, ...]:
    return _read_lines("art_mediums.txt")


@lru_cache(maxsize=None)
def load_excluded_words() -> tuple[str, ...]:
    return _read_lines("excluded_words.txt")


@lru_cache(maxsize=None)
def load_stopwords() -> frozenset[str]:
    return frozenset(_read_lines("stopwords_en.txt"))


# ---------------------------------------------------------------------------
# Caption building blocks
# ---------------------------------------------------------------------------


def select_hashtags(
    pool: Sequence[tuple[str, int]], rng: np.random.Generator
) -> list[str]:
    """Sample 15 distinct tags: 8 popular, 7 niche.

    The pool is ranked by descending coverage.  Eight tags come from the
    first ceil(n/2) ranks with linear weights favoring rank 1; seven come
    from the remaining ranks with linear weights favoring the last rank,
    so the niche picks skew to the least-used tags.

    Raises :class:`InsufficientPool` for pools smaller than 15.
    """
    n = len(pool)
    if n < HASHTAGS_TOTAL:
        raise InsufficientPool(f"hashtag pool needs >= {HASHTAGS_TOTAL} tags, got {n}")
    split = math.ceil(n / 2)
    top, tail = pool[:split], pool[split:]

    top_weights = np.arange(len(top), 0, -1, dtype=float)
    tail_weights = np.arange(1, len(tail) + 1, dtype=float)
    top_idx = rng.choice(len(top), size=HASHTAGS_FROM_TOP, replace=False, p=top_weights / top_weights.sum())
    tail_idx = rng.choice(len(tail), size=HASHTAGS_FROM_TAIL, replace=False, p=tail_weights / tail_weights.sum())
    return [top[i][0] for i in top_idx] + [tail[i][0] for i in tail_idx]


def attach_cta(caption: str, cta_pool: Sequence[str], rng: np.random.Generator) -> str:
    """Append one uniformly sampled call-to-action, space separated."""
    if not cta_pool:
        raise EmptyPool("CTA pool is empty")
    cta = cta_pool[int(rng.integers(len(cta_pool)))]
    return f"{caption} {cta}"


_SENTENCE_RE = re.compile(r"[^.!?]*[.!?]+|[^.!?]+$")
_WORD_RE = re.compile(r"[a-z']+")


def _insert_emojis_counted(
    caption: str,
    emoji_map: dict[str, str],
    joy_pool: Sequence[str],
    rng: np.random.Generator,
) -> tuple[str, int]:
    if not caption.strip():
        return caption, 0
    pieces = []
    inserted = 0
    for match in _SENTENCE_RE.finditer(caption):
        sentence = match.group(0)
        if not sentence.strip():
            continue
        words_done = set()
        for word in _WORD_RE.findall(sentence.lower()):
            emoji = emoji_map.get(word)
            if emoji and word not in words_done:
                # put the emoji right after the first occurrence of the word
                sentence = re.sub(
                    rf"\b({re.escape(word)})\b",
                    rf"\1 {emoji}",
                    sentence,
                    count=1,
                    flags=re.IGNORECASE,
                )
                words_done.add(word)
                inserted += 1
        joy = joy_pool[int(rng.integers(len(joy_pool)))] if joy_pool else ""
        if joy:
            inserted += 1
            sentence = f"{sentence} {joy}"
        pieces.append(sentence.strip())
    return " ".join(pieces), inserted


def insert_emojis(
    caption: str,
    emoji_map: dict[str, str],
    joy_pool: Sequence[str],
    rng: np.random.Generator,
) -> str:
    """Decorate a caption with emojis.

    Mapped words gain their emoji inline; every sentence (split on
    terminal punctuation) gets one joy emoji appended.  Empty input is
    returned unchanged.
    """
    text, _ = _insert_emojis_counted(caption, emoji_map, joy_pool, rng)
    return text


def sample_quote(
    pool: Sequence[tuple[str, str]], rng: np.random.Generator
) -> tuple[str, str]:
    """Uniform draw of (text, author) from the quote pool."""
    if not pool:
        raise EmptyPool("quote pool is empty")
    return tuple(pool[int(rng.integers(len(pool)))])


KEYWORD_TOP_MIN = 0.25
KEYWORD_KEEP_MIN = 0.05


def keyword_filter(detections: Sequence[Detection]) -> Optional[list[str]]:
    """Reduce detections to usable keywords.

    Returns the kept labels, or None when the draft should be discarded
    because the best detection scores below 0.25.  Among the rest, only
    labels scoring strictly above 0.05 survive; the top label is always
    kept.

    Raises :class:`EmptyDetections` on empty input.
    """
    if not detections:
        raise EmptyDetections("no detections to filter")
    ranked = sorted(detections, key=lambda d: d.score, reverse=True)
    if ranked[0].score < KEYWORD_TOP_MIN:
        return None
    kept = [ranked[0].label]
    kept.extend(d.label for d in ranked[1:] if d.score > KEYWORD_KEEP_MIN)
    return kept


_VOWELS = "aeiou"


def _fix_articles(text: str) -> str:
    def repl(match: re.Match) -> str:
        word = match.group(2)
        article = "an" if word[0].lower() in _VOWELS else "a"
        return f"{match.group(1)}{article} {word}"

    return re.sub(r"(^|\s)a(?:n)? (\w+)", repl, text)


def art_prompt(
    topic_keyword: str,
    style: str,
    medium: str,
    style_pool: Optional[Sequence[str]] = None,
    medium_pool: Optional[Sequence[str]] = None,
) -> str:
    """Fill the art template: "a {style} {medium} of a {topic_keyword}".

    Articles are normalized afterwards ("a abstract" becomes "an
    abstract").  Style and medium must come from their pools.
    """
    styles = tuple(style_pool) if style_pool is not None else load_style_pool()
    mediums = tuple(medium_pool) if medium_pool is not None else load_medium_pool()
    if style not in styles:
        raise UnknownStyle(f"style {style!r} not in pool {sorted(styles)}")
    if medium not in mediums:
        raise UnknownMedium(f"medium {medium!r} not in pool {sorted(mediums)}")
    return _fix_articles(f"a {style} {medium} of a {topic_keyword}")


def english_caption(text: str, stopwords: Optional[frozenset[str]] = None) -> bool:
    """Cheap English check: enough common-word hits among the tokens."""
    words = _WORD_RE.findall(text.lower())
    if len(words) < 3:
        return False
    vocab = stopwords if stopwords is not None else load_stopwords()
    hits = sum(1 for w in words if w in vocab)
    return hits / len(words) >= 0.18


def contains_excluded_word(text: str, excluded: Optional[Sequence[str]] = None) -> bool:
    words = set(_WORD_RE.findall(text.lower()))
    pool = excluded if excluded is not None else load_excluded_words()
    return any(w in words for w in pool)


# ---------------------------------------------------------------------------
# Stub environment
# ---------------------------------------------------------------------------


class StockLibrary:
    """Hands out stock image ids, never repeating one within its lifetime.

    The used-id set is the in-memory analog of the id ledger a live
    pipeline would keep on disk.
    """

    def __init__(self, prefix: str, capacity: int = 10_000):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.prefix = prefix
        self.capacity = capacity
        self._next = 0

    @property
    def remaining(self) -> int:
        return self.capacity - self._next

    def draw(self) -> str:
        if self._next >= self.capacity:
            raise ExhaustedStockLibrary(f"library {self.prefix!r} is out of images")
        image_id = f"{self.prefix}-{self._next:06d}"
        self._next += 1
        return image_id


@dataclass(frozen=True)
class StubFeedItem:
    """One synthetic entry of a topic's popular-posts feed."""

    post_id: str
    caption: str
    detections: tuple[Detection, ...]


_FEED_CAPTION_TEMPLATES = (
    "Nothing beats a quiet morning with my favorite {kw}, it always makes the day better.",
    "Spent the whole afternoon with this lovely {kw} and I am not even sorry about it.",
    "Can we talk about how amazing this {kw} looks today? I am in love with it.",
    "My {kw} is the best part of coming home, it never fails to make me smile.",
    "Here is the {kw} that everyone keeps asking me about, hope you like it too.",
    "A little moment with the {kw} before the weekend starts, simple things are the best.",
)

_FEED_FOREIGN_TEMPLATES = (
    "Ecco il mio {kw} preferito, nessuna giornata senza di lui, che meraviglia davvero.",
    "Mira este {kw} tan bonito, jamas pense encontrar algo asi, pura felicidad siempre.",
)

_SECONDARY_LABELS = ("table", "grass", "window", "hand", "sky", "light")


def default_feed(topic: Topic, rng: np.random.Generator, size: int = 25) -> list[StubFeedItem]:
    """Synthetic top feed for one topic.

    Most items are usable; a few are planted failures (foreign-language
    caption or a weak top detection) so retry paths get exercised.
    """
    kw = topic.name
    items = []
    for i in range(size):
        roll = rng.random()
        if roll < 0.08:
            caption = _FEED_FOREIGN_TEMPLATES[int(rng.integers(len(_FEED_FOREIGN_TEMPLATES)))].format(kw=kw)
            top = Detection(kw, float(rng.uniform(0.4, 0.9)))
        elif roll < 0.16:
            caption = _FEED_CAPTION_TEMPLATES[int(rng.integers(len(_FEED_CAPTION_TEMPLATES)))].format(kw=kw)
            top = Detection(kw, float(rng.uniform(0.05, 0.24)))
        else:
            caption = _FEED_CAPTION_TEMPLATES[int(rng.integers(len(_FEED_CAPTION_TEMPLATES)))].format(kw=kw)
            top = Detection(kw, float(rng.uniform(0.3, 0.95)))
        extras = tuple(
            Detection(lbl, float(rng.uniform(0.01, 0.2)))
            for lbl in rng.choice(_SECONDARY_LABELS, size=2, replace=False)
        )
        detections = tuple(sorted((top,) + extras, key=lambda d: d.score, reverse=True))
        items.append(StubFeedItem(post_id=f"feed-{topic.name}-{i:02d}", caption=caption, detections=detections))
    return items


_REPHRASE_MAP = {
    "amazing": "incredible",
    "favorite": "beloved",
    "lovely": "charming",
    "best": "finest",
    "beats": "tops",
    "quiet": "calm",
    "simple": "plain",
    "little": "small",
}


def default_rephrase(text: str) -> str:
    """Deterministic stand-in for a paraphrase model."""
    def swap(match: re.Match) -> str:
        word = match.group(0)
        repl = _REPHRASE_MAP.get(word.lower())
        if repl is None:
            return word
        return repl.capitalize() if word[0].isupper() else repl

    return re.sub(r"[A-Za-z']+", swap, text)


def default_keyword_to_text(keywords: Sequence[str]) -> str:
    """Deterministic stand-in for a keyword-to-text model."""
    if not keywords:
        return "A lovely scene to share with you all."
    if len(keywords) == 1:
        return f"A lovely {keywords[0]} to brighten your feed today."
    rest = keywords[-1] if len(keywords) == 2 else ", ".join(keywords[1:-1]) + f" and {keywords[-1]}"
    return f"A lovely {keywords[0]} with the {rest} in the frame today."


# Appeal Beta parameters per strategy before calibration.  The non-AI
# strategies sit higher: stock photography and ready-made quotes read as
# more polished than generated media.
DEFAULT_APPEAL_PARAMS: dict[Strategy, tuple[float, float]] = {
    Strategy.INSTA: (2.4, 2.6),
    Strategy.ART: (2.2, 2.8),
    Strategy.UNSPLASH: (3.4, 1.9),
    Strategy.QUOTES: (3.1, 2.0),
}


@dataclass
class StubEnvironment:
    """Everything generate_post needs from the outside world."""

    cta_pool: tuple[str, ...] = field(default_factory=load_cta_pool)
    joy_pool: tuple[str, ...] = field(default_factory=load_joy_pool)
    emoji_map: dict[str, str] = field(default_factory=load_emoji_map)
    quote_pool: tuple[tuple[str, str], ...] = field(default_factory=load_quote_pool)
    style_pool: tuple[str, ...] = field(default_factory=load_style_pool)
    medium_pool: tuple[str, ...] = field(default_factory=load_medium_pool)
    excluded_words: tuple[str, ...] = field(default_factory=load_excluded_words)
    stopwords: frozenset[str] = field(default_factory=load_stopwords)
    appeal_params: dict[Strategy, tuple[float, float]] = field(
        default_factory=lambda: dict(DEFAULT_APPEAL_PARAMS)
    )
    feed_factory: Callable[[Topic, np.random.Generator], list[StubFeedItem]] = default_feed
    rephrase: Callable[[str], str] = default_rephrase
    keyword_to_text: Callable[[Sequence[str]], str] = default_keyword_to_text
    stock: StockLibrary = field(default_factory=lambda: StockLibrary("unsplash"))

    def feed(self, topic: Topic, rng: np.random.Generator) -> list[StubFeedItem]:
        return self.feed_factory(topic, rng)


# ---------------------------------------------------------------------------
# Strategy pipelines
# ---------------------------------------------------------------------------


def _draw_appeal(strategy: Strategy, env: StubEnvironment, rng: np.random.Generator) -> float:
    a, b = env.appeal_params[strategy]
    return float(rng.beta(a, b))


def _finish_caption(
    body: str,
    topic: Topic,
    env: StubEnvironment,
    rng: np.random.Generator,
    is_quote: bool,
) -> Caption:
    hashtags = tuple(select_hashtags(topic.hashtag_pool, rng))
    cta = env.cta_pool[int(rng.integers(len(env.cta_pool)))] if env.cta_pool else None
    emoji_count = 0
    if not is_quote:
        body, emoji_count = _insert_emojis_counted(body, env.emoji_map, env.joy_pool, rng)
    if cta is not None:
        body = f"{body} {cta}"
    return Caption(body=body, hashtags=hashtags, cta=cta, emoji_count=emoji_count, is_quote=is_quote)


def _detection_affinity(detections: Sequence[Detection]) -> float:
    return max(0.0, min(1.0, max(d.score for d in detections)))


def generate_post(
    strategy: Strategy,
    topic: Topic,
    env: StubEnvironment,
    rng: np.random.Generator,
) -> PostDraft:
    """Run one strategy pipeline and return a PostDraft.

    The caption-first strategies seed from text (a popular post's caption
    or an art prompt); the image-first strategies start from an image
    (stock draw or quote card) and synthesize the caption.  The feed
    strategy retries across its 25 candidates when the keyword filter
    discards one, the caption fails the English check, or it uses an
    excluded word.

    Raises :class:`ExhaustedFeed` when no feed candidate survives and
    :class:`ExhaustedStockLibrary` when the stock pool runs dry.
    """
    appeal = _draw_appeal(strategy, env, rng)

    if strategy is Strategy.INSTA:
        items = env.feed(topic, rng)
        order = rng.permutation(len(items))
        for idx in order:
            item = items[idx]
            kept = keyword_filter(item.detections)
            if kept is None:
                continue
            if not english_caption(item.caption, env.stopwords):
                continue
            if contains_excluded_word(item.caption, env.excluded_words):
                continue
            body = env.rephrase(item.caption)
            caption = _finish_caption(body, topic, env, rng, is_quote=False)
            descriptor = ContentDescriptor(
                appeal=appeal,
                topic_affinity=_detection_affinity(item.detections),
                caption=caption,
                provenance=strategy,
            )
            return PostDraft(content=descriptor, image_id=None, source_ref=item.post_id)
        raise ExhaustedFeed(f"no usable candidate among {len(items)} feed items")

    if strategy is Strategy.ART:
        style = env.style_pool[int(rng.integers(len(env.style_pool)))]
        medium = env.medium_pool[int(rng.integers(len(env.medium_pool)))]
        prompt = art_prompt(topic.name, style, medium, env.style_pool, env.medium_pool)
        caption = _finish_caption(prompt.capitalize() + ".", topic, env, rng, is_quote=False)
        descriptor = ContentDescriptor(
            appeal=appeal,
            topic_affinity=float(rng.uniform(0.7, 1.0)),
            caption=caption,
            provenance=strategy,
        )
        return PostDraft(content=descriptor, image_id=None, source_ref=prompt)

    if strategy is Strategy.UNSPLASH:
        image_id = env.stock.draw()
        detections = tuple(
            sorted(
                (
                    Detection(topic.name, float(rng.uniform(0.4, 0.95))),
                    Detection(
                        str(rng.choice(_SECONDARY_LABELS)), float(rng.uniform(0.02, 0.3))
                    ),
                ),
                key=lambda d: d.score,
                reverse=True,
            )
        )
        kept = keyword_filter(detections) or [topic.name]
        body = env.keyword_to_text(kept)
        caption = _finish_caption(body, topic, env, rng, is_quote=False)
        descriptor = ContentDescriptor(
            appeal=appeal,
            topic_affinity=_detection_affinity(detections),
            caption=caption,
            provenance=strategy,
        )
        return PostDraft(content=descriptor, image_id=image_id, source_ref=image_id)

    if strategy is Strategy.QUOTES:
        text, author = sample_quote(env.quote_pool, rng)
        hashtags = tuple(select_hashtags(topic.hashtag_pool, rng))
        cta = env.cta_pool[int(rng.integers(len(env.cta_pool)))] if env.cta_pool else None
        body = f"“{text}” — {author}"
        if cta is not None:
            body = f"{body} {cta}"
        caption = Caption(body=body, hashtags=hashtags, cta=cta, emoji_count=0, is_quote=True)
        descriptor = ContentDescriptor(
            appeal=appeal,
            topic_affinity=float(rng.uniform(0.5, 0.85)),
            caption=caption,
            provenance=strategy,
        )
        return PostDraft(content=descriptor, image_id=None, source_ref=author)

    raise ValueError(f"unknown strategy {strategy!r}")


# ---------------------------------------------------------------------------
# Owner review
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReviewPolicy:
    """Owner gate: approve everything, or reject drafts below a threshold."""

    min_appeal: Optional[float] = None

    @classmethod
    def auto_approve(cls) -> "ReviewPolicy":
        return cls(min_appeal=None)

    @classmethod
    def reject_below(cls, threshold: float) -> "ReviewPolicy":
        return cls(min_appeal=float(threshold))


class ReviewDecision(Enum):
    APPROVED = "approved"
    REGENERATE = "regenerate"


def owner_review(draft: PostDraft, policy: ReviewPolicy) -> ReviewDecision:
    """Single review decision for one draft under a policy."""
    if policy.min_appeal is None or draft.content.appeal >= policy.min_appeal:
        return ReviewDecision.APPROVED
    return ReviewDecision.REGENERATE


def generate_approved_post(
    strategy: Strategy,
    topic: Topic,
    env: StubEnvironment,
    rng: np.random.Generator,
    policy: Optional[ReviewPolicy] = None,
    max_retries: int = REVIEW_MAX_RETRIES,
) -> PostDraft:
    """Generate drafts until the owner approves one.

    Raises :class:`RetriesExhausted` when ``max_retries`` drafts in a row
    are rejected.
    """
    policy = policy or ReviewPolicy.auto_approve()
    for _ in range(max_retries):
        draft = generate_post(strategy, topic, env, rng)
        if owner_review(draft, policy) is ReviewDecision.APPROVED:
            return draft
    raise RetriesExhausted(f"owner rejected {max_retries} consecutive drafts")
