"""Experiment configuration: schema, validation, presets and file I/O.

A config is a versioned YAML mapping.  Topics may be referenced by name
(resolved against the bundled hashtag pool table) or declared inline with
an explicit pool.  ``preset: paper-testbed`` expands to the 21-honeypot
field-study grid; scalar keys (seed, replicates, ...) override preset
defaults.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from functools import lru_cache
from pathlib import Path
from typing import Mapping, Sequence, Union

import yaml

from .behavior import PAPER_PROFILE_NAME
from .content import FIXTURES, Strategy
from .core import HoneysimError, Topic, ValidationError
from .plans import Plan

__all__ = [
    "ParseError",
    "CONFIG_VERSION",
    "STRATEGY_BY_NAME",
    "STRATEGY_MIX_AI",
    "STRATEGY_MIX_NONAI",
    "STRATEGY_MIX_ALL",
    "strategy_for",
    "strategy_class",
    "load_topic_pools",
    "topic_from_name",
    "HoneypotSpec",
    "ExperimentConfig",
    "load_config",
    "write_config",
    "preset_paper_testbed",
    "PRESET_NAMES",
]


class ParseError(HoneysimError):
    """The config file is not syntactically valid."""


CONFIG_VERSION = 1

# Canonical content-strategy names as they appear in configs and reports.
STRATEGY_BY_NAME: dict[str, Strategy] = {
    "InstaModel": Strategy.INSTA,
    "ArtModel": Strategy.ART,
    "UnsplashModel": Strategy.UNSPLASH,
    "QuotesModel": Strategy.QUOTES,
}
_NAME_BY_STRATEGY = {v: k for k, v in STRATEGY_BY_NAME.items()}

STRATEGY_MIX_NONAI: tuple[str, ...] = ("UnsplashModel", "QuotesModel")
STRATEGY_MIX_AI: tuple[str, ...] = ("InstaModel", "ArtModel")
STRATEGY_MIX_ALL: tuple[str, ...] = (
    "InstaModel",
    "ArtModel",
    "UnsplashModel",
    "QuotesModel",
)


def strategy_for(name: str) -> Strategy:
    """Resolve a canonical model name to its pipeline strategy."""
    try:
        return STRATEGY_BY_NAME[name]
    except KeyError:
        known = ", ".join(sorted(STRATEGY_BY_NAME))
        raise ValidationError(f"unknown strategy {name!r} (known: {known})") from None


def strategy_class(strategies: Sequence[str]) -> str:
    """Group label for a strategy mix: AI, NonAI or Mixed."""
    flags = {strategy_for(name).ai_based for name in strategies}
    if flags == {True}:
        return "AI"
    if flags == {False}:
        return "NonAI"
    return "Mixed"


@lru_cache(maxsize=1)
def load_topic_pools() -> dict[str, tuple[tuple[str, int], ...]]:
    """Bundled hashtag pools keyed by topic name."""
    pools: dict[str, list[tuple[str, int]]] = {}
    path = FIXTURES / "hashtag_pools.tsv"
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line:
            continue
        topic, tag, count = line.split("\t")
        pools.setdefault(topic, []).append((tag, int(count)))
    return {name: tuple(rows) for name, rows in pools.items()}


def topic_from_name(name: str) -> Topic:
    pools = load_topic_pools()
    if name not in pools:
        known = ", ".join(sorted(pools))
        raise ValidationError(f"unknown topic {name!r} (known: {known})")
    return Topic(name=name, hashtag_pool=pools[name])


@dataclass(frozen=True)
class HoneypotSpec:
    """One honeypot row: identity, topic, content mix and plan."""

    id: str
    topic: str
    strategies: tuple[str, ...]
    plan: Plan

    def __post_init__(self) -> None:
        if not self.id:
            raise ValidationError("honeypot id must be non-empty")
        if not self.strategies:
            raise ValidationError(f"honeypot {self.id!r} needs a non-empty strategy mix")
        for name in self.strategies:
            strategy_for(name)
        if len(set(self.strategies)) != len(self.strategies):
            raise ValidationError(f"honeypot {self.id!r} repeats a strategy")

    @property
    def strategy_class(self) -> str:
        return strategy_class(self.strategies)


@dataclass(frozen=True)
class ExperimentConfig:
    """A validated experiment: topics, honeypots and run controls."""

    topics: tuple[Topic, ...]
    honeypots: tuple[HoneypotSpec, ...]
    horizon_days: int = 63
    replicates: int = 1
    seed: int = 0
    profile: str = "default"
    population_size: int = 10_000

    def __post_init__(self) -> None:
        if self.horizon_days < 1:
            raise ValidationError(f"horizon_days must be >= 1, got {self.horizon_days}")
        if self.replicates < 1:
            raise ValidationError(f"replicates must be >= 1, got {self.replicates}")
        if self.population_size < 100:
            raise ValidationError(
                f"population_size must be >= 100, got {self.population_size}"
            )
        if not self.topics:
            raise ValidationError("at least one topic required")
        if not self.honeypots:
            raise ValidationError("at least one honeypot required")
        names = [t.name for t in self.topics]
        if len(set(names)) != len(names):
            raise ValidationError("topic names must be unique")
        seen: dict[str, int] = {}
        for spec in self.honeypots:
            seen[spec.id] = seen.get(spec.id, 0) + 1
        dupes = sorted(hid for hid, n in seen.items() if n > 1)
        if dupes:
            raise ValidationError(f"duplicate honeypot ids: {', '.join(dupes)}")
        known = set(names)
        for i, spec in enumerate(self.honeypots):
            if spec.topic not in known:
                raise ValidationError(
                    f"honeypots[{i}].topic: {spec.topic!r} not in configured topics"
                )

    def topic(self, name: str) -> Topic:
        for t in self.topics:
            if t.name == name:
                return t
        raise ValidationError(f"unknown topic {name!r}")

    def spec(self, honeypot_id: str) -> HoneypotSpec:
        for s in self.honeypots:
            if s.id == honeypot_id:
                return s
        raise ValidationError(f"unknown honeypot {honeypot_id!r}")

    def to_mapping(self) -> dict:
        """Plain mapping mirror of the YAML schema."""
        builtin = load_topic_pools()
        topics: list[object] = []
        for t in self.topics:
            if builtin.get(t.name) == t.hashtag_pool:
                topics.append(t.name)
            else:
                topics.append(
                    {"name": t.name, "hashtags": [[tag, n] for tag, n in t.hashtag_pool]}
                )
        return {
            "version": CONFIG_VERSION,
            "seed": self.seed,
            "replicates": self.replicates,
            "horizon_days": self.horizon_days,
            "population_size": self.population_size,
            "profile": self.profile,
            "topics": topics,
            "honeypots": [
                {
                    "id": s.id,
                    "topic": s.topic,
                    "strategies": list(s.strategies),
                    "plan": s.plan.value,
                }
                for s in self.honeypots
            ],
        }

    def digest(self) -> str:
        """Stable short hash of the config contents."""
        blob = json.dumps(self.to_mapping(), sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()[:12]


# ---------------------------------------------------------------------------
# Presets
# ---------------------------------------------------------------------------

# Per-topic deployment grid of the field study: strategy mix and plan for
# the seven honeypots each topic gets, in table order.
_GRID: tuple[tuple[tuple[str, ...], Plan], ...] = (
    (STRATEGY_MIX_NONAI, Plan.PLAN0),
    (STRATEGY_MIX_NONAI, Plan.PLAN1),
    (STRATEGY_MIX_NONAI, Plan.PLAN2),
    (STRATEGY_MIX_AI, Plan.PLAN0),
    (STRATEGY_MIX_AI, Plan.PLAN1),
    (STRATEGY_MIX_AI, Plan.PLAN2),
    (STRATEGY_MIX_ALL, Plan.PLAN2),
)

PRESET_TOPIC_ORDER: tuple[str, ...] = ("food", "cat", "car")


def preset_paper_testbed(
    seed: int = 0,
    replicates: int = 1,
    profile: str = PAPER_PROFILE_NAME,
) -> ExperimentConfig:
    """The 21-honeypot deployment grid: 7 per topic over food/cat/car.

    Ids run h1..h21 in topic-major order; h1, h8 and h15 are the
    stock-photo/quote Plan-0 baselines of their topics.
    """
    specs: list[HoneypotSpec] = []
    n = 0
    for topic in PRESET_TOPIC_ORDER:
        for strategies, plan in _GRID:
            n += 1
            specs.append(
                HoneypotSpec(id=f"h{n}", topic=topic, strategies=strategies, plan=plan)
            )
    return ExperimentConfig(
        topics=tuple(topic_from_name(t) for t in PRESET_TOPIC_ORDER),
        honeypots=tuple(specs),
        horizon_days=63,
        replicates=replicates,
        seed=seed,
        profile=profile,
        population_size=10_000,
    )


PRESET_NAMES: dict[str, object] = {"paper-testbed": preset_paper_testbed}

BASELINE_IDS: tuple[str, ...] = ("h1", "h8", "h15")


# ---------------------------------------------------------------------------
# Loading and writing
# ---------------------------------------------------------------------------

_TOP_KEYS = {
    "version",
    "preset",
    "seed",
    "replicates",
    "horizon_days",
    "population_size",
    "profile",
    "topics",
    "honeypots",
}
_HONEYPOT_KEYS = {"id", "topic", "strategies", "plan"}
_TOPIC_KEYS = {"name", "hashtags"}

_SCALAR_OVERRIDES = ("seed", "replicates", "horizon_days", "population_size", "profile")


def _fail(path: str, message: str) -> None:
    raise ValidationError(f"{path}: {message}")


def _require_int(value: object, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(path, f"expected an integer, got {value!r}")
    return int(value)


def _require_str(value: object, path: str) -> str:
    if not isinstance(value, str) or not value:
        _fail(path, f"expected a non-empty string, got {value!r}")
    return str(value)


def _parse_topic(entry: object, path: str) -> Topic:
    if isinstance(entry, str):
        try:
            return topic_from_name(entry)
        except ValidationError as exc:
            _fail(path, str(exc))
    if not isinstance(entry, Mapping):
        _fail(path, "expected a topic name or a {name, hashtags} mapping")
    unknown = set(entry) - _TOPIC_KEYS
    if unknown:
        _fail(path, f"unknown keys: {', '.join(sorted(unknown))}")
    name = _require_str(entry.get("name"), f"{path}.name")
    rows = entry.get("hashtags")
    if not isinstance(rows, list) or not rows:
        _fail(f"{path}.hashtags", "expected a non-empty list of [tag, count] pairs")
    pool: list[tuple[str, int]] = []
    for j, row in enumerate(rows):
        if not isinstance(row, (list, tuple)) or len(row) != 2:
            _fail(f"{path}.hashtags[{j}]", f"expected [tag, count], got {row!r}")
        tag = _require_str(row[0], f"{path}.hashtags[{j}][0]")
        count = _require_int(row[1], f"{path}.hashtags[{j}][1]")
        pool.append((tag, count))
    try:
        return Topic(name=name, hashtag_pool=tuple(pool))
    except HoneysimError as exc:
        _fail(path, str(exc))
    raise AssertionError("unreachable")


def _parse_honeypot(entry: object, path: str) -> HoneypotSpec:
    if not isinstance(entry, Mapping):
        _fail(path, "expected a mapping")
    unknown = set(entry) - _HONEYPOT_KEYS
    if unknown:
        _fail(path, f"unknown keys: {', '.join(sorted(unknown))}")
    for key in _HONEYPOT_KEYS:
        if key not in entry:
            _fail(path, f"missing key {key!r}")
    hid = _require_str(entry["id"], f"{path}.id")
    topic = _require_str(entry["topic"], f"{path}.topic")
    raw = entry["strategies"]
    if not isinstance(raw, list) or not raw:
        _fail(f"{path}.strategies", "expected a non-empty list of strategy names")
    strategies = tuple(
        _require_str(s, f"{path}.strategies[{j}]") for j, s in enumerate(raw)
    )
    for j, name in enumerate(strategies):
        if name not in STRATEGY_BY_NAME:
            known = ", ".join(sorted(STRATEGY_BY_NAME))
            _fail(
                f"{path}.strategies[{j}]",
                f"unknown strategy {name!r} (known: {known})",
            )
    plan_name = _require_str(entry["plan"], f"{path}.plan")
    try:
        plan = Plan(plan_name)
    except ValueError:
        _fail(f"{path}.plan", f"unknown plan {plan_name!r}")
    try:
        return HoneypotSpec(id=hid, topic=topic, strategies=strategies, plan=plan)
    except HoneysimError as exc:
        _fail(path, str(exc))
    raise AssertionError("unreachable")


def _config_from_mapping(data: Mapping) -> ExperimentConfig:
    unknown = set(data) - _TOP_KEYS
    if unknown:
        _fail("config", f"unknown keys: {', '.join(sorted(unknown))}")
    version = _require_int(data.get("version"), "version")
    if version != CONFIG_VERSION:
        _fail("version", f"unsupported config version {version}, expected {CONFIG_VERSION}")

    preset_name = data.get("preset")
    if preset_name is not None:
        if "topics" in data or "honeypots" in data:
            _fail("preset", "preset cannot be combined with explicit topics/honeypots")
        name = _require_str(preset_name, "preset")
        if name not in PRESET_NAMES:
            _fail("preset", f"unknown preset {name!r}")
        config = PRESET_NAMES[name]()
        overrides = {}
        for key in _SCALAR_OVERRIDES:
            if key in data:
                if key == "profile":
                    overrides[key] = _require_str(data[key], key)
                else:
                    overrides[key] = _require_int(data[key], key)
        try:
            return replace(config, **overrides) if overrides else config
        except HoneysimError as exc:
            _fail("config", str(exc))

    raw_topics = data.get("topics")
    if not isinstance(raw_topics, list) or not raw_topics:
        _fail("topics", "expected a non-empty list")
    topics = tuple(_parse_topic(t, f"topics[{i}]") for i, t in enumerate(raw_topics))

    raw_hps = data.get("honeypots")
    if not isinstance(raw_hps, list) or not raw_hps:
        _fail("honeypots", "expected a non-empty list")
    honeypots = tuple(
        _parse_honeypot(h, f"honeypots[{i}]") for i, h in enumerate(raw_hps)
    )

    kwargs = {}
    for key, default in (
        ("seed", 0),
        ("replicates", 1),
        ("horizon_days", 63),
        ("population_size", 10_000),
    ):
        kwargs[key] = _require_int(data[key], key) if key in data else default
    profile = _require_str(data["profile"], "profile") if "profile" in data else "default"

    try:
        return ExperimentConfig(
            topics=topics, honeypots=honeypots, profile=profile, **kwargs
        )
    except ValidationError as exc:
        # surface aggregate invariant failures (duplicate ids, topic refs)
        # under the honeypots path so the message points at the list
        raise ValidationError(f"honeypots: {exc}") from None


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    """Load and validate a YAML experiment config.

    Raises :class:`ParseError` when the file is not valid YAML and
    :class:`ValidationError` (with a field path) when the content does
    not satisfy the schema.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read config {path}: {exc}") from exc
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ParseError(f"invalid YAML in {path}: {exc}") from exc
    if not isinstance(data, Mapping):
        raise ParseError(f"config root must be a mapping, got {type(data).__name__}")
    return _config_from_mapping(data)


def write_config(config: ExperimentConfig, path: Union[str, Path]) -> Path:
    """Write a config as YAML; load_config reads it back identically."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        yaml.safe_dump(config.to_mapping(), sort_keys=False, allow_unicode=True),
        encoding="utf-8",
    )
    return path
