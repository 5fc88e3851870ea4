"""Run evaluation: rate metrics, trend tables, factorial tests, insights.

Everything here consumes either in-memory RunRecords or their exported
CSV artifacts; both paths produce byte-identical reports, which is what
makes the CSV round-trip checkable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from .config import ExperimentConfig
from .core import (
    INBOUND_EVENT_KINDS,
    Honeypot,
    HoneysimError,
    ValidationError,
)
from .engine import RunRecord
from .population import Population
from .stats import (
    AdfClassification,
    AnovaTable,
    DegenerateData,
    DegenerateSeries,
    MissingLevels,
    SeriesTooShort,
    TukeyResult,
    adf_test,
    anova3,
    tukey_hsd,
)

__all__ = [
    "DivisionDomain",
    "interactions_per_week",
    "HoneypotSeries",
    "series_from_run",
    "RunTotals",
    "totals_from_run",
    "classify_trend",
    "TrendRow",
    "TrendTable",
    "trend_table",
    "TREND_CSV_HEADER",
    "Insights",
    "Unavailable",
    "audience_insights",
    "INSIGHTS_MIN_FOLLOWERS",
    "format_p",
    "anova_text",
    "tukey_text",
    "posts_anova",
    "followers_anova",
    "posts_tukey",
    "likes_per_week_by_plan",
    "analytics_report",
    "load_series_csv",
    "load_cumulative_likes",
    "load_totals_csv",
]


class DivisionDomain(HoneysimError):
    """Rate denominator outside its domain."""


# ---------------------------------------------------------------------------
# Rate metrics
# ---------------------------------------------------------------------------


def interactions_per_week(
    total_interactions: Union[int, float],
    honeypots: int,
    weeks: float,
    decimals: Optional[int] = None,
) -> float:
    """Interactions per honeypot per week; optionally rounded for reports."""
    if honeypots < 1:
        raise DivisionDomain(f"honeypots must be >= 1, got {honeypots}")
    if weeks <= 0:
        raise DivisionDomain(f"weeks must be > 0, got {weeks}")
    rate = total_interactions / (honeypots * weeks)
    return round(rate, decimals) if decimals is not None else rate


# ---------------------------------------------------------------------------
# Per-honeypot series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HoneypotSeries:
    """The three engagement series of one honeypot, with its group labels."""

    honeypot_id: str
    topic: str
    strategy_class: str
    plan: str
    followers: tuple[int, ...]
    post_likes: tuple[int, ...]
    post_comments: tuple[int, ...]

    @property
    def final_followers(self) -> int:
        return self.followers[-1] if self.followers else 0

    @property
    def total_likes(self) -> int:
        return sum(self.post_likes)

    @property
    def total_comments(self) -> int:
        return sum(self.post_comments)


def series_from_run(record: RunRecord) -> list[HoneypotSeries]:
    out = []
    for h in record.honeypots:
        spec = record.spec(h.id)
        out.append(
            HoneypotSeries(
                honeypot_id=h.id,
                topic=spec.topic,
                strategy_class=spec.strategy_class,
                plan=spec.plan.value,
                followers=tuple(s.followers_analytic for s in h.snapshots),
                post_likes=tuple(p.likes for p in h.posts),
                post_comments=tuple(p.comment_count for p in h.posts),
            )
        )
    return out


@dataclass(frozen=True)
class RunTotals:
    """Aggregate interaction counts of one run, ready for rate reporting."""

    interactions: int
    likes: int
    comments: int
    follows: int
    honeypots: int
    weeks: float


def totals_from_run(record: RunRecord) -> RunTotals:
    honeypot_ids = {h.id for h in record.honeypots}
    likes = comments = follows = 0
    for e in record.events:
        if e.kind not in INBOUND_EVENT_KINDS or e.actor in honeypot_ids:
            continue
        if e.kind.value == "like":
            likes += 1
        elif e.kind.value == "comment":
            comments += 1
        else:
            follows += 1
    return RunTotals(
        interactions=likes + comments + follows,
        likes=likes,
        comments=comments,
        follows=follows,
        honeypots=len(record.honeypots),
        weeks=record.config.horizon_days / 7.0,
    )


# ---------------------------------------------------------------------------
# Trend table
# ---------------------------------------------------------------------------


def classify_trend(series: Sequence[float], lag: int = 1) -> tuple[str, bool]:
    """ADF classification with the degenerate-series escape hatch.

    Constant (or too-short) series come back Stationary with the
    degenerate flag set instead of raising, so a full table always
    renders.
    """
    try:
        result = adf_test(series, lag=lag)
    except (DegenerateSeries, SeriesTooShort):
        return AdfClassification.STATIONARY.value, True
    return result.classification.value, False


TREND_CSV_HEADER = (
    "group,followers_mean,followers_std,comments_mean,comments_std,"
    "likes_mean,likes_std,ns_followers,ns_comments,ns_likes"
)


@dataclass(frozen=True)
class TrendRow:
    group: str
    kind: str
    count: int
    followers_mean: float
    followers_std: float
    comments_mean: float
    comments_std: float
    likes_mean: float
    likes_std: float
    ns_followers: int
    ns_comments: int
    ns_likes: int
    degenerate_followers: int = 0
    degenerate_comments: int = 0
    degenerate_likes: int = 0

    def csv_line(self) -> str:
        return (
            f"{self.group},{self.followers_mean:.1f},{self.followers_std:.1f},"
            f"{self.comments_mean:.1f},{self.comments_std:.1f},"
            f"{self.likes_mean:.1f},{self.likes_std:.1f},"
            f"{self.ns_followers},{self.ns_comments},{self.ns_likes}"
        )


@dataclass(frozen=True)
class TrendTable:
    rows: tuple[TrendRow, ...]

    def row(self, group: str) -> TrendRow:
        for r in self.rows:
            if r.group == group:
                return r
        raise KeyError(group)

    def csv(self) -> str:
        lines = [TREND_CSV_HEADER]
        lines.extend(r.csv_line() for r in self.rows)
        return "\n".join(lines) + "\n"

    def text(self) -> str:
        lines = [
            f"{'group':<10s} {'n':>3s} {'followers':>16s} {'comments':>18s} "
            f"{'likes':>18s} {'NS f/c/l':>10s}"
        ]
        for r in self.rows:
            lines.append(
                f"{r.group:<10s} {r.count:>3d} "
                f"{r.followers_mean:>7.1f} ± {r.followers_std:<6.1f} "
                f"{r.comments_mean:>8.1f} ± {r.comments_std:<7.1f} "
                f"{r.likes_mean:>8.1f} ± {r.likes_std:<7.1f} "
                f"{r.ns_followers}/{r.ns_comments}/{r.ns_likes} of {r.count}"
            )
        return "\n".join(lines) + "\n"


def _mean_std(values: Sequence[float]) -> tuple[float, float]:
    arr = np.asarray(values, dtype=float)
    mean = float(arr.mean())
    std = float(arr.std(ddof=1)) if len(arr) > 1 else 0.0
    return mean, std


def _trend_row(group: str, kind: str, members: Sequence[HoneypotSeries]) -> TrendRow:
    f_mean, f_std = _mean_std([s.final_followers for s in members])
    c_mean, c_std = _mean_std([s.total_comments for s in members])
    l_mean, l_std = _mean_std([s.total_likes for s in members])
    ns = {"followers": 0, "comments": 0, "likes": 0}
    deg = {"followers": 0, "comments": 0, "likes": 0}
    for s in members:
        for metric, series in (
            ("followers", s.followers),
            ("comments", s.post_comments),
            ("likes", s.post_likes),
        ):
            label, degenerate = classify_trend(series)
            if label == AdfClassification.NON_STATIONARY.value:
                ns[metric] += 1
            if degenerate:
                deg[metric] += 1
    return TrendRow(
        group=group,
        kind=kind,
        count=len(members),
        followers_mean=f_mean,
        followers_std=f_std,
        comments_mean=c_mean,
        comments_std=c_std,
        likes_mean=l_mean,
        likes_std=l_std,
        ns_followers=ns["followers"],
        ns_comments=ns["comments"],
        ns_likes=ns["likes"],
        degenerate_followers=deg["followers"],
        degenerate_comments=deg["comments"],
        degenerate_likes=deg["likes"],
    )


def trend_table(series: Sequence[HoneypotSeries]) -> TrendTable:
    """Group means ± std plus NonStationary counts, Table-2 layout.

    Rows: one per topic, strategy class and plan (in first-seen order),
    then an "All" row over every honeypot.
    """
    if not series:
        raise ValidationError("trend table needs at least one honeypot series")
    rows: list[TrendRow] = []
    for kind, key in (
        ("topic", lambda s: s.topic),
        ("strategy", lambda s: s.strategy_class),
        ("plan", lambda s: s.plan),
    ):
        seen: dict[str, list[HoneypotSeries]] = {}
        for s in series:
            seen.setdefault(key(s), []).append(s)
        for label, members in seen.items():
            rows.append(_trend_row(label, kind, members))
    rows.append(_trend_row("All", "all", list(series)))
    return TrendTable(rows=tuple(rows))


# ---------------------------------------------------------------------------
# Audience insights
# ---------------------------------------------------------------------------

INSIGHTS_MIN_FOLLOWERS = 100


@dataclass(frozen=True)
class Unavailable:
    """Insights are gated until the account has enough organic reach."""

    reason: str


@dataclass(frozen=True)
class Insights:
    """Demographic splits of a honeypot's organic followers (percent)."""

    followers: int
    genders: tuple[tuple[str, float], ...]
    ages: tuple[tuple[str, float], ...]
    regions: tuple[tuple[str, float], ...]

    def age_share(self, bucket: str) -> float:
        for label, share in self.ages:
            if label == bucket:
                return share
        return 0.0

    @property
    def top_region(self) -> tuple[str, float]:
        return max(self.regions, key=lambda kv: (kv[1], kv[0]))


def _distribution(labels: Sequence[str]) -> tuple[tuple[str, float], ...]:
    counts: dict[str, int] = {}
    for label in labels:
        counts[label] = counts.get(label, 0) + 1
    total = len(labels)
    dist = [(label, round(100.0 * n / total, 1)) for label, n in counts.items()]
    dist.sort(key=lambda kv: (-kv[1], kv[0]))
    return tuple(dist)


def audience_insights(
    h: Honeypot, population: Population
) -> Union[Insights, Unavailable]:
    """Follower demographics, or Unavailable below 100 organic followers."""
    organic = [aid for aid, entry in h.followers.items() if not entry.purchased]
    if len(organic) < INSIGHTS_MIN_FOLLOWERS:
        return Unavailable(
            f"insights need {INSIGHTS_MIN_FOLLOWERS} organic followers, "
            f"have {len(organic)}"
        )
    genders: list[str] = []
    ages: list[str] = []
    regions: list[str] = []
    for aid in organic:
        agent = population.agent(aid)
        if agent.gender is not None:
            genders.append(agent.gender.value)
        if agent.age_bucket:
            ages.append(agent.age_bucket)
        if agent.region:
            regions.append(agent.region)
    return Insights(
        followers=len(organic),
        genders=_distribution(genders),
        ages=_distribution(ages),
        regions=_distribution(regions),
    )


# ---------------------------------------------------------------------------
# Factorial tests over runs
# ---------------------------------------------------------------------------

_FACTORS = ("topic", "strategy", "plan")


def posts_anova(series: Sequence[HoneypotSeries]) -> AnovaTable:
    """Three-way ANOVA over per-post likes."""
    obs = [
        (float(likes), s.topic, s.strategy_class, s.plan)
        for s in series
        for likes in s.post_likes
    ]
    return anova3(obs, factor_names=_FACTORS)


def followers_anova(series: Sequence[HoneypotSeries]) -> AnovaTable:
    """Three-way ANOVA over final follower counts.

    Needs replicated honeypots (several series per design cell) to leave
    residual degrees of freedom.
    """
    obs = [
        (float(s.final_followers), s.topic, s.strategy_class, s.plan) for s in series
    ]
    return anova3(obs, factor_names=_FACTORS)


def posts_tukey(
    series: Sequence[HoneypotSeries], by: str = "plan", alpha: float = 0.05
) -> TukeyResult:
    """Tukey HSD over per-post likes grouped by one design factor."""
    keyfn = {
        "plan": lambda s: s.plan,
        "topic": lambda s: s.topic,
        "strategy": lambda s: s.strategy_class,
    }[by]
    groups: dict[str, list[float]] = {}
    for s in series:
        groups.setdefault(keyfn(s), []).extend(float(v) for v in s.post_likes)
    ordered = sorted(groups.items())
    return tukey_hsd([(label, values) for label, values in ordered], alpha=alpha)


# ---------------------------------------------------------------------------
# Report rendering
# ---------------------------------------------------------------------------


def format_p(p: float, floor: float = 0.001) -> str:
    """Report-style p-value: values below resolution print as a floor."""
    if p < floor:
        return f"<= {floor}"
    return f"{p:.3f}"


def anova_text(table: AnovaTable) -> str:
    lines = [f"{'effect':<24s} {'SS':>12s} {'df':>4s} {'F':>10s} {'p':>9s}"]
    for row in table.rows:
        if row.df <= 0 or math.isnan(row.F):
            f_txt, p_txt = "-", "-"
        else:
            f_txt, p_txt = f"{row.F:.3f}", format_p(row.p_value)
        lines.append(
            f"{row.effect:<24s} {row.sum_sq:>12.3f} {row.df:>4d} "
            f"{f_txt:>10s} {p_txt:>9s}"
        )
    lines.append(
        f"{'residual':<24s} {table.residual_sum_sq:>12.3f} {table.residual_df:>4d}"
    )
    return "\n".join(lines) + "\n"


def tukey_text(result: TukeyResult) -> str:
    lines = [
        f"alpha={result.alpha}  k={result.k}  df={result.df}",
        f"{'pair':<22s} {'diff':>9s} {'q':>9s} {'p':>9s}  significant",
    ]
    for pair in result.pairs:
        label = f"{pair.group_a} vs {pair.group_b}"
        lines.append(
            f"{label:<22s} {pair.mean_diff:>9.3f} {pair.q_stat:>9.3f} "
            f"{format_p(pair.p_value):>9s}  {'yes' if pair.significant else 'no'}"
        )
    return "\n".join(lines) + "\n"


def likes_per_week_by_plan(
    series_sets: Sequence[Sequence[HoneypotSeries]],
    snapshots: Sequence[dict[str, tuple[int, ...]]],
) -> str:
    """CSV series of mean weekly likes per honeypot, grouped by plan.

    ``snapshots`` carries, per replicate, each honeypot's cumulative-like
    series by day; weekly gains are differences of week-end values.
    """
    weekly: dict[tuple[str, int], list[float]] = {}
    for series, cum_by_h in zip(series_sets, snapshots):
        for s in series:
            cum = cum_by_h[s.honeypot_id]
            weeks = len(cum) // 7
            for w in range(weeks):
                end = cum[7 * w + 6]
                start = cum[7 * w - 1] if w > 0 else 0
                weekly.setdefault((s.plan, w + 1), []).append(float(end - start))
    lines = ["plan,week,likes_mean"]
    for (plan, week) in sorted(weekly):
        values = weekly[(plan, week)]
        lines.append(f"{plan},{week},{np.mean(values):.3f}")
    return "\n".join(lines) + "\n"


def analytics_report(
    series_sets: Sequence[Sequence[HoneypotSeries]],
    totals: Sequence[RunTotals],
) -> str:
    """The analytics portion of a run report, deterministic text.

    Derivable from either in-memory RunRecords or re-ingested CSV
    artifacts; equal inputs render byte-identical reports.
    """
    if len(series_sets) != len(totals):
        raise ValidationError("one totals entry per replicate required")
    lines: list[str] = ["# engagement analytics", ""]
    lines.append(f"replicates: {len(series_sets)}")
    lines.append("")
    lines.append("## interaction rates")
    for r, (series, t) in enumerate(zip(series_sets, totals)):
        per_week = interactions_per_week(t.interactions, t.honeypots, t.weeks, decimals=1)
        acc_rate = interactions_per_week(t.follows, t.honeypots, t.weeks, decimals=2)
        posts = sum(len(s.post_likes) for s in series)
        avg_likes = round(sum(s.total_likes for s in series) / posts, 2) if posts else 0.0
        lines.append(
            f"replicate {r}: interactions={t.interactions} "
            f"(likes={t.likes}, comments={t.comments}, follows={t.follows}); "
            f"interactions_per_week={per_week}; "
            f"accounts_per_week={acc_rate}; "
            f"avg_likes_per_post={avg_likes}"
        )
    lines.append("")
    lines.append("## trend table (all replicates pooled)")
    pooled = [s for series in series_sets for s in series]
    lines.append(trend_table(pooled).text())
    lines.append("## anova: per-post likes")
    try:
        lines.append(anova_text(posts_anova(pooled)))
    except (DegenerateData, MissingLevels) as exc:
        lines.append(f"not available: {exc}\n")
    lines.append("## anova: final followers")
    try:
        lines.append(anova_text(followers_anova(pooled)))
    except (DegenerateData, MissingLevels) as exc:
        lines.append(f"not available: {exc}\n")
    for factor in ("plan", "topic"):
        lines.append(f"## tukey hsd: per-post likes by {factor}")
        try:
            lines.append(tukey_text(posts_tukey(pooled, by=factor)))
        except (DegenerateData, HoneysimError) as exc:
            lines.append(f"not available: {exc}\n")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# CSV re-ingestion
# ---------------------------------------------------------------------------


def load_series_csv(run_dir: Union[str, Path], config: ExperimentConfig) -> list[HoneypotSeries]:
    """Rebuild per-honeypot series from an exported run directory."""
    run_dir = Path(run_dir)
    followers: dict[str, list[int]] = {}
    cum_likes: dict[str, list[int]] = {}
    snap_lines = (run_dir / "snapshots.csv").read_text(encoding="utf-8").splitlines()
    for line in snap_lines[1:]:
        hid, _day, f, cl, _cc = line.split(",")
        followers.setdefault(hid, []).append(int(f))
        cum_likes.setdefault(hid, []).append(int(cl))
    likes: dict[str, list[int]] = {}
    comments: dict[str, list[int]] = {}
    post_lines = (run_dir / "posts.csv").read_text(encoding="utf-8").splitlines()
    for line in post_lines[1:]:
        parts = line.split(",")
        hid = parts[0]
        likes.setdefault(hid, []).append(int(parts[6]))
        comments.setdefault(hid, []).append(int(parts[7]))
    out = []
    for spec in config.honeypots:
        out.append(
            HoneypotSeries(
                honeypot_id=spec.id,
                topic=spec.topic,
                strategy_class=spec.strategy_class,
                plan=spec.plan.value,
                followers=tuple(followers.get(spec.id, ())),
                post_likes=tuple(likes.get(spec.id, ())),
                post_comments=tuple(comments.get(spec.id, ())),
            )
        )
    return out


def load_cumulative_likes(run_dir: Union[str, Path]) -> dict[str, tuple[int, ...]]:
    run_dir = Path(run_dir)
    cum: dict[str, list[int]] = {}
    for line in (run_dir / "snapshots.csv").read_text(encoding="utf-8").splitlines()[1:]:
        hid, _day, _f, cl, _cc = line.split(",")
        cum.setdefault(hid, []).append(int(cl))
    return {hid: tuple(values) for hid, values in cum.items()}


def load_totals_csv(run_dir: Union[str, Path], config: ExperimentConfig) -> RunTotals:
    """Recount run totals from an exported event log."""
    run_dir = Path(run_dir)
    honeypot_ids = {spec.id for spec in config.honeypots}
    likes = comments = follows = 0
    lines = (run_dir / "events.csv").read_text(encoding="utf-8").splitlines()
    for line in lines[1:]:
        _seq, _day, _minute, kind, actor, _target, _hid = line.split(",")
        if actor in honeypot_ids:
            continue
        if kind == "like":
            likes += 1
        elif kind == "comment":
            comments += 1
        elif kind == "follow":
            follows += 1
    return RunTotals(
        interactions=likes + comments + follows,
        likes=likes,
        comments=comments,
        follows=follows,
        honeypots=len(config.honeypots),
        weeks=config.horizon_days / 7.0,
    )
