"""Command-line entry points: simulate, analyze, calibrate, preset.

``run_experiment`` is the orchestrator behind ``simulate``: it executes
the configured replicates (optionally across worker threads), exports
the per-replicate CSVs and writes the aggregate reports. Everything it
emits is a pure function of (config, seed), so workers only change wall
time, never bytes.
"""

from __future__ import annotations

import dataclasses
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

import click

from . import analytics
from .behavior import load_profile
from .calibrate import PAPER_TARGETS, BudgetExhausted, calibrate
from .classifiers import (
    classify_follower,
    follower_accuracy,
    load_spam_patterns,
    spam_percent,
)
from .config import (
    ExperimentConfig,
    load_config,
    preset_paper_testbed,
    write_config,
)
from .core import HoneysimError
from .engine import RunRecord, replicate_seeds, run

log = logging.getLogger("honeysim")

_ENV_LOG = "HONEYSIM_LOG"


def _setup_logging() -> None:
    level = os.environ.get(_ENV_LOG, "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )


# ---------------------------------------------------------------------------
# Orchestration
# ---------------------------------------------------------------------------


def _classifier_report(records: Sequence[RunRecord]) -> str:
    patterns = load_spam_patterns()
    lines = ["# classifier summary", ""]
    for r, record in enumerate(records):
        comments = [c for h in record.honeypots for p in h.posts for c in p.comments]
        lines.append(f"## replicate {r}")
        if comments:
            lines.append(
                f"comments_received={len(comments)} "
                f"spam_share={spam_percent(comments, patterns)}%"
            )
        else:
            lines.append("comments_received=0")
        pop = record.population
        by_topic: dict[str, dict[str, int]] = {}
        for h in record.honeypots:
            mix = by_topic.setdefault(h.topic.name, {})
            for aid in h.followers:
                cat = classify_follower(pop.agent(aid), pop.is_topic_specific(aid))
                mix[cat.value] = mix.get(cat.value, 0) + 1
        for topic in sorted(by_topic):
            mix = by_topic[topic]
            total = sum(mix.values())
            shares = ", ".join(
                f"{name}={100.0 * mix.get(name, 0) / total:.1f}%"
                for name in ("RealPerson", "PageInfluencer", "Bot")
            )
            lines.append(f"followers[{topic}]: n={total}, {shares}")
        sample = [
            (pop.to_agent(i), pop.is_topic_specific(pop.id_of(i)))
            for i in range(min(2000, record.config.population_size))
        ]
        lines.append(
            f"ground_truth_accuracy={100.0 * follower_accuracy(sample):.1f}% "
            f"(population sample of {len(sample)})"
        )
        lines.append("")
    return "\n".join(lines)


def _write_split_snapshots(record: RunRecord, rep_dir: Path) -> None:
    # one per-honeypot snapshot file next to the combined CSV
    split_dir = rep_dir / "snapshots"
    split_dir.mkdir(exist_ok=True)
    header, *rows = record.snapshots_csv().strip().split("\n")
    by_honeypot: dict[str, list[str]] = {}
    for row in rows:
        by_honeypot.setdefault(row.split(",", 1)[0], []).append(row)
    for hid, hrows in by_honeypot.items():
        path = split_dir / f"{hid}.csv"
        path.write_text("\n".join([header] + hrows) + "\n", encoding="utf-8")


def run_experiment(
    config: ExperimentConfig,
    out_dir: Path,
    workers: int = 1,
) -> list[Path]:
    """Execute all replicates and write the artifact tree.

    Returns the list of written paths. Raises on the first module error;
    partial output may remain on disk for inspection.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    load_profile(config.profile)  # fail fast on unknown profiles
    seeds = replicate_seeds(config)
    log.info("running %d replicate(s) with %d worker(s)", len(seeds), workers)

    def one(i: int) -> RunRecord:
        return run(config, seed=seeds[i])

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(one, range(len(seeds))))
    else:
        records = [one(i) for i in range(len(seeds))]

    written: list[Path] = []
    config_path = out_dir / "config.yaml"
    write_config(config, config_path)
    written.append(config_path)

    for i, record in enumerate(records):
        rep_dir = out_dir / f"rep-{i:03d}"
        rep_dir.mkdir(exist_ok=True)
        paths = record.write_csvs(rep_dir)
        written.extend(paths.values())
        _write_split_snapshots(record, rep_dir)

    series_sets = [analytics.series_from_run(r) for r in records]
    totals = [analytics.totals_from_run(r) for r in records]

    report_path = out_dir / "report.txt"
    report_path.write_text(
        analytics.analytics_report(series_sets, totals), encoding="utf-8"
    )
    written.append(report_path)

    pooled = [s for series in series_sets for s in series]
    trend_path = out_dir / "trend.csv"
    trend_path.write_text(analytics.trend_table(pooled).csv(), encoding="utf-8")
    written.append(trend_path)

    classifier_path = out_dir / "classifier_report.txt"
    classifier_path.write_text(_classifier_report(records), encoding="utf-8")
    written.append(classifier_path)

    plots_dir = out_dir / "plots"
    plots_dir.mkdir(exist_ok=True)
    cum = [
        {h.id: tuple(s.cumulative_likes for s in h.snapshots) for h in r.honeypots}
        for r in records
    ]
    plot_path = plots_dir / "likes_per_week_by_plan.csv"
    plot_path.write_text(
        analytics.likes_per_week_by_plan(series_sets, cum), encoding="utf-8"
    )
    written.append(plot_path)
    log.info("wrote %d artifact(s) under %s", len(written), out_dir)
    return written


def analyze_runs(runs_dir: Path, out_dir: Path) -> list[Path]:
    """Rebuild the analytics report from exported CSVs alone."""
    runs_dir = Path(runs_dir)
    config = load_config(runs_dir / "config.yaml")
    rep_dirs = sorted(p for p in runs_dir.glob("rep-*") if p.is_dir())
    if not rep_dirs:
        raise HoneysimError(f"no rep-* directories under {runs_dir}")
    series_sets = [analytics.load_series_csv(d, config) for d in rep_dirs]
    totals = [analytics.load_totals_csv(d, config) for d in rep_dirs]

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    report_path = out_dir / "report.txt"
    report_path.write_text(
        analytics.analytics_report(series_sets, totals), encoding="utf-8"
    )
    written.append(report_path)
    pooled = [s for series in series_sets for s in series]
    trend_path = out_dir / "trend.csv"
    trend_path.write_text(analytics.trend_table(pooled).csv(), encoding="utf-8")
    written.append(trend_path)
    plots_dir = out_dir / "plots"
    plots_dir.mkdir(exist_ok=True)
    cum = [analytics.load_cumulative_likes(d) for d in rep_dirs]
    plot_path = plots_dir / "likes_per_week_by_plan.csv"
    plot_path.write_text(
        analytics.likes_per_week_by_plan(series_sets, cum), encoding="utf-8"
    )
    written.append(plot_path)
    return written


# ---------------------------------------------------------------------------
# Click commands
# ---------------------------------------------------------------------------


@click.group()
def main() -> None:
    """Social-honeypot simulator and analytics toolkit."""
    _setup_logging()


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True), required=True)
@click.option("--out", "out_dir", type=click.Path(), required=True)
@click.option("--seed", type=int, default=None, help="Override the config seed.")
@click.option("--replicates", type=int, default=None, help="Override replicate count.")
@click.option("--workers", type=int, default=1, show_default=True)
def simulate(config_path, out_dir, seed, replicates, workers):
    """Run an experiment config and export CSVs plus reports."""
    try:
        config = load_config(config_path)
        overrides = {}
        if seed is not None:
            overrides["seed"] = seed
        if replicates is not None:
            overrides["replicates"] = replicates
        if overrides:
            config = dataclasses.replace(config, **overrides)
        run_experiment(config, Path(out_dir), workers=workers)
    except HoneysimError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"wrote artifacts under {out_dir}")


@main.command()
@click.option("--runs", "runs_dir", type=click.Path(exists=True), required=True)
@click.option("--out", "out_dir", type=click.Path(), required=True)
def analyze(runs_dir, out_dir):
    """Recompute reports from a previously exported run directory."""
    try:
        analyze_runs(Path(runs_dir), Path(out_dir))
    except HoneysimError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"wrote reports under {out_dir}")


@main.command(name="calibrate")
@click.option("--targets", "targets_path", type=click.Path(exists=True), default=None,
              help="JSON mapping group -> [followers, comments, likes]; defaults to the built-in targets.")
@click.option("--budget", type=int, default=40, show_default=True)
@click.option("--replicates", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Where to write the fitted profile JSON.")
def calibrate_cmd(targets_path, budget, replicates, seed, out_path):
    """Random-search the behavior profile against engagement targets."""
    try:
        targets = PAPER_TARGETS
        if targets_path is not None:
            raw = json.loads(Path(targets_path).read_text(encoding="utf-8"))
            targets = {k: tuple(v) for k, v in raw.items()}
        result = calibrate(
            targets=targets, budget=budget, replicates=replicates, seed=seed
        )
    except BudgetExhausted as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    except HoneysimError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"best loss {result.loss:.4f} after {result.evaluations} evaluation(s)")
    if out_path is not None:
        Path(out_path).write_text(result.profile.to_json(), encoding="utf-8")
        click.echo(f"wrote profile to {out_path}")


@main.command()
@click.argument("name")
@click.option("--out", "out_path", type=click.Path(), required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--replicates", type=int, default=1, show_default=True)
def preset(name, out_path, seed, replicates):
    """Write a named preset config to a file."""
    try:
        if name != "paper-testbed":
            raise HoneysimError(f"unknown preset {name!r} (known: paper-testbed)")
        config = preset_paper_testbed(seed=seed, replicates=replicates)
        write_config(config, Path(out_path))
    except HoneysimError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"wrote {out_path}")


if __name__ == "__main__":
    main()
