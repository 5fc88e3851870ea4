"""Random-search calibration of the behavior profile.

The deployment's Table-2-style group means (followers / comments /
likes by topic, strategy and plan) are the fitting targets. The loss is
the sum of squared relative errors between simulated and target group
means, averaged over a handful of replicate runs. The winner ships as
the "paper-calibrated" profile fixture.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping, Optional, Sequence

import numpy as np

from .analytics import HoneypotSeries, series_from_run
from .behavior import DEFAULT_PROFILE, BehaviorProfile
from .config import ExperimentConfig, preset_paper_testbed
from .core import HoneysimError, ValidationError
from .engine import replicate_seed, run

__all__ = [
    "PAPER_TARGETS",
    "ProfileSpace",
    "DEFAULT_SPACE",
    "group_means",
    "evaluate_profile",
    "CalibrationResult",
    "BudgetExhausted",
    "calibrate",
]

# Target group means: (followers, comments, likes) per group label.
PAPER_TARGETS: dict[str, tuple[float, float, float]] = {
    "food": (38.5, 216.4, 698.4),
    "cat": (47.4, 182.1, 923.1),
    "car": (21.9, 371.0, 625.6),
    "AI": (37.9, 248.4, 654.2),
    "NonAI": (32.7, 264.2, 842.5),
    "Mixed": (39.3, 257.7, 753.0),
    "plan0": (11.5, 266.0, 641.3),
    "plan1": (60.0, 254.2, 835.2),
    "plan2": (36.0, 251.8, 763.4),
}


@dataclass(frozen=True)
class ProfileSpace:
    """Uniform sampling box over scalar profile fields.

    ``ranges`` maps BehaviorProfile field names to (low, high); fields
    not listed keep their default values. Appeal Beta parameters are
    handled through the four ``appeal_*`` pseudo-fields.
    """

    ranges: Mapping[str, tuple[float, float]]

    _APPEAL_KEYS = ("appeal_ai_a", "appeal_ai_b", "appeal_nonai_a", "appeal_nonai_b")

    def __post_init__(self) -> None:
        scalar_fields = set(BehaviorProfile.__dataclass_fields__) - {
            "calibration_name",
            "appeal_ai",
            "appeal_nonai",
        }
        allowed = scalar_fields | set(self._APPEAL_KEYS)
        for name, (low, high) in self.ranges.items():
            if name not in allowed:
                raise ValidationError(f"unknown profile field {name!r}")
            if not low <= high:
                raise ValidationError(f"empty range for {name!r}: ({low}, {high})")

    def sample(self, rng: np.random.Generator) -> BehaviorProfile:
        draws = {
            name: float(rng.uniform(low, high))
            for name, (low, high) in self.ranges.items()
        }
        appeal_ai = list(DEFAULT_PROFILE.appeal_ai)
        appeal_nonai = list(DEFAULT_PROFILE.appeal_nonai)
        if "appeal_ai_a" in draws:
            appeal_ai[0] = draws.pop("appeal_ai_a")
        if "appeal_ai_b" in draws:
            appeal_ai[1] = draws.pop("appeal_ai_b")
        if "appeal_nonai_a" in draws:
            appeal_nonai[0] = draws.pop("appeal_nonai_a")
        if "appeal_nonai_b" in draws:
            appeal_nonai[1] = draws.pop("appeal_nonai_b")
        return replace(
            DEFAULT_PROFILE,
            calibration_name="candidate",
            appeal_ai=tuple(appeal_ai),
            appeal_nonai=tuple(appeal_nonai),
            **draws,
        )


DEFAULT_SPACE = ProfileSpace(
    ranges={
        "base_like": (0.10, 0.30),
        "base_comment": (0.002, 0.008),
        "base_follow": (0.002, 0.008),
        "cta_bonus": (0.0, 0.6),
        "discovery_rate": (0.008, 0.05),
        "spam_redirect_rate": (0.03, 0.20),
        "visit_follow_p": (0.10, 0.45),
        "bot_follow_p": (0.005, 0.03),
        "sponsor_follow_scale": (0.5, 3.0),
        "purchase_distrust": (0.2, 1.5),
    }
)


def group_means(series: Sequence[HoneypotSeries]) -> dict[str, tuple[float, float, float]]:
    """Mean (final followers, total comments, total likes) per group."""
    buckets: dict[str, list[HoneypotSeries]] = {}
    for s in series:
        for label in (s.topic, s.strategy_class, s.plan):
            buckets.setdefault(label, []).append(s)
    out = {}
    for label, members in buckets.items():
        out[label] = (
            float(np.mean([m.final_followers for m in members])),
            float(np.mean([m.total_comments for m in members])),
            float(np.mean([m.total_likes for m in members])),
        )
    return out


def evaluate_profile(
    profile: BehaviorProfile,
    targets: Mapping[str, tuple[float, float, float]] = PAPER_TARGETS,
    config: Optional[ExperimentConfig] = None,
    replicates: int = 10,
    base_seed: int = 777,
) -> float:
    """Sum of squared relative errors of simulated vs target group means."""
    if replicates < 1:
        raise ValidationError("need at least one replicate")
    config = config if config is not None else preset_paper_testbed()
    sums: dict[str, np.ndarray] = {}
    for r in range(replicates):
        record = run(config, seed=replicate_seed(base_seed, r), profile=profile)
        for label, values in group_means(series_from_run(record)).items():
            acc = sums.setdefault(label, np.zeros(3))
            acc += np.asarray(values)
    loss = 0.0
    for label, target in targets.items():
        if label not in sums:
            continue
        sim = sums[label] / replicates
        for got, want in zip(sim, target):
            loss += ((got - want) / want) ** 2
    return loss


@dataclass(frozen=True)
class CalibrationResult:
    profile: BehaviorProfile
    loss: float
    evaluations: int
    losses: tuple[float, ...]


class BudgetExhausted(HoneysimError):
    """Search hit the evaluation budget before the loss target."""

    def __init__(self, message: str, best: CalibrationResult):
        super().__init__(message)
        self.best = best


def calibrate(
    space: ProfileSpace = DEFAULT_SPACE,
    targets: Mapping[str, tuple[float, float, float]] = PAPER_TARGETS,
    budget: int = 40,
    replicates: int = 10,
    seed: int = 0,
    config: Optional[ExperimentConfig] = None,
    target_loss: Optional[float] = None,
    start: Optional[BehaviorProfile] = None,
) -> CalibrationResult:
    """Random search over the profile space.

    The start profile (default profile unless given) is evaluated first,
    so the result never scores worse than it. With ``target_loss`` set,
    the search stops early on success and raises BudgetExhausted (with
    best-so-far attached) if the budget runs out first.
    """
    if budget < 1:
        raise ValidationError("budget must be >= 1")
    rng = np.random.default_rng(seed)
    best_profile = start if start is not None else DEFAULT_PROFILE
    losses: list[float] = []
    best_loss = evaluate_profile(
        best_profile, targets, config=config, replicates=replicates
    )
    losses.append(best_loss)
    for _ in range(budget - 1):
        if target_loss is not None and best_loss <= target_loss:
            break
        candidate = space.sample(rng)
        loss = evaluate_profile(
            candidate, targets, config=config, replicates=replicates
        )
        losses.append(loss)
        if loss < best_loss:
            best_loss = loss
            best_profile = candidate
    result = CalibrationResult(
        profile=replace(best_profile, calibration_name="paper-calibrated"),
        loss=best_loss,
        evaluations=len(losses),
        losses=tuple(losses),
    )
    if target_loss is not None and best_loss > target_loss:
        raise BudgetExhausted(
            f"loss {best_loss:.4f} above target {target_loss} "
            f"after {len(losses)} evaluations",
            best=result,
        )
    return result
