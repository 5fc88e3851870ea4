"""honeysim: a seedable simulator and analytics suite for social honeypots.

The package models honeypot accounts on an Instagram-like network across
a design space of topics, content-generation strategies and engagement
plans, then evaluates the resulting engagement with the same statistical
pipeline an operator would run: stationarity tests, factorial ANOVA,
Tukey post-hoc comparisons, spam and follower classification, and
audience insights.
"""

__version__ = "0.1.0"

from .behavior import BehaviorProfile, load_profile
from .config import ExperimentConfig, load_config, preset_paper_testbed, write_config
from .core import (
    Agent,
    AgentCategory,
    CoverageClass,
    EngagementEvent,
    EventKind,
    Honeypot,
    HoneysimError,
    Post,
    RandomSource,
    SimTime,
    Topic,
    classify_coverage,
    seeded_rng,
)
from .engine import RunRecord, replicate_seeds, run

__all__ = [
    "Agent",
    "AgentCategory",
    "BehaviorProfile",
    "CoverageClass",
    "EngagementEvent",
    "EventKind",
    "ExperimentConfig",
    "Honeypot",
    "HoneysimError",
    "Post",
    "RandomSource",
    "RunRecord",
    "SimTime",
    "Topic",
    "classify_coverage",
    "load_config",
    "load_profile",
    "preset_paper_testbed",
    "replicate_seeds",
    "run",
    "seeded_rng",
    "write_config",
    "__version__",
]
