"""Run configuration and fixed hyperparameters for the checker."""

from __future__ import annotations

from dataclasses import dataclass, field

ENGINE_MODES = ("standard", "ctgdown", "dynamic", "mab")

DEFAULT_TIMEOUT = 3600.0


@dataclass
class Hyperparams:
    """Selection, reward shaping, and exploration constants.

    These are deliberately not tunable from the CLI; changing them changes
    the reward definition, not just its scale.
    """

    alpha: float = 1.0  # exploration width in the UCB score
    w_s: float = 0.65  # weight of the size-reduction reward term
    w_p: float = 0.35  # weight of the push-distance reward term
    beta: float = 1.5  # penalty multiplier when generalization grows the cube
    p_p: float = 0.1  # push-term floor when the clause does not advance
    gamma_high: float = 0.4  # bonus weight: high-significance events
    gamma_med: float = 0.2  # bonus weight: medium-significance events
    gamma_low: float = 0.1  # bonus weight: low-significance events


@dataclass
class EngineConfig:
    mode: str = "mab"
    seed: int = 0
    timeout: float = DEFAULT_TIMEOUT
    property_index: int = 0
    log_path: str | None = None  # JSONL generalization event log
    witness_path: str | None = None  # counterexample trace output
    certificate_path: str | None = None  # inductive invariant output
    dump_cnf_dir: str | None = None  # per-query DIMACS dumps
    max_conflicts_per_query: int | None = None  # budget, reported as such
    arm_subset: list[int] | None = None  # test hook: restrict mab arm choice
    self_check: bool = False  # frame-condition spot checks after each round
    hyper: Hyperparams = field(default_factory=Hyperparams)

    def __post_init__(self) -> None:
        if self.mode not in ENGINE_MODES:
            raise ValueError(f"unknown engine mode {self.mode!r}; pick from {ENGINE_MODES}")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.property_index < 0:
            raise ValueError("property index must be nonnegative")
        if self.max_conflicts_per_query is not None and self.max_conflicts_per_query <= 0:
            raise ValueError("conflict budget must be positive when set")
