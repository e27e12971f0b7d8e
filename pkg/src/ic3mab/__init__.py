"""Bit-level hardware safety checking with bandit-guided inductive
generalization: AIGER frontend, incremental CDCL solver, frame-based
reachability engine, strategy arms, and a benchmarking harness."""

from .aiger import AigerError, AigerModel, Latch, parse_aiger, parse_aiger_file
from .bandit import (
    CONTEXT_DIM,
    ContextExtractor,
    GenOutcome,
    LinUcb,
    RewardBreakdown,
    compute_reward,
)
from .config import DEFAULT_TIMEOUT, ENGINE_MODES, EngineConfig, Hyperparams
from .engine import CheckResult, Ic3Engine, Obligation, RunStats, check
from .generalize import (
    ARMS,
    ActivityTable,
    Generalizer,
    GenParams,
    MODE_PARAMS,
    NUM_ARMS,
    dyn_aggressive,
    dyn_balanced,
    dyn_conservative,
    params_for,
)
from .harness import (
    Par2Summary,
    RunRecord,
    compute_par2,
    read_csv,
    run_bench,
    run_check,
    write_csv,
)
from .sat import SAT, UNKNOWN, UNSAT, Solver
from .system import (
    PropertyError,
    TransitionSystem,
    simulate_step,
    to_transition_system,
)
from .witness import (
    certify,
    certify_safe,
    format_certificate,
    format_witness,
    parse_certificate,
    parse_witness,
    replay_trace,
)

__version__ = "0.1.0"

__all__ = [
    "AigerError",
    "AigerModel",
    "Latch",
    "parse_aiger",
    "parse_aiger_file",
    "CONTEXT_DIM",
    "ContextExtractor",
    "GenOutcome",
    "LinUcb",
    "RewardBreakdown",
    "compute_reward",
    "DEFAULT_TIMEOUT",
    "ENGINE_MODES",
    "EngineConfig",
    "Hyperparams",
    "CheckResult",
    "Ic3Engine",
    "Obligation",
    "RunStats",
    "check",
    "ARMS",
    "ActivityTable",
    "Generalizer",
    "GenParams",
    "MODE_PARAMS",
    "NUM_ARMS",
    "dyn_aggressive",
    "dyn_balanced",
    "dyn_conservative",
    "params_for",
    "Par2Summary",
    "RunRecord",
    "compute_par2",
    "read_csv",
    "run_bench",
    "run_check",
    "write_csv",
    "SAT",
    "UNKNOWN",
    "UNSAT",
    "Solver",
    "PropertyError",
    "TransitionSystem",
    "simulate_step",
    "to_transition_system",
    "certify",
    "certify_safe",
    "format_certificate",
    "format_witness",
    "parse_certificate",
    "parse_witness",
    "replay_trace",
]
