"""Online strategy selection for inductive generalization.

Three pieces live here:

  ContextExtractor   turns the checker's instantaneous state into a fixed
                     7-component feature vector (normalized against running
                     statistics of the same run; nothing persists across runs)
  LinUcb             disjoint linear UCB over the strategy arms
  compute_reward     scores a finished generalization from clause shrinkage,
                     push distance, and a handful of bonus events

The per-call budget matters: context extraction plus arm selection plus the
model update sit on the blocking hot path, so LinUcb keeps cached inverses
(Sherman-Morrison rank-1 updates, with a periodic exact re-inversion) and
scores all arms with one stacked matrix-vector product.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import Hyperparams

CONTEXT_DIM = 7


@dataclass
class RunningStats:
    """Run-wide normalization state for the context features."""

    calls: int = 0
    core_size_sum: float = 0.0
    max_queue_len: int = 0
    prev_queue_len: int | None = None
    max_abs_growth: int = 0


class ContextExtractor:
    """Builds the feature vector for one generalization call.

    Components, in order:
      0  obligation depth over the frame span it has to cross
      1  shrunk-cube size relative to the running average of earlier calls
         (1.0 on the first call; the average excludes the current one)
      2  queue length over the maximum seen so far (maximum updated first)
      3  obligation frame over the frontier
      4  clause count of the obligation frame, scaled by 1/100
      5  queue growth since the previous call over the largest absolute
         growth seen, clamped to [-1, 1]; 0.0 on the first call
      6  constant bias 1.0

    Guarded divisions yield 0.0; the running statistics are advanced only
    after the vector is formed.
    """

    def __init__(self) -> None:
        self.stats = RunningStats()

    def extract(
        self,
        depth: int,
        core_size: int,
        queue_len: int,
        obligation_frame: int,
        frontier: int,
        frame_clauses: int,
    ) -> list[float]:
        st = self.stats

        span = frontier - obligation_frame + 1
        x_d = depth / span if span > 0 else 0.0

        if st.calls == 0:
            x_c = 1.0
        else:
            avg = st.core_size_sum / st.calls
            x_c = core_size / avg if avg > 0 else 0.0

        if queue_len > st.max_queue_len:
            st.max_queue_len = queue_len
        x_q = queue_len / st.max_queue_len if st.max_queue_len > 0 else 0.0

        x_cf = obligation_frame / frontier if frontier > 0 else 0.0

        x_s = frame_clauses / 100.0

        if st.prev_queue_len is None:
            x_qr = 0.0
        else:
            growth = queue_len - st.prev_queue_len
            if abs(growth) > st.max_abs_growth:
                st.max_abs_growth = abs(growth)
            x_qr = growth / st.max_abs_growth if st.max_abs_growth > 0 else 0.0
            x_qr = max(-1.0, min(1.0, x_qr))

        st.calls += 1
        st.core_size_sum += core_size
        st.prev_queue_len = queue_len

        return [x_d, x_c, x_q, x_cf, x_s, x_qr, 1.0]


class LinUcb:
    """Disjoint LinUCB: per arm a ridge model A = I + sum(x xT), b = sum(r x),
    theta = A^-1 b, scored as theta.x + alpha * sqrt(x A^-1 x).

    Ties go to the lowest arm index.  The inverse is maintained incrementally
    (rank-1 Sherman-Morrison) and re-derived from A by a full inversion every
    REFRESH_INTERVAL updates per arm, which keeps the drift far below the
    1e-9 scale while staying off the hot path.
    """

    REFRESH_INTERVAL = 64

    def __init__(self, num_arms: int, dim: int = CONTEXT_DIM, alpha: float = 1.0) -> None:
        self.num_arms = num_arms
        self.dim = dim
        self.alpha = alpha
        eye = np.eye(dim)
        # A and b live side by side so the data update is one rank-1 add.
        self._ab = np.zeros((num_arms, dim, dim + 1))
        self.A = self._ab[:, :, :dim]
        self.b = self._ab[:, :, dim]
        for a in range(num_arms):
            self.A[a] = eye
        # theta rows and all A^-1 rows share one matrix so select() scores
        # every arm with a single stacked product.
        self._stack = np.zeros((num_arms + num_arms * dim, dim))
        self.theta = self._stack[:num_arms]
        self.inv = self._stack[num_arms:].reshape(num_arms, dim, dim)
        for a in range(num_arms):
            self.inv[a] = eye
        self.updates = [0] * num_arms
        # scratch buffers and pre-built views, so the hot path allocates
        # nothing and never re-slices
        self._xaug = np.zeros(dim + 1)
        self._x = self._xaug[:dim]
        self._xcol = self._x.reshape(dim, 1)
        self._prod = np.zeros(num_arms + num_arms * dim)
        self._theta_x = self._prod[:num_arms]
        self._invx = self._prod[num_arms:].reshape(num_arms, dim)
        self._var = np.zeros(num_arms)
        self._ucb = np.zeros(num_arms)
        self._t = np.zeros(dim)
        self._tcol = self._t.reshape(dim, 1)
        self._odd = np.zeros((dim, dim))
        self._oab = np.zeros((dim, dim + 1))
        self._inv_rows = [self.inv[a] for a in range(num_arms)]
        self._ab_rows = [self._ab[a] for a in range(num_arms)]
        self._A_rows = [self.A[a] for a in range(num_arms)]
        self._b_rows = [self.b[a] for a in range(num_arms)]
        self._invx_rows = [self._invx[a] for a in range(num_arms)]
        self._theta_rows = [self.theta[a] for a in range(num_arms)]
        self._ctx_obj: object | None = None  # context whose A^-1 x is cached

    def select(self, context: list[float]) -> int:
        x = self._x
        x[:] = context
        np.dot(self._stack, x, out=self._prod)
        np.dot(self._invx, x, out=self._var)
        np.sqrt(self._var, out=self._ucb)
        if self.alpha != 1.0:
            self._ucb *= self.alpha
        self._ucb += self._theta_x
        self._ctx_obj = context
        return int(self._ucb.argmax())

    def scores(self, context: list[float]) -> np.ndarray:
        """UCB score per arm (copy); for inspection and tests."""
        self.select(context)
        return self._ucb.copy()

    def update(self, context: list[float], arm: int, reward: float) -> None:
        x = self._x
        inv_row = self._inv_rows[arm]
        inv_x = self._invx_rows[arm]
        if context is not self._ctx_obj:
            x[:] = context
            np.dot(inv_row, x, out=inv_x)
            self._var[arm] = np.dot(inv_x, x)
        denom = 1.0 + self._var[arm]
        np.divide(inv_x, denom, out=self._t)
        np.multiply(self._tcol, inv_x, out=self._odd)
        inv_row -= self._odd
        self._xaug[self.dim] = reward
        np.multiply(self._xcol, self._xaug, out=self._oab)
        self._ab_rows[arm] += self._oab
        self._ctx_obj = None  # inv[arm] changed; cached products are stale
        n = self.updates[arm] + 1
        self.updates[arm] = n
        if n % self.REFRESH_INTERVAL == 0:
            inv_row[:] = np.linalg.inv(self._A_rows[arm])
        np.dot(inv_row, self._b_rows[arm], out=self._theta_rows[arm])


@dataclass(frozen=True)
class GenOutcome:
    """What one generalization attempt produced, as the reward sees it."""

    orig_size: int
    gen_size: int
    obligation_frame: int
    pushed_frame: int
    frontier: int


@dataclass(frozen=True)
class RewardBreakdown:
    reward: float
    r_size: float
    r_push: float
    r_bonus: float
    events: tuple[str, ...] = field(default_factory=tuple)


def compute_reward(o: GenOutcome, hp: Hyperparams) -> RewardBreakdown:
    """Score an outcome: weighted size reduction and push distance plus
    event bonuses.

    Size term: fraction of literals removed, scaled by the beta penalty when
    the cube grew.  Push term: fraction of the obligation-to-frontier span
    covered, with a flat floor when the clause did not advance; when the
    obligation already sits at the frontier, holding there counts as a full
    push.  Bonus events accumulate; over-generalization (big shrink that
    still would not push) subtracts.
    """
    r_s = (o.orig_size - o.gen_size) / o.orig_size if o.orig_size > 0 else 0.0
    if o.gen_size > o.orig_size:
        r_s *= hp.beta

    if o.frontier == o.obligation_frame:
        r_p = 1.0 if o.pushed_frame >= o.frontier else hp.p_p
    elif o.pushed_frame > o.obligation_frame:
        r_p = (o.pushed_frame - o.obligation_frame) / (o.frontier - o.obligation_frame)
    else:
        r_p = hp.p_p

    events: list[str] = []
    r_b = 0.0
    if o.pushed_frame == o.frontier:
        events.append("E_front")
        r_b += hp.gamma_high
    if o.gen_size == 1:
        events.append("E_size1")
        r_b += hp.gamma_med
    if o.pushed_frame > 0.7 * o.frontier:
        events.append("E_high")
        r_b += hp.gamma_low
    if r_s > 0.5 and r_p > 0.3:
        events.append("E_ideal")
        r_b += hp.gamma_med
    if r_s > 0.7 and r_p <= hp.p_p:
        events.append("E_over")
        r_b -= hp.gamma_med

    reward = hp.w_s * r_s + hp.w_p * r_p + r_b
    return RewardBreakdown(reward, r_s, r_p, r_b, tuple(events))
