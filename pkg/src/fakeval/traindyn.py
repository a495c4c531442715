"""Training-dynamics primitives: sigmoid, log loss, Adam, early stopping.

Nothing here touches a network.  These are the small, exactly testable
pieces of the training configuration: the output activation, the loss, one
optimizer step as a pure state transformation, and the patience-based
stopping rule.  The stopping controller supports an optional epoch-0
baseline loss; with it, a run whose validation loss never improves on the
pre-training value stops after epoch ``patience`` exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import ArgumentOutOfRange, NonFiniteGradient, NonMonotoneEpochs

BATCH_SIZE = 16
BCE_CLAMP = 1e-12


def sigmoid(x):
    """1 / (1 + e^-x), branch on sign so large |x| never overflows."""
    scalar = np.ndim(x) == 0
    arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if not np.all(np.isfinite(arr)):
        raise ArgumentOutOfRange("sigmoid input must be finite")
    out = np.empty_like(arr)
    pos = arr >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-arr[pos]))
    ex = np.exp(arr[~pos])
    out[~pos] = ex / (1.0 + ex)
    return float(out[0]) if scalar else out


def bce_loss(y_true, p) -> float:
    """Mean binary cross-entropy, -[y ln p + (1-y) ln(1-p)].

    Probabilities are clamped to [1e-12, 1 - 1e-12] before the logarithm, so
    confident-and-wrong predictions cost about 27.6 nats instead of inf.
    """
    y = np.atleast_1d(np.asarray(y_true, dtype=np.float64))
    prob = np.atleast_1d(np.asarray(p, dtype=np.float64))
    if y.shape != prob.shape:
        raise ArgumentOutOfRange(f"shape mismatch: y {y.shape} vs p {prob.shape}")
    if y.size == 0:
        raise ArgumentOutOfRange("bce_loss needs at least one sample")
    if not np.all((y == 0.0) | (y == 1.0)):
        raise ArgumentOutOfRange("labels must be 0 or 1")
    if not np.all((prob >= 0.0) & (prob <= 1.0)):
        raise ArgumentOutOfRange("probabilities must lie in [0, 1]")
    q = np.clip(prob, BCE_CLAMP, 1.0 - BCE_CLAMP)
    return float(-np.mean(y * np.log(q) + (1.0 - y) * np.log1p(-q)))


@dataclass(frozen=True, eq=False)
class AdamState:
    """Optimizer moments plus hyperparameters; transformed functionally."""

    m: np.ndarray
    v: np.ndarray
    t: int = 0
    lr: float = 0.001
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-7

    def __post_init__(self):
        m = np.asarray(self.m, dtype=np.float64).copy()
        v = np.asarray(self.v, dtype=np.float64).copy()
        if m.shape != v.shape:
            raise ArgumentOutOfRange(f"m/v shape mismatch: {m.shape} vs {v.shape}")
        if np.any(v < 0.0):
            raise ArgumentOutOfRange("second-moment entries must be >= 0")
        if self.t < 0:
            raise ArgumentOutOfRange(f"step counter must be >= 0, got {self.t}")
        m.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "v", v)

    @classmethod
    def fresh(cls, n: int = 1, **hyper) -> "AdamState":
        return cls(m=np.zeros(n), v=np.zeros(n), t=0, **hyper)


def adam_step(state: AdamState, gradient) -> tuple[AdamState, np.ndarray]:
    """One bias-corrected Adam update; returns (new state, parameter delta)."""
    g = np.asarray(gradient, dtype=np.float64)
    if g.shape == ():
        g = np.full_like(state.m, float(g))
    if g.shape != state.m.shape:
        raise ArgumentOutOfRange(f"gradient shape {g.shape} != state shape {state.m.shape}")
    if not np.all(np.isfinite(g)):
        raise NonFiniteGradient("gradient contains nan or inf")
    t = state.t + 1
    m = state.beta1 * state.m + (1.0 - state.beta1) * g
    v = state.beta2 * state.v + (1.0 - state.beta2) * g * g
    m_hat = m / (1.0 - state.beta1**t)
    v_hat = v / (1.0 - state.beta2**t)
    delta = -state.lr * m_hat / (np.sqrt(v_hat) + state.eps)
    new_state = replace(state, m=m, v=v, t=t)
    return new_state, delta


@dataclass(frozen=True)
class EarlyStopState:
    """Patience controller state; epoch 0 is reserved for the baseline."""

    patience: int = 5
    active_from: int = 10
    best_loss: float = math.inf
    best_epoch: int = 0
    baseline: float | None = None
    current_epoch: int = 0

    def __post_init__(self):
        if self.patience < 1:
            raise ArgumentOutOfRange(f"patience must be >= 1, got {self.patience}")
        if self.active_from < 1:
            raise ArgumentOutOfRange(f"active_from must be >= 1, got {self.active_from}")

    @classmethod
    def initial(cls, patience: int = 5, active_from: int = 10,
                baseline: float | None = None) -> "EarlyStopState":
        best = math.inf if baseline is None else float(baseline)
        return cls(patience=patience, active_from=active_from, best_loss=best,
                   best_epoch=0, baseline=baseline, current_epoch=0)


def early_stop_update(state: EarlyStopState, epoch: int,
                      val_loss: float) -> tuple[EarlyStopState, str]:
    """Feed one epoch's validation loss; returns (new state, "continue"|"stop").

    Improvement is strict (val_loss < best_loss).  Stopping may first fire at
    epoch >= active_from, once (epoch - best_epoch) >= patience.
    """
    if epoch <= state.current_epoch:
        raise NonMonotoneEpochs(
            f"epoch {epoch} not after already-seen epoch {state.current_epoch}"
        )
    if val_loss < state.best_loss:
        state = replace(state, best_loss=float(val_loss), best_epoch=epoch,
                        current_epoch=epoch)
    else:
        state = replace(state, current_epoch=epoch)
    fire = epoch >= state.active_from and (epoch - state.best_epoch) >= state.patience
    return state, ("stop" if fire else "continue")


@dataclass(frozen=True)
class StopSummary:
    stop_epoch: int | None  # None when the sequence ran out before stopping
    best_epoch: int
    best_loss: float


def run_early_stopping(val_losses, patience: int = 5, active_from: int = 10,
                       baseline: float | None = None) -> StopSummary:
    """Drive the controller over losses for epochs 1..n; stop at the first fire."""
    state = EarlyStopState.initial(patience=patience, active_from=active_from,
                                   baseline=baseline)
    for epoch, loss in enumerate(val_losses, start=1):
        state, decision = early_stop_update(state, epoch, float(loss))
        if decision == "stop":
            return StopSummary(stop_epoch=epoch, best_epoch=state.best_epoch,
                               best_loss=state.best_loss)
    return StopSummary(stop_epoch=None, best_epoch=state.best_epoch,
                       best_loss=state.best_loss)
