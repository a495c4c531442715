"""
Training dynamics: sigmoid head, BCE, Adam, early stopping
==========================================================

Fit a one-parameter logistic model on synthetic scores with the exact Adam
recursion, then replay a validation-loss trace through the patience rule.
"""

import numpy as np

from fakeval import (
    AdamState,
    adam_step,
    bce_loss,
    run_early_stopping,
    sigmoid,
)

rng = np.random.default_rng(3)

# logits for a weakly separated pair of classes; one bias parameter to learn
x = np.concatenate([rng.normal(-1.0, 1.0, 300), rng.normal(1.0, 1.0, 300)])
y = np.concatenate([np.zeros(300), np.ones(300)])

w = np.array([0.0, 0.0])  # [scale, bias]
state = AdamState.fresh(2)
for step in range(1, 501):
    p = sigmoid(w[0] * x + w[1])
    loss = bce_loss(y, p)
    # analytic gradient of mean BCE through the sigmoid
    resid = (p - y) / y.size
    grad = np.array([float(resid @ x), float(resid.sum())])
    state, delta = adam_step(state, grad)
    w = w + delta
    if step in (1, 10, 100, 500):
        print(f"step {step:3d}: loss {loss:.5f}  w = [{w[0]:+.4f}, {w[1]:+.4f}]")

final = bce_loss(y, sigmoid(w[0] * x + w[1]))
print(f"final loss {final:.5f} (chance level is {np.log(2):.5f})")

# --- patience rule ----------------------------------------------------------

# a trace that improves for a while, then drifts upward
val = [1.0 - 0.02 * e for e in range(1, 14)]
val += [val[-1] + 0.01 * k for k in range(1, 6)]
summary = run_early_stopping(val, patience=5, active_from=10)
print(f"\nearly stopping: best epoch {summary.best_epoch} "
      f"(val {summary.best_loss:.4f}), stopped after epoch {summary.stop_epoch}")

# a baseline loss can dominate the whole trace, stopping on patience alone
summary = run_early_stopping([0.5, 0.49, 0.52, 0.51, 0.53],
                             patience=5, active_from=1, baseline=0.3)
print(f"with baseline 0.3: best epoch {summary.best_epoch}, "
      f"stopped after epoch {summary.stop_epoch}")
