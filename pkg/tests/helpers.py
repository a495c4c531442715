"""Shared builders for test prediction sets."""

from __future__ import annotations

import numpy as np

from fakeval import PredictionRecord, PredictionSet


def build_set(pairs, dataset="synthetic") -> PredictionSet:
    """PredictionSet from (label, score) pairs with generated ids."""
    records = tuple(
        PredictionRecord(f"s{i:05d}", dataset, f"g{i:05d}", int(lab), float(score))
        for i, (lab, score) in enumerate(pairs)
    )
    return PredictionSet(records=records)


def random_set(rng: np.random.Generator, n: int, tie_bins: int | None = None) -> PredictionSet:
    """Random set with both classes present; tie_bins quantizes scores to force ties."""
    labels = rng.integers(0, 2, size=n)
    labels[0] = 0
    labels[1] = 1
    scores = rng.random(n)
    if tie_bins is not None:
        scores = np.round(scores * tie_bins) / tie_bins
    return build_set(zip(labels.tolist(), scores.tolist()))
