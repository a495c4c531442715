"""Prediction records and the CSV interchange format.

A predictions file is a CSV with header ``sample_id,dataset,group_id,label,score``,
one record per line.  Label 0 marks real/authentic images (the negative class),
label 1 marks fakes (the positive class); the score is the raw model output in
[0, 1].  All values are immutable after construction and every operation here
is pure.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    DuplicateId,
    EmptyInput,
    LabelOutOfDomain,
    MalformedRow,
    ScoreOutOfRange,
)

HEADER = ("sample_id", "dataset", "group_id", "label", "score")


@dataclass(frozen=True)
class PredictionRecord:
    """One scored sample: identity, provenance tags, true label, raw score."""

    sample_id: str
    dataset: str
    group_id: str
    label: int
    score: float

    def __post_init__(self):
        if self.label not in (0, 1):
            raise LabelOutOfDomain(f"label must be 0 or 1, got {self.label!r}")
        if not (0.0 <= self.score <= 1.0):
            raise ScoreOutOfRange(f"score must lie in [0, 1], got {self.score!r}")


@dataclass(frozen=True)
class PredictionSet:
    """An ordered, immutable collection of prediction records."""

    records: tuple[PredictionRecord, ...]
    provenance: str = "synthetic"

    def __len__(self) -> int:
        return len(self.records)

    @cached_property
    def labels(self) -> np.ndarray:
        arr = np.array([r.label for r in self.records], dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def scores(self) -> np.ndarray:
        arr = np.array([r.score for r in self.records], dtype=np.float64)
        arr.setflags(write=False)
        return arr


def require_nonempty(pred_set: PredictionSet) -> None:
    if len(pred_set) == 0:
        raise EmptyInput(f"no records in prediction set ({pred_set.provenance})")


def parse_predictions(text: str, provenance: str = "synthetic") -> PredictionSet:
    """Parse a predictions CSV document into a validated PredictionSet.

    Row order is preserved.  Raises MalformedRow, LabelOutOfDomain,
    ScoreOutOfRange, DuplicateId, or EmptyInput on bad input.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise EmptyInput("predictions file is empty") from None
    if tuple(header) != HEADER:
        raise MalformedRow(
            f"expected header {','.join(HEADER)!r}, got {','.join(header)!r}"
        )

    records = []
    seen: set[str] = set()
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(HEADER):
            raise MalformedRow(f"line {lineno}: expected 5 columns, got {len(row)}")
        sample_id, dataset, group_id, label_s, score_s = row
        try:
            label = int(label_s)
        except ValueError:
            raise MalformedRow(f"line {lineno}: unparseable label {label_s!r}") from None
        try:
            score = float(score_s)
        except ValueError:
            raise MalformedRow(f"line {lineno}: unparseable score {score_s!r}") from None
        if sample_id in seen:
            raise DuplicateId(f"line {lineno}: duplicate sample_id {sample_id!r}")
        seen.add(sample_id)
        try:
            records.append(
                PredictionRecord(sample_id, dataset, group_id, label, score)
            )
        except (LabelOutOfDomain, ScoreOutOfRange) as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None

    if not records:
        raise EmptyInput("predictions file has a header but no records")
    return PredictionSet(records=tuple(records), provenance=provenance)


def serialize_predictions(pred_set: PredictionSet) -> str:
    """Inverse of parse_predictions; scores keep full 64-bit precision."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(HEADER)
    for r in pred_set.records:
        writer.writerow([r.sample_id, r.dataset, r.group_id, r.label, repr(r.score)])
    return out.getvalue()


def load_predictions(path) -> PredictionSet:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        return parse_predictions(fh.read(), provenance=str(path))


def class_partition(pred_set: PredictionSet) -> tuple[np.ndarray, np.ndarray]:
    """Split scores by true label: (negative-class scores, positive-class scores).

    Every record lands in exactly one side, so the two lengths sum to the
    set size.
    """
    require_nonempty(pred_set)
    labels = pred_set.labels
    scores = pred_set.scores
    return scores[labels == 0], scores[labels == 1]
