"""Dataset curation: frame selection, stratified splitting, and leakage purging.

Video-derived datasets contribute many near-identical frames per source video.
Curation therefore (a) keeps only one frame per second of video, (b) splits
samples into train/val/test strata-by-strata so every (dataset, class) cell
follows the global ratios, and (c) purges from train and val every sample
whose source video also appears in the test split, so the test set stays
fully separated.
"""

from __future__ import annotations

import csv
import io
from collections import defaultdict
from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    ArgumentOutOfRange,
    BadRatios,
    DuplicateId,
    EmptyInput,
    EmptyManifest,
    LabelOutOfDomain,
    MalformedRow,
    UnsortedTimestamps,
)

MANIFEST_HEADER = ("sample_id", "dataset", "class", "group_id", "timestamp_ms")
SPLIT_NAMES = ("train", "val", "test")
DEFAULT_RATIOS = (0.75, 0.15, 0.10)


@dataclass(frozen=True)
class SampleManifestRow:
    """One manifest entry; group_id ties frames to their source video."""

    sample_id: str
    dataset: str
    label: int  # CSV column name is "class"
    group_id: str = ""
    timestamp_ms: int | None = None

    def __post_init__(self):
        if self.label not in (0, 1):
            raise LabelOutOfDomain(f"class must be 0 or 1, got {self.label!r}")
        if self.timestamp_ms is not None and self.timestamp_ms < 0:
            raise ArgumentOutOfRange(
                f"timestamp_ms must be >= 0, got {self.timestamp_ms!r}"
            )


@dataclass(frozen=True)
class PurgeEntry:
    sample_id: str
    reason: str


@dataclass(frozen=True)
class SplitAssignment:
    """Total assignment of surviving sample_ids to train/val/test."""

    assignment: dict[str, str]
    seed: int
    purge_log: tuple[PurgeEntry, ...] = ()

    def ids_in(self, split: str) -> set[str]:
        return {sid for sid, s in self.assignment.items() if s == split}


def parse_manifest(text: str) -> tuple[SampleManifestRow, ...]:
    """Parse the manifest CSV (`sample_id,dataset,class,group_id,timestamp_ms`)."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise EmptyManifest("manifest file is empty") from None
    if tuple(header) != MANIFEST_HEADER:
        raise MalformedRow(
            f"expected header {','.join(MANIFEST_HEADER)!r}, got {','.join(header)!r}"
        )
    rows = []
    seen: set[str] = set()
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(MANIFEST_HEADER):
            raise MalformedRow(f"line {lineno}: expected 5 columns, got {len(row)}")
        sample_id, dataset, label_s, group_id, ts_s = row
        try:
            label = int(label_s)
        except ValueError:
            raise MalformedRow(f"line {lineno}: unparseable class {label_s!r}") from None
        ts = None
        if ts_s != "":
            try:
                ts = int(ts_s)
            except ValueError:
                raise MalformedRow(
                    f"line {lineno}: unparseable timestamp_ms {ts_s!r}"
                ) from None
        if sample_id in seen:
            raise DuplicateId(f"line {lineno}: duplicate sample_id {sample_id!r}")
        seen.add(sample_id)
        rows.append(SampleManifestRow(sample_id, dataset, label, group_id, ts))
    if not rows:
        raise EmptyManifest("manifest has a header but no rows")
    return tuple(rows)


def serialize_manifest(rows) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(MANIFEST_HEADER)
    for r in rows:
        ts = "" if r.timestamp_ms is None else r.timestamp_ms
        writer.writerow([r.sample_id, r.dataset, r.label, r.group_id, ts])
    return out.getvalue()


def select_frames(rows) -> tuple[SampleManifestRow, ...]:
    """Keep one frame per whole second of one video's frame rows.

    For each second s = 0, 1, 2, ... up to the last timestamp, the first frame
    with timestamp >= s*1000 ms is emitted; no frame is emitted twice.
    """
    rows = tuple(rows)
    if not rows:
        raise EmptyInput("no frame rows given")
    groups = {r.group_id for r in rows}
    if len(groups) != 1:
        raise ValueError(f"frame rows must share one group_id, got {sorted(groups)}")
    stamps = [r.timestamp_ms for r in rows]
    if any(t is None for t in stamps):
        raise ValueError("frame rows need timestamp_ms")
    if any(b < a for a, b in zip(stamps, stamps[1:])):
        raise UnsortedTimestamps(f"timestamps not ascending for group {rows[0].group_id!r}")

    selected = []
    idx = 0
    second = 0
    last = stamps[-1]
    while second * 1000 <= last and idx < len(rows):
        target = second * 1000
        while idx < len(rows) and stamps[idx] < target:
            idx += 1
        if idx >= len(rows):
            break
        selected.append(rows[idx])
        idx += 1
        second += 1
    return tuple(selected)


def _check_ratios(ratios) -> tuple[float, float, float]:
    if len(ratios) != 3:
        raise BadRatios(f"need exactly 3 ratios, got {len(ratios)}")
    ratios = tuple(float(r) for r in ratios)
    if any(r <= 0 for r in ratios):
        raise BadRatios(f"ratios must be positive, got {ratios}")
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise BadRatios(f"ratios must sum to 1, got {sum(ratios)!r}")
    return ratios


def _largest_remainder(n: int, ratios) -> list[int]:
    """Split n into three counts hitting ratio*n; ties favor train, then val."""
    quotas = [r * n for r in ratios]
    counts = [int(q) for q in quotas]
    remainders = [q - c for q, c in zip(quotas, counts)]
    leftover = n - sum(counts)
    for i in sorted(range(3), key=lambda i: (-remainders[i], i))[:leftover]:
        counts[i] += 1
    return counts


def initial_split(
    manifest,
    ratios=DEFAULT_RATIOS,
    seed: int = 0,
    exclude=frozenset(),
) -> SplitAssignment:
    """Seeded stratified split into train/val/test.

    Rows are grouped into (dataset, class) strata; each stratum is shuffled
    deterministically and cut at largest-remainder counts, so per-dataset
    proportions match the global ratios.  Ids in ``exclude`` are dropped
    first (manual quality deselection) and recorded in the purge log.
    """
    ratios = _check_ratios(ratios)
    manifest = tuple(manifest)
    if not manifest:
        raise EmptyManifest("cannot split an empty manifest")
    exclude = set(exclude)

    purge_log = [
        PurgeEntry(sample_id=r.sample_id, reason="manual exclusion")
        for r in manifest
        if r.sample_id in exclude
    ]
    rows = [r for r in manifest if r.sample_id not in exclude]

    strata: dict[tuple[str, int], list[str]] = defaultdict(list)
    for r in rows:
        strata[(r.dataset, r.label)].append(r.sample_id)

    rng = np.random.default_rng(seed)
    assignment: dict[str, str] = {}
    for key in sorted(strata):
        ids = strata[key]
        order = rng.permutation(len(ids))
        counts = _largest_remainder(len(ids), ratios)
        bounds = (counts[0], counts[0] + counts[1])
        for pos, idx in enumerate(order):
            if pos < bounds[0]:
                split = "train"
            elif pos < bounds[1]:
                split = "val"
            else:
                split = "test"
            assignment[ids[idx]] = split
    return SplitAssignment(assignment=assignment, seed=seed, purge_log=tuple(purge_log))


def purge_leakage(assignment: SplitAssignment, manifest) -> SplitAssignment:
    """Remove train/val samples whose source group also appears in test.

    The test split is never modified; every removal is logged with reason
    "test-group overlap".  Empty group_ids never match anything.
    """
    manifest = tuple(manifest)
    group_of = {r.sample_id: r.group_id for r in manifest}
    test_groups = {
        group_of[sid]
        for sid, split in assignment.assignment.items()
        if split == "test" and group_of.get(sid, "")
    }
    kept: dict[str, str] = {}
    log = list(assignment.purge_log)
    for sid, split in assignment.assignment.items():
        if split != "test" and group_of.get(sid, "") in test_groups:
            log.append(PurgeEntry(sample_id=sid, reason="test-group overlap"))
        else:
            kept[sid] = split
    return replace(assignment, assignment=kept, purge_log=tuple(log))


@dataclass(frozen=True)
class SplitCountRow:
    label: int
    dataset: str
    train: int
    val: int
    test: int

    @property
    def total(self) -> int:
        return self.train + self.val + self.test


@dataclass(frozen=True)
class SplitReport:
    """Per-(class, dataset) counts plus grand totals."""

    rows: tuple[SplitCountRow, ...]
    train: int
    val: int
    test: int

    @property
    def total(self) -> int:
        return self.train + self.val + self.test


def split_report(assignment: SplitAssignment, manifest) -> SplitReport:
    """Count surviving samples per (class, dataset) and split.

    Every (class, dataset) pair present in the manifest keeps a row, even
    when all of its samples were purged.
    """
    manifest = tuple(manifest)
    keys = sorted({(r.label, r.dataset) for r in manifest})
    counts = {k: {s: 0 for s in SPLIT_NAMES} for k in keys}
    row_of = {r.sample_id: r for r in manifest}
    for sid, split in assignment.assignment.items():
        r = row_of.get(sid)
        if r is not None:
            counts[(r.label, r.dataset)][split] += 1
    rows = tuple(
        SplitCountRow(
            label=label,
            dataset=dataset,
            train=counts[(label, dataset)]["train"],
            val=counts[(label, dataset)]["val"],
            test=counts[(label, dataset)]["test"],
        )
        for label, dataset in keys
    )
    return SplitReport(
        rows=rows,
        train=sum(r.train for r in rows),
        val=sum(r.val for r in rows),
        test=sum(r.test for r in rows),
    )


def format_split_table(report: SplitReport) -> str:
    """Fixed-width rendering with percentage shares on the totals row."""
    lines = [f"{'Class':<6}{'Dataset':<22}{'Train':>10}{'Val':>10}{'Test':>10}{'Sum':>10}"]
    for r in report.rows:
        cls = "Real" if r.label == 0 else "Fake"
        lines.append(
            f"{cls:<6}{r.dataset:<22}{r.train:>10,}{r.val:>10,}{r.test:>10,}{r.total:>10,}"
        )
    total = report.total
    if total > 0:
        shares = tuple(100.0 * n / total for n in (report.train, report.val, report.test))
    else:
        shares = (0.0, 0.0, 0.0)
    lines.append(
        f"{'Sum':<6}{'':<22}"
        f"{report.train:>10,}{report.val:>10,}{report.test:>10,}{total:>10,}"
    )
    lines.append(
        f"{'':<6}{'':<22}"
        f"{'(' + format(shares[0], '.1f') + '%)':>10}"
        f"{'(' + format(shares[1], '.1f') + '%)':>10}"
        f"{'(' + format(shares[2], '.1f') + '%)':>10}"
    )
    return "\n".join(lines) + "\n"


def split_csv(assignment: SplitAssignment) -> str:
    """`sample_id,split` rows, sorted by sample_id for determinism."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["sample_id", "split"])
    for sid in sorted(assignment.assignment):
        writer.writerow([sid, assignment.assignment[sid]])
    return out.getvalue()


def purge_log_csv(assignment: SplitAssignment) -> str:
    """`sample_id,reason` rows in purge order."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["sample_id", "reason"])
    for entry in assignment.purge_log:
        writer.writerow([entry.sample_id, entry.reason])
    return out.getvalue()
