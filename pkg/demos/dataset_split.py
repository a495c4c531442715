"""
Leakage-safe dataset splitting
==============================

Build a frame manifest whose rows share source videos, split it into
train/val/test, then purge every train/val frame whose video also appears in
the test split.  Frames from one recording never straddle the test boundary.
"""

import numpy as np

from fakeval import (
    SampleManifestRow,
    format_split_table,
    initial_split,
    purge_leakage,
    split_report,
)

rng = np.random.default_rng(5)

rows = []
for v in range(60):
    dataset = "corpusA" if v % 3 else "corpusB"
    label = int(v % 2)
    for frame in range(int(rng.integers(3, 9))):
        rows.append(SampleManifestRow(
            sample_id=f"v{v:03d}_f{frame:02d}",
            dataset=dataset,
            label=label,
            group_id=f"v{v:03d}",
            timestamp_ms=frame * 1000,
        ))
manifest = tuple(rows)
print(f"manifest: {len(manifest)} frames from 60 videos")

assignment = initial_split(manifest, seed=42)
print(f"before purge: {len(assignment.purge_log)} purge entries")

assignment = purge_leakage(assignment, manifest)
print(f"after purge:  {len(assignment.purge_log)} purge entries")
for entry in assignment.purge_log[:5]:
    print(f"  {entry.sample_id}: {entry.reason}")

# verify the guarantee by hand
group_of = {r.sample_id: r.group_id for r in manifest}
test_groups = {group_of[s] for s in assignment.ids_in("test")}
train_val = assignment.ids_in("train") | assignment.ids_in("val")
assert not test_groups & {group_of[s] for s in train_val}
print("no video appears on both sides of the test boundary")

print()
print(format_split_table(split_report(assignment, manifest)))
