"""
Prediction CSV format
=====================

The whole toolkit feeds on one five-column CSV.  Parse a small literal file,
poke at the typed records, split the scores by class, and write it back out
unchanged.
"""

from fakeval import class_partition, parse_predictions, serialize_predictions

text = """\
sample_id,dataset,group_id,label,score
ff_0042_s13,faceforensics,vid0042,1,0.9731
ff_0042_s14,faceforensics,vid0042,1,0.8912
cdf_0007_s02,celebdf,vid0007,0,0.1204
cdf_0007_s03,celebdf,vid0007,0,0.0451
itw_0101_s00,inthewild,vid0101,1,0.6177
itw_0102_s00,inthewild,vid0102,0,0.4409
"""

pred_set = parse_predictions(text, provenance="inline demo")
print(f"{len(pred_set)} records from {pred_set.provenance!r}")

for r in pred_set.records[:3]:
    print(f"  {r.sample_id}: dataset={r.dataset} group={r.group_id} "
          f"label={r.label} score={r.score}")

# labels and scores come out as read-only numpy arrays
print(f"labels {pred_set.labels.tolist()}")
print(f"mean score {pred_set.scores.mean():.4f}")

x0, x1 = class_partition(pred_set)
print(f"class 0 scores: {x0.tolist()}")
print(f"class 1 scores: {x1.tolist()}")

# serialization is the exact inverse of parsing
assert serialize_predictions(pred_set) == text
print("round trip is byte-exact")
