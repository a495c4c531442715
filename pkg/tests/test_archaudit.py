import pytest

from fakeval import (
    FREEZE_PRESETS,
    REPORTED_TRAINABLE,
    FreezeConfig,
    audit_report,
    build_spec,
    param_count,
    reported_delta,
)
from fakeval.errors import ArgumentOutOfRange, InputTooSmall


def stage_sizes(input_size):
    spec = build_spec(input_size)
    s = spec.stage_output_sizes
    return [s["conv1"], s["conv2_x"], s["conv3_x"], s["conv4_x"], s["conv5_x"]]


def test_output_sizes_224():
    assert stage_sizes(224) == [112, 56, 28, 14, 7]


def test_output_sizes_299():
    assert stage_sizes(299) == [150, 75, 38, 19, 10]


def test_output_sizes_32_ceiling_chain():
    assert stage_sizes(32) == [16, 8, 4, 2, 1]


def test_input_too_small():
    with pytest.raises(InputTooSmall):
        build_spec(31)


def test_bad_head_rejected():
    with pytest.raises(ArgumentOutOfRange):
        build_spec(224, head="bare")


def test_step1_trainable_total():
    spec = build_spec(299, head="adapted")
    counts = param_count(spec, FREEZE_PRESETS["step1"])
    assert counts.trainable == 23_739_393
    assert counts.non_trainable == 53_120  # batchnorm moving statistics


def test_adapted_head_dense_count():
    spec = build_spec(299, head="adapted")
    dense = [l for l in spec.layers if l.name == "head_dense"]
    assert len(dense) == 1
    assert dense[0].weight_params == 10 * 10 * 2048 + 1 == 204_801


def test_original_head_layout():
    spec = build_spec(224, head="original")
    final = spec.layers[-1]
    assert final.kind == "dense"
    assert final.out_channels == 1000
    assert final.weight_params == 2048 * 1000 + 1000
    counts = param_count(spec, FREEZE_PRESETS["step1"])
    assert counts.total == 25_636_712


def test_block_multiplicities():
    spec = build_spec(224)
    for stage, blocks in (("conv2_x", 3), ("conv3_x", 4), ("conv4_x", 6), ("conv5_x", 3)):
        seen = {l.block_index for l in spec.layers if l.stage == stage and l.block_index}
        assert seen == set(range(1, blocks + 1))


def test_projection_layers_in_first_blocks_only():
    spec = build_spec(224)
    proj = [l.name for l in spec.layers if l.name.endswith("_0_conv")]
    assert proj == [
        "conv2_block1_0_conv",
        "conv3_block1_0_conv",
        "conv4_block1_0_conv",
        "conv5_block1_0_conv",
    ]


def test_conservation_across_presets():
    spec = build_spec(299)
    totals = {
        name: param_count(spec, cfg).total for name, cfg in FREEZE_PRESETS.items()
    }
    assert len(set(totals.values())) == 1


def test_monotonicity_of_presets():
    spec = build_spec(299)
    t1 = param_count(spec, FREEZE_PRESETS["step1"]).trainable
    t2 = param_count(spec, FREEZE_PRESETS["step2"]).trainable
    t3 = param_count(spec, FREEZE_PRESETS["step3"]).trainable
    assert t1 >= t2 >= t3


def test_head_trainable_in_every_preset():
    spec = build_spec(299)
    head = [l for l in spec.layers if l.stage == "head"]
    for cfg in FREEZE_PRESETS.values():
        assert all(cfg.trainable(l) for l in head)


def test_resolution_independence_of_backbone():
    a = build_spec(224, head="adapted")
    b = build_spec(299, head="adapted")
    back_a = sum(l.weight_params for l in a.layers if l.stage != "head")
    back_b = sum(l.weight_params for l in b.layers if l.stage != "head")
    assert back_a == back_b == 23_534_592
    head_a = sum(l.weight_params for l in a.layers if l.stage == "head")
    head_b = sum(l.weight_params for l in b.layers if l.stage == "head")
    assert head_a != head_b


def test_all_frozen_config_counts_nothing():
    spec = build_spec(299)
    frozen = FreezeConfig("none", lambda layer: False)
    counts = param_count(spec, frozen)
    assert counts.trainable == 0
    assert counts.non_trainable == counts.total


def test_reported_deltas():
    """Step 1 matches the reported total exactly; steps 2-3 report their gap."""
    spec = build_spec(299)
    c1, r1, d1 = reported_delta(spec, "step1")
    assert (c1, r1, d1) == (23_739_393, 23_739_393, 0)
    c2, r2, d2 = reported_delta(spec, "step2")
    assert r2 == REPORTED_TRAINABLE["step2"]
    assert d2 == c2 - r2
    c3, _, d3 = reported_delta(spec, "step3")
    # each gap is exactly one 1x1 reduce convolution of conv5
    assert d2 == 1024 * 512 + 512
    assert d3 == 2048 * 512 + 512


def test_audit_report_csv():
    spec = build_spec(299)
    lines = audit_report(spec).splitlines()
    assert lines[0] == (
        "layer,stage,out_size,params,trainable_step1,trainable_step2,trainable_step3"
    )
    assert lines[1].startswith("conv1_conv,conv1,150,9472,1,0,0")
    total = lines[-1].split(",")
    assert total[0] == "total"
    assert int(total[4]) == 23_739_393
    # per-layer flag sums must reproduce the totals row
    body = [line.split(",") for line in lines[1:-1]]
    recomputed = sum(
        int(row[3]) for row in body if row[4] == "1"
    ) - sum(
        # batchnorm statistics inside trainable layers stay frozen
        2 * spec.layers[i].out_channels
        for i, row in enumerate(body)
        if row[4] == "1" and spec.layers[i].kind == "batchnorm"
    )
    assert recomputed == 23_739_393
