"""Structural audit of the adapted ResNet-50 classifier.

No weights, no forward pass: the model is represented symbolically as an
ordered list of layer records, from which spatial sizes (under "same"
padding, out = ceil(in / stride)) and parameter counts are derived.  The
counting convention is fixed so that the step-1 fine-tuning total comes out
at exactly 23,739,393 trainable parameters for a 299-pixel input:

* convolutions carry biases (k*k*in*out + out),
* batch normalization has 2 trainable and 2 non-trainable values per channel,
* dense layers are in*out + out.

Three freeze presets mirror the staged fine-tuning: step1 trains everything,
step2 only the conv5_x stage plus the head, step3 only the last bottleneck
of conv5_x plus the head.  The step-2 and step-3 presets, interpreted
structurally, give counts above the externally reported figures; the deltas
(one 1x1 convolution each) are surfaced rather than hidden, since the
reported freezing boundary was never pinned down to a layer list.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable

from .errors import ArgumentOutOfRange, InputTooSmall

LAYER_KINDS = ("conv", "batchnorm", "maxpool", "avgpool", "flatten", "dense")
STAGES = ("conv1", "conv2_x", "conv3_x", "conv4_x", "conv5_x", "head")

# (stage, filters, bottleneck blocks); expansion factor is 4 throughout
_BLOCK_PLAN = (
    ("conv2_x", 64, 3),
    ("conv3_x", 128, 4),
    ("conv4_x", 256, 6),
    ("conv5_x", 512, 3),
)

# trainable totals reported for the three fine-tuning steps (299-pixel input)
REPORTED_TRAINABLE = {"step1": 23_739_393, "step2": 14_656_001, "step3": 3_621_377}


@dataclass(frozen=True)
class LayerSpec:
    """One symbolic layer; parameter counts follow from the fields."""

    name: str
    kind: str
    stage: str
    block_index: int = 0  # 1-based within a stage, 0 for stem/head layers
    kernel: int = 0
    in_channels: int = 0
    out_channels: int = 0
    stride: int = 1
    has_bias: bool = True
    out_size: int = 0  # spatial side after this layer, 0 once flattened

    def __post_init__(self):
        if self.kind not in LAYER_KINDS:
            raise ArgumentOutOfRange(f"unknown layer kind {self.kind!r}")
        if self.stage not in STAGES:
            raise ArgumentOutOfRange(f"unknown stage {self.stage!r}")

    @property
    def weight_params(self) -> int:
        """Parameters that train when the layer is not frozen."""
        if self.kind == "conv":
            n = self.kernel * self.kernel * self.in_channels * self.out_channels
            return n + (self.out_channels if self.has_bias else 0)
        if self.kind == "batchnorm":
            return 2 * self.out_channels
        if self.kind == "dense":
            return self.in_channels * self.out_channels + self.out_channels
        return 0

    @property
    def state_params(self) -> int:
        """Moving statistics; never trainable under any preset."""
        return 2 * self.out_channels if self.kind == "batchnorm" else 0

    @property
    def total_params(self) -> int:
        return self.weight_params + self.state_params


@dataclass(frozen=True)
class ArchitectureSpec:
    input_size: int
    head: str
    layers: tuple[LayerSpec, ...]

    @property
    def stage_output_sizes(self) -> dict[str, int]:
        sizes: dict[str, int] = {}
        for layer in self.layers:
            sizes[layer.stage] = layer.out_size
        return sizes


@dataclass(frozen=True)
class FreezeConfig:
    """Named trainability predicate; the head stays trainable in all presets."""

    name: str
    trainable: Callable[[LayerSpec], bool]


FREEZE_PRESETS = {
    "step1": FreezeConfig("step1", lambda layer: True),
    "step2": FreezeConfig("step2", lambda layer: layer.stage in ("conv5_x", "head")),
    "step3": FreezeConfig(
        "step3",
        lambda layer: layer.stage == "head"
        or (layer.stage == "conv5_x" and layer.block_index == 3),
    ),
}


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def build_spec(input_size: int, head: str = "adapted") -> ArchitectureSpec:
    """Lay out ResNet-50 for a square input of the given side.

    head="adapted" ends in flatten + 1-unit dense (sigmoid); head="original"
    ends in global average pooling + 1000-unit dense.
    """
    if input_size < 32:
        raise InputTooSmall(f"input side must be >= 32, got {input_size}")
    if head not in ("adapted", "original"):
        raise ArgumentOutOfRange(f"head must be 'adapted' or 'original', got {head!r}")

    layers: list[LayerSpec] = []
    size = _ceil_div(input_size, 2)
    layers.append(
        LayerSpec("conv1_conv", "conv", "conv1", kernel=7, in_channels=3,
                  out_channels=64, stride=2, out_size=size)
    )
    layers.append(
        LayerSpec("conv1_bn", "batchnorm", "conv1", out_channels=64, out_size=size)
    )
    size = _ceil_div(size, 2)
    # the stride-2 max pool opens the conv2_x stage
    layers.append(
        LayerSpec("pool1_pool", "maxpool", "conv2_x", kernel=3, in_channels=64,
                  out_channels=64, stride=2, out_size=size)
    )

    channels = 64
    for stage, filters, blocks in _BLOCK_PLAN:
        out_channels = 4 * filters
        for block in range(1, blocks + 1):
            stride = 2 if block == 1 and stage != "conv2_x" else 1
            size = _ceil_div(size, stride)
            prefix = f"{stage[:-2]}_block{block}"

            def add(tag, kind, k, cin, cout, s=1):
                layers.append(
                    LayerSpec(f"{prefix}_{tag}", kind, stage, block_index=block,
                              kernel=k, in_channels=cin, out_channels=cout,
                              stride=s, out_size=size)
                )

            # main path: 1x1 reduce (carries the stride), 3x3, 1x1 expand
            add("1_conv", "conv", 1, channels, filters, stride)
            add("1_bn", "batchnorm", 0, 0, filters)
            add("2_conv", "conv", 3, filters, filters)
            add("2_bn", "batchnorm", 0, 0, filters)
            add("3_conv", "conv", 1, filters, out_channels)
            add("3_bn", "batchnorm", 0, 0, out_channels)
            if block == 1:
                # projection shortcut matching the changed width/stride
                add("0_conv", "conv", 1, channels, out_channels, stride)
                add("0_bn", "batchnorm", 0, 0, out_channels)
            channels = out_channels

    if head == "adapted":
        flat = size * size * channels
        layers.append(
            LayerSpec("head_flatten", "flatten", "head", in_channels=channels,
                      out_channels=flat, out_size=0)
        )
        layers.append(
            LayerSpec("head_dense", "dense", "head", in_channels=flat,
                      out_channels=1, out_size=0)
        )
    else:
        layers.append(
            LayerSpec("avg_pool", "avgpool", "head", kernel=size,
                      in_channels=channels, out_channels=channels, out_size=1)
        )
        layers.append(
            LayerSpec("predictions", "dense", "head", in_channels=channels,
                      out_channels=1000, out_size=0)
        )
    return ArchitectureSpec(input_size=input_size, head=head, layers=tuple(layers))


@dataclass(frozen=True)
class LayerCount:
    name: str
    trainable: int
    non_trainable: int


@dataclass(frozen=True)
class ParamCount:
    trainable: int
    non_trainable: int
    per_layer: tuple[LayerCount, ...]

    @property
    def total(self) -> int:
        return self.trainable + self.non_trainable


def param_count(spec: ArchitectureSpec, freeze: FreezeConfig) -> ParamCount:
    """Sum trainable/non-trainable parameters under a freeze preset.

    Frozen layers move all their weights into the non-trainable bucket;
    batchnorm moving statistics are non-trainable in every preset.
    """
    per_layer = []
    for layer in spec.layers:
        if freeze.trainable(layer):
            entry = LayerCount(layer.name, layer.weight_params, layer.state_params)
        else:
            entry = LayerCount(layer.name, 0, layer.total_params)
        per_layer.append(entry)
    return ParamCount(
        trainable=sum(e.trainable for e in per_layer),
        non_trainable=sum(e.non_trainable for e in per_layer),
        per_layer=tuple(per_layer),
    )


def audit_report(spec: ArchitectureSpec, freeze_presets=None) -> str:
    """Per-layer CSV with a trainability flag per preset and a totals row."""
    if freeze_presets is None:
        freeze_presets = tuple(FREEZE_PRESETS.values())
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["layer", "stage", "out_size", "params"]
        + [f"trainable_{f.name}" for f in freeze_presets]
    )
    for layer in spec.layers:
        writer.writerow(
            [layer.name, layer.stage, layer.out_size, layer.total_params]
            + [int(f.trainable(layer)) for f in freeze_presets]
        )
    totals = [param_count(spec, f).trainable for f in freeze_presets]
    grand = sum(l.total_params for l in spec.layers)
    writer.writerow(["total", "", "", grand] + totals)
    return out.getvalue()


def reported_delta(spec: ArchitectureSpec, preset_name: str) -> tuple[int, int, int]:
    """(computed, reported, computed - reported) trainable counts for a preset."""
    if preset_name not in REPORTED_TRAINABLE:
        raise ArgumentOutOfRange(f"no reported figure for preset {preset_name!r}")
    computed = param_count(spec, FREEZE_PRESETS[preset_name]).trainable
    reported = REPORTED_TRAINABLE[preset_name]
    return computed, reported, computed - reported
