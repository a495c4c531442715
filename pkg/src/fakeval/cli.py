"""Command-line front end.

Exit codes: 0 on success, 1 on usage errors (bad flags or arguments), 2 on
validation errors (inputs that parse as flags but fail domain checks).
argparse normally exits 2 on usage problems, so the parser is subclassed to
keep the two failure classes apart.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import archaudit, curation, density, imageops, roc, traindyn
from .errors import FakevalError
from .predictions import load_predictions
from .report import write_report
from .svgplot import Marker, render_kde_svg, render_roc_svg


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _bbox(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected X,Y,W,H")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError("bbox parts must be integers") from None


def _ratios(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected TRAIN,VAL,TEST")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError("ratios must be numbers") from None


def _baseline(text: str):
    if text.lower() == "none":
        return None
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("baseline must be a number or 'none'") from None


def _emit(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_bytes(text.encode("utf-8"))


def _cmd_eval(args) -> int:
    pred_set = load_predictions(args.predictions)
    paths = write_report(pred_set, args.out)
    for name in sorted(paths):
        print(f"wrote {paths[name]}")
    return 0


def _cmd_roc(args) -> int:
    pred_set = load_predictions(args.predictions)
    curve = roc.build_roc(pred_set)
    _emit(roc.roc_csv(curve), args.out)
    if args.svg is not None:
        markers = [Marker(m, format(m, "g")) for m in args.marker]
        Path(args.svg).write_bytes(render_roc_svg(curve, markers).encode("utf-8"))
    return 0


def _cmd_kde(args) -> int:
    pred_set = load_predictions(args.predictions)
    kde0, kde1 = density.class_kdes(pred_set)
    kde_all = density.pooled_kde(pred_set)
    grid = density.default_grid((args.lo, args.hi), args.grid_n)
    curve_all = density.density_curve(kde_all, grid, "all")
    curve0 = density.density_curve(kde0, grid, "class0")
    curve1 = density.density_curve(kde1, grid, "class1")
    _emit(density.kde_csv(curve_all, curve0, curve1), args.out)
    if args.svg is not None:
        markers = [Marker(m, format(m, "g")) for m in args.marker]
        svg = render_kde_svg((curve_all, curve0, curve1), markers)
        Path(args.svg).write_bytes(svg.encode("utf-8"))
    return 0


def _cmd_split(args) -> int:
    manifest = curation.parse_manifest(Path(args.manifest).read_text(encoding="utf-8"))
    exclude: set[str] = set()
    if args.exclude is not None:
        text = Path(args.exclude).read_text(encoding="utf-8")
        exclude = {line.strip() for line in text.splitlines() if line.strip()}
    assignment = curation.initial_split(
        manifest, ratios=args.ratios, seed=args.seed, exclude=exclude
    )
    if not args.no_purge:
        assignment = curation.purge_leakage(assignment, manifest)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "split.csv").write_bytes(curation.split_csv(assignment).encode("utf-8"))
    (out / "purge_log.csv").write_bytes(
        curation.purge_log_csv(assignment).encode("utf-8")
    )
    report = curation.split_report(assignment, manifest)
    sys.stdout.write(curation.format_split_table(report))
    return 0


def _cmd_frames(args) -> int:
    manifest = curation.parse_manifest(Path(args.manifest).read_text(encoding="utf-8"))
    by_group: dict[str, list] = {}
    for row in manifest:
        by_group.setdefault(row.group_id, []).append(row)
    selected = []
    for group_rows in by_group.values():
        selected.extend(curation.select_frames(group_rows))
    _emit(curation.serialize_manifest(selected), args.out)
    return 0


def _cmd_crop(args) -> int:
    image = imageops.load_ppm(args.image)
    cropped = imageops.crop_align(image, args.bbox, target=args.target)
    imageops.save_ppm(cropped, args.out)
    return 0


def _cmd_audit(args) -> int:
    spec = archaudit.build_spec(args.input_size, head=args.head)
    _emit(archaudit.audit_report(spec), args.out)
    for preset in ("step1", "step2", "step3"):
        computed, reported, delta = archaudit.reported_delta(spec, preset)
        print(f"{preset}: trainable={computed} reported={reported} delta={delta}")
    return 0


def _cmd_simulate_train(args) -> int:
    text = Path(args.losses).read_text(encoding="utf-8")
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != ("epoch", "train_loss", "val_loss"):
        raise FakevalError("expected header epoch,train_loss,val_loss")
    state = traindyn.EarlyStopState.initial(
        patience=args.patience, active_from=args.active_from, baseline=args.baseline
    )
    stop_epoch = None
    for row in reader:
        if not row:
            continue
        if len(row) != 3:
            raise FakevalError(f"expected 3 columns, got {len(row)}")
        try:
            epoch = int(row[0])
            val_loss = float(row[2])
        except ValueError:
            raise FakevalError(f"unparseable loss row {row!r}") from None
        state, decision = traindyn.early_stop_update(state, epoch, val_loss)
        if decision == "stop":
            stop_epoch = epoch
            break
    print(f"stop epoch: {'none' if stop_epoch is None else stop_epoch}")
    print(f"best epoch: {state.best_epoch}")
    print(f"best val loss: {state.best_loss!r}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="fakeval", description="deepfake-score evaluation toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[], help="full report for a predictions CSV")
    p.add_argument("--predictions", required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("roc", help="ROC sweep CSV, optional SVG")
    p.add_argument("--predictions", required=True)
    p.add_argument("--out", default=None, help="CSV path (default stdout)")
    p.add_argument("--svg", default=None, help="also render an SVG here")
    p.add_argument("--marker", action="append", type=float, default=[],
                   help="threshold marker, repeatable")
    p.set_defaults(func=_cmd_roc)

    p = sub.add_parser("kde", help="class density CSV, optional SVG")
    p.add_argument("--predictions", required=True)
    p.add_argument("--out", default=None, help="CSV path (default stdout)")
    p.add_argument("--svg", default=None, help="also render an SVG here")
    p.add_argument("--marker", action="append", type=float, default=[])
    p.add_argument("--grid-n", type=int, default=density.DEFAULT_GRID_N)
    p.add_argument("--lo", type=float, default=density.DEFAULT_GRID_INTERVAL[0])
    p.add_argument("--hi", type=float, default=density.DEFAULT_GRID_INTERVAL[1])
    p.set_defaults(func=_cmd_kde)

    p = sub.add_parser("split", help="stratified split with leakage purge")
    p.add_argument("--manifest", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--ratios", type=_ratios, default=curation.DEFAULT_RATIOS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exclude", default=None, help="file with one sample_id per line")
    p.add_argument("--no-purge", action="store_true")
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("frames", help="one-frame-per-second selection")
    p.add_argument("--manifest", required=True)
    p.add_argument("--out", default=None, help="CSV path (default stdout)")
    p.set_defaults(func=_cmd_frames)

    p = sub.add_parser("crop", help="crop a face box and resize")
    p.add_argument("--image", required=True, help="input PPM")
    p.add_argument("--bbox", required=True, type=_bbox, help="X,Y,W,H")
    p.add_argument("--target", type=int, default=imageops.TARGET_SIDE)
    p.add_argument("--out", required=True, help="output PPM")
    p.set_defaults(func=_cmd_crop)

    p = sub.add_parser("audit", help="ResNet-50 layer and parameter audit")
    p.add_argument("--input-size", type=int, default=299)
    p.add_argument("--head", choices=("adapted", "original"), default="adapted")
    p.add_argument("--out", default=None, help="CSV path (default stdout)")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("simulate-train", help="early-stopping simulation")
    p.add_argument("--losses", required=True, help="CSV epoch,train_loss,val_loss")
    p.add_argument("--patience", type=int, default=5)
    p.add_argument("--active-from", type=int, default=10)
    p.add_argument("--baseline", type=_baseline, default=None)
    p.set_defaults(func=_cmd_simulate_train)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FakevalError as exc:
        print(f"fakeval: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"fakeval: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
