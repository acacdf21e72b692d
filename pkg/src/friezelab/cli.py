"""Command-line interface: one binary over the whole library.

Subcommands are thin adapters; all symmetry logic lives in the library
modules.  Exit codes: 0 ok, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import cylinder, detect, group, isometry, motif, synthesis, verify
from .errors import FriezeError, NotAFrieze
from .image import read_pgm, write_pgm


def _load_motif(spec: str) -> motif.Motif:
    if spec == "flag" and not Path(spec).exists():
        return motif.asymmetric_flag_motif()
    if spec == "sinusoid" and not Path(spec).exists():
        return motif.sinusoid_motif()
    return motif.parse_motif(Path(spec).read_bytes())


def _cmd_compose(args) -> int:
    p = isometry.parse_isometry(args.p)
    q = isometry.parse_isometry(args.q)
    print(isometry.compose(p, q))
    return 0


def _cmd_classify_gens(args) -> int:
    gens = [isometry.parse_isometry(g) for g in args.generators]
    try:
        g = group.from_generators(gens)
    except NotAFrieze:
        print("not a frieze: no translation generated", file=sys.stderr)
        return 1
    print(group.format_group(g))
    return 0


def _cmd_generate(args) -> int:
    m = _load_motif(args.motif)
    tag = group.parse_tag(args.tag)
    period = Fraction(args.period) if args.period else m.cell_width
    g = group.standard_group(tag, period, Fraction(args.anchor))
    scene = synthesis.generate(m, g, args.copies)
    if args.svg:
        Path(args.svg).write_text(synthesis.render_svg(scene))
    if args.pgm:
        img = synthesis.rasterize(scene, args.px, args.supersample)
        Path(args.pgm).write_bytes(write_pgm(img))
    if not args.svg and not args.pgm:
        print("nothing to do: pass --svg and/or --pgm", file=sys.stderr)
        return 1
    return 0


def _cmd_detect(args) -> int:
    img = read_pgm(Path(args.image).read_bytes())
    report = detect.classify_image(img, eta=args.eta, delta=args.delta)
    print(detect.format_report(report))
    if args.figure:
        from .figures import save_detection_figure

        save_detection_figure(img, report, args.figure)
    return 0


def _cmd_transform(args) -> int:
    img = read_pgm(Path(args.image).read_bytes())
    out = detect.transform_image(img, args.op, args.k)
    Path(args.output).write_bytes(write_pgm(out))
    return 0


def _cmd_wrap(args) -> int:
    tag = group.parse_tag(args.tag)
    report = cylinder.wrap_report(tag, args.n)
    print(cylinder.format_cylinder_report(report))
    if args.texture:
        if not args.output:
            print("--texture needs -o OUTPUT", file=sys.stderr)
            return 2
        img = read_pgm(Path(args.texture).read_bytes())
        ring = cylinder.wrap_texture(img, args.n)
        Path(args.output).write_bytes(write_pgm(ring))
    return 0


def _cmd_verify_table(args) -> int:
    results = verify.verify_table(seed=args.seed)
    sys.stdout.write(verify.render_report(results))
    return 0 if all(c.ok for c in results) else 1


def _cmd_print_table(args) -> int:
    print("Strip symmetry multiplication table (p o q: q first, then p):")
    sys.stdout.write(verify.render_table1())
    print()
    print("Compact (kinds only):")
    sys.stdout.write(verify.render_table2())
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="friezelab",
        description="Exact frieze-group algebra, synthesis and detection",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compose", help="compose two strip isometries")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("classify-gens", help="classify a generator set")
    p.add_argument("generators", nargs="+", metavar="G")
    p.set_defaults(func=_cmd_classify_gens)

    p = sub.add_parser("generate", help="stamp a motif into a frieze")
    p.add_argument("--motif", required=True, help="motif file, or 'flag'/'sinusoid'")
    p.add_argument("--tag", required=True, help="frieze type (p2mg, TRVSg, <T,R,V,S'>)")
    p.add_argument("--period", default=None, help="group period (default: motif cell)")
    p.add_argument("--anchor", default="0", help="rotation/mirror anchor")
    p.add_argument("--copies", type=int, default=4, help="number of periods")
    p.add_argument("--svg", help="write SVG here")
    p.add_argument("--pgm", help="write raster PGM here")
    p.add_argument("--px", type=int, default=32, help="pixels per unit for --pgm")
    p.add_argument("--supersample", type=int, default=1, choices=(1, 2, 4))
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("detect", help="classify a strip image")
    p.add_argument("image", help="binary PGM (P5)")
    p.add_argument("--eta", type=float, default=detect.DEFAULT_ETA)
    p.add_argument("--delta", type=int, default=detect.DEFAULT_DELTA)
    p.add_argument("--figure", help="save an annotated figure here (png/pdf/svg)")
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("transform", help="scale/shear an image for experiments")
    p.add_argument("image")
    p.add_argument(
        "--op",
        required=True,
        choices=("scale_uniform", "scale_x", "scale_y", "shear_x"),
    )
    p.add_argument("--k", required=True, help="rational factor, e.g. 2 or 1/2")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("wrap", help="frieze-to-cylinder report / texture")
    p.add_argument("--tag", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--texture", help="one-period PGM to tile around the cylinder")
    p.add_argument("-o", "--output", help="output PGM for --texture")
    p.set_defaults(func=_cmd_wrap)

    p = sub.add_parser("verify-table", help="check all 16 table cells vs the oracle")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_table)

    p = sub.add_parser("print-table", help="print both multiplication tables")
    p.set_defaults(func=_cmd_print_table)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FriezeError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
