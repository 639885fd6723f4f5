"""Command-line interface: ``hexid verify|density|render|claims``.

Exit status is 0 on success, 1 when a check finds violations and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import claims, density
from .code import make_params, predicate
from .lattice import Window
from .render import MAX_AREA, render_svg, render_text
from .verifier import verify

MAX_R = 64


def _radius(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 1 <= r <= MAX_R:
        raise argparse.ArgumentTypeError(f"radius must be in 1..{MAX_R}, got {r}")
    return r


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hexid", description="r-identifying codes on the hex grid")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="exhaustively verify the code for one radius")
    p.add_argument("--r", type=_radius, required=True)
    p.add_argument("--drop-cdprime", action="store_true", help="negative control: keep only C'")
    p.add_argument("--workers", type=_positive, default=1)

    p = sub.add_parser("density", help="exact density table")
    p.add_argument("--r-min", type=_radius, required=True)
    p.add_argument("--r-max", type=_radius, required=True)
    p.add_argument("--with-literature", action="store_true", help="add previously published upper bounds")

    p = sub.add_parser("render", help="draw the code inside a window")
    p.add_argument("--r", type=_radius, required=True)
    for name in ("x0", "x1", "y0", "y1"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--format", choices=("text", "svg"), default="text")

    p = sub.add_parser("claims", help="run the distance and spacing suites")
    p.add_argument("--max-k", type=_positive, required=True)
    p.add_argument("--max-r", type=_positive, required=True)
    return parser


def cmd_verify(args, out) -> int:
    p = make_params(args.r)
    if not p.illustrated:
        print(f"note: r={args.r} is below the construction's intended range", file=sys.stderr)
    member = predicate(p, drop_cdprime=True) if args.drop_cdprime else None
    report = verify(p, member=member, workers=args.workers)
    out.write("\n".join(report.lines()) + "\n")
    return 0 if report.valid else 1


def density_rows(r_min: int, r_max: int, with_literature: bool = False) -> list[str]:
    header = ["r", "exact", "decimal4", "theorem_match", "note"]
    if with_literature:
        header.append("literature")
    rows = ["\t".join(header)]
    for r in range(r_min, r_max + 1):
        a = density.audit(r)
        exact = f"{a.exact.numerator}/{a.exact.denominator}"
        fields = [str(r), exact, density.decimal4(a.exact), "yes" if a.agrees_theorem else "no", a.notes]
        if with_literature:
            lit = density.LITERATURE_UPPER.get(r)
            fields.append(f"{lit.numerator}/{lit.denominator}" if lit is not None else "")
        rows.append("\t".join(fields))
    return rows


def cmd_density(args, out) -> int:
    out.write("\n".join(density_rows(args.r_min, args.r_max, args.with_literature)) + "\n")
    return 0


def cmd_render(args, out) -> int:
    p = make_params(args.r)
    w = Window(args.x0, args.x1, args.y0, args.y1)
    out.write(render_svg(p, w) if args.format == "svg" else render_text(p, w))
    return 0


def cmd_claims(args, out, dist=None) -> int:
    kwargs = {} if dist is None else {"dist": dist}
    results = claims.run_claims(args.max_k, args.max_r, **kwargs)
    for res in results:
        out.write(res.line() + "\n")
    return 0 if all(res.passed for res in results) else 1


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "density" and args.r_min > args.r_max:
        parser.error(f"empty range: --r-min {args.r_min} > --r-max {args.r_max}")
    if args.command == "render":
        w = Window(args.x0, args.x1, args.y0, args.y1)
        if w.x0 > w.x1 or w.y0 > w.y1:
            parser.error("malformed window: need x0 <= x1 and y0 <= y1")
        if w.area > MAX_AREA:
            parser.error(f"window has {w.area} vertices, limit is {MAX_AREA}")
    handler = {
        "verify": cmd_verify,
        "density": cmd_density,
        "render": cmd_render,
        "claims": cmd_claims,
    }[args.command]
    return handler(args, out)


if __name__ == "__main__":
    sys.exit(main())
