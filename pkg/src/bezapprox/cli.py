"""Command-line interface: ``approx``, ``table`` and ``plot`` subcommands."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Sequence

from .catalog import BuiltinExample, get_example
from .constrain import ContactOrder, constrained_points, default_contact, parse_contact
from .curves import BezierCurve, RationalBezierCurve
from .errors import CurveValidationError, InfeasibleContactError, SingularSystemError
from .lsq import ApproximationProblem, WeightChoice, approximate
from .metrics import DEFAULT_SAMPLES, d_l1, d_max, error_report, hausdorff
from .svg import render_svg

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_INFEASIBLE = 3
EXIT_SINGULAR = 4

FORMAT_VERSION = 1


# -- curve file I/O ---------------------------------------------------------

def curve_to_dict(curve: RationalBezierCurve) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "dimension": curve.dimension,
        "points": curve.points.tolist(),
        "weights": curve.weights.tolist(),
    }


def curve_from_dict(data: dict, normalize_endpoints: bool = False) -> RationalBezierCurve:
    if not isinstance(data, dict):
        raise CurveValidationError("curve file must contain a JSON object")
    if data.get("format_version") != FORMAT_VERSION:
        raise CurveValidationError(
            f"unsupported format_version {data.get('format_version')!r}; expected {FORMAT_VERSION}"
        )
    for key in ("dimension", "points", "weights"):
        if key not in data:
            raise CurveValidationError(f"curve file is missing the {key!r} field")
    curve = RationalBezierCurve(data["points"], data["weights"], normalize_endpoints=normalize_endpoints)
    if curve.dimension != data["dimension"]:
        raise CurveValidationError(
            f"dimension field says {data['dimension']!r} but points have {curve.dimension} coordinates"
        )
    return curve


def write_curve(curve: RationalBezierCurve, path: str | Path) -> None:
    # json writes floats with repr(), the shortest string that round-trips exactly
    Path(path).write_text(json.dumps(curve_to_dict(curve), indent=2) + "\n")


def read_curve(path: str | Path, normalize_endpoints: bool = False) -> RationalBezierCurve:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CurveValidationError(f"{path}: invalid JSON ({exc})") from exc
    return curve_from_dict(data, normalize_endpoints)


# -- formatting ---------------------------------------------------------------

def _num(v: float, full: bool) -> str:
    return f"{v:.15g}" if full else f"{v:.6g}"


def _parse_degrees(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = (int(v) for v in text.split(".."))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"degrees must look like 'a..b' or 'a', got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"invalid degree range {text!r}")
    return list(range(lo, hi + 1))


def _parse_zoom(text: str) -> tuple[float, float, float, float]:
    try:
        x0, y0, x1, y1 = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"zoom must be x0,y0,x1,y1, got {text!r}") from None
    return x0, y0, x1, y1


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


# -- commands -----------------------------------------------------------------

def cmd_approx(args: argparse.Namespace) -> int:
    curve = read_curve(args.input, args.normalize_endpoints)
    contact = parse_contact(args.contact) or default_contact(args.degree)
    problem = ApproximationProblem(curve, args.degree, contact, WeightChoice.parse(args.rho))
    Q = approximate(problem)
    report = error_report(curve, Q, problem.rho, args.samples)
    free = len(constrained_points(curve, problem.m, contact).free_indices)
    result = {
        "format_version": FORMAT_VERSION,
        "degree": problem.m,
        "control_points": Q.points.tolist(),
        "contact": [contact.k, contact.h],
        "rho": problem.rho.value,
        "free_points": free,
        "errors": {
            "d_max": report.d_max,
            "d_l1": report.d_l1,
            "hausdorff": report.hausdorff,
            "objective": report.objective_value,
        },
        "samples": args.samples,
    }
    if args.output:
        Path(args.output).write_text(json.dumps(result, indent=2) + "\n")
    full = args.full_precision
    print(
        f"degree {problem.m}  contact ({contact})  rho={problem.rho.value}  H={args.samples}: "
        f"d_max={_num(report.d_max, full)}  d_l1={_num(report.d_l1, full)}  "
        f"hausdorff={_num(report.hausdorff, full)}  objective={_num(report.objective_value, full)}"
    )
    if free == 0:
        print("note: no free control points; the curve is fixed entirely by the contact conditions")
    return EXIT_OK


def table_rows(
    example: BuiltinExample,
    rhos: Sequence[WeightChoice],
    degrees: Sequence[int] | None = None,
    contacts: Sequence[ContactOrder | None] | None = None,
    samples: int | None = None,
) -> list[dict]:
    """One dict per (degree, contact) with the table's error columns per rho."""
    degrees = list(degrees or example.degrees)
    contacts = list(contacts or example.contacts)
    H = samples or example.samples
    rows = []
    for contact in contacts:
        for m in degrees:
            used = contact or default_contact(m)
            row = {"degree": m, "contact": str(used)}
            for rho in rhos:
                Q = approximate(ApproximationProblem(example.curve, m, used, rho))
                if example.hausdorff_only:
                    row[f"hausdorff_{rho.value}"] = hausdorff(example.curve, Q, H)
                else:
                    row[f"d_max_{rho.value}"] = d_max(example.curve, Q, H)
                    row[f"d_l1_{rho.value}"] = d_l1(example.curve, Q, H)
            rows.append(row)
    return rows


def cmd_table(args: argparse.Namespace) -> int:
    try:
        example = get_example(args.example)
    except KeyError as exc:
        raise CurveValidationError(str(exc.args[0])) from None
    rhos = list(WeightChoice) if args.rho == "both" else [WeightChoice.parse(args.rho)]
    contacts = [parse_contact(args.contact)] if args.contact else None
    rows = table_rows(example, rhos, args.degrees, contacts, args.samples)

    keys = [k for k in rows[0] if k not in ("degree", "contact")]
    # d_max columns first, then d_l1, mirroring the reference layout
    keys.sort(key=lambda k: (k.split("_")[0] != "d" or "max" not in k, k))
    print(f"Example {example.id}: {example.title} (degree {example.curve.degree})")
    header = ["m", "(k,h)"] + keys
    print("  ".join(f"{h:>18}" if i > 1 else f"{h:>5}" for i, h in enumerate(header)))
    for row in rows:
        cells = [f"{row['degree']:>5}", f"{row['contact']:>5}"]
        cells += [f"{_num(row[k], args.full_precision):>18}" for k in keys]
        print("  ".join(cells))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=["degree", "contact"] + keys)
            writer.writeheader()
            for row in rows:
                writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in row.items()})
    return EXIT_OK


def cmd_plot(args: argparse.Namespace) -> int:
    curve = read_curve(args.input, args.normalize_endpoints)
    try:
        result = json.loads(Path(args.result).read_text())
        Q = BezierCurve(result["control_points"])
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise CurveValidationError(f"{args.result}: not a valid result file ({exc})") from exc
    Path(args.svg).write_text(render_svg(curve, Q, zoom=args.zoom))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bezapprox",
        description="Approximate rational Bezier curves by constrained polynomial Bezier curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("approx", help="approximate a curve read from a JSON file")
    p.add_argument("--input", required=True, help="curve file (format_version 1)")
    p.add_argument("--degree", required=True, type=_positive_int, help="target degree m")
    p.add_argument("--contact", default="auto", help="'auto' or 'k,h' with k,h in {0,1,2}")
    p.add_argument("--rho", choices=[w.value for w in WeightChoice], default="omega")
    p.add_argument("--samples", type=_positive_int, default=DEFAULT_SAMPLES, help="grid subintervals H")
    p.add_argument("--output", help="write the result JSON here")
    p.add_argument("--normalize-endpoints", action="store_true", help="accept non-standard-form weights")
    p.add_argument("--full-precision", action="store_true", help="print 15 significant digits")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("table", help="error table for a built-in example curve")
    p.add_argument("--example", required=True, type=int, help="built-in example id (1-4)")
    p.add_argument("--rho", choices=["omega", "omega2", "both"], default="both")
    p.add_argument("--degrees", type=_parse_degrees, help="degree range 'a..b' (default: the example's)")
    p.add_argument("--contact", help="override the example's contact order ('auto' or 'k,h')")
    p.add_argument("--samples", type=_positive_int, help="grid subintervals H (default: the example's)")
    p.add_argument("--csv", help="also write the rows to this CSV file")
    p.add_argument("--full-precision", action="store_true", help="print 15 significant digits")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("plot", help="render a curve and its approximant to SVG")
    p.add_argument("--input", required=True, help="curve file (format_version 1)")
    p.add_argument("--result", required=True, help="result JSON written by 'approx'")
    p.add_argument("--svg", required=True, help="output SVG path")
    p.add_argument("--zoom", type=_parse_zoom, help="viewport x0,y0,x1,y1 in curve coordinates")
    p.add_argument("--normalize-endpoints", action="store_true")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CurveValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except InfeasibleContactError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except SingularSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
