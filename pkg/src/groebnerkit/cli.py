"""Command-line surface: parse inputs, run computations, emit results.

Subcommands cover basis computation, division, membership, elimination,
staircase diagrams, inverse kinematics, and oscillator sampling, with
text, JSON, CSV, and SVG output. Exit codes: 0 on success, 1 on domain
errors, 2 on usage or expression-syntax errors; usage errors are
reported before any computation starts.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .division import divide
from .groebner import GroebnerBasis, buchberger, reduce_basis
from .ideal import StaircaseDiagram, eliminate, is_member, staircase
from .kinematics import ArmSpec, IKResult, Target, ik_solve
from .order import MonomialOrder
from .oscillator import OscillatorParams, Sample, sample, solve_ivp
from .parse import ParseError, format_polynomial, parse_system
from .ring import VariableContext

ORDER_NAMES = ("lex", "grlex", "grevlex")

_FORMATS = {
    "groebner": ("text", "json"),
    "divide": ("text", "json"),
    "member": ("text", "json"),
    "eliminate": ("text", "json"),
    "staircase": ("svg", "text", "json"),
    "ik": ("text", "csv", "json"),
    "oscillator": ("csv", "svg"),
}


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groebnerkit",
        description="Exact-arithmetic Groebner basis toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, order=True, fmt_default="text"):
        if order:
            p.add_argument("--order", choices=ORDER_NAMES, default="grevlex")
        p.add_argument("--format", default=fmt_default, dest="fmt")
        p.add_argument("--output", default=None, help="output path (default stdout)")

    p = sub.add_parser("groebner", help="reduced Groebner basis of the input system")
    p.add_argument("--vars", required=True)
    p.add_argument("--no-reduce", action="store_true", help="print the raw completed basis")
    common(p)
    p.add_argument("exprs", nargs="+", metavar="EXPR")

    p = sub.add_parser("divide", help="divide F by an ordered divisor list: F -- D1 D2 ...")
    p.add_argument("--vars", required=True)
    common(p)
    p.add_argument("f", metavar="F")
    p.add_argument("divisors", nargs="+", metavar="D")

    p = sub.add_parser("member", help="ideal membership: F -- G1 G2 ...")
    p.add_argument("--vars", required=True)
    common(p)
    p.add_argument("f", metavar="F")
    p.add_argument("generators", nargs="+", metavar="G")

    p = sub.add_parser(
        "eliminate",
        help="elimination ideal basis; always computed under lex",
    )
    p.add_argument("--vars", required=True)
    p.add_argument("--keep", type=int, required=True, help="trailing variables to keep")
    common(p)
    p.set_defaults(order="lex")
    p.add_argument("exprs", nargs="+", metavar="EXPR")

    p = sub.add_parser("staircase", help="staircase diagram of the leading-term ideal")
    p.add_argument("--vars", required=True)
    p.add_argument("--cell", type=int, default=40, help="cell size in px for SVG")
    common(p, fmt_default="svg")
    p.add_argument("exprs", nargs="+", metavar="EXPR")

    p = sub.add_parser("ik", help="two-link planar inverse kinematics")
    p.add_argument("--l1", type=float, required=True)
    p.add_argument("--l2", type=float, required=True)
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--y", type=float, default=None)
    p.add_argument("--trajectory", default=None, help="CSV of x,y waypoints")
    p.add_argument("--tol", type=float, default=1e-9)
    common(p, order=False)

    p = sub.add_parser("oscillator", help="sample the underdamped closed-form solution")
    p.add_argument("--m", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--b", type=float, default=0.0)
    p.add_argument("--y0", type=float, default=1.0)
    p.add_argument("--y1", type=float, default=0.0)
    p.add_argument("--t-end", type=float, default=10.0, dest="t_end")
    p.add_argument("--n", type=int, default=200)
    p.add_argument("--svg-width", type=int, default=640)
    p.add_argument("--svg-height", type=int, default=400)
    common(p, order=False, fmt_default="csv")

    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code
        return 0 if code in (0, None) else int(code)

    handler = _HANDLERS[args.command]
    try:
        _check_format(args)
        text = handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        _emit(text, args.output)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


def _check_format(args) -> None:
    allowed = _FORMATS[args.command]
    if args.fmt not in allowed:
        raise _UsageError(
            f"format {args.fmt!r} not supported by {args.command!r} "
            f"(choose from {', '.join(allowed)})"
        )


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _context(spec: str) -> VariableContext:
    names = [n.strip() for n in spec.split(",") if n.strip()]
    try:
        return VariableContext(names)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _display(basis_polys, order: MonomialOrder) -> list[str]:
    # Largest leading monomial first for display.
    formatted = [format_polynomial(g, order) for g in basis_polys]
    return list(reversed(formatted))


# ---- subcommand handlers ------------------------------------------------


def _cmd_groebner(args) -> str:
    ctx = _context(args.vars)
    order = MonomialOrder(args.order)
    polys = parse_system(args.exprs, ctx)
    basis = buchberger(polys, order)
    if not args.no_reduce:
        basis = reduce_basis(basis)
    lines = _display(basis.generators, order)
    if args.fmt == "json":
        payload = {"order": order.value, "vars": list(ctx.names), "basis": lines}
        return json.dumps(payload, indent=2) + "\n"
    return "".join(line + "\n" for line in lines)


def _cmd_divide(args) -> str:
    ctx = _context(args.vars)
    order = MonomialOrder(args.order)
    f = parse_system([args.f], ctx)[0]
    divisors = parse_system(args.divisors, ctx)
    result = divide(f, divisors, order)
    quotients = [format_polynomial(q, order) for q in result.quotients]
    remainder = format_polynomial(result.remainder, order)
    if args.fmt == "json":
        payload = {
            "order": order.value,
            "vars": list(ctx.names),
            "quotients": quotients,
            "remainder": remainder,
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = [f"q{i + 1} = {q}" for i, q in enumerate(quotients)]
    lines.append(f"remainder = {remainder}")
    return "".join(line + "\n" for line in lines)


def _cmd_member(args) -> str:
    ctx = _context(args.vars)
    order = MonomialOrder(args.order)
    f = parse_system([args.f], ctx)[0]
    generators = parse_system(args.generators, ctx)
    basis = reduce_basis(buchberger(generators, order))
    verdict = is_member(f, basis)
    if args.fmt == "json":
        payload = {
            "order": order.value,
            "vars": list(ctx.names),
            "member": verdict,
        }
        return json.dumps(payload, indent=2) + "\n"
    return ("true" if verdict else "false") + "\n"


def _cmd_eliminate(args) -> str:
    ctx = _context(args.vars)
    if args.keep < 1 or args.keep > len(ctx):
        raise _UsageError(f"--keep must be between 1 and {len(ctx)}")
    if args.order != "lex":
        print("note: elimination requires lex; computing under lex", file=sys.stderr)
    polys = parse_system(args.exprs, ctx)
    basis = reduce_basis(buchberger(polys, MonomialOrder.LEX))
    kept = eliminate(basis, args.keep)
    lines = _display(kept, MonomialOrder.LEX)
    if args.fmt == "json":
        payload = {
            "order": "lex",
            "vars": list(ctx.names),
            "keep": args.keep,
            "basis": lines,
        }
        return json.dumps(payload, indent=2) + "\n"
    return "".join(line + "\n" for line in lines)


def _cmd_staircase(args) -> str:
    ctx = _context(args.vars)
    if len(ctx) != 2:
        raise _UsageError("staircase supports 2 variables")
    order = MonomialOrder(args.order)
    polys = parse_system(args.exprs, ctx)
    basis = reduce_basis(buchberger(polys, order))
    diagram = staircase(basis)
    if args.fmt == "svg":
        return _staircase_svg(diagram, ctx.names, args.cell)
    if args.fmt == "json":
        payload = {
            "vars": list(ctx.names),
            "generators": [list(g) for g in diagram.minimal_generators],
            "width": diagram.width,
            "height": diagram.height,
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = [f"{a} {b}" for a, b in diagram.minimal_generators]
    return "".join(line + "\n" for line in lines)


def _cmd_ik(args) -> str:
    arm = ArmSpec(args.l1, args.l2)
    if args.trajectory is not None:
        targets = _read_trajectory(args.trajectory)
    elif args.x is not None and args.y is not None:
        targets = [Target(args.x, args.y)]
    else:
        raise _UsageError("ik needs --x and --y, or --trajectory")
    results = [(t, ik_solve(arm, t, args.tol)) for t in targets]
    if args.fmt == "csv":
        return _ik_csv(results)
    if args.fmt == "json":
        return _ik_json(results)
    return _ik_text(results)


def _cmd_oscillator(args) -> str:
    params = OscillatorParams(m=args.m, k=args.k, b=args.b, y0=args.y0, y1=args.y1)
    sol = solve_ivp(params)
    rows = sample(sol, args.t_end, args.n)
    if args.fmt == "svg":
        return _oscillator_svg(rows, args.svg_width, args.svg_height)
    header = "t,y,env_hi,env_lo\n"
    body = "".join(
        f"{r.t:.12g},{r.y:.12g},{r.env_hi:.12g},{r.env_lo:.12g}\n" for r in rows
    )
    return header + body


_HANDLERS = {
    "groebner": _cmd_groebner,
    "divide": _cmd_divide,
    "member": _cmd_member,
    "eliminate": _cmd_eliminate,
    "staircase": _cmd_staircase,
    "ik": _cmd_ik,
    "oscillator": _cmd_oscillator,
}


# ---- inverse-kinematics output ------------------------------------------


def _read_trajectory(path: str) -> list[Target]:
    targets = []
    try:
        fh = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read trajectory: {exc}") from None
    with fh:
        for line_number, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            parts = [p.strip() for p in line.split(",")]
            try:
                x, y = float(parts[0]), float(parts[1])
            except (ValueError, IndexError):
                if line_number == 1:
                    continue  # header row
                raise _UsageError(f"bad trajectory row {line_number}: {line!r}") from None
            targets.append(Target(x, y))
    if not targets:
        raise _UsageError("trajectory file holds no waypoints")
    return targets


def _ik_csv(results: list[tuple[Target, IKResult]]) -> str:
    lines = ["x,y,theta1,theta2,residual"]
    for target, result in results:
        for s in result.solutions:
            lines.append(
                f"{target.x:.12g},{target.y:.12g},"
                f"{s.theta1:.12g},{s.theta2:.12g},{s.residual:.3g}"
            )
        if result.diagnostic:
            print(
                f"target ({target.x:.12g}, {target.y:.12g}): {result.diagnostic}",
                file=sys.stderr,
            )
    return "".join(line + "\n" for line in lines)


def _ik_text(results: list[tuple[Target, IKResult]]) -> str:
    lines = []
    single = len(results) == 1
    for target, result in results:
        if not single:
            lines.append(f"target ({target.x:.12g}, {target.y:.12g}):")
        if result.diagnostic:
            lines.append(result.diagnostic)
            continue
        for s in result.solutions:
            lines.append(
                f"theta1={s.theta1:.12g} theta2={s.theta2:.12g} residual={s.residual:.3g}"
            )
    return "".join(line + "\n" for line in lines)


def _ik_json(results: list[tuple[Target, IKResult]]) -> str:
    entries = []
    for target, result in results:
        entries.append(
            {
                "x": target.x,
                "y": target.y,
                "solutions": [
                    {"theta1": s.theta1, "theta2": s.theta2, "residual": s.residual}
                    for s in result.solutions
                ],
                "diagnostic": result.diagnostic,
            }
        )
    payload = entries[0] if len(entries) == 1 else {"targets": entries}
    return json.dumps(payload, indent=2) + "\n"


# ---- SVG rendering -------------------------------------------------------


def _staircase_svg(diagram: StaircaseDiagram, names, cell: int) -> str:
    margin = 48
    w = diagram.width
    h = diagram.height
    width_px = 2 * margin + w * cell
    height_px = 2 * margin + h * cell

    def px(u: float, v: float) -> tuple[float, float]:
        return (margin + u * cell, height_px - margin - v * cell)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width_px} {height_px}" '
        f'width="{width_px}" height="{height_px}">',
        f'<rect width="{width_px}" height="{height_px}" fill="white"/>',
    ]
    for u in range(w):
        for v in range(h):
            if diagram.contains(u, v):
                x, y = px(u, v + 1)
                parts.append(
                    f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                    f'fill="#cfe2f3" stroke="none"/>'
                )
    for i in range(w + 1):
        x, _ = px(i, 0)
        parts.append(
            f'<line x1="{x}" y1="{margin}" x2="{x}" y2="{height_px - margin}" '
            f'stroke="#b0b0b0" stroke-width="1"/>'
        )
    for j in range(h + 1):
        _, y = px(0, j)
        parts.append(
            f'<line x1="{margin}" y1="{y}" x2="{width_px - margin}" y2="{y}" '
            f'stroke="#b0b0b0" stroke-width="1"/>'
        )
    for i in range(w + 1):
        x, y = px(i, 0)
        parts.append(
            f'<text x="{x}" y="{y + 18}" font-size="12" text-anchor="middle" '
            f'fill="#333">{i}</text>'
        )
    for j in range(h + 1):
        x, y = px(0, j)
        parts.append(
            f'<text x="{x - 12}" y="{y + 4}" font-size="12" text-anchor="end" '
            f'fill="#333">{j}</text>'
        )
    for a, b in diagram.minimal_generators:
        x, y = px(a, b)
        parts.append(f'<circle cx="{x}" cy="{y}" r="5" fill="#1f4e8c"/>')
    x_label, y_label = px(w, 0)
    parts.append(
        f'<text x="{x_label + 10}" y="{y_label + 4}" font-size="14" '
        f'fill="#000">{names[0]}</text>'
    )
    x_top, y_top = px(0, h)
    parts.append(
        f'<text x="{x_top}" y="{y_top - 10}" font-size="14" text-anchor="middle" '
        f'fill="#000">{names[1]}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _oscillator_svg(rows: list[Sample], width: int, height: int) -> str:
    margin = 50
    t_end = rows[-1].t
    y_max = max(max(abs(r.env_hi) for r in rows), 1e-12) * 1.08

    def px(t: float, y: float) -> tuple[float, float]:
        x = margin + (t / t_end) * (width - 2 * margin)
        v = height / 2 - (y / y_max) * (height / 2 - margin)
        return (x, v)

    def polyline(points: list[tuple[float, float]], style: str) -> str:
        body = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
        return f'<polyline fill="none" {style} points="{body}"/>'

    axis_y0 = px(0, 0)[1]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{axis_y0:.2f}" x2="{width - margin}" '
        f'y2="{axis_y0:.2f}" stroke="#444" stroke-width="1"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="#444" stroke-width="1"/>',
        polyline(
            [px(r.t, r.env_hi) for r in rows],
            'stroke="#888" stroke-width="1" stroke-dasharray="6 4"',
        ),
        polyline(
            [px(r.t, r.env_lo) for r in rows],
            'stroke="#888" stroke-width="1" stroke-dasharray="6 4"',
        ),
        polyline([px(r.t, r.y) for r in rows], 'stroke="#1f4e8c" stroke-width="2"'),
        f'<text x="{width - margin}" y="{axis_y0 + 18:.2f}" font-size="13" '
        f'text-anchor="end" fill="#000">t</text>',
        f'<text x="{margin - 8}" y="{margin - 8}" font-size="13" '
        f'text-anchor="end" fill="#000">y</text>',
        f'<text x="{margin}" y="{axis_y0 + 18:.2f}" font-size="11" '
        f'fill="#333">0</text>',
        f'<text x="{width - margin}" y="{axis_y0 - 6:.2f}" font-size="11" '
        f'text-anchor="end" fill="#333">{t_end:.6g}</text>',
        f'<text x="{margin + 6}" y="{px(0, y_max / 1.08)[1] + 4:.2f}" font-size="11" '
        f'fill="#333">{y_max / 1.08:.6g}</text>',
        "</svg>",
    ]
    return "\n".join(parts) + "\n"


if __name__ == "__main__":
    main()
