"""Command line front end.

Exit codes: 0 success, 1 domain error (unsolvable input, bad file
contents), 2 usage error. Output is plain "key: value" text unless
--json is given.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import curves, games, graphs, lsystem, numerics, puzzles, turtle


class DomainError(Exception):
    pass


def _emit(args, pairs: dict):
    if getattr(args, "json", False):
        print(json.dumps(pairs))
    else:
        for key, value in pairs.items():
            print(f"{key}: {value}")


def _write_svg(path: str, drawing: turtle.Drawing):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(turtle.emit_svg(drawing))


def cmd_solve_nim(args):
    try:
        heaps = games.Heaps(tuple(args.heaps))
    except ValueError as exc:
        raise DomainError(str(exc))
    analysis = games.analyze_nim(heaps)
    out = {"outcome": analysis.outcome, "grundy": analysis.grundy}
    if analysis.optimal_moves:
        best = min(analysis.optimal_moves, key=lambda m: (m.heap_index, m.take))
        # heaps are displayed 1-based for humans
        out["move"] = f"heap {best.heap_index + 1} take {best.take}"
        if args.json:
            out["move"] = {"heapIndex": best.heap_index, "take": best.take}
    _emit(args, out)


def cmd_solve_make(args):
    try:
        moves = frozenset(int(s) for s in args.moves.split(","))
        game = games.SubtractionGame(args.target, moves)
    except ValueError as exc:
        raise DomainError(str(exc))
    analysis = games.analyze_subtraction(game)
    out = {"outcome": analysis.outcome, "grundy": analysis.grundy}
    if analysis.optimal_moves:
        out["move"] = analysis.optimal_moves[0]
    _emit(args, out)


def cmd_solve_sudoku4(args):
    rows = _read_int_grid(args.gridfile)
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise DomainError("grid file must contain 4 rows of 4 integers")
    try:
        grid = puzzles.SudokuGrid4(tuple(tuple(r) for r in rows))
        solutions = puzzles.solve_sudoku4(grid)
    except (ValueError, puzzles.InvalidGivens) as exc:
        raise DomainError(str(exc))
    out = {"solutions": len(solutions)}
    for i, solution in enumerate(solutions[:4]):
        out[f"solution{i + 1}"] = " / ".join(
            "".join(str(x) for x in row) for row in solution.cells
        )
    _emit(args, out)


def cmd_solve_dominoes(args):
    rows = _read_int_grid(args.boardfile)
    if not rows:
        raise DomainError("empty board file")
    height = len(rows)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DomainError("board rows must have equal length")
    removed = frozenset(
        (c, r) for r in range(height) for c in range(width) if rows[r][c] == 0
    )
    board = puzzles.Board(width, height, removed)
    tileable, witness = puzzles.domino_tileable(board)
    out = {"tileable": tileable}
    if witness is not None:
        out["dominoes"] = len(witness)
        out["tiling"] = "; ".join(
            f"({a[0]},{a[1]})-({b[0]},{b[1]})" for a, b in witness
        )
    _emit(args, out)


def _read_int_grid(path: str) -> list[list[int]]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DomainError(str(exc))
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise DomainError(f"bad grid line: {line!r}")
    return rows


def cmd_count(args):
    fn = {
        "squares": puzzles.count_subsquares,
        "rooks": puzzles.count_rook_placements,
        "triangles": puzzles.count_triangles,
    }[args.what]
    try:
        value = fn(args.n)
    except ValueError as exc:
        raise DomainError(str(exc))
    if args.json:
        print(json.dumps({"count": value}))
    else:
        print(value)


def cmd_render_modular(args):
    try:
        diagram = curves.modular_chords(args.n, args.k)
    except ValueError as exc:
        raise DomainError(str(exc))
    drawing = curves.chord_drawing(diagram)
    _write_svg(args.out, drawing)
    _emit(args, {"chords": len(diagram.chords), "out": args.out})


def cmd_render_curve(args):
    try:
        if args.kind == "cardioid":
            curve = curves.Cardioid()
        elif args.kind == "cycloid":
            curve = curves.Cycloid(args.r)
        else:
            curve = curves.Epicycloid(args.R, args.r)
        drawing = curves.sample_parametric(curve, args.samples)
    except ValueError as exc:
        raise DomainError(str(exc))
    _write_svg(args.out, drawing)
    _emit(args, {"kind": args.kind, "out": args.out})


def cmd_render_lsystem(args):
    if args.preset:
        if args.preset not in lsystem.PRESETS:
            raise DomainError(f"unknown preset {args.preset!r}")
        text = lsystem.PRESETS[args.preset]
    else:
        if not args.rules_file:
            raise DomainError("need --rules-file or --preset")
        try:
            with open(args.rules_file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DomainError(str(exc))
    try:
        system = lsystem.parse(text)
        spec = lsystem.RenderSpec(order=args.order, step=args.step, angle=args.angle)
        commands = lsystem.compile(system, spec)
        drawing, _ = turtle.interpret(commands)
    except (lsystem.LSystemError, turtle.UnbalancedPop, ValueError) as exc:
        raise DomainError(str(exc))
    _write_svg(args.out, drawing)
    _emit(args, {"segments": drawing.segment_count, "out": args.out})


def cmd_render_stitch(args):
    try:
        drawing = curves.stitch_drawing(args.n, args.style)
    except ValueError as exc:
        raise DomainError(str(exc))
    _write_svg(args.out, drawing)
    _emit(args, {"segments": drawing.segment_count, "out": args.out})


def cmd_render_tree(args):
    try:
        drawing = turtle.recursive_tree(
            args.len, args.theta, args.decrement, args.min_len
        )
    except ValueError as exc:
        raise DomainError(str(exc))
    _write_svg(args.out, drawing)
    _emit(args, {"segments": drawing.segment_count, "out": args.out})


def cmd_estimate_pi(args):
    try:
        spec = numerics.NeedleSpec(args.length, args.spacing, args.drops, args.seed)
        estimate, crossings = numerics.buffon_estimate(spec)
    except ValueError as exc:
        raise DomainError(str(exc))
    except numerics.EstimateUndefined:
        raise DomainError("no crossings; estimate undefined")
    _emit(args, {"estimate": f"{estimate:.6f}", "crossings": crossings})


def cmd_solve_euler(args):
    try:
        with open(args.graphfile, encoding="utf-8") as fh:
            graph = graphs.parse_graph(fh.read())
    except (OSError, ValueError) as exc:
        raise DomainError(str(exc))
    result = graphs.eulerian_class(graph)
    out = {"class": result.kind}
    if result.endpoints is not None:
        out["endpoints"] = f"{result.endpoints[0]} {result.endpoints[1]}"
    _emit(args, out)


def cmd_serve(args):
    import uvicorn

    from .service import create_app

    app = create_app(snapshot_path=args.snapshot, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recmath", description="Recreational mathematics toolkit"
    )
    parser.add_argument("--json", action="store_true", help="JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve games and puzzles")
    solve_sub = solve.add_subparsers(dest="game", required=True)
    p = solve_sub.add_parser("nim")
    p.add_argument("heaps", type=int, nargs="+")
    p.set_defaults(func=cmd_solve_nim)
    p = solve_sub.add_parser("make")
    p.add_argument("target", type=int)
    p.add_argument("--moves", default="1,2")
    p.set_defaults(func=cmd_solve_make)
    p = solve_sub.add_parser("sudoku4")
    p.add_argument("gridfile")
    p.set_defaults(func=cmd_solve_sudoku4)
    p = solve_sub.add_parser("dominoes")
    p.add_argument("boardfile")
    p.set_defaults(func=cmd_solve_dominoes)
    p = solve_sub.add_parser("euler")
    p.add_argument("graphfile")
    p.set_defaults(func=cmd_solve_euler)

    count = sub.add_parser("count", help="closed-form counters")
    count.add_argument("what", choices=["squares", "rooks", "triangles"])
    count.add_argument("n", type=int)
    count.set_defaults(func=cmd_count)

    render = sub.add_parser("render", help="write SVG figures")
    render_sub = render.add_subparsers(dest="figure", required=True)
    p = render_sub.add_parser("modular")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--out", default="modular.svg")
    p.set_defaults(func=cmd_render_modular)
    p = render_sub.add_parser("curve")
    p.add_argument("--kind", choices=["cardioid", "cycloid", "epicycloid"], required=True)
    p.add_argument("--samples", type=int, default=720)
    p.add_argument("-r", type=float, default=1.0)
    p.add_argument("-R", type=float, default=1.0)
    p.add_argument("--out", default="curve.svg")
    p.set_defaults(func=cmd_render_curve)
    p = render_sub.add_parser("lsystem")
    p.add_argument("--rules-file")
    p.add_argument("--preset", choices=sorted(lsystem.PRESETS))
    p.add_argument("--order", type=int, default=4)
    p.add_argument("--step", type=float, default=10.0)
    p.add_argument("--angle", type=float)
    p.add_argument("--out", default="lsystem.svg")
    p.set_defaults(func=cmd_render_lsystem)
    p = render_sub.add_parser("stitch")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--style", choices=["perpendicular", "vshape"], default="perpendicular")
    p.add_argument("--out", default="stitch.svg")
    p.set_defaults(func=cmd_render_stitch)
    p = render_sub.add_parser("tree")
    p.add_argument("--len", type=float, default=100.0)
    p.add_argument("--theta", type=float, default=20.0)
    p.add_argument("--decrement", type=float, default=10.0)
    p.add_argument("--min-len", type=float, default=5.0, dest="min_len")
    p.add_argument("--out", default="tree.svg")
    p.set_defaults(func=cmd_render_tree)

    estimate = sub.add_parser("estimate", help="Monte Carlo estimators")
    estimate_sub = estimate.add_subparsers(dest="quantity", required=True)
    p = estimate_sub.add_parser("pi")
    p.add_argument("--drops", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--length", type=float, default=1.0)
    p.add_argument("--spacing", type=float, default=1.0)
    p.set_defaults(func=cmd_estimate_pi)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=None)
    serve.add_argument("--snapshot", default=None)
    serve.add_argument("--ui-dir", default=None)
    serve.set_defaults(func=cmd_serve)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command == "serve" and args.port is None:
        import os

        args.port = int(os.environ.get("PORT", "8000"))
    try:
        args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
