"""Command line interface: ``pizzactl <command> --scene FILE``.

Exit codes: 0 success, 1 validation failure or mismatch, 2 parse error.
"""

from __future__ import annotations

import argparse
import sys

from ..errors import PizzaError, SceneParseError
from ..pizza import build_minimal_pizza
from .oracle import DEFAULT_KS, oracle_check
from .report import compare_reports, render_report, run_pipeline
from .render import render_svg
from .scene import GEOMETRIC, dumps, load_scene, pizza_json

EXIT_OK, EXIT_INVALID, EXIT_PARSE = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the result to this file instead of standard output")
    common.add_argument("--format", choices=("json", "text", "svg"), default="text")

    p = argparse.ArgumentParser(prog="pizzactl", description="Exact στ-pizza invariants of triangle pairs.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("validate", "parse and validate a scene"),
        ("pizza", "minimal pizzas of both triangles"),
        ("sigtau", "full invariant: pizzas, sigma and tau"),
        ("render", "SVG link diagram"),
    ):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("--scene", required=True)
    cp = sub.add_parser("compare", parents=[common], help="decide equivalence of two scenes")
    cp.add_argument("scenes", nargs=2, metavar="SCENE")
    op = sub.add_parser("oracle", parents=[common], help="corroborate exact orders numerically")
    op.add_argument("--scene", required=True)
    op.add_argument("--samples", type=int, default=8)
    op.add_argument("--seed", type=int, default=0)
    op.add_argument("--tolerance", type=float, default=0.05)
    op.add_argument("--kmin", type=int, default=DEFAULT_KS[0])
    op.add_argument("--kmax", type=int, default=DEFAULT_KS[-1])
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(args) -> int:
    if args.command == "compare":
        a, b = (run_pipeline(load_scene(path)) for path in args.scenes)
        verdict = compare_reports(a, b)
        if args.format == "json":
            _emit(dumps({"A": a.name, "B": b.name, "verdict": verdict}), args.out)
        else:
            _emit(f"{a.name} vs {b.name}: {verdict}\n", args.out)
        return EXIT_OK

    scene = load_scene(args.scene)
    if args.command == "validate":
        msg = f"{scene.name}: valid {scene.kind} scene\n"
        _emit(dumps({"name": scene.name, "kind": scene.kind, "valid": True}) if args.format == "json" else msg,
              args.out)
        return EXIT_OK
    if args.command == "pizza":
        if scene.kind == GEOMETRIC:
            pT, pTp = build_minimal_pizza(scene.T, scene.Tp), build_minimal_pizza(scene.Tp, scene.T)
        else:
            pT, pTp = scene.chart.pizza_T, scene.chart.pizza_Tp
        report = run_pipeline(scene)
        if args.format == "json":
            _emit(dumps({"name": scene.name, "pizza_T": pizza_json(pT), "pizza_Tp": pizza_json(pTp)}), args.out)
        else:
            text = render_report(report, "text")
            _emit(text.split("\nsigma:")[0].rstrip("\n") + "\n", args.out)
        return EXIT_OK
    if args.command == "sigtau":
        _emit(render_report(run_pipeline(scene), args.format), args.out)
        return EXIT_OK
    if args.command == "render":
        _emit(render_svg(run_pipeline(scene)), args.out)
        return EXIT_OK
    if args.command == "oracle":
        if scene.kind != GEOMETRIC:
            sys.stderr.write("oracle: abstract charts have no geometry to sample\n")
            return EXIT_INVALID
        result = oracle_check(scene, args.samples, args.seed, range(args.kmin, args.kmax + 1), args.tolerance)
        if args.format == "json":
            _emit(dumps({
                "name": scene.name,
                "checks": len(result.checks),
                "mismatches": [c.label for c in result.mismatches],
            }), args.out)
        else:
            lines = result.lines() + [f"{len(result.checks)} checks, {len(result.mismatches)} mismatches"]
            _emit("\n".join(lines) + "\n", args.out)
        return EXIT_INVALID if result.mismatches else EXIT_OK
    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _run(args)
    except SceneParseError as err:
        sys.stderr.write(f"parse error: {err}\n")
        return EXIT_PARSE
    except PizzaError as err:
        sys.stderr.write(f"invalid: {err}\n")
        return EXIT_INVALID
    except OSError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
