"""``miquel`` command line: construct, sweep, check, render.

Exit codes: 0 success, 2 parse or usage error, 3 construction error,
4 property failure.
"""
from __future__ import annotations

import argparse
import re
import sys
from dataclasses import replace
from typing import List, Optional, Sequence

from .centers import center_case
from .checks import PROPERTIES, SUITES, PropertyResult, replay, run_property, suite_properties
from .errors import BoundaryAmbiguous, GeometryError, NearLine, ParseError, UnknownSuite
from .geom import Point, Tolerance
from .locus import frame_line, isogonal_circle, locus_membership
from .miquel_map import CevianPair, classify_cevians, forward_miquel, inverse_miquel, side_lemma_check
from .scene import Scene, SweepSpec, format_scene, parse_scene, with_comment
from .svg import FIGURES, RenderOptions, render_svg
from .sweep import default_box, run_sweep, sweep_csv

EXIT_OK, EXIT_PARSE, EXIT_CONSTRUCTION, EXIT_PROPERTY = 0, 2, 3, 4


def _g(v: float) -> str:
    return f"{v:.12g}"


def _pt(p: Point) -> str:
    return f"{_g(p.x)}, {_g(p.y)}"


def _flag(b: bool) -> str:
    return "true" if b else "false"


def construct_report(scene: Scene) -> List[str]:
    """Key-value lines describing the configuration the scene determines."""
    tri, v, tol = scene.triangle, scene.vertex, scene.tolerance
    out = [f"vertex = {v}", f"payload = {scene.payload}"]
    if scene.line_angle is not None:
        l = frame_line(tri, v, scene.line_angle)
        out.append(f"line_direction = {_pt(l.direction)}")
        try:
            c = isogonal_circle(tri, v, l, tol)
            out += ["miquel_locus = circle", f"center = {_pt(c.center)}", f"radius = {_g(c.radius)}"]
        except NearLine as e:
            out += ["miquel_locus = line", f"anchor = {_pt(e.line.anchor)}",
                    f"direction = {_pt(e.line.direction)}"]
        return out

    extra = {}
    if scene.cevians is not None:
        cev = CevianPair(*scene.cevians)
    elif scene.point is not None:
        cev = inverse_miquel(tri, v, scene.point, tol)
    else:
        rep = center_case(tri, v, scene.center, tol)
        cev = rep.cevians
        extra = {f"check_{k}": v_ for k, v_ in sorted(rep.checks.items())}
        extra.update({f"length_residual_{i + 1}": r for i, r in enumerate(rep.length_residuals)})
    cfg = forward_miquel(tri, v, cev, tol)
    out += [
        f"t_b = {_g(cev.t_b)}",
        f"t_c = {_g(cev.t_c)}",
        f"B_A = {_pt(cfg.b_a)}",
        f"C_A = {_pt(cfg.c_a)}",
        f"N_A = {_pt(cfg.n)}",
        f"M_A = {_pt(cfg.m)}",
        f"concurrency_residual = {_g(cfg.residual)}",
    ]
    if scene.point is not None:
        out.append(f"roundtrip_residual = {_g(cfg.m.dist(scene.point) / tri.diameter)}")
    for k, r in extra.items():
        out.append(f"{k} = {_g(r)}")
    try:
        out.append("classification = " + ", ".join(classify_cevians(cev)))
    except BoundaryAmbiguous as e:
        out.append(f"classification = {e}")
    out.append(f"locus_verdict = {locus_membership(tri, v, cfg.m, tol=tol).value}")
    side = side_lemma_check(cfg, tol)
    out += [f"m_on_bc = {_flag(side.m_on_bc)}", f"abcn_concyclic = {_flag(side.abcn_concyclic)}"]
    return out


def _read_scene(args) -> Scene:
    with open(args.scene, encoding="utf-8") as fh:
        scene = parse_scene(fh.read())
    if getattr(args, "vertex", None):
        scene = replace(scene, vertex=args.vertex)
    if getattr(args, "tolerance", None) is not None:
        scene = replace(scene, tolerance=Tolerance(scene.tolerance.absolute_eps, args.tolerance))
    return scene


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    scene = _read_scene(args)
    _emit("\n".join(construct_report(scene)) + "\n", args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    scene = _read_scene(args)
    seed = scene.seed if args.seed is None else args.seed
    spec = SweepSpec(default_box(scene.triangle, scene.vertex), samples=args.samples,
                     margin=args.margin, seed=seed)
    rows, rate, counted = run_sweep(scene.triangle, scene.vertex, spec, scene.tolerance)
    _emit(sweep_csv(rows, rate, counted), args.out)
    return EXIT_OK


_PROPERTY_TAG = re.compile(r"^#\s*property:\s*(\w+)\s*$", re.MULTILINE)


def _failure_block(res: PropertyResult) -> str:
    scene = with_comment(res.worst_scene, f"property: {res.name}\nworst: {res.worst!r}")
    return format_scene(scene)


def cmd_check(args) -> int:
    props = suite_properties(args.suite)
    if args.scene:
        with open(args.scene, encoding="utf-8") as fh:
            text = fh.read()
        scene = parse_scene(text)
        tagged = _PROPERTY_TAG.findall(text)
        if tagged:
            props = [PROPERTIES[n] for n in tagged if n in PROPERTIES]
        props = [p for p in props if p.payload == scene.payload]
        if not props:
            print(f"no property of suite {args.suite!r} takes a {scene.payload!r} scene", file=sys.stderr)
            return EXIT_PARSE
        results = [replay(p, scene) for p in props]
    else:
        results = [run_property(p, args.seed, args.samples) for p in props]
    failed = [r for r in results if not r.passed]
    for r in results:
        print(r.line())
        if not r.passed and r.worst_scene is not None:
            print("--- failing scene ---")
            sys.stdout.write(_failure_block(r))
            print("---")
    if failed and args.out and failed[0].worst_scene is not None:
        _emit(_failure_block(failed[0]), args.out)
    print(f"{'PASS' if not failed else 'FAIL'} {len(results) - len(failed)}/{len(results)}")
    return EXIT_PROPERTY if failed else EXIT_OK


def cmd_render(args) -> int:
    scene = _read_scene(args)
    _emit(render_svg(scene, RenderOptions(figure=args.figure)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="miquel", description="Miquel-Steiner point constructions and checks")
    sub = ap.add_subparsers(dest="command", required=True)

    def scene_args(p, required=True):
        p.add_argument("--scene", required=required, help="scene file (key = value lines)")
        p.add_argument("--vertex", choices=("A", "B", "C"), help="override the scene vertex")
        p.add_argument("--tolerance", type=float, help="override the relative tolerance")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("construct", help="forward/inverse construction report")
    scene_args(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("sweep", help="sample the plane and compare locus verdicts")
    scene_args(p)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--margin", type=float, default=1e-6)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("check", help="run a property suite")
    p.add_argument("suite", help=f"one of {', '.join(SUITES)} or a single property name")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, help="override the per-property sample count")
    p.add_argument("--scene", help="replay a single (failing) scene instead of sampling")
    p.add_argument("--out", help="write the first failing scene here")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("render", help="write an SVG figure")
    scene_args(p)
    p.add_argument("--figure", choices=FIGURES, default="construction")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnknownSuite) as e:
        print(str(e), file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_PARSE
    except GeometryError as e:
        print(str(e), file=sys.stderr)
        return EXIT_CONSTRUCTION


if __name__ == "__main__":
    sys.exit(main())
