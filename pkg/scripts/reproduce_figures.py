"""Render every figure kind for the bundled scenes into one directory."""
import argparse
from pathlib import Path

from miquel.scene import parse_scene
from miquel.svg import RenderOptions, render_svg

ROOT = Path(__file__).resolve().parent.parent

JOBS = [
    ("incenter.scene", "construction"),
    ("medians.scene", "construction"),
    ("obtuse.scene", "construction"),
    ("locus.scene", "locus"),
    ("scalene.scene", "locus"),
    ("scalene.scene", "axis"),
    ("scalene.scene", "brocard"),
    ("scalene.scene", "omega_tan"),
    ("orthocenter.scene", "center"),
    ("circumcenter.scene", "center"),
    ("isogonal.scene", "isogonal"),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=ROOT / "figures")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for scene_file, figure in JOBS:
        scene = parse_scene((ROOT / "scenes" / scene_file).read_text())
        target = args.out / f"{Path(scene_file).stem}_{figure}.svg"
        target.write_text(render_svg(scene, RenderOptions(figure=figure)), newline="\n")
        print(target.relative_to(args.out.parent) if args.out.parent in target.parents else target)


if __name__ == "__main__":
    main()
