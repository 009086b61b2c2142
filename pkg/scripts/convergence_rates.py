"""Log-log convergence slopes of the two limiting processes.

* cevian directions closing in on parallel: distance of the Miquel point to the vertex
* a cevian foot sliding to A or to the far vertex: distance of its circle to the limit circle
"""
import argparse

import numpy as np

from miquel.checks import DELTAS, _loglog_slope, gen_parallel_limit, parallel_limit_distances, foot_limit_gaps
from miquel.sampling import random_triangle


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--triangles", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    print("kind,case,slope")
    for k, scene in enumerate(gen_parallel_limit(rng, args.triangles)):
        d = parallel_limit_distances(scene.triangle, scene.vertex, scene.line_angle)
        print(f"parallel_cevians,{k},{_loglog_slope(DELTAS, d):.4f}")
    for k in range(args.triangles):
        tri = random_triangle(rng)
        for family, gaps in foot_limit_gaps(tri, "A").items():
            print(f"{family},{k},{_loglog_slope(DELTAS, gaps):.4f}")


if __name__ == "__main__":
    main()
