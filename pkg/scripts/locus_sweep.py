"""Compare two readings of the internal-cevian region against the inverse map.

For random triangles, sample points away from the bounding circles and from
AB, AC, and count how often each reading disagrees with the empirical verdict
(both cevians internal after inverse mapping):

  union:        circumdisk minus (aux disk AB  union  aux disk AC)
  intersection: circumdisk minus (aux disk AB  intersect  aux disk AC)
"""
import argparse

import numpy as np

from miquel.locus import LocusVerdict, locus_membership
from miquel.miquel_map import classify_cevians, inverse_miquel
from miquel.sampling import random_triangle
from miquel.scene import SweepSpec
from miquel.sweep import SKIPPED, default_box, sample_points


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--triangles", type=int, default=20)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--margin", type=float, default=1e-6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    total = union_bad = inter_bad = 0
    print("triangle,counted,union_disagree,intersection_disagree")
    for k in range(args.triangles):
        tri = random_triangle(rng)
        spec = SweepSpec(default_box(tri), args.samples, args.margin, seed=int(rng.integers(2**32)))
        counted = ub = ib = 0
        for p in sample_points(tri, "A", spec):
            verdict = locus_membership(tri, "A", p, band=args.margin * tri.diameter)
            if verdict in SKIPPED:
                continue
            internal = classify_cevians(inverse_miquel(tri, "A", p)) == ("internal", "internal")
            union_member = verdict is LocusVerdict.MEMBER
            inter_member = verdict in (LocusVerdict.MEMBER, LocusVerdict.EXCLUDED_IN_ONE_AUX_DISK)
            counted += 1
            ub += union_member != internal
            ib += inter_member != internal
        print(f"{k},{counted},{ub},{ib}")
        total, union_bad, inter_bad = total + counted, union_bad + ub, inter_bad + ib
    print(f"# union agreement={1 - union_bad / total:.6f} intersection agreement={1 - inter_bad / total:.6f} "
          f"counted={total}")


if __name__ == "__main__":
    main()
