"""Write the sign-scan point clouds as CSV files for plotting.

Each file has columns ``<coord1>,r,value``; negative values in phi.csv and
g.csv mark where the stated positivity fails.
"""

import argparse
from pathlib import Path

from treeswitch.signscan import GridSpec, point_cloud_csv, scan_f, scan_g, scan_phi_sq


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="scan_out")
    ap.add_argument("--step", type=float, default=0.05)
    ap.add_argument("--rmax", type=float, default=50.0)
    args = ap.parse_args()

    grid = GridSpec(r_hi=args.rmax, x_hi=args.rmax, r_step=args.step, x_step=args.step)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, fn, coords in (("phi", scan_phi_sq, ("t", "r")), ("g", scan_g, ("x", "r")), ("f", scan_f, ("lam", "r"))):
        rep, (a, r, v) = fn(grid, with_points=True)
        (out / f"{name}.csv").write_text(point_cloud_csv(coords, (a, r), v))
        print(f"{name}: {rep.summary()}")
        for note in rep.notes:
            print(f"    {note}")


if __name__ == "__main__":
    main()
