"""Closed form vs. iteration of z_j(r): where binary64 iteration loses track.

At r = r* the closed form sits on the repelling fixed point 1/theta, and each
iteration step multiplies the rounding error by about theta**2.  The table
shows the worst relative disagreement per radius over the lambda grid.
"""

import argparse

from treeswitch.acceptance import recurrence_agreement


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jmax", type=int, default=60)
    args = ap.parse_args()

    lams = [round(2.01 + 0.01 * i, 2) for i in range(800)]
    for key, (err, lam, j) in recurrence_agreement(lams, args.jmax).items():
        flag = "ok" if err <= 1e-12 else "exceeds 1e-12"
        print(f"{key:<10} max rel. error {err:.2e}  (lam={lam}, j={j})  {flag}")


if __name__ == "__main__":
    main()
