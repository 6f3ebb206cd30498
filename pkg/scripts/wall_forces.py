"""Halved wall forces vs beta for several field strengths (the four-panel dataset).

Writes a long-format CSV and prints, per alpha, the states whose left-wall
force is below a fraction of alpha.

    python scripts/wall_forces.py --alphas 0,10,50,100 --count 10 --out forces.csv
"""

import argparse

from airybox import FieldProblem, force_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--alphas", default="0,10,50,100")
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--threshold", type=float, default=0.05)
    ap.add_argument("--out", default="wall_forces.csv")
    args = ap.parse_args()

    with open(args.out, "w") as fh:
        fh.write("alpha,k,beta,force_left_half,force_right_half\n")
        for a in (float(x) for x in args.alphas.split(",")):
            fbs = force_sweep(FieldProblem(a), args.count)
            for fb in fbs:
                fh.write(f"{a:.15g},{fb.k},{fb.beta:.15g},{fb.force_left_half:.15g},{fb.force_right_half:.15g}\n")
            if a > 0:
                low = [fb.k for fb in fbs if fb.force_left_half < args.threshold * a]
                spread = max(abs(fb.difference_half - a) for fb in fbs)
                print(f"alpha={a:g}: F_L/2 < {args.threshold:g} alpha for k={low}; "
                      f"max |dF/2 - alpha| = {spread:.2e}")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
