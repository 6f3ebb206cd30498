"""First ten eigenvalues for alpha = 10, 50, 100, with FD values for k <= 4.

    python scripts/eigenvalue_table.py [--grid 4000] [--out table.csv]
"""

import argparse
import csv
import sys

from airybox import FieldProblem, eigenvalues, fd_spectrum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", type=int, default=4000)
    ap.add_argument("--alphas", default="10,50,100")
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    alphas = [float(a) for a in args.alphas.split(",")]
    fd = {a: fd_spectrum(a, args.grid, 4).eigenvalues for a in alphas}
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["k"] + [f"beta_alpha_{a:g}" for a in alphas] + [f"beta_fd_alpha_{a:g}" for a in alphas])
    states = {a: eigenvalues(FieldProblem(a), 10) for a in alphas}
    for i in range(10):
        row = [i + 1] + [f"{states[a][i].beta:.10f}" for a in alphas]
        row += [f"{fd[a][i]:.10f}" if i < 4 else "" for a in alphas]
        w.writerow(row)
    if args.out:
        out.close()


if __name__ == "__main__":
    main()
