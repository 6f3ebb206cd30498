"""Error of the finite-difference eigenvalues against the Airy solution as N doubles."""

import argparse

from airybox import FieldProblem, eigenvalues, fd_spectrum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--alpha", type=float, default=10.0)
    ap.add_argument("--count", type=int, default=4)
    ap.add_argument("--grids", default="1000,2000,4000,8000")
    args = ap.parse_args()

    exact = [s.beta for s in eigenvalues(FieldProblem(args.alpha), args.count)]
    prev = None
    for n in (int(g) for g in args.grids.split(",")):
        errs = [abs(b - f) for b, f in zip(exact, fd_spectrum(args.alpha, n, args.count).eigenvalues)]
        ratios = "" if prev is None else "  ratio " + " ".join(f"{p / e:6.3f}" for p, e in zip(prev, errs))
        print(f"N={n:6d}  " + " ".join(f"{e:.3e}" for e in errs) + ratios)
        prev = errs


if __name__ == "__main__":
    main()
