"""Count k-Skolem sequences of length n for small n and k by exhaustive search."""
import argparse

from ksgraceful.skolem import k_skolem_feasible, search_k_skolem


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--max-k", type=int, default=4)
    args = ap.parse_args()
    print("n \\ k " + " ".join(f"{k:>8}" for k in range(1, args.max_k + 1)))
    for n in range(1, args.max_n + 1):
        cells = []
        for k in range(1, args.max_k + 1):
            if k_skolem_feasible(n, k).infeasible:
                cells.append("-")
            else:
                cells.append(str(search_k_skolem(n, k, count_all=True).count))
        print(f"{n:<6}" + " ".join(f"{c:>8}" for c in cells))


if __name__ == "__main__":
    main()
