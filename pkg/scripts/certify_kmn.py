"""Feasible offsets of small complete bipartite graphs K(m,n), by filters plus exhaustive search.

Prints, for each (m, n), the offsets k in [1, n] that admit a labeling, and
whether that set equals {1, m, n}.
"""
import argparse
import time

from ksgraceful.feasibility import check_kmn
from ksgraceful.search import kmn_search


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--node-limit", type=int, default=10 ** 9)
    args = ap.parse_args()
    print(f"{'graph':<8} {'feasible k':<16} {'{1,m,n}':<8} {'filtered':<10} nodes      seconds")
    for n in range(2, args.max_n + 1):
        for m in range(2, n + 1):
            t0 = time.monotonic()
            feasible, filtered, nodes, exhausted = set(), [], 0, True
            for k in range(1, n + 1):
                if check_kmn(m, n, k).infeasible:
                    filtered.append(k)
                    continue
                rep = kmn_search(m, n, k, mode="first", node_limit=args.node_limit)
                nodes += rep.nodes
                exhausted &= rep.status != "budget-hit"
                if rep.count:
                    feasible.add(k)
            mark = ("yes" if feasible == {1, m, n} else "no") if exhausted else "?"
            print(f"K({m},{n})".ljust(8), str(sorted(feasible)).ljust(16), mark.ljust(8),
                  str(filtered).ljust(10), f"{nodes:<10} {time.monotonic() - t0:.2f}")


if __name__ == "__main__":
    main()
