"""Write first pairings for r=12..21 to src/ksgraceful/data/two_skolem_pairings.json."""
import argparse
import json
from pathlib import Path

from ksgraceful.skolem import PairingProblem, find_pairing

OUT = Path(__file__).resolve().parents[1] / "src" / "ksgraceful" / "data" / "two_skolem_pairings.json"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rmin", type=int, default=12)
    ap.add_argument("--rmax", type=int, default=21)
    args = ap.parse_args()
    out = {}
    for r in range(args.rmin, args.rmax + 1):
        sol = find_pairing(r)
        assert sol is not None and PairingProblem(r).is_solution(sol)
        out[str(r)] = [list(p) for p in sol]
        print(r, sol)
    OUT.write_text(json.dumps({"pairings": out}, indent=1) + "\n")


if __name__ == "__main__":
    main()
