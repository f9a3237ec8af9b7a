"""Run reproduce targets and write a markdown table of expected vs observed rows."""
import argparse
import sys
from pathlib import Path

from ksgraceful.reproduce import DEFAULT_TARGETS, TARGETS, format_rows, run_target


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("targets", nargs="*", default=DEFAULT_TARGETS, help=f"choices: {', '.join(TARGETS)}")
    ap.add_argument("--markdown", type=Path, help="also write a markdown report here")
    args = ap.parse_args()
    failed = False
    md = ["| target | row | status | expected | observed |", "|---|---|---|---|---|"]
    for name in args.targets:
        rows, elapsed = run_target(name)
        print(format_rows(name, rows, elapsed))
        for r in rows:
            failed |= r.status != "pass"
            md.append(f"| {name} | {r.name} | {r.status} | {r.expected} | {r.observed} |")
    if args.markdown:
        args.markdown.write_text("\n".join(md) + "\n")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
