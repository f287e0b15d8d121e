"""Run every reproduction suite and write a JSON-lines report.

    python scripts/reproduce.py --out report.jsonl --workers 4
"""

import argparse
import sys

from domforce.harness import SUITES, SuiteConfig, format_table, load_allowlist, run_suite, unexpected_failures, write_jsonl


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="report.jsonl")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--no-timing", action="store_true")
    args = ap.parse_args()

    cfg = SuiteConfig(suites=SUITES, seed=args.seed, workers=args.workers, timing=not args.no_timing)
    records = run_suite(cfg)
    write_jsonl(records, args.out, timing=cfg.timing)
    allow = load_allowlist()
    print(format_table(records, allow))
    bad = unexpected_failures(records, allow)
    print(f"\nwrote {len(records)} records to {args.out}; {len(bad)} unexpected failures")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
