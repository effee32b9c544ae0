"""Run the bundled full campaign and write a JSON report.

    python scripts/run_default_campaign.py --out report.json [--jobs 4]
"""
import argparse
import sys

from hermite2d.harness import runner
from hermite2d.harness.config import default_config_path, load_config
from hermite2d.harness.suites import CATALOG


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="report.json")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int)
    args = ap.parse_args()

    config = load_config(default_config_path(), CATALOG)
    if args.seed is not None:
        from dataclasses import replace
        config = replace(config, seed=args.seed)
    result = runner.run_campaign(config, jobs=args.jobs)
    for line in runner.summary_lines(result):
        if line.startswith(("suite ", "total:")):
            print(line)
    runner.write_report(result, args.out, "json")
    print(f"report written to {args.out}")
    return result.exit_code()


if __name__ == "__main__":
    sys.exit(main())
