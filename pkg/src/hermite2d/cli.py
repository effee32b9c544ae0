"""``verify`` command line: run verification campaigns and list suites."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .errors import ConfigError
from .harness import config as cfgmod
from .harness import runner
from .harness.suites import CATALOG, list_suites

EXIT_CONFIG = 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a campaign")
    run.add_argument("--config", help="campaign TOML (default: bundled full campaign)")
    run.add_argument("--jobs", type=int, help="worker processes (env VERIFY_JOBS)")
    run.add_argument("--seed", type=int, help="override the config seed (env VERIFY_SEED)")
    run.add_argument("--filter", help="glob on suite ids, e.g. 'ks.*'")
    run.add_argument("--out", help="report path (overrides the config)")
    run.add_argument("--format", choices=cfgmod.FORMATS, help="report format")
    run.add_argument("--quiet", action="store_true", help="print only per-suite lines and the total")

    ls = sub.add_parser("list", help="list available suites")
    ls.add_argument("--json", action="store_true")
    return p


def _load(args) -> cfgmod.CampaignConfig:
    path = args.config or cfgmod.default_config_path()
    config = cfgmod.load_config(path, CATALOG)
    # precedence: command line > environment > file
    over = cfgmod.env_overrides()
    if args.seed is not None:
        over["seed"] = args.seed
    if args.jobs is not None:
        over["jobs"] = args.jobs
    if args.out:
        over["output_path"] = args.out
    if args.format:
        over["output_format"] = args.format
    if over.get("jobs", 1) < 1:
        raise ConfigError("jobs must be a positive integer")
    if not 0 <= over.get("seed", 0) < 2**64:
        raise ConfigError("seed must be an integer in [0, 2^64)")
    return runner.select(replace(config, **over), args.filter)


def cmd_run(args) -> int:
    try:
        config = _load(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    result = runner.run_campaign(config)
    lines = runner.summary_lines(result)
    if args.quiet:
        lines = [l for l in lines if l.startswith(("suite ", "total:"))]
    print("\n".join(lines))
    if config.output_path:
        try:
            runner.write_report(result, config.output_path, config.output_format)
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return 1
    return result.exit_code()


def cmd_list(args) -> int:
    entries = list_suites()
    if args.json:
        print(json.dumps(entries, indent=1))
    else:
        width = max((len(e["id"]) for e in entries), default=0)
        for e in entries:
            print(f"{e['id']:<{width}}  {e['tag']}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return {"run": cmd_run, "list": cmd_list}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
