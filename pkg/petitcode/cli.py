from typing import Optional, Sequence, TextIO

import os
import sys
import argparse

from petitcode import __version__, logger

from .errors import BudgetExceeded, ConfigError
from .jobs import JOBS, Report, resolve_job_config
from .presets import list_presets, preset_path
from .utils.config import merge_configs


EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4

# commands whose scans are partitioned over threads unless the config says otherwise
ENUMERATION_COMMANDS = ("analyze", "codebook", "bound")


def _add_job_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--config", metavar="PATH", help="Job config (YAML file)")
    source.add_argument("--preset", metavar="NAME", help="Shipped job preset (see 'presets list')")
    parser.add_argument("--out", metavar="DIR", help="Output directory of reports and codebooks")
    parser.add_argument("--budget", metavar="N", type=int, help="Enumeration budget")
    parser.add_argument("--threads", metavar="N", type=int, help="Worker threads of partitioned scans")
    parser.add_argument("--seed", metavar="N", type=int, help="Seed of every sampled check")
    parser.add_argument("--format", choices=("text", "records"), help="Report format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="petitcode",
                                     description="Petit algebras, natural orders, finite quotients and coset codes")
    parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version__))
    subparsers = parser.add_subparsers(dest="command", required=True)

    descriptions = {"analyze": "Algebra flags, division status, nuclei and two-sided ideals",
                    "quotient": "Reduction modulo an ideal, splitting data and local structure",
                    "decompose": "Product decomposition over the local factors of the coefficient quotient",
                    "codebook": "Outer code, lifted coset codewords and their matrices",
                    "bound": "Minimum determinant bound of a coset code"}
    for command in JOBS:
        _add_job_arguments(subparsers.add_parser(command, help=descriptions[command]))

    presets_parser = subparsers.add_parser("presets", help="Shipped presets")
    presets_parser.add_argument("action", choices=("list",))
    return parser


def overrides(args: argparse.Namespace, cfg: dict) -> dict:
    """Config entries set by command-line flags"""
    result = {}
    if args.budget is not None:
        result["budgets"] = {"enumeration": args.budget}
    if args.threads is not None:
        result["threads"] = args.threads
    elif args.command in ENUMERATION_COMMANDS and "threads" not in cfg:
        result["threads"] = os.cpu_count() or 1
    if args.seed is not None:
        result["seed"] = args.seed
    experiment = {}
    if args.out is not None:
        experiment["directory"] = args.out
    if args.format is not None:
        experiment["format"] = args.format
    if experiment:
        result["experiment"] = experiment
    return result


def run_job(args: argparse.Namespace, stream: Optional[TextIO] = None) -> Report:
    """Load the config, apply the flags and run the selected job

    :raises ConfigError: If the config is malformed
    :raises BudgetExceeded: If a scan exceeds its budget
    """
    stream = stream if stream is not None else sys.stdout
    if args.config is not None and not os.path.isfile(args.config):
        raise ConfigError("No such config file: {}".format(args.config), field="config")
    source = preset_path("jobs", args.preset) if args.preset is not None else args.config
    cfg, _ = resolve_job_config(source)
    name = args.preset or os.path.splitext(os.path.basename(args.config))[0]
    cfg = merge_configs(cfg, overrides(args, cfg))
    job = JOBS[args.command](cfg, name)
    logger.info("Running {} on {}".format(args.command, name))
    report = job.run()
    job.write(report, stream)
    if args.out is not None:
        os.makedirs(job.experiment_dir, exist_ok=True)
        extension = "jsonl" if job.cfg["experiment"]["format"] == "records" else "txt"
        with open(os.path.join(job.experiment_dir, "report.{}".format(extension)), "w") as file:
            job.write(report, file)
    return report


def print_presets(stream: Optional[TextIO] = None) -> None:
    stream = stream if stream is not None else sys.stdout
    for kind, names in list_presets().items():
        stream.write("{}:\n".format(kind))
        for name in names:
            stream.write("  {}\n".format(name))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Command-line entry point

    :return: Exit code (0 success, 2 config error, 3 budget exceeded, 4 internal error)
    :rtype: int
    """
    args = build_parser().parse_args(argv)
    if args.command == "presets":
        print_presets()
        return EXIT_OK
    try:
        run_job(args)
    except ConfigError as e:
        logger.error(str(e) if e.field else "config: {}".format(e))
        return EXIT_CONFIG
    except BudgetExceeded as e:
        logger.error("budgets: {}".format(e))
        return EXIT_BUDGET
    except Exception as e:
        logger.error("{}: {}".format(type(e).__name__, e))
        return EXIT_INTERNAL
    return EXIT_OK

