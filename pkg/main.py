"""
indatt - Main entry point.

Independence polynomials, their attractors and the searches behind the
segment classification, from the command line.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

import coloredlogs

from src import __version__
from src.commands.factory import CommandFactory
from src.polynomials.intpoly import set_max_coefficient_digits, set_max_parse_degree
from src.utils.config import CliConfig, ConfigManager
from src.utils.error_handler import ConfigError, IndattError

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger('indatt')


def build_parser() -> argparse.ArgumentParser:
    """Global flags plus one subparser per command."""
    script_dir = os.path.dirname(os.path.abspath(__file__))
    parser = argparse.ArgumentParser(prog="indatt", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config-dir", default=os.path.join(script_dir, "config"),
                        help="directory holding config.json")
    parser.add_argument("--threads", type=int, help="worker threads (0 = one per CPU)")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    CommandFactory.register(subparsers)
    return parser


def setup_logging(config_manager: ConfigManager, verbose: bool, quiet: bool) -> None:
    """Colored console logging on stderr, plus a log file when configured."""
    section = config_manager.section("logging")
    level = section["level"]
    if verbose:
        level = "DEBUG"
    elif quiet:
        level = "WARNING"
    coloredlogs.install(level=level, fmt=LOG_FORMAT, stream=sys.stderr)
    if section["file"]:
        handler = logging.FileHandler(section["file"])
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logging.getLogger().addHandler(handler)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand.

    Returns:
        int: 0 on success, 1 on a computational error, 2 on a usage or config error
    """
    args = build_parser().parse_args(argv)

    try:
        config_manager = ConfigManager(args.config_dir)
        setup_logging(config_manager, args.verbose, args.quiet)
        set_max_coefficient_digits(config_manager.get("polynomials", "max_coefficient_digits"))
        set_max_parse_degree(config_manager.get("polynomials", "max_degree"))
        if hasattr(sys, "set_int_max_str_digits"):
            sys.set_int_max_str_digits(0)
        cli_config = CliConfig.from_config(
            config_manager,
            threads=args.threads,
            depth=getattr(args, "depth", None),
            cap=getattr(args, "cap", None),
            tol=getattr(args, "tol", None),
            output_path=getattr(args, "out", None),
            format="json" if getattr(args, "json", False) else None,
        )
        command = CommandFactory.create_command(args.command, config_manager, cli_config)
    except IndattError as e:
        # Anything failing before the command runs is a configuration problem
        sys.stderr.write(f"indatt: {e}\n")
        return 2

    try:
        return command.execute(args, sys.stdout)
    except ConfigError as e:
        sys.stderr.write(f"indatt: {e}\n")
        return 2
    except IndattError as e:
        if e.module is None:
            e.module = args.command
        logger.debug("Failure details", exc_info=True)
        sys.stderr.write(f"indatt: {e}\n")
        return 1
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
