"""
The verify subcommand: runs the invariant suite and prints a pass/fail table.
"""

import argparse
import logging
from typing import TextIO

from .base_command import Command
from ..report import ReportFormatter
from ..verify import run_suite

logger = logging.getLogger('indatt.commands.verify')


class VerifyCommand(Command):
    name = "verify"
    help = "Run the invariant suite; exits 1 if any check fails"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--full", action="store_true",
                            help="add the slow enumeration, realization and convergence checks")
        parser.add_argument("--json", action="store_true", help="JSON output")

    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        self.log_computation("run_suite", full=args.full)
        results = run_suite(self.config_manager, full=args.full, threads=self.cli_config.worker_count)
        self.write_line(out, ReportFormatter("json" if args.json else "text").checks(results))
        failed = [r.name for r in results if not r.passed]
        if failed:
            self.log_error(f"{len(failed)} checks failed: {', '.join(failed)}")
            return 1
        return 0
